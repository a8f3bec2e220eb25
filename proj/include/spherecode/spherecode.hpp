/**
 * @file spherecode.hpp
 * @brief Umbrella header.
 */

#ifndef SPHERECODE_SPHERECODE_HPP
#define SPHERECODE_SPHERECODE_HPP

#include "spherecode/bounds.hpp"
#include "spherecode/codebook.hpp"
#include "spherecode/codes.hpp"
#include "spherecode/commands.hpp"
#include "spherecode/errors.hpp"
#include "spherecode/gf2.hpp"
#include "spherecode/io.hpp"
#include "spherecode/optimize.hpp"

#endif  // SPHERECODE_SPHERECODE_HPP
