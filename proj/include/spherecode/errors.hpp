/**
 * @file errors.hpp
 * @brief Error type for constructions that are valid requests but have no realization.
 */

#ifndef SPHERECODE_ERRORS_HPP
#define SPHERECODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spherecode {

/// Thrown when the requested parameters are well-formed but no construction
/// exists for them (e.g. a code too small for the class count, or a design
/// distance that leaves no message bits). Distinct from std::invalid_argument,
/// which signals malformed input.
class infeasible_error : public std::runtime_error {
  public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spherecode

#endif  // SPHERECODE_ERRORS_HPP
