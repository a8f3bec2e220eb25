/**
 * @file io.hpp
 * @brief Codebook file format: a one-line JSON header followed by CSV vector
 *        rows, or a single JSON document. Vector entries are written with 17
 *        significant digits so the round trip is bit exact.
 */

#ifndef SPHERECODE_IO_HPP
#define SPHERECODE_IO_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spherecode/codebook.hpp"

namespace spherecode {

enum class FileFormat { HeaderCsv, Json };

inline constexpr int kCodebookSchemaVersion = 1;

struct CodebookFileHeader {
    int schema_version = kCodebookSchemaVersion;
    Scheme scheme = Scheme::Random;
    int K = 0;
    int n = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> assignment_seed;
    std::optional<double> certified_max_cosine_bound;
    nlohmann::json params = nlohmann::json::object();
};

struct LoadedCodebook {
    Codebook codebook;
    CodebookFileHeader header;
};

namespace detail {

inline std::string format_double_17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline nlohmann::json header_to_json(const CodebookFileHeader& h) {
    nlohmann::json j;
    j["schema_version"] = h.schema_version;
    j["scheme"] = to_string(h.scheme);
    j["K"] = h.K;
    j["n"] = h.n;
    j["seed"] = h.seed ? nlohmann::json(*h.seed) : nlohmann::json(nullptr);
    j["assignment_seed"] = h.assignment_seed ? nlohmann::json(*h.assignment_seed) : nlohmann::json(nullptr);
    j["certified_max_cosine_bound"] =
        h.certified_max_cosine_bound ? nlohmann::json(*h.certified_max_cosine_bound) : nlohmann::json(nullptr);
    j["params"] = h.params;
    return j;
}

inline CodebookFileHeader header_from_json(const nlohmann::json& j, const std::string& where) {
    CodebookFileHeader h;
    try {
        h.schema_version = j.at("schema_version").get<int>();
        const auto scheme = scheme_from_string(j.at("scheme").get<std::string>());
        if (!scheme) throw std::invalid_argument("unknown scheme \"" + j.at("scheme").get<std::string>() + "\"");
        h.scheme = *scheme;
        h.K = j.at("K").get<int>();
        h.n = j.at("n").get<int>();
        if (j.contains("seed") && !j["seed"].is_null()) h.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("assignment_seed") && !j["assignment_seed"].is_null())
            h.assignment_seed = j["assignment_seed"].get<std::uint64_t>();
        if (j.contains("certified_max_cosine_bound") && !j["certified_max_cosine_bound"].is_null())
            h.certified_max_cosine_bound = j["certified_max_cosine_bound"].get<double>();
        if (j.contains("params")) h.params = j["params"];
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(where + ": malformed codebook header: " + e.what());
    }
    if (h.K < 2 || h.n < 1) throw std::invalid_argument(where + ": header K/n out of range");
    return h;
}

}  // namespace detail

inline CodebookFileHeader make_header(const Codebook& cb, nlohmann::json params = nlohmann::json::object(),
                                      std::optional<double> certified_bound = std::nullopt) {
    CodebookFileHeader h;
    h.scheme = cb.scheme;
    h.K = cb.num_classes;
    h.n = cb.dim;
    h.seed = cb.seed;
    h.assignment_seed = cb.assignment_seed;
    h.certified_max_cosine_bound = certified_bound;
    h.params = std::move(params);
    return h;
}

inline void write_codebook_file(const std::string& path, const Codebook& cb, const CodebookFileHeader& header,
                                FileFormat format = FileFormat::HeaderCsv) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const nlohmann::json hj = detail::header_to_json(header);
    if (format == FileFormat::Json) {
        nlohmann::json j = hj;
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < cb.num_classes; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < cb.dim; ++c) row.push_back(cb.vectors(i, c));
            rows.push_back(std::move(row));
        }
        j["vectors"] = std::move(rows);
        out << j.dump() << "\n";
    } else {
        out << hj.dump() << "\n";
        for (int i = 0; i < cb.num_classes; ++i) {
            for (int c = 0; c < cb.dim; ++c) {
                if (c) out << ",";
                out << detail::format_double_17(cb.vectors(i, c));
            }
            out << "\n";
        }
    }
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

/// Reads either file layout (sniffed from the content). Parse failures carry
/// the 1-based line number.
inline LoadedCodebook read_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    if (content.empty()) throw std::invalid_argument(path + ":1: empty codebook file");

    LoadedCodebook loaded;

    const auto full = nlohmann::json::parse(content, nullptr, false);
    if (!full.is_discarded() && full.is_object() && full.contains("vectors")) {
        loaded.header = detail::header_from_json(full, path);
        const auto& rows = full["vectors"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != loaded.header.K)
            throw std::invalid_argument(path + ": vectors array does not match header K");
        loaded.codebook.vectors.resize(loaded.header.K, loaded.header.n);
        for (int i = 0; i < loaded.header.K; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != loaded.header.n)
                throw std::invalid_argument(path + ": vector row " + std::to_string(i) +
                                            " does not match header n");
            for (int c = 0; c < loaded.header.n; ++c) loaded.codebook.vectors(i, c) = rows[i][c].get<double>();
        }
    } else {
        std::istringstream lines(content);
        std::string line;
        if (!std::getline(lines, line)) throw std::invalid_argument(path + ":1: missing header line");
        const auto hj = nlohmann::json::parse(line, nullptr, false);
        if (hj.is_discarded())
            throw std::invalid_argument(path + ":1: header line is not valid JSON");
        loaded.header = detail::header_from_json(hj, path + ":1");
        loaded.codebook.vectors.resize(loaded.header.K, loaded.header.n);
        for (int i = 0; i < loaded.header.K; ++i) {
            const int line_no = i + 2;
            if (!std::getline(lines, line))
                throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": missing vector row");
            std::size_t pos = 0;
            for (int c = 0; c < loaded.header.n; ++c) {
                const std::size_t next = line.find(',', pos);
                const std::string field =
                    next == std::string::npos ? line.substr(pos) : line.substr(pos, next - pos);
                try {
                    std::size_t used = 0;
                    loaded.codebook.vectors(i, c) = std::stod(field, &used);
                    if (used == 0) throw std::invalid_argument("empty");
                } catch (const std::exception&) {
                    throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": bad number in column " +
                                                std::to_string(c + 1));
                }
                if (next == std::string::npos) {
                    if (c + 1 != loaded.header.n)
                        throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                                    ": expected " + std::to_string(loaded.header.n) + " fields");
                    pos = line.size();
                } else {
                    pos = next + 1;
                }
            }
        }
    }

    loaded.codebook.num_classes = loaded.header.K;
    loaded.codebook.dim = loaded.header.n;
    loaded.codebook.scheme = loaded.header.scheme;
    loaded.codebook.seed = loaded.header.seed;
    loaded.codebook.assignment_seed = loaded.header.assignment_seed;

    for (int i = 0; i < loaded.header.K; ++i) {
        const double norm = loaded.codebook.vectors.row(i).norm();
        if (std::abs(norm - 1.0) > 1e-6)
            throw std::invalid_argument(path + ": row " + std::to_string(i + 1) + " is not unit norm");
    }
    return loaded;
}

}  // namespace spherecode

#endif  // SPHERECODE_IO_HPP
