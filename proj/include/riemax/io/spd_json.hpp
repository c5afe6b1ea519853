#pragma once

#include <Eigen/Core>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riemax/core/errors.hpp"
#include "riemax/manifold/spd.hpp"

namespace riemax {

/// SPD input format: a top-level JSON list of d x d nested numeric arrays.
inline std::vector<spd_matrix> read_spd_json(std::istream& in, Eigen::Index expected_dim,
                                             const std::string& origin = "input") {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw config_error(origin + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw config_error(origin + ": expected a non-empty top-level list");
    std::vector<spd_matrix> out;
    out.reserve(doc.size());
    for (std::size_t idx = 0; idx < doc.size(); ++idx) {
        const auto& entry = doc[idx];
        const std::string where = origin + " matrix " + std::to_string(idx + 1);
        if (!entry.is_array() || entry.size() != static_cast<std::size_t>(expected_dim))
            throw config_error(where + ": expected " + std::to_string(expected_dim) + " rows");
        Eigen::MatrixXd m(expected_dim, expected_dim);
        for (Eigen::Index r = 0; r < expected_dim; ++r) {
            const auto& row = entry[static_cast<std::size_t>(r)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(expected_dim))
                throw config_error(where + " row " + std::to_string(r + 1) + ": expected " +
                                   std::to_string(expected_dim) + " values");
            for (Eigen::Index c = 0; c < expected_dim; ++c) {
                const auto& cell = row[static_cast<std::size_t>(c)];
                if (!cell.is_number()) throw config_error(where + ": non-numeric entry");
                m(r, c) = cell.get<double>();
            }
        }
        try {
            out.emplace_back(m);
        } catch (const domain_error& e) {
            throw config_error(where + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<spd_matrix> read_spd_json_file(const std::string& path, Eigen::Index expected_dim) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open input file '" + path + "'");
    return read_spd_json(in, expected_dim, path);
}

inline void write_spd_json(std::ostream& out, const std::vector<spd_matrix>& mats) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& m : mats) {
        nlohmann::json entry = nlohmann::json::array();
        for (Eigen::Index r = 0; r < m.dim(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < m.dim(); ++c) row.push_back(m.matrix()(r, c));
            entry.push_back(row);
        }
        doc.push_back(entry);
    }
    out << doc.dump(1) << '\n';
}

} // namespace riemax
