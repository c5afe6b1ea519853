#pragma once

#include <Eigen/Core>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "riemax/core/errors.hpp"
#include "riemax/solver/trace.hpp"

namespace riemax {

/// Shortest decimal form with 17 significant digits; round-trips exactly.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Point CSV: one point per row, comma-separated decimals; lines starting
/// with '#' are comments; the dimension is inferred from the first row.
/// Malformed rows are reported with their 1-based line number.
inline std::vector<Eigen::VectorXd> read_points_csv(std::istream& in, const std::string& origin = "input") {
    std::vector<Eigen::VectorXd> rows;
    std::string line;
    std::size_t lineno = 0;
    Eigen::Index dim = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> values;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            std::string cell = line.substr(pos, comma - pos);
            const std::size_t a = cell.find_first_not_of(" \t");
            if (a == std::string::npos)
                throw config_error(origin + " row " + std::to_string(lineno) + ": empty field");
            const std::size_t b = cell.find_last_not_of(" \t");
            cell = cell.substr(a, b - a + 1);
            try {
                std::size_t used = 0;
                const double v = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
                values.push_back(v);
            } catch (const std::exception&) {
                throw config_error(origin + " row " + std::to_string(lineno) + ": cannot parse '" + cell +
                                   "' as a number");
            }
            pos = comma + 1;
        }
        if (dim < 0) dim = static_cast<Eigen::Index>(values.size());
        if (static_cast<Eigen::Index>(values.size()) != dim)
            throw config_error(origin + " row " + std::to_string(lineno) + ": expected " +
                               std::to_string(dim) + " values, got " + std::to_string(values.size()));
        rows.push_back(Eigen::Map<Eigen::VectorXd>(values.data(), dim));
    }
    if (rows.empty()) throw config_error(origin + ": no data rows");
    return rows;
}

inline std::vector<Eigen::VectorXd> read_points_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open input file '" + path + "'");
    return read_points_csv(in, path);
}

inline void write_points_csv(std::ostream& out, const std::vector<Eigen::VectorXd>& points) {
    for (const auto& p : points) {
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            if (i > 0) out << ',';
            out << format_double(p[i]);
        }
        out << '\n';
    }
}

/// Trace CSV with the fixed column set `k,radius,step,farthest_index,
/// dist_to_oracle`; the last column stays empty when no oracle distance is
/// supplied. `oracle_dist[i]` pairs with `trace.records[i]`.
template <Manifold M>
void write_trace_csv(std::ostream& out, const iteration_trace<M>& trace,
                     const std::vector<double>* oracle_dist = nullptr) {
    out << "k,radius,step,farthest_index,dist_to_oracle\n";
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& r = trace.records[i];
        out << r.k << ',' << format_double(r.radius) << ',' << format_double(r.step_arclength) << ','
            << r.farthest_index << ',';
        if (oracle_dist != nullptr) out << format_double((*oracle_dist)[i]);
        out << '\n';
    }
}

template <Manifold M>
void write_trace_csv_file(const std::string& path, const iteration_trace<M>& trace,
                          const std::vector<double>* oracle_dist = nullptr) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open trace file '" + path + "' for writing");
    write_trace_csv(out, trace, oracle_dist);
}

} // namespace riemax
