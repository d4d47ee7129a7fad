#pragma once

// JSON variants of the file formats.  Kept out of the core headers so the
// library itself does not depend on the vendored json library.

#include <istream>

#include <json.hpp>

#include "mspotty/macwilliams.hpp"

namespace mspotty {

using json = nlohmann::json;

/// { "ring": "Z3", "n": 3, "b": 3, "t": 2, "rows": [[1,0,2,...], ...] }
inline MatrixFile read_matrix_json(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw DimensionMismatch(std::string("matrix JSON: ") + e.what());
    }
    MatrixFile mf;
    try {
        mf.ring_spec = j.at("ring").get<std::string>();
        mf.layout.n = j.at("n").get<std::size_t>();
        mf.layout.b = j.at("b").get<std::size_t>();
        mf.layout.t = j.at("t").get<std::size_t>();
        for (const auto& row : j.at("rows")) {
            Codeword cw;
            for (const auto& entry : row) {
                const auto v = entry.get<std::uint64_t>();
                if (v > 65535) throw DimensionMismatch("matrix entry out of range");
                cw.push_back(static_cast<Elem>(v));
            }
            mf.rows.push_back(std::move(cw));
        }
    } catch (const json::exception& e) {
        throw DimensionMismatch(std::string("matrix JSON: ") + e.what());
    }
    mf.layout.validate();
    return mf;
}

/// Polynomial as an ascending coefficient array of decimal strings.
inline json poly_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

/// Distribution table as a list of { "alphas": [...], "count": "..." },
/// sorted lexicographically by alphas.
inline json distribution_json(const DistributionTable& dist) {
    json arr = json::array();
    for (const auto& [alphas, count] : dist.counts) {
        json entry;
        entry["alphas"] = alphas;
        entry["count"] = count.str();
        arr.push_back(entry);
    }
    return arr;
}

}  // namespace mspotty
