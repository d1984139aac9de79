// Copyright 2026 the wywitness authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON density-matrix format:
 *   { "dims": [dimA, dimB],
 *     "matrix": [[re, im], ...] }   // dim^2 pairs, row-major
 */

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "wywitness/density.hpp"

namespace wywitness {

inline nlohmann::json to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["dims"] = {rho.dim_a, rho.dim_b};
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        for (Eigen::Index k = 0; k < rho.dim(); ++k) {
            const Complex& z = rho.matrix(i, k);
            entries.push_back({z.real(), z.imag()});
        }
    }
    j["matrix"] = std::move(entries);
    return j;
}

inline DensityMatrix density_from_json(const nlohmann::json& j,
                                       double tol = kDefaultTol) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
        throw ParseError("expected object with \"dims\" and \"matrix\" fields");
    }
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 2) {
        throw ParseError("\"dims\" must be an array [dimA, dimB]");
    }
    const auto dim_a = dims.at(0).get<Eigen::Index>();
    const auto dim_b = dims.at(1).get<Eigen::Index>();
    if (dim_a < 1 || dim_b < 1) {
        throw ParseError("\"dims\" entries must be positive");
    }
    const Eigen::Index dim = dim_a * dim_b;
    const auto& entries = j.at("matrix");
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(dim * dim)) {
        throw ParseError("\"matrix\" must hold " + std::to_string(dim * dim) +
                         " [re, im] pairs");
    }
    ComplexMatrix m(dim, dim);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index k = 0; k < dim; ++k, ++idx) {
            const auto& pair = entries.at(idx);
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError("matrix entry " + std::to_string(idx) +
                                 " is not an [re, im] pair");
            }
            m(i, k) = Complex(pair.at(0).get<double>(),
                              pair.at(1).get<double>());
        }
    }
    return make_density_matrix(std::move(m), dim_a, dim_b, tol);
}

inline void save_density(const DensityMatrix& rho, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << to_json(rho).dump(2) << "\n";
}

inline DensityMatrix load_density(const std::string& path,
                                  double tol = kDefaultTol) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON in ") + path + ": " +
                         e.what());
    }
    return density_from_json(j, tol);
}

}  // namespace wywitness
