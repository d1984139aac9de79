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
 * Bipartite density matrices: validated construction, partial transpose,
 * and seeded random state ensembles.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wywitness/matcore.hpp"

namespace wywitness {

/**
 * A trace-one Hermitian matrix tagged with its bipartite factor dimensions.
 * is_valid_state records positive semidefiniteness; partially transposed
 * matrices keep trace and Hermiticity but may carry is_valid_state = false.
 */
struct DensityMatrix {
    ComplexMatrix matrix;
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
    bool is_valid_state = false;

    Eigen::Index dim() const { return matrix.rows(); }
};

inline double min_eigenvalue(const ComplexMatrix& m, double tol = kDefaultTol) {
    return eig_hermitian(m, tol).eigenvalues.minCoeff();
}

/**
 * Validates trace ~ 1 and Hermiticity (throwing InvalidState otherwise) and
 * evaluates positive semidefiniteness into the is_valid_state flag.
 */
inline DensityMatrix make_density_matrix(ComplexMatrix m, Eigen::Index dim_a,
                                         Eigen::Index dim_b,
                                         double tol = kDefaultTol) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("density matrix must be square");
    }
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != m.rows()) {
        throw DimensionMismatch("factor dimensions " + std::to_string(dim_a) +
                                "x" + std::to_string(dim_b) +
                                " do not match matrix dimension " +
                                std::to_string(m.rows()));
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
        throw InvalidState("trace is " + std::to_string(tr.real()) +
                           (tr.imag() != 0.0
                                ? "+" + std::to_string(tr.imag()) + "i"
                                : "") +
                           ", expected 1");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        throw InvalidState("matrix is not Hermitian (defect " +
                           std::to_string(defect) + ")");
    }
    DensityMatrix rho;
    rho.matrix = std::move(m);
    rho.dim_a = dim_a;
    rho.dim_b = dim_b;
    rho.is_valid_state = min_eigenvalue(rho.matrix, tol) >= -tol;
    return rho;
}

enum class Subsystem { A, B };

/**
 * Partial transpose over one tensor factor. Trace and Hermiticity are
 * preserved; positivity is re-evaluated from the spectrum.
 */
inline DensityMatrix partial_transpose(const DensityMatrix& rho,
                                       Subsystem which = Subsystem::B,
                                       double tol = kDefaultTol) {
    const Eigen::Index da = rho.dim_a;
    const Eigen::Index db = rho.dim_b;
    if (da * db != rho.dim()) {
        throw DimensionMismatch("density matrix carries inconsistent dims");
    }
    ComplexMatrix out(rho.dim(), rho.dim());
    for (Eigen::Index ia = 0; ia < da; ++ia) {
        for (Eigen::Index ja = 0; ja < da; ++ja) {
            auto block = rho.matrix.block(ia * db, ja * db, db, db);
            if (which == Subsystem::B) {
                // transpose within each A-indexed block
                out.block(ia * db, ja * db, db, db) = block.transpose();
            } else {
                // swap blocks across the A index
                out.block(ja * db, ia * db, db, db) = block;
            }
        }
    }
    DensityMatrix pt;
    pt.matrix = std::move(out);
    pt.dim_a = da;
    pt.dim_b = db;
    pt.is_valid_state = min_eigenvalue(pt.matrix, tol) >= -tol;
    return pt;
}

namespace detail {

inline ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

/// Balanced bipartite split used when only a total dimension is given.
inline std::pair<Eigen::Index, Eigen::Index> split_dims(Eigen::Index dim) {
    for (Eigen::Index k = static_cast<Eigen::Index>(std::sqrt(double(dim)));
         k >= 2; --k) {
        if (dim % k == 0) return {k, dim / k};
    }
    return {1, dim};
}

}  // namespace detail

/// Full-rank random state G G†/Tr(G G†) from a seeded complex Gaussian G.
inline DensityMatrix random_density(Eigen::Index dim_a, Eigen::Index dim_b,
                                    std::uint64_t seed) {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b < 2) {
        throw DimensionMismatch("random_density needs total dimension >= 2");
    }
    std::mt19937_64 rng(seed);
    const Eigen::Index dim = dim_a * dim_b;
    const ComplexMatrix g = detail::gaussian_matrix(dim, dim, rng);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    m = ((m + m.adjoint()) / 2.0).eval();  // scrub roundoff asymmetry
    DensityMatrix rho;
    rho.matrix = std::move(m);
    rho.dim_a = dim_a;
    rho.dim_b = dim_b;
    rho.is_valid_state = true;  // by construction
    return rho;
}

inline DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed) {
    const auto [da, db] = detail::split_dims(dim);
    return random_density(da, db, seed);
}

/**
 * Convex mixture of `terms` random product states: sum_k q_k rhoA_k (x) rhoB_k
 * with random weights. Separable by construction, hence PPT.
 */
inline DensityMatrix random_separable(Eigen::Index dim_a, Eigen::Index dim_b,
                                      int terms, std::uint64_t seed) {
    if (dim_a < 2 || dim_b < 2) {
        throw DimensionMismatch("random_separable needs both factors >= 2");
    }
    if (terms < 1) {
        throw ParamOutOfRange("random_separable needs terms >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<double> weights(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (auto& w : weights) {
        w = unif(rng) + 1e-3;
        total += w;
    }

    const Eigen::Index dim = dim_a * dim_b;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const double w : weights) {
        const ComplexMatrix ga = detail::gaussian_matrix(dim_a, dim_a, rng);
        const ComplexMatrix gb = detail::gaussian_matrix(dim_b, dim_b, rng);
        ComplexMatrix ra = ga * ga.adjoint();
        ComplexMatrix rb = gb * gb.adjoint();
        ra /= ra.trace().real();
        rb /= rb.trace().real();
        m += (w / total) * tensor(ra, rb);
    }
    m = ((m + m.adjoint()) / 2.0).eval();
    DensityMatrix rho;
    rho.matrix = std::move(m);
    rho.dim_a = dim_a;
    rho.dim_b = dim_b;
    rho.is_valid_state = true;  // convex mixture of states
    return rho;
}

}  // namespace wywitness
