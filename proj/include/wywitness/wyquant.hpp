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
 * Uncertainty-theoretic quantities of a (state, observable) pair: variance,
 * skew information, its classical complement, the U-quantity, the
 * correlation analogue of skew information, covariance and the measurable
 * lower bound on skew information.
 *
 * Every quantity returns a complex scalar: applied to a partially
 * transposed (indefinite) matrix, the square-root terms become genuinely
 * complex. On valid states the imaginary parts vanish to roundoff.
 */

#pragma once

#include "wywitness/density.hpp"

namespace wywitness {

namespace detail {

inline void require_same_dim(const DensityMatrix& rho, const ComplexMatrix& a,
                             const char* who) {
    if (a.rows() != a.cols() || a.rows() != rho.dim()) {
        throw DimensionMismatch(std::string(who) +
                                ": observable dimension does not match state");
    }
}

}  // namespace detail

/// V(rho, A) = Tr(rho A^2) - (Tr rho A)^2
inline Complex variance(const DensityMatrix& rho, const ComplexMatrix& a) {
    detail::require_same_dim(rho, a, "variance");
    const Complex mean = (rho.matrix * a).trace();
    return (rho.matrix * a * a).trace() - mean * mean;
}

/// I(rho, A) = Tr(rho A^2) - Tr(sqrt(rho) A sqrt(rho) A)
inline Complex skew_information(const DensityMatrix& rho,
                                const ComplexMatrix& a,
                                double tol = kDefaultTol) {
    detail::require_same_dim(rho, a, "skew_information");
    const ComplexMatrix s = principal_sqrt(rho.matrix, tol);
    return (rho.matrix * a * a).trace() - (s * a * s * a).trace();
}

/// C(rho, A) = V - I, the classical (mixing) share of the variance.
inline Complex classical_uncertainty(const DensityMatrix& rho,
                                     const ComplexMatrix& a,
                                     double tol = kDefaultTol) {
    return variance(rho, a) - skew_information(rho, a, tol);
}

/// U^2(rho, A) = V^2 - (V - I)^2
inline Complex u_quantity_squared(const DensityMatrix& rho,
                                  const ComplexMatrix& a,
                                  double tol = kDefaultTol) {
    const Complex v = variance(rho, a);
    const Complex c = v - skew_information(rho, a, tol);
    return v * v - c * c;
}

/**
 * Correlation analogue of the skew information,
 *   C_rho(A, B) = Tr(rho A* B) - Tr(sqrt(rho) A* sqrt(rho) B),
 * with A* the entrywise conjugate in the computational basis. For real-entried
 * A and B = A this reduces to the skew information.
 */
inline Complex wy_correlation(const DensityMatrix& rho, const ComplexMatrix& a,
                              const ComplexMatrix& b, double tol = kDefaultTol) {
    detail::require_same_dim(rho, a, "wy_correlation");
    detail::require_same_dim(rho, b, "wy_correlation");
    const ComplexMatrix astar = a.conjugate();
    const ComplexMatrix s = principal_sqrt(rho.matrix, tol);
    return (rho.matrix * astar * b).trace() - (s * astar * s * b).trace();
}

/// Cov_rho(A, B) = Tr(rho A B) - Tr(rho A) Tr(rho B)
inline Complex covariance(const DensityMatrix& rho, const ComplexMatrix& a,
                          const ComplexMatrix& b) {
    detail::require_same_dim(rho, a, "covariance");
    detail::require_same_dim(rho, b, "covariance");
    return (rho.matrix * a * b).trace() -
           (rho.matrix * a).trace() * (rho.matrix * b).trace();
}

/**
 * Experimentally measurable lower bound on skew information,
 *   I^L(rho, A) = 1/4 sum_ij (lambda_i - lambda_j)^2 |A_ij|^2
 * with A_ij taken in the eigenbasis of rho. Requires a valid (PSD) state.
 */
inline double skew_info_lower_bound(const DensityMatrix& rho,
                                    const ComplexMatrix& a,
                                    double tol = kDefaultTol) {
    detail::require_same_dim(rho, a, "skew_info_lower_bound");
    if (!rho.is_valid_state) {
        throw InvalidState("skew_info_lower_bound needs a PSD state");
    }
    const Spectrum s = eig_hermitian(rho.matrix, tol);
    const ComplexMatrix a_eig = s.eigenvectors.adjoint() * a * s.eigenvectors;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        for (Eigen::Index j = 0; j < rho.dim(); ++j) {
            const double gap = s.eigenvalues(i) - s.eigenvalues(j);
            sum += gap * gap * std::norm(a_eig(i, j));
        }
    }
    return 0.25 * sum;
}

/// A - <A>_rho * Identity
inline ComplexMatrix fluctuation_operator(const DensityMatrix& rho,
                                          const ComplexMatrix& a) {
    detail::require_same_dim(rho, a, "fluctuation_operator");
    const Complex mean = (rho.matrix * a).trace();
    return a - mean * identity(rho.dim());
}

/// Bundle of the four uncertainty quantities of one (state, observable) pair.
struct UncertaintyProfile {
    Complex variance;
    Complex skew_info;
    Complex classical_part;  // variance - skew_info
    Complex u_squared;       // variance^2 - classical_part^2
};

inline UncertaintyProfile uncertainty_profile(const DensityMatrix& rho,
                                              const ComplexMatrix& a,
                                              double tol = kDefaultTol) {
    UncertaintyProfile p;
    p.variance = variance(rho, a);
    p.skew_info = skew_information(rho, a, tol);
    p.classical_part = p.variance - p.skew_info;
    p.u_squared = p.variance * p.variance - p.classical_part * p.classical_part;
    return p;
}

}  // namespace wywitness
