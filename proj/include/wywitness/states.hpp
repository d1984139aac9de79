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

/// @file Parameterized constructors for the two-qubit state families.

#pragma once

#include <cmath>
#include <string>

#include "wywitness/density.hpp"

namespace wywitness {

enum class StateFamily {
    Werner,
    WernerDerivative,
    PureNonmax,
    GhzWMix,
    Bell,
    MaxMixed,
    Custom,
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

namespace detail {

inline DensityMatrix from_exact(ComplexMatrix m, Eigen::Index da,
                                Eigen::Index db) {
    DensityMatrix rho;
    rho.matrix = std::move(m);
    rho.dim_a = da;
    rho.dim_b = db;
    rho.is_valid_state = true;  // families below are states by construction
    return rho;
}

inline void require_unit_interval(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParamOutOfRange(std::string(name) + " = " + std::to_string(p) +
                              " outside [0, 1]");
    }
}

}  // namespace detail

/// Rank-1 projector onto c0|00> + c1|11>.
inline DensityMatrix pure_nonmax(Complex c0, Complex c1,
                                 double tol = kDefaultTol) {
    const double norm2 = std::norm(c0) + std::norm(c1);
    if (std::abs(norm2 - 1.0) > tol) {
        throw NotNormalized("|c0|^2 + |c1|^2 = " + std::to_string(norm2) +
                            ", expected 1");
    }
    Eigen::Vector4cd psi;
    psi << c0, 0.0, 0.0, c1;
    return detail::from_exact(psi * psi.adjoint(), 2, 2);
}

inline DensityMatrix bell(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    switch (kind) {
        case BellKind::PhiPlus:
            psi(0) = r;
            psi(3) = r;
            break;
        case BellKind::PhiMinus:
            psi(0) = r;
            psi(3) = -r;
            break;
        case BellKind::PsiPlus:
            psi(1) = r;
            psi(2) = r;
            break;
        case BellKind::PsiMinus:
            psi(1) = r;
            psi(2) = -r;
            break;
    }
    return detail::from_exact(psi * psi.adjoint(), 2, 2);
}

inline DensityMatrix max_mixed(Eigen::Index dim) {
    if (dim < 2) {
        throw ParamOutOfRange("max_mixed needs dim >= 2");
    }
    const auto [da, db] = detail::split_dims(dim);
    if (da < 2) {
        throw ParamOutOfRange("max_mixed needs a composite dimension");
    }
    return detail::from_exact(
        ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim), da, db);
}

/// (1-p)/4 * Identity + p |psi-><psi-|, the singlet/maximally-mixed mixture.
inline DensityMatrix werner(double p) {
    detail::require_unit_interval(p, "p");
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = (1.0 - p) / 4.0;
    m(1, 1) = (1.0 + p) / 4.0;
    m(2, 2) = (1.0 + p) / 4.0;
    m(3, 3) = (1.0 - p) / 4.0;
    m(1, 2) = -2.0 * p / 4.0;
    m(2, 1) = -2.0 * p / 4.0;
    return detail::from_exact(std::move(m), 2, 2);
}

/// Mixture of sqrt(a)|00> + sqrt(1-a)|11> with the maximally mixed state.
inline DensityMatrix werner_derivative(double a, double p) {
    if (!(a >= 0.5 && a <= 1.0)) {
        throw ParamOutOfRange("a = " + std::to_string(a) +
                              " outside [1/2, 1]");
    }
    detail::require_unit_interval(p, "p");
    const double off = 4.0 * p * std::sqrt(a * (1.0 - a));
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = (1.0 - p + 4.0 * a * p) / 4.0;
    m(1, 1) = (1.0 - p) / 4.0;
    m(2, 2) = (1.0 - p) / 4.0;
    m(3, 3) = (1.0 + 3.0 * p - 4.0 * a * p) / 4.0;
    m(0, 3) = off / 4.0;
    m(3, 0) = off / 4.0;
    return detail::from_exact(std::move(m), 2, 2);
}

/**
 * Convex combination (1-p) rhoG + p rhoW of the two-qubit reductions of the
 * three-qubit GHZ and W states.
 */
inline DensityMatrix ghz_w_mixture(double p) {
    detail::require_unit_interval(p, "p");
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = (3.0 - p) / 6.0;
    m(1, 1) = p / 3.0;
    m(2, 2) = p / 3.0;
    m(3, 3) = (1.0 - p) / 2.0;
    m(1, 2) = p / 3.0;
    m(2, 1) = p / 3.0;
    return detail::from_exact(std::move(m), 2, 2);
}

}  // namespace wywitness
