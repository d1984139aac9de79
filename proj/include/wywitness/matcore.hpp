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
 * Dense complex-matrix foundation: Hermiticity checks, Pauli matrices,
 * Kronecker products, Hermitian eigendecomposition and the principal
 * matrix square root of (possibly indefinite) Hermitian matrices.
 */

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "wywitness/errors.hpp"

namespace wywitness {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for validity/verdict checks.
inline constexpr double kDefaultTol = 1e-9;
/// Default tolerance for reconstruction assertions.
inline constexpr double kReconstructionTol = 1e-10;

/// Largest entrywise deviation of m from its own adjoint.
inline double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

inline void require_hermitian(const ComplexMatrix& m, double tol = kDefaultTol) {
    if (m.rows() != m.cols()) {
        throw NonHermitianInput("matrix is not square");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        throw NonHermitianInput("matrix is not Hermitian (defect " +
                                std::to_string(defect) + " > tol " +
                                std::to_string(tol) + ")");
    }
}

enum class PauliOp : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Standard 2x2 Pauli matrices in the computational basis.
inline ComplexMatrix pauli(PauliOp which) {
    ComplexMatrix m(2, 2);
    const Complex i{0.0, 1.0};
    switch (which) {
        case PauliOp::I:
            m << 1, 0, 0, 1;
            break;
        case PauliOp::X:
            m << 0, 1, 1, 0;
            break;
        case PauliOp::Y:
            m << 0, -i, i, 0;
            break;
        case PauliOp::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

/// Kronecker product a (x) b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
struct Spectrum {
    RealVector eigenvalues;    // descending
    ComplexMatrix eigenvectors;  // columns, same order

    ComplexMatrix reconstruct() const {
        return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
    }
};

inline Spectrum eig_hermitian(const ComplexMatrix& m, double tol = kDefaultTol) {
    require_hermitian(m, tol);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("Hermitian eigendecomposition did not converge");
    }
    // Eigen returns ascending order; the contract here is descending.
    Spectrum s;
    s.eigenvalues = solver.eigenvalues().reverse();
    s.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return s;
}

/// Principal scalar square-root branch: sqrt(x) for x >= 0, i*sqrt(|x|) below.
inline Complex principal_sqrt_scalar(double x) {
    return x >= 0.0 ? Complex(std::sqrt(x), 0.0) : Complex(0.0, std::sqrt(-x));
}

/**
 * Principal square root of a Hermitian matrix, defined eigenvalue-wise.
 * Negative eigenvalues map to i*sqrt(|lambda|), so the result squares back
 * to the input even when the input is indefinite (the result is then
 * complex symmetric rather than Hermitian).
 */
inline ComplexMatrix principal_sqrt(const ComplexMatrix& m,
                                    double tol = kDefaultTol) {
    const Spectrum s = eig_hermitian(m, tol);
    Eigen::VectorXcd roots(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        roots(k) = principal_sqrt_scalar(s.eigenvalues(k));
    }
    return s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
}

inline ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

}  // namespace wywitness
