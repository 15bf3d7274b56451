// SPDX-License-Identifier: Apache-2.0
//
// iapart - overhead-aware user partitioning for MIMO interference channels
// Copyright 2026 the iapart authors
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

#include "linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace iapart {

void normalize_column_phases(cxmat& m, double tol) {
    for (arma::uword j = 0; j < m.n_cols; ++j) {
        for (arma::uword i = 0; i < m.n_rows; ++i) {
            const std::complex<double> v = m(i, j);
            const double mag = std::abs(v);
            if (mag > tol) {
                m.col(j) *= std::conj(v) / mag;
                break;
            }
        }
    }
}

double log2_det_hpd(const cxmat& m) {
    constexpr double kLog2 = 0.69314718055994530942;
    const arma::uword n = m.n_rows;
    if (n != m.n_cols)
        throw std::invalid_argument("log2_det_hpd: matrix must be square");
    if (n == 1)
        return std::log(m(0, 0).real()) / kLog2;
    if (n == 2) {
        const double det = m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
        return std::log(det) / kLog2;
    }
    const cxmat h = 0.5 * (m + m.t());
    return arma::log_det_sympd(h) / kLog2;
}

namespace {

// Closed-form Hermitian 2x2 eigensolver: deterministic and much cheaper than
// a LAPACK round trip for the tiny covariances the alignment loop produces.
void eig_hermitian_2x2(arma::vec& eigval, cxmat& eigvec, const cxmat& m) {
    const double a = m(0, 0).real();
    const double c = m(1, 1).real();
    const std::complex<double> b = m(0, 1);
    const double bb = std::norm(b);

    eigval.set_size(2);
    eigvec.set_size(2, 2);

    if (bb == 0.0) {
        if (a <= c) {
            eigval = {a, c};
            eigvec = arma::eye<cxmat>(2, 2);
        } else {
            eigval = {c, a};
            eigvec.zeros();
            eigvec(1, 0) = 1.0;
            eigvec(0, 1) = 1.0;
        }
        return;
    }

    const double disc = std::sqrt((a - c) * (a - c) + 4.0 * bb);
    const double lo = 0.5 * ((a + c) - disc);
    const double hi = 0.5 * ((a + c) + disc);
    eigval = {lo, hi};

    // (A - lambda I) v = 0 is solved by v = (b, lambda - a); the second
    // component is real so normalization needs no complex division.
    for (int j = 0; j < 2; ++j) {
        const double d = eigval(j) - a;
        const double nrm = std::sqrt(bb + d * d);
        eigvec(0, j) = b / nrm;
        eigvec(1, j) = d / nrm;
    }
}

} // namespace

void eig_hermitian(arma::vec& eigval, cxmat& eigvec, const cxmat& m) {
    if (m.n_rows != m.n_cols)
        throw std::invalid_argument("eig_hermitian: matrix must be square");
    if (m.n_rows == 2) {
        eig_hermitian_2x2(eigval, eigvec, m);
    } else {
        const cxmat h = 0.5 * (m + m.t());
        if (!arma::eig_sym(eigval, eigvec, h))
            throw std::runtime_error("eig_hermitian: eigen-decomposition failed");
    }
    normalize_column_phases(eigvec);
}

} // namespace iapart
