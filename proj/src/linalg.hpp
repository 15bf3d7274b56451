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

#ifndef IAPART_LINALG_HPP
#define IAPART_LINALG_HPP

#include <armadillo>

namespace iapart {

using cxmat = arma::cx_mat;

// Fixes the phase of every column so the first entry whose magnitude exceeds
// tol becomes real and positive. Eigenvectors and orthonormal bases pass
// through this so repeated runs produce bit-identical output.
void normalize_column_phases(cxmat& m, double tol = 1e-10);

// log2 of the determinant of a Hermitian positive-definite matrix.
double log2_det_hpd(const cxmat& m);

// Eigen-decomposition of a Hermitian matrix with ascending eigenvalues and
// phase-normalized eigenvectors. Dimension 2 is solved in closed form (the
// iterative precoder design spends most of its time there); larger matrices
// go through LAPACK.
void eig_hermitian(arma::vec& eigval, cxmat& eigvec, const cxmat& m);

} // namespace iapart

#endif
