// Copyright 2026 The qcab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCAB_MATRIX_H
#define QCAB_MATRIX_H

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qcab/amplitude.h"

namespace qcab {

/// Dense row-major complex matrix. Column j is the image of basis vector j.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    /// Row-major nested initializer; all rows must have the same length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows);

    static ComplexMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Amplitude &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Amplitude &at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    bool operator==(const ComplexMatrix &other) const = default;

    /// max |(M^dagger M - I)_{ij}|. Requires a square matrix.
    double max_deviation_from_isometry() const;

    /// Largest entry-wise |a_ij - b_ij|; shapes must match.
    double max_entry_difference(const ComplexMatrix &other) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Amplitude> data_;
};

/// Kronecker product. `(A B; C D) (x) U = (A(x)U  B(x)U; C(x)U  D(x)U)`.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// True iff the matrix is square and M^dagger M equals I entry-wise within eps.
bool is_unitary_matrix(const ComplexMatrix &m, double eps);

}  // namespace qcab

#endif
