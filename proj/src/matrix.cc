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

#include "qcab/matrix.h"

#include <algorithm>
#include <stdexcept>

namespace qcab {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.at(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            Amplitude a = at(r, k);
            if (a == Amplitude{}) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; c++) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

double ComplexMatrix::max_deviation_from_isometry() const {
    double worst = 0;
    for (size_t i = 0; i < cols_; i++) {
        for (size_t j = i; j < cols_; j++) {
            Amplitude dot{};
            for (size_t r = 0; r < rows_; r++) {
                dot += std::conj(at(r, i)) * at(r, j);
            }
            if (i == j) {
                dot -= 1.0;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

double ComplexMatrix::max_entry_difference(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in comparison");
    }
    double worst = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Amplitude s = a.at(ar, ac);
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = s * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

bool is_unitary_matrix(const ComplexMatrix &m, double eps) {
    return m.is_square() && m.max_deviation_from_isometry() <= eps;
}

}  // namespace qcab
