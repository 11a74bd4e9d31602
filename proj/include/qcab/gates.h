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

#ifndef QCAB_GATES_H
#define QCAB_GATES_H

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "qcab/amplitude.h"
#include "qcab/matrix.h"

namespace qcab {

/// A k-qubit operator as a 2^k x 2^k matrix.
///
/// Within a gate, the first target qubit is the most significant bit of the
/// row/column index, so CNOT's control is target 0.
class Gate {
   public:
    Gate() = default;
    /// Throws std::invalid_argument unless `matrix` is 2^arity square.
    Gate(int arity, ComplexMatrix matrix);

    int arity() const {
        return arity_;
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    size_t dim() const {
        return matrix_.rows();
    }

   private:
    int arity_ = 0;
    ComplexMatrix matrix_;
};

/// One of I, X, Y, Z, H, T, CNOT. Throws std::invalid_argument otherwise.
Gate named_gate(std::string_view name);

/// Names accepted by named_gate, in a fixed order.
std::span<const std::string_view> named_gate_names();

Gate tensor(const Gate &a, const Gate &b);

bool is_unitary(const Gate &g, const Tolerance &tol = {});

/// An n-qubit register. Labels are length-n strings over {'0','1'}; character
/// i holds qubit i.
class QubitRegister {
   public:
    /// Throws std::invalid_argument on malformed labels, NormalizationError
    /// if the state is not a unit vector.
    QubitRegister(int n, Superposition state, const Tolerance &tol = {});

    /// |bits>, e.g. basis("010").
    static QubitRegister basis(std::string_view bits);

    int size() const {
        return n_;
    }
    const Superposition &state() const {
        return state_;
    }

   private:
    struct Unchecked {};
    QubitRegister(int n, Superposition state, Unchecked) : n_(n), state_(std::move(state)) {
    }
    friend QubitRegister apply(const QubitRegister &, const Gate &, std::span<const int>, const Tolerance &);

    int n_;
    Superposition state_;
};

/// Applies `g` to `targets` (identity elsewhere). Throws std::invalid_argument
/// on arity mismatch, out-of-range or duplicate targets.
QubitRegister apply(const QubitRegister &reg, const Gate &g, std::span<const int> targets, const Tolerance &tol = {});

inline QubitRegister apply(
    const QubitRegister &reg, const Gate &g, std::initializer_list<int> targets, const Tolerance &tol = {}) {
    return apply(reg, g, std::span<const int>(targets.begin(), targets.size()), tol);
}

/// H on every qubit of |0...0>.
QubitRegister hadamard_all(int n);

/// Determinant test |a00 a11 - a01 a10| <= eps_unitary.
bool is_product_2q(const QubitRegister &reg, const Tolerance &tol = {});

/// Detection probabilities keyed "A" and "B" for the photon path experiments.
///
/// The path is a qubit with |0> the upper arm; half-silvered mirrors act as H,
/// full mirrors relabel arms and are omitted. Detector B sits on |0>.
std::map<std::string, double> interferometer(bool obstacle);

/// A lone half-silvered mirror in front of both detectors.
std::map<std::string, double> single_splitter();

}  // namespace qcab

#endif
