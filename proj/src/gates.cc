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

#include "qcab/gates.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcab {

namespace {

constexpr std::array<std::string_view, 7> kGateNames = {"I", "X", "Y", "Z", "H", "T", "CNOT"};

void check_label(int n, const Label &label) {
    if (label.size() != static_cast<size_t>(n)) {
        throw std::invalid_argument("register label '" + label + "' has wrong length");
    }
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("register label '" + label + "' is not a bitstring");
        }
    }
}

}  // namespace

Gate::Gate(int arity, ComplexMatrix matrix) : arity_(arity), matrix_(std::move(matrix)) {
    if (arity < 1 || arity > 20) {
        throw std::invalid_argument("gate arity must be in [1, 20]");
    }
    size_t d = size_t{1} << arity;
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("gate matrix must be 2^arity square");
    }
}

Gate named_gate(std::string_view name) {
    const double r = std::numbers::sqrt2 / 2;
    const Amplitude i{0, 1};
    if (name == "I") {
        return Gate(1, ComplexMatrix::identity(2));
    }
    if (name == "X") {
        return Gate(1, {{0, 1}, {1, 0}});
    }
    if (name == "Y") {
        // Columns (0,1) and (-1,0): |0> -> |1>, |1> -> -|0>.
        return Gate(1, {{0, -1}, {1, 0}});
    }
    if (name == "Z") {
        return Gate(1, {{1, 0}, {0, -1}});
    }
    if (name == "H") {
        return Gate(1, {{r, r}, {r, -r}});
    }
    if (name == "T") {
        return Gate(1, {{1, 0}, {0, std::exp(i * (std::numbers::pi / 4))}});
    }
    if (name == "CNOT") {
        return Gate(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

std::span<const std::string_view> named_gate_names() {
    return kGateNames;
}

Gate tensor(const Gate &a, const Gate &b) {
    return Gate(a.arity() + b.arity(), kron(a.matrix(), b.matrix()));
}

bool is_unitary(const Gate &g, const Tolerance &tol) {
    return is_unitary_matrix(g.matrix(), tol.eps_unitary);
}

QubitRegister::QubitRegister(int n, Superposition state, const Tolerance &tol) : n_(n), state_(std::move(state)) {
    if (n < 1) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    for (const auto &[label, a] : state_) {
        check_label(n, label);
    }
    double ns = norm_sq(state_);
    if (std::abs(ns - 1.0) > tol.eps_norm) {
        throw NormalizationError("register state is not normalized: norm_sq = " + std::to_string(ns));
    }
}

QubitRegister QubitRegister::basis(std::string_view bits) {
    return QubitRegister(static_cast<int>(bits.size()), Superposition::basis(Label(bits)));
}

QubitRegister apply(const QubitRegister &reg, const Gate &g, std::span<const int> targets, const Tolerance &tol) {
    if (static_cast<int>(targets.size()) != g.arity()) {
        throw std::invalid_argument("gate arity does not match number of targets");
    }
    for (size_t k = 0; k < targets.size(); k++) {
        if (targets[k] < 0 || targets[k] >= reg.size()) {
            throw std::invalid_argument("target qubit index out of range");
        }
        for (size_t j = 0; j < k; j++) {
            if (targets[j] == targets[k]) {
                throw std::invalid_argument("duplicate target qubit");
            }
        }
    }
    const size_t dim = g.dim();
    const int k = g.arity();
    AmplitudeAccumulator acc;
    for (const auto &[label, a] : reg.state()) {
        size_t col = 0;
        for (int t : targets) {
            col = (col << 1) | static_cast<size_t>(label[t] == '1');
        }
        Label out = label;
        for (size_t row = 0; row < dim; row++) {
            Amplitude m = g.matrix().at(row, col);
            if (m == Amplitude{}) {
                continue;
            }
            for (int b = 0; b < k; b++) {
                out[targets[b]] = ((row >> (k - 1 - b)) & 1) ? '1' : '0';
            }
            acc.add(out, m * a);
        }
    }
    return QubitRegister(reg.size(), std::move(acc).finish(tol), QubitRegister::Unchecked{});
}

QubitRegister hadamard_all(int n) {
    if (n < 1) {
        throw std::invalid_argument("hadamard_all needs n >= 1");
    }
    QubitRegister reg = QubitRegister::basis(std::string(n, '0'));
    Gate h = named_gate("H");
    for (int q = 0; q < n; q++) {
        reg = apply(reg, h, {q});
    }
    return reg;
}

bool is_product_2q(const QubitRegister &reg, const Tolerance &tol) {
    if (reg.size() != 2) {
        throw std::invalid_argument("product test needs a 2-qubit register");
    }
    const auto &s = reg.state();
    Amplitude det = s.amplitude("00") * s.amplitude("11") - s.amplitude("01") * s.amplitude("10");
    return std::abs(det) <= tol.eps_unitary;
}

namespace {

std::map<std::string, double> detect(const QubitRegister &path) {
    std::map<std::string, double> out{{"A", 0.0}, {"B", 0.0}};
    auto outcomes = measure_projective(path.state(), [](const Label &l) { return l == "0" ? "B" : "A"; });
    for (const auto &o : outcomes) {
        out[o.tag] = o.probability;
    }
    return out;
}

}  // namespace

std::map<std::string, double> interferometer(bool obstacle) {
    Gate splitter = named_gate("H");
    QubitRegister path = apply(QubitRegister::basis("0"), splitter, {0});
    if (obstacle) {
        // Blocked lower arm: keep the photons that survive, conditioned on detection.
        auto outcomes = measure_projective(path.state(), [](const Label &l) { return l; });
        for (const auto &o : outcomes) {
            if (o.tag == "0") {
                path = QubitRegister(1, o.post_state);
            }
        }
    }
    path = apply(path, splitter, {0});
    return detect(path);
}

std::map<std::string, double> single_splitter() {
    return detect(apply(QubitRegister::basis("0"), named_gate("H"), {0}));
}

}  // namespace qcab
