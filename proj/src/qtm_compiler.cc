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

#include "qcab/qtm_compiler.h"

#include <cmath>
#include <map>

namespace qcab {

StateSplit split_states(const QtmSpec &uqtm) {
    if (!is_unidirectional(uqtm)) {
        throw std::invalid_argument("machine is not unidirectional: some state is entered from both directions");
    }
    const int nq = uqtm.num_states();
    std::vector<int> dir(static_cast<size_t>(nq), 0);
    for (const auto &t : uqtm.transitions()) {
        if (t.amplitude == Amplitude{}) {
            continue;
        }
        if (t.move == Move::kStay) {
            throw std::invalid_argument("stay moves cannot be compiled; state '" + uqtm.states()[t.next_state] +
                                        "' is entered without moving");
        }
        dir[static_cast<size_t>(t.next_state)] = static_cast<int>(t.move);
    }
    StateSplit split;
    split.is_left.resize(static_cast<size_t>(nq));
    for (int q = 0; q < nq; q++) {
        if (uqtm.states()[static_cast<size_t>(q)] == "#") {
            throw std::invalid_argument("state name '#' is reserved for the empty slot");
        }
        bool left = dir[static_cast<size_t>(q)] < 0;
        split.is_left[static_cast<size_t>(q)] = left;
        (left ? split.k_left : split.k_right).push_back(q);
    }
    return split;
}

namespace {

// Composite index of the cell carrying state q over symbol tau.
int head_cell(const CompiledPqca &c, int q, int tau) {
    const int s = c.slot[static_cast<size_t>(q)];
    if (c.split.is_left[static_cast<size_t>(q)]) {
        return c.spec.compose(std::vector<int>{s, tau, 0});
    }
    return c.spec.compose(std::vector<int>{0, tau, s});
}

}  // namespace

CompiledPqca compile(const QtmSpec &uqtm, const Tolerance &tol) {
    StateSplit split = split_states(uqtm);
    std::vector<std::string> left{"#"};
    std::vector<std::string> right{"#"};
    std::vector<int> slot(static_cast<size_t>(uqtm.num_states()));
    for (int q : split.k_left) {
        slot[static_cast<size_t>(q)] = static_cast<int>(left.size());
        left.push_back(uqtm.states()[static_cast<size_t>(q)]);
    }
    for (int q : split.k_right) {
        slot[static_cast<size_t>(q)] = static_cast<int>(right.size());
        right.push_back(uqtm.states()[static_cast<size_t>(q)]);
    }
    size_t total = left.size() * uqtm.alphabet().size() * right.size();
    if (total > (size_t{1} << 12)) {
        throw SizeLimitError("compiled cell state set too large");
    }
    ComplexMatrix u = ComplexMatrix::identity(total);
    std::vector<int> quiescent{0, uqtm.blank(), 0};
    // The spec is rebuilt below once u is final; this one only provides the
    // index arithmetic.
    CompiledPqca draft{PqcaSpec({left, uqtm.alphabet(), right}, {1, 0, -1}, quiescent, u), split, uqtm.blank(),
                       slot};

    std::vector<bool> active(static_cast<size_t>(uqtm.num_states()), false);
    for (const auto &t : uqtm.transitions()) {
        if (t.amplitude != Amplitude{}) {
            active[static_cast<size_t>(t.state)] = true;
        }
    }
    active[static_cast<size_t>(uqtm.final())] = false;
    for (int q = 0; q < uqtm.num_states(); q++) {
        if (!active[static_cast<size_t>(q)]) {
            continue;
        }
        for (int tau = 0; tau < uqtm.num_symbols(); tau++) {
            size_t col = static_cast<size_t>(head_cell(draft, q, tau));
            for (size_t r = 0; r < total; r++) {
                u.at(r, col) = 0;
            }
            for (const auto &t : uqtm.branches(q, tau)) {
                u.at(static_cast<size_t>(head_cell(draft, t.next_state, t.write)), col) += t.amplitude;
            }
        }
    }

    std::vector<std::string> bad;
    ComplexMatrix gram = u.adjoint() * u;
    for (size_t j = 0; j < total; j++) {
        for (size_t i = 0; i < total; i++) {
            Amplitude expected = i == j ? Amplitude{1.0} : Amplitude{};
            if (std::abs(gram.at(i, j) - expected) > tol.eps_unitary) {
                bad.push_back(draft.spec.state_name(static_cast<int>(j)));
                break;
            }
        }
    }
    if (!bad.empty()) {
        std::string msg = "compiled cell matrix is not unitary; offending columns:";
        for (const auto &b : bad) {
            msg += " " + b;
        }
        throw CompileError(msg);
    }
    return CompiledPqca{PqcaSpec({left, uqtm.alphabet(), right}, {1, 0, -1}, quiescent, std::move(u)),
                        std::move(split), uqtm.blank(), std::move(slot)};
}

QcaConfig embed(const QtmConfig &c, const CompiledPqca &compiled) {
    const int blank = compiled.blank;
    std::map<long long, std::vector<int>> cells;
    for (const auto &[i, s] : c.tape()) {
        cells[i] = {0, s, 0};
    }
    const int q = c.state();
    const bool left = compiled.split.is_left.at(static_cast<size_t>(q));
    const long long n = left ? c.head() + 1 : c.head() - 1;
    auto [it, inserted] = cells.try_emplace(n, std::vector<int>{0, blank, 0});
    it->second[left ? 0 : 2] = compiled.slot[static_cast<size_t>(q)];
    std::map<long long, int> composite;
    for (const auto &[i, parts] : cells) {
        composite.emplace(i, compiled.spec.compose(parts));
    }
    return QcaConfig(composite, compiled.spec.quiescent());
}

double pqca_acceptance(const Superposition &state, const CompiledPqca &compiled, long long k,
                       const std::set<int> &accept) {
    double p = 0;
    for (const auto &[label, a] : state) {
        int cell = QcaConfig::from_label(label).at(k, compiled.spec.quiescent());
        if (accept.contains(compiled.spec.decompose(cell)[1])) {
            p += std::norm(a);
        }
    }
    return p;
}

EquivalenceReport equivalence_check(const QtmSpec &uqtm, std::span<const int> input, int steps, long long k,
                                    const std::set<int> &accept, const Tolerance &tol) {
    if (steps < 0) {
        throw std::invalid_argument("steps must be non-negative");
    }
    CompiledPqca compiled = compile(uqtm, tol);
    double p_qtm = acceptance_probability(uqtm, input, steps, k, accept, tol);
    Superposition s = basis_state(embed(initial_config(uqtm, input), compiled));
    int pqca_steps = 0;
    for (; pqca_steps < steps; pqca_steps++) {
        s = pqca_step(s, compiled.spec, tol);
    }
    double p_pqca = pqca_acceptance(s, compiled, k, accept);
    return EquivalenceReport{p_qtm, p_pqca, std::abs(p_qtm - p_pqca), steps, pqca_steps};
}

}  // namespace qcab
