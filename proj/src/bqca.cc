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

#include "qcab/bqca.h"

#include <array>
#include <stdexcept>

namespace qcab {

BqcaSpec make_bqca_spec(int n, std::vector<Gate> schedule, int steps, const Tolerance &tol) {
    if (n < 1) {
        throw std::invalid_argument("chain needs at least one qubit");
    }
    if (steps < 0) {
        throw std::invalid_argument("steps must be non-negative");
    }
    if (steps > 0 && schedule.empty()) {
        throw std::invalid_argument("non-empty run needs a non-empty schedule");
    }
    for (const auto &g : schedule) {
        if (g.arity() != 2) {
            throw std::invalid_argument("block rules must be two-qubit gates");
        }
        if (!is_unitary(g, tol)) {
            throw std::invalid_argument("block rules must be unitary");
        }
    }
    return BqcaSpec{n, std::move(schedule), steps};
}

std::vector<std::pair<int, int>> pair_slots(int n, int t) {
    std::vector<std::pair<int, int>> out;
    for (int a = t % 2; a + 1 < n; a += 2) {
        out.emplace_back(a, a + 1);
    }
    return out;
}

QubitRegister bqca_step(const QubitRegister &state, const Gate &gate, int t, const Tolerance &tol) {
    if (gate.arity() != 2) {
        throw std::invalid_argument("block rules must be two-qubit gates");
    }
    if (t < 0) {
        throw std::invalid_argument("step index must be non-negative");
    }
    QubitRegister out = state;
    for (auto [a, b] : pair_slots(state.size(), t)) {
        out = apply(out, gate, {a, b}, tol);
    }
    return out;
}

ScheduleRun run_schedule(const QubitRegister &state, const BqcaSpec &spec, const Tolerance &tol) {
    if (state.size() != spec.n) {
        throw std::invalid_argument("register size does not match the chain length");
    }
    ScheduleRun run{state, {state}};
    for (int t = 0; t < spec.steps; t++) {
        const Gate &g = spec.schedule[static_cast<size_t>(t) % spec.schedule.size()];
        run.final_state = bqca_step(run.final_state, g, t, tol);
        run.trace.push_back(run.final_state);
    }
    return run;
}

QubitRegister circuit_oracle(const QubitRegister &state, const BqcaSpec &spec, const Tolerance &tol) {
    const int n = spec.n;
    if (n > kMaxOracleQubits) {
        throw SizeLimitError("circuit oracle is limited to 12 qubits");
    }
    if (state.size() != n) {
        throw std::invalid_argument("register size does not match the chain length");
    }
    const size_t dim = size_t{1} << n;
    // Qubit q is bit (n - 1 - q) of the dense index.
    std::vector<Amplitude> psi(dim);
    for (const auto &[label, a] : state.state()) {
        size_t idx = 0;
        for (char c : label) {
            idx = (idx << 1) | static_cast<size_t>(c == '1');
        }
        psi[idx] = a;
    }
    for (int t = 0; t < spec.steps; t++) {
        const ComplexMatrix &m = spec.schedule[static_cast<size_t>(t) % spec.schedule.size()].matrix();
        for (int a = t % 2; a + 1 < n; a += 2) {
            const size_t hi = size_t{1} << (n - 1 - a);
            const size_t lo = size_t{1} << (n - 2 - a);
            for (size_t base = 0; base < dim; base++) {
                if (base & (hi | lo)) {
                    continue;
                }
                const std::array<size_t, 4> idx{base, base | lo, base | hi, base | hi | lo};
                std::array<Amplitude, 4> in{psi[idx[0]], psi[idx[1]], psi[idx[2]], psi[idx[3]]};
                for (size_t r = 0; r < 4; r++) {
                    Amplitude v{};
                    for (size_t c = 0; c < 4; c++) {
                        v += m.at(r, c) * in[c];
                    }
                    psi[idx[r]] = v;
                }
            }
        }
    }
    Superposition::TermMap terms;
    for (size_t idx = 0; idx < dim; idx++) {
        if (std::norm(psi[idx]) < tol.eps_drop) {
            continue;
        }
        std::string label(static_cast<size_t>(n), '0');
        for (int q = 0; q < n; q++) {
            if ((idx >> (n - 1 - q)) & 1) {
                label[static_cast<size_t>(q)] = '1';
            }
        }
        terms.emplace(std::move(label), psi[idx]);
    }
    return QubitRegister(n, Superposition(std::move(terms)), tol);
}

QubitRegister qgca_step(const QubitRegister &state, std::span<const Gate> slots, int t, const Tolerance &tol) {
    auto pairs = pair_slots(state.size(), t);
    if (slots.size() != pairs.size()) {
        throw std::invalid_argument("gate slot count does not match the number of pairs at this step");
    }
    for (const auto &g : slots) {
        if (g.arity() != 2 || !is_unitary(g, tol)) {
            throw std::invalid_argument("gate slots must hold unitary two-qubit gates");
        }
    }
    QubitRegister out = state;
    for (size_t j = 0; j < pairs.size(); j++) {
        out = apply(out, slots[j], {pairs[j].first, pairs[j].second}, tol);
    }
    return out;
}

}  // namespace qcab
