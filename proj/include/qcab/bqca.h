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

#ifndef QCAB_BQCA_H
#define QCAB_BQCA_H

#include <span>
#include <utility>
#include <vector>

#include "qcab/gates.h"

namespace qcab {

/// Open qubit chain driven by two-qubit gates on alternating pairings:
/// (2i, 2i+1) on even steps, (2i+1, 2i+2) on odd steps. An edge qubit left
/// without a partner idles.
struct BqcaSpec {
    int n = 0;
    /// Gate used at step t is schedule[t % schedule.size()].
    std::vector<Gate> schedule;
    int steps = 0;
};

/// Throws std::invalid_argument unless every gate has arity 2 and is unitary.
BqcaSpec make_bqca_spec(int n, std::vector<Gate> schedule, int steps, const Tolerance &tol = {});

/// Pairs acting at step parity t % 2.
std::vector<std::pair<int, int>> pair_slots(int n, int t);

QubitRegister bqca_step(const QubitRegister &state, const Gate &gate, int t, const Tolerance &tol = {});

struct ScheduleRun {
    QubitRegister final_state;
    /// trace[0] is the input; trace[t + 1] follows step t.
    std::vector<QubitRegister> trace;
};

ScheduleRun run_schedule(const QubitRegister &state, const BqcaSpec &spec, const Tolerance &tol = {});

constexpr int kMaxOracleQubits = 12;

/// Same dynamics on a dense 2^n amplitude vector with explicit 4x4 updates.
/// Independent of the sparse gate engine; used as a reference.
QubitRegister circuit_oracle(const QubitRegister &state, const BqcaSpec &spec, const Tolerance &tol = {});

/// Gate-per-slot variant: slots[j] acts on pair_slots(n, t)[j]. Throws
/// std::invalid_argument when the slot count does not match.
QubitRegister qgca_step(const QubitRegister &state, std::span<const Gate> slots, int t, const Tolerance &tol = {});

}  // namespace qcab

#endif
