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

#ifndef QCAB_QTM_COMPILER_H
#define QCAB_QTM_COMPILER_H

#include <set>
#include <stdexcept>
#include <vector>

#include "qcab/pqca.h"
#include "qcab/qtm.h"

namespace qcab {

/// Raised when the compiled cell matrix is not unitary.
struct CompileError : std::domain_error {
    using std::domain_error::domain_error;
};

/// States entered moving left (K_l) and right (K_r). States that are never
/// entered go to K_r.
struct StateSplit {
    std::vector<int> k_left;
    std::vector<int> k_right;
    std::vector<bool> is_left;
};

/// Throws std::invalid_argument for machines that are not unidirectional or
/// that use stay moves.
StateSplit split_states(const QtmSpec &uqtm);

/// A three-part automaton simulating a unidirectional QTM step for step.
///
/// Cell parts are (Q_l, Q_m, Q_r) with Q_l = {#} + K_l, Q_m = the tape
/// alphabet and Q_r = {#} + K_r; "#" is index 0 of both outer parts and the
/// quiescent state is (#, blank, #). Offsets are (+1, 0, -1).
///
/// Placement of the head state (cells are tape squares, 0-based): a K_r state
/// with the head on square h sits in the right slot of cell h - 1, a K_l state
/// in the left slot of cell h + 1. The routing step brings it onto cell h,
/// where the cell matrix performs the QTM transition.
struct CompiledPqca {
    PqcaSpec spec;
    StateSplit split;
    int blank;
    /// Part index of QTM state q inside its slot (1-based; 0 is "#").
    std::vector<int> slot;
};

/// Builds the cell matrix from the QTM transition amplitudes:
///   U[(s2,t2 at its slot), (s1,t1 at its slot)] = delta(s1, t1, t2, s2, dir(s2))
/// and the identity elsewhere. The final state and states with no outgoing
/// transition are inert: their columns are left to the identity fill. Throws
/// CompileError naming the offending columns when the result is not unitary.
CompiledPqca compile(const QtmSpec &uqtm, const Tolerance &tol = {});

QcaConfig embed(const QtmConfig &c, const CompiledPqca &compiled);

/// Mass on configurations whose cell k has a middle symbol in `accept`.
double pqca_acceptance(const Superposition &state, const CompiledPqca &compiled, long long k,
                       const std::set<int> &accept);

struct EquivalenceReport {
    double p_qtm;
    double p_pqca;
    double delta;
    int qtm_steps;
    int pqca_steps;
};

EquivalenceReport equivalence_check(const QtmSpec &uqtm, std::span<const int> input, int steps, long long k,
                                    const std::set<int> &accept, const Tolerance &tol = {});

}  // namespace qcab

#endif
