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

#ifndef QCAB_PQCA_H
#define QCAB_PQCA_H

#include <span>
#include <string>
#include <vector>

#include "qcab/amplitude.h"
#include "qcab/matrix.h"
#include "qcab/qca1d.h"

namespace qcab {

/// Partitioned QCA.
///
/// A cell state is a tuple (p_0, ..., p_{r-1}) with p_k in parts[k]; its
/// composite index is mixed-radix with part 0 most significant. One step
/// first routes sub-cells (new cell i, part k <- old cell i + offsets[k],
/// part k) and then applies `u` independently to every cell. Column j of `u`
/// is the image of composite state j.
///
/// For the usual left/middle/right split, offsets are (+1, 0, -1): a cell
/// collects the left sub-cell of its right neighbour and the right sub-cell
/// of its left neighbour, so left parts travel left and right parts travel
/// right.
class PqcaSpec {
   public:
    /// Throws std::invalid_argument unless shapes agree and `u` fixes the
    /// quiescent composite state (its row and column are the unit vector).
    PqcaSpec(std::vector<std::vector<std::string>> parts, std::vector<int> offsets, std::vector<int> quiescent,
             ComplexMatrix u);

    int num_parts() const {
        return static_cast<int>(parts_.size());
    }
    int num_states() const {
        return static_cast<int>(u_.rows());
    }
    const std::vector<std::vector<std::string>> &parts() const {
        return parts_;
    }
    const std::vector<int> &offsets() const {
        return offsets_;
    }
    const ComplexMatrix &u() const {
        return u_;
    }
    int quiescent() const {
        return quiescent_;
    }
    std::vector<int> quiescent_parts() const {
        return decompose(quiescent_);
    }

    int compose(std::span<const int> part_states) const;
    std::vector<int> decompose(int composite) const;
    /// Sub-state names joined as "(a,b,c)".
    std::string state_name(int composite) const;
    /// Parses part names, e.g. compose_named({"+", "0", "-"}).
    int compose_named(std::span<const std::string> names) const;

   private:
    std::vector<std::vector<std::string>> parts_;
    std::vector<int> offsets_;
    ComplexMatrix u_;
    int quiescent_ = 0;
};

/// The classical routing delta_c applied to every cell.
QcaConfig permute_step(const QcaConfig &c, const PqcaSpec &spec);

/// Undoes permute_step (part k moves back by -offsets[k]).
QcaConfig inverse_permute_step(const QcaConfig &c, const PqcaSpec &spec);

/// permute_step on every basis configuration followed by `u` on every cell.
/// Throws NormalizationError for a non-unit input.
Superposition pqca_step(const Superposition &state, const PqcaSpec &spec, const Tolerance &tol = {});

/// The equivalent 1d-QCA: neighbourhood = offsets and
/// delta(q_1..q_r, q) = u[q, routed(q_1..q_r)].
QcaSpec as_qca(const PqcaSpec &spec);

/// The routing step is a bijection, so unitarity reduces to that of `u`.
bool check_pqca_unitary(const PqcaSpec &spec, const Tolerance &tol = {});

/// The three-part EPR automaton: Q_l = Q_r = {0, +, -}, Q_m = {0}, quiescent
/// (0,0,0). `u` is the identity except on the pair S = {(+,0,-), (-,0,+)},
/// where it is a Hadamard-like block with -1/sqrt2 on the (-,0,+) diagonal.
PqcaSpec epr_spec();

/// Cell -1 = (0,0,-) and cell 1 = (+,0,0).
QcaConfig epr_initial_config(const PqcaSpec &epr);

}  // namespace qcab

#endif
