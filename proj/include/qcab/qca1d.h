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

#ifndef QCAB_QCA1D_H
#define QCAB_QCA1D_H

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcab/amplitude.h"
#include "qcab/classical_ca.h"
#include "qcab/matrix.h"

namespace qcab {

/// One local rule entry: delta(neighbourhood..., target) = amplitude.
struct DeltaEntry {
    std::vector<int> neighborhood;
    int target;
    Amplitude amplitude;
};

struct Branch {
    int target;
    Amplitude amplitude;
};

enum class SpecValidation {
    /// Quiescent stability is enforced at construction.
    kChecked,
    /// Anything goes (beyond shape and |delta| <= 1); used to feed the checkers
    /// negative inputs.
    kUnchecked,
};

/// A one-dimensional quiescent QCA <Q, lambda, N, delta>.
///
/// States are indices 0..|Q|-1 with display names. delta is stored sparsely as
/// the list of non-zero target amplitudes for each neighbourhood tuple; absent
/// entries are 0.
class QcaSpec {
   public:
    QcaSpec(std::vector<std::string> state_names, int quiescent, std::vector<int> neighborhood,
            std::span<const DeltaEntry> entries, SpecValidation validation = SpecValidation::kChecked,
            const Tolerance &tol = {});

    int num_states() const {
        return static_cast<int>(state_names_.size());
    }
    const std::vector<std::string> &state_names() const {
        return state_names_;
    }
    /// Throws std::invalid_argument for unknown names.
    int state_index(const std::string &name) const;
    int quiescent() const {
        return quiescent_;
    }
    const std::vector<int> &neighborhood() const {
        return neighborhood_;
    }
    /// max |n_k|.
    int radius() const;
    bool is_trivial() const {
        return neighborhood_.size() == 1 && neighborhood_[0] == 0;
    }
    SpecValidation validation() const {
        return validation_;
    }

    size_t tuple_count() const {
        return rows_.size();
    }
    size_t tuple_index(std::span<const int> states) const;
    std::vector<int> tuple_at(size_t index) const;

    std::span<const Branch> branches(size_t tuple_index) const {
        return rows_[tuple_index];
    }
    Amplitude delta(std::span<const int> states, int target) const;

    /// Every non-zero entry, in tuple then target order.
    std::vector<DeltaEntry> entries() const;

   private:
    std::vector<std::string> state_names_;
    int quiescent_;
    std::vector<int> neighborhood_;
    SpecValidation validation_;
    std::vector<std::vector<Branch>> rows_;
};

/// A finite configuration: cell index -> non-quiescent state. The quiescent
/// state itself belongs to the spec, so the config never stores it.
class QcaConfig {
   public:
    QcaConfig() = default;
    /// Cells equal to `quiescent` are dropped.
    QcaConfig(const std::map<long long, int> &cells, int quiescent);

    const std::map<long long, int> &cells() const {
        return cells_;
    }
    bool empty() const {
        return cells_.empty();
    }
    int at(long long i, int quiescent) const;
    QcaConfig shifted(long long by) const;

    /// "i:s,i:s,..." in increasing cell order; "" for the quiescent config.
    Label label() const;
    /// Throws std::invalid_argument on malformed labels.
    static QcaConfig from_label(const Label &label);

    auto operator<=>(const QcaConfig &other) const = default;

   private:
    std::map<long long, int> cells_;
};

Superposition basis_state(const QcaConfig &c);

/// alpha(c1, c2): product of delta over the finite active window. Exact 0 when
/// any factor is 0.
Amplitude transition_amplitude(const QcaConfig &c1, const QcaConfig &c2, const QcaSpec &spec);

/// Upper bound on successor branches per configuration.
constexpr uint64_t kMaxSuccessorBranches = uint64_t{1} << 24;

/// Every c2 with alpha(c1, c2) != 0. Throws SizeLimitError past
/// kMaxSuccessorBranches and std::invalid_argument for a spec whose quiescent
/// state is unstable (the successor set would be infinite).
std::vector<std::pair<QcaConfig, Amplitude>> successors(const QcaConfig &c1, const QcaSpec &spec);

/// One application of the evolution operator E. Throws NormalizationError for
/// a non-unit input.
Superposition evolve(const Superposition &state, const QcaSpec &spec, const Tolerance &tol = {});

struct LocalProbabilityReport {
    bool ok;
    /// The tuple whose sum_q |delta(tuple, q)|^2 is furthest from 1.
    std::vector<int> worst_tuple;
    double worst_sum;
};

LocalProbabilityReport check_local_probability(const QcaSpec &spec, const Tolerance &tol = {});

/// Exact comparison: delta(lambda..lambda, q) == [q == lambda].
bool check_quiescent_stability(const QcaSpec &spec);

/// Bounded certificate over the window [0, n).
struct WindowCertificate {
    bool ok;
    int window;
    /// Number of source configurations examined (|Q|^n).
    size_t domain_size;
    double worst_deviation;
    /// Labels of an offending pair (equal labels for a norm violation).
    std::optional<std::pair<Label, Label>> witness;
};

constexpr uint64_t kMaxWindowConfigs = uint64_t{1} << 22;

/// Column orthonormality of E restricted to sources supported in [0, n).
/// Necessary for well-formedness; its strength grows with n.
WindowCertificate check_well_formed_window(const QcaSpec &spec, int window, const Tolerance &tol = {});

/// Column check plus row orthonormality for every target supported in the
/// interior [R, n - R) (R = radius), computed over the same sources. Rows whose
/// preimage mass leaks out of the window, or has no finite preimage, fail.
WindowCertificate check_unitary_window(const QcaSpec &spec, int window, const Tolerance &tol = {});

/// For trivial specs (N = {0}): sum_q delta(q1, q) conj(delta(q2, q)) = [q1 == q2].
/// Throws std::invalid_argument for non-trivial specs.
bool check_trivial_unitary(const QcaSpec &spec, const Tolerance &tol = {});

/// Trivial QCA whose cells evolve by `m` (column j = image of state j), with
/// states named "0".."k-1" and quiescent state 0.
QcaSpec trivial_qca_from_matrix(const ComplexMatrix &m, SpecValidation validation = SpecValidation::kUnchecked);

/// Trivial QCA from a unitary with a fresh quiescent state prepended. State 0
/// is named "_" and fixed; state j + 1 (named "j") is basis vector j of `u`.
QcaSpec lambda_extended_trivial_qca(const ComplexMatrix &u, SpecValidation validation = SpecValidation::kChecked);

/// Deterministic 1-D classical automaton with 0/1 amplitudes.
QcaSpec lift_classical(const CaSpec &spec);

/// delta(q, q') = [q == q'] over `num_states` states, quiescent 0.
QcaSpec identity_qca(int num_states);

}  // namespace qcab

#endif
