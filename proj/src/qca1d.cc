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

#include "qcab/qca1d.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

namespace qcab {

namespace {

constexpr uint64_t kMaxTuples = uint64_t{1} << 22;

uint64_t power_or_throw(uint64_t base, size_t exp, uint64_t limit, const char *what) {
    uint64_t total = 1;
    for (size_t k = 0; k < exp; k++) {
        total *= base;
        if (total > limit) {
            throw SizeLimitError(what);
        }
    }
    return total;
}

}  // namespace

QcaSpec::QcaSpec(std::vector<std::string> state_names, int quiescent, std::vector<int> neighborhood,
                 std::span<const DeltaEntry> entries, SpecValidation validation, const Tolerance &tol)
    : state_names_(std::move(state_names)),
      quiescent_(quiescent),
      neighborhood_(std::move(neighborhood)),
      validation_(validation) {
    if (state_names_.empty()) {
        throw std::invalid_argument("QCA state set must be non-empty");
    }
    std::set<std::string> unique(state_names_.begin(), state_names_.end());
    if (unique.size() != state_names_.size()) {
        throw std::invalid_argument("QCA state names must be distinct");
    }
    if (quiescent_ < 0 || quiescent_ >= num_states()) {
        throw std::invalid_argument("quiescent state outside the state set");
    }
    if (neighborhood_.empty()) {
        throw std::invalid_argument("QCA neighbourhood must be non-empty");
    }
    uint64_t count = power_or_throw(static_cast<uint64_t>(num_states()), neighborhood_.size(), kMaxTuples,
                                    "QCA rule table too large");
    rows_.resize(count);

    std::vector<std::map<int, Amplitude>> dense(count);
    for (const auto &e : entries) {
        if (e.neighborhood.size() != neighborhood_.size()) {
            throw std::invalid_argument("delta entry has wrong neighbourhood arity");
        }
        if (e.target < 0 || e.target >= num_states()) {
            throw std::invalid_argument("delta entry target outside the state set");
        }
        if (!std::isfinite(e.amplitude.real()) || !std::isfinite(e.amplitude.imag())) {
            throw std::invalid_argument("delta entry amplitude is not finite");
        }
        if (std::abs(e.amplitude) > 1.0 + tol.eps_unitary) {
            throw std::invalid_argument("delta entry amplitude has modulus above 1");
        }
        size_t idx = tuple_index(e.neighborhood);
        if (dense[idx].contains(e.target)) {
            throw std::invalid_argument("duplicate delta entry");
        }
        dense[idx][e.target] = e.amplitude;
    }
    for (size_t idx = 0; idx < count; idx++) {
        for (const auto &[target, a] : dense[idx]) {
            if (a != Amplitude{}) {
                rows_[idx].push_back({target, a});
            }
        }
    }
    if (validation_ == SpecValidation::kChecked && !check_quiescent_stability(*this)) {
        throw std::invalid_argument("delta does not keep the quiescent state stable");
    }
}

int QcaSpec::state_index(const std::string &name) const {
    auto it = std::find(state_names_.begin(), state_names_.end(), name);
    if (it == state_names_.end()) {
        throw std::invalid_argument("unknown QCA state '" + name + "'");
    }
    return static_cast<int>(it - state_names_.begin());
}

int QcaSpec::radius() const {
    int r = 0;
    for (int n : neighborhood_) {
        r = std::max(r, std::abs(n));
    }
    return r;
}

size_t QcaSpec::tuple_index(std::span<const int> states) const {
    if (states.size() != neighborhood_.size()) {
        throw std::invalid_argument("neighbourhood tuple has wrong arity");
    }
    size_t idx = 0;
    for (int s : states) {
        if (s < 0 || s >= num_states()) {
            throw std::invalid_argument("state outside the QCA state set");
        }
        idx = idx * static_cast<size_t>(num_states()) + static_cast<size_t>(s);
    }
    return idx;
}

std::vector<int> QcaSpec::tuple_at(size_t index) const {
    std::vector<int> out(neighborhood_.size());
    for (size_t k = out.size(); k-- > 0;) {
        out[k] = static_cast<int>(index % static_cast<size_t>(num_states()));
        index /= static_cast<size_t>(num_states());
    }
    return out;
}

Amplitude QcaSpec::delta(std::span<const int> states, int target) const {
    for (const auto &b : rows_[tuple_index(states)]) {
        if (b.target == target) {
            return b.amplitude;
        }
    }
    return {};
}

std::vector<DeltaEntry> QcaSpec::entries() const {
    std::vector<DeltaEntry> out;
    for (size_t idx = 0; idx < rows_.size(); idx++) {
        for (const auto &b : rows_[idx]) {
            out.push_back({tuple_at(idx), b.target, b.amplitude});
        }
    }
    return out;
}

QcaConfig::QcaConfig(const std::map<long long, int> &cells, int quiescent) {
    for (const auto &[i, s] : cells) {
        if (s != quiescent) {
            cells_.emplace(i, s);
        }
    }
}

int QcaConfig::at(long long i, int quiescent) const {
    auto it = cells_.find(i);
    return it == cells_.end() ? quiescent : it->second;
}

QcaConfig QcaConfig::shifted(long long by) const {
    QcaConfig out;
    for (const auto &[i, s] : cells_) {
        out.cells_.emplace(i + by, s);
    }
    return out;
}

Label QcaConfig::label() const {
    Label out;
    for (const auto &[i, s] : cells_) {
        if (!out.empty()) {
            out.push_back(',');
        }
        out += std::to_string(i);
        out.push_back(':');
        out += std::to_string(s);
    }
    return out;
}

QcaConfig QcaConfig::from_label(const Label &label) {
    QcaConfig out;
    const char *p = label.data();
    const char *end = p + label.size();
    while (p < end) {
        long long i = 0;
        int s = 0;
        auto r1 = std::from_chars(p, end, i);
        if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ':') {
            throw std::invalid_argument("malformed QCA config label '" + label + "'");
        }
        auto r2 = std::from_chars(r1.ptr + 1, end, s);
        if (r2.ec != std::errc() || s < 0 || (r2.ptr != end && *r2.ptr != ',')) {
            throw std::invalid_argument("malformed QCA config label '" + label + "'");
        }
        if (!out.cells_.emplace(i, s).second) {
            throw std::invalid_argument("duplicate cell in QCA config label '" + label + "'");
        }
        p = r2.ptr == end ? end : r2.ptr + 1;
    }
    return out;
}

Superposition basis_state(const QcaConfig &c) {
    return Superposition::basis(c.label());
}

namespace {

std::vector<long long> neighborhood_active_cells(const QcaConfig &c, const QcaSpec &spec) {
    std::set<long long> active;
    for (const auto &[j, s] : c.cells()) {
        for (int n : spec.neighborhood()) {
            active.insert(j - n);
        }
    }
    return {active.begin(), active.end()};
}

size_t tuple_at_cell(const QcaConfig &c, const QcaSpec &spec, long long i, std::vector<int> &scratch) {
    for (size_t k = 0; k < scratch.size(); k++) {
        scratch[k] = c.at(i + spec.neighborhood()[k], spec.quiescent());
    }
    return spec.tuple_index(scratch);
}

}  // namespace

Amplitude transition_amplitude(const QcaConfig &c1, const QcaConfig &c2, const QcaSpec &spec) {
    std::vector<long long> active = neighborhood_active_cells(c1, spec);
    for (const auto &[i, s] : c2.cells()) {
        active.push_back(i);
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());

    std::vector<int> scratch(spec.neighborhood().size());
    Amplitude product{1.0, 0.0};
    for (long long i : active) {
        size_t t = tuple_at_cell(c1, spec, i, scratch);
        Amplitude factor{};
        int want = c2.at(i, spec.quiescent());
        for (const auto &b : spec.branches(t)) {
            if (b.target == want) {
                factor = b.amplitude;
                break;
            }
        }
        if (factor == Amplitude{}) {
            return {};
        }
        product *= factor;
    }
    return product;
}

std::vector<std::pair<QcaConfig, Amplitude>> successors(const QcaConfig &c1, const QcaSpec &spec) {
    if (!check_quiescent_stability(spec)) {
        throw std::invalid_argument("successors need a spec with a stable quiescent state");
    }
    std::vector<long long> active = neighborhood_active_cells(c1, spec);
    std::vector<int> scratch(spec.neighborhood().size());
    std::vector<std::span<const Branch>> choices;
    choices.reserve(active.size());
    uint64_t total = 1;
    for (long long i : active) {
        auto branches = spec.branches(tuple_at_cell(c1, spec, i, scratch));
        if (branches.empty()) {
            return {};
        }
        total *= branches.size();
        if (total > kMaxSuccessorBranches) {
            throw SizeLimitError("successor enumeration exceeds the branch limit");
        }
        choices.push_back(branches);
    }

    std::vector<std::pair<QcaConfig, Amplitude>> out;
    out.reserve(total);
    std::vector<size_t> pick(active.size(), 0);
    const int q = spec.quiescent();
    // Odometer over the Cartesian product of per-cell choices.
    while (true) {
        std::map<long long, int> cells;
        Amplitude a{1.0, 0.0};
        for (size_t k = 0; k < active.size(); k++) {
            const Branch &b = choices[k][pick[k]];
            a *= b.amplitude;
            if (b.target != q) {
                cells.emplace(active[k], b.target);
            }
        }
        if (a != Amplitude{}) {
            out.emplace_back(QcaConfig(cells, q), a);
        }
        size_t k = active.size();
        while (k > 0) {
            k--;
            if (++pick[k] < choices[k].size()) {
                break;
            }
            pick[k] = 0;
            if (k == 0) {
                return out;
            }
        }
        if (active.empty()) {
            return out;
        }
    }
}

Superposition evolve(const Superposition &state, const QcaSpec &spec, const Tolerance &tol) {
    double ns = norm_sq(state);
    if (std::abs(ns - 1.0) > tol.eps_norm) {
        throw NormalizationError("evolve needs a normalized state, got norm_sq = " + std::to_string(ns));
    }
    AmplitudeAccumulator acc;
    for (const auto &[label, a] : state) {
        for (auto &[c2, amp] : successors(QcaConfig::from_label(label), spec)) {
            acc.add(c2.label(), a * amp);
        }
    }
    return std::move(acc).finish(tol);
}

LocalProbabilityReport check_local_probability(const QcaSpec &spec, const Tolerance &tol) {
    LocalProbabilityReport report{true, {}, 1.0};
    double worst_dev = -1;
    for (size_t idx = 0; idx < spec.tuple_count(); idx++) {
        double sum = 0;
        for (const auto &b : spec.branches(idx)) {
            sum += std::norm(b.amplitude);
        }
        double dev = std::abs(sum - 1.0);
        if (dev > worst_dev) {
            worst_dev = dev;
            report.worst_tuple = spec.tuple_at(idx);
            report.worst_sum = sum;
        }
    }
    report.ok = worst_dev <= tol.eps_unitary;
    return report;
}

bool check_quiescent_stability(const QcaSpec &spec) {
    std::vector<int> quiet(spec.neighborhood().size(), spec.quiescent());
    auto branches = spec.branches(spec.tuple_index(quiet));
    return branches.size() == 1 && branches[0].target == spec.quiescent() && branches[0].amplitude == Amplitude{1.0};
}

namespace {

/// Hermitian Gram matrix accumulated from sparse contributions; dense for
/// small sizes, hashed otherwise.
class GramAccumulator {
   public:
    explicit GramAccumulator(size_t n) : n_(n), dense_(n <= kDenseLimit) {
        if (dense_) {
            data_.assign(n * n, Amplitude{});
        }
    }

    void add(uint32_t i, uint32_t j, Amplitude v) {
        if (i > j) {
            std::swap(i, j);
            v = std::conj(v);
        }
        if (dense_) {
            data_[i * n_ + j] += v;
        } else {
            sparse_[(uint64_t{i} << 32) | j] += v;
        }
    }

    /// Checks the accumulated Gram against the identity. Returns the worst
    /// deviation and the first offending index pair.
    std::pair<double, std::optional<std::pair<uint32_t, uint32_t>>> compare_to_identity(double eps) const {
        double worst = 0;
        std::optional<std::pair<uint32_t, uint32_t>> witness;
        auto visit = [&](uint32_t i, uint32_t j, Amplitude v) {
            double dev = std::abs(v - (i == j ? Amplitude{1.0} : Amplitude{}));
            worst = std::max(worst, dev);
            if (dev > eps && !witness) {
                witness = std::make_pair(i, j);
            }
        };
        if (dense_) {
            for (uint32_t i = 0; i < n_; i++) {
                for (uint32_t j = i; j < n_; j++) {
                    visit(i, j, data_[i * n_ + j]);
                }
            }
        } else {
            std::vector<bool> diag_seen(n_, false);
            std::vector<std::pair<uint64_t, Amplitude>> sorted(sparse_.begin(), sparse_.end());
            std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
            for (const auto &[key, v] : sorted) {
                uint32_t i = static_cast<uint32_t>(key >> 32);
                uint32_t j = static_cast<uint32_t>(key & 0xffffffffu);
                if (i == j) {
                    diag_seen[i] = true;
                }
                visit(i, j, v);
            }
            for (uint32_t i = 0; i < n_; i++) {
                if (!diag_seen[i]) {
                    visit(i, i, Amplitude{});
                }
            }
        }
        return {worst, witness};
    }

   private:
    static constexpr size_t kDenseLimit = 2048;
    size_t n_;
    bool dense_;
    std::vector<Amplitude> data_;
    std::unordered_map<uint64_t, Amplitude> sparse_;
};

/// All configurations supported in [start, start + len), in index order.
std::vector<QcaConfig> window_configs(const QcaSpec &spec, long long start, int len) {
    if (len <= 0) {
        return {QcaConfig()};
    }
    uint64_t k = static_cast<uint64_t>(spec.num_states());
    uint64_t total = power_or_throw(k, static_cast<size_t>(len), kMaxWindowConfigs,
                                    "window enumeration exceeds the configuration limit");
    std::vector<QcaConfig> out;
    out.reserve(total);
    for (uint64_t idx = 0; idx < total; idx++) {
        std::map<long long, int> cells;
        uint64_t rest = idx;
        for (int x = len; x-- > 0;) {
            cells[start + x] = static_cast<int>(rest % k);
            rest /= k;
        }
        out.emplace_back(cells, spec.quiescent());
    }
    return out;
}

struct WindowColumns {
    std::vector<QcaConfig> sources;
    std::vector<Label> target_labels;
    std::unordered_map<Label, uint32_t> target_ids;
    /// columns[s] = (target id, amplitude) entries.
    std::vector<std::vector<std::pair<uint32_t, Amplitude>>> columns;
};

WindowColumns build_columns(const QcaSpec &spec, int window) {
    if (window < 1) {
        throw std::invalid_argument("window must be at least 1 cell");
    }
    WindowColumns w;
    w.sources = window_configs(spec, 0, window);
    w.columns.resize(w.sources.size());
    for (size_t s = 0; s < w.sources.size(); s++) {
        for (auto &[c2, amp] : successors(w.sources[s], spec)) {
            Label l = c2.label();
            auto [it, inserted] = w.target_ids.emplace(l, static_cast<uint32_t>(w.target_labels.size()));
            if (inserted) {
                w.target_labels.push_back(std::move(l));
            }
            w.columns[s].emplace_back(it->second, amp);
        }
    }
    return w;
}

WindowCertificate column_certificate(const QcaSpec &spec, const WindowColumns &w, int window,
                                     const Tolerance &tol) {
    std::vector<std::vector<std::pair<uint32_t, Amplitude>>> by_target(w.target_labels.size());
    for (size_t s = 0; s < w.columns.size(); s++) {
        for (const auto &[t, amp] : w.columns[s]) {
            by_target[t].emplace_back(static_cast<uint32_t>(s), amp);
        }
    }
    GramAccumulator gram(w.sources.size());
    for (const auto &entries : by_target) {
        for (size_t a = 0; a < entries.size(); a++) {
            for (size_t b = a; b < entries.size(); b++) {
                gram.add(entries[a].first, entries[b].first, std::conj(entries[a].second) * entries[b].second);
            }
        }
    }
    auto [worst, witness] = gram.compare_to_identity(tol.eps_unitary);
    WindowCertificate cert{!witness.has_value(), window, w.sources.size(), worst, std::nullopt};
    if (witness) {
        cert.witness = std::make_pair(w.sources[witness->first].label(), w.sources[witness->second].label());
    }
    (void)spec;
    return cert;
}

}  // namespace

WindowCertificate check_well_formed_window(const QcaSpec &spec, int window, const Tolerance &tol) {
    WindowColumns w = build_columns(spec, window);
    return column_certificate(spec, w, window, tol);
}

WindowCertificate check_unitary_window(const QcaSpec &spec, int window, const Tolerance &tol) {
    WindowColumns w = build_columns(spec, window);
    WindowCertificate cert = column_certificate(spec, w, window, tol);
    if (!cert.ok) {
        return cert;
    }

    const int r = spec.radius();
    std::vector<QcaConfig> rows = window_configs(spec, r, window - 2 * r);
    std::vector<int64_t> row_of_target(w.target_labels.size(), -1);
    for (size_t k = 0; k < rows.size(); k++) {
        auto it = w.target_ids.find(rows[k].label());
        if (it != w.target_ids.end()) {
            row_of_target[it->second] = static_cast<int64_t>(k);
        }
    }
    GramAccumulator gram(rows.size());
    std::vector<std::pair<uint32_t, Amplitude>> hits;
    for (const auto &column : w.columns) {
        hits.clear();
        for (const auto &[t, amp] : column) {
            if (row_of_target[t] >= 0) {
                hits.emplace_back(static_cast<uint32_t>(row_of_target[t]), amp);
            }
        }
        for (size_t a = 0; a < hits.size(); a++) {
            for (size_t b = a; b < hits.size(); b++) {
                // Row inner product <row_a, row_b> = sum_s conj(E[a,s]) E[b,s].
                gram.add(hits[a].first, hits[b].first, std::conj(hits[a].second) * hits[b].second);
            }
        }
    }
    auto [worst, witness] = gram.compare_to_identity(tol.eps_unitary);
    cert.worst_deviation = std::max(cert.worst_deviation, worst);
    if (witness) {
        cert.ok = false;
        cert.witness = std::make_pair(rows[witness->first].label(), rows[witness->second].label());
    }
    return cert;
}

bool check_trivial_unitary(const QcaSpec &spec, const Tolerance &tol) {
    if (!spec.is_trivial()) {
        throw std::invalid_argument("trivial-unitarity criterion needs neighbourhood {0}");
    }
    const int k = spec.num_states();
    for (int q1 = 0; q1 < k; q1++) {
        for (int q2 = q1; q2 < k; q2++) {
            Amplitude sum{};
            for (const auto &b1 : spec.branches(static_cast<size_t>(q1))) {
                std::array<int, 1> t2{q2};
                sum += b1.amplitude * std::conj(spec.delta(t2, b1.target));
            }
            Amplitude expected = q1 == q2 ? Amplitude{1.0} : Amplitude{};
            if (std::abs(sum - expected) > tol.eps_unitary) {
                return false;
            }
        }
    }
    return true;
}

QcaSpec trivial_qca_from_matrix(const ComplexMatrix &m, SpecValidation validation) {
    if (!m.is_square() || m.rows() == 0) {
        throw std::invalid_argument("trivial QCA needs a non-empty square matrix");
    }
    const int k = static_cast<int>(m.rows());
    std::vector<std::string> names;
    std::vector<DeltaEntry> entries;
    for (int q = 0; q < k; q++) {
        names.push_back(std::to_string(q));
        for (int t = 0; t < k; t++) {
            Amplitude a = m.at(static_cast<size_t>(t), static_cast<size_t>(q));
            if (a != Amplitude{}) {
                entries.push_back({{q}, t, a});
            }
        }
    }
    return QcaSpec(std::move(names), 0, {0}, entries, validation);
}

QcaSpec lambda_extended_trivial_qca(const ComplexMatrix &u, SpecValidation validation) {
    if (!u.is_square() || u.rows() == 0) {
        throw std::invalid_argument("trivial QCA needs a non-empty square matrix");
    }
    const int k = static_cast<int>(u.rows());
    std::vector<std::string> names{"_"};
    std::vector<DeltaEntry> entries{{{0}, 0, 1.0}};
    for (int q = 0; q < k; q++) {
        names.push_back(std::to_string(q));
        for (int t = 0; t < k; t++) {
            Amplitude a = u.at(static_cast<size_t>(t), static_cast<size_t>(q));
            if (a != Amplitude{}) {
                entries.push_back({{q + 1}, t + 1, a});
            }
        }
    }
    return QcaSpec(std::move(names), 0, {0}, entries, validation);
}

QcaSpec lift_classical(const CaSpec &spec) {
    if (spec.dim() != 1 || !spec.quiescent()) {
        throw std::invalid_argument("lifting needs a 1-D automaton with a quiescent state");
    }
    std::vector<std::string> names;
    for (int q = 0; q < spec.num_states(); q++) {
        names.push_back(std::to_string(q));
    }
    std::vector<int> offsets;
    for (const auto &n : spec.neighborhood()) {
        offsets.push_back(static_cast<int>(n[0]));
    }
    std::vector<DeltaEntry> entries;
    std::vector<int> tuple(offsets.size());
    for (size_t idx = 0; idx < spec.table().size(); idx++) {
        size_t rest = idx;
        for (size_t k = tuple.size(); k-- > 0;) {
            tuple[k] = static_cast<int>(rest % static_cast<size_t>(spec.num_states()));
            rest /= static_cast<size_t>(spec.num_states());
        }
        entries.push_back({tuple, spec.table()[idx], 1.0});
    }
    return QcaSpec(std::move(names), *spec.quiescent(), std::move(offsets), entries, SpecValidation::kUnchecked);
}

QcaSpec identity_qca(int num_states) {
    return trivial_qca_from_matrix(ComplexMatrix::identity(static_cast<size_t>(num_states)),
                                   SpecValidation::kChecked);
}

}  // namespace qcab
