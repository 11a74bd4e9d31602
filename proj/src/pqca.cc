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

#include "qcab/pqca.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qcab {

PqcaSpec::PqcaSpec(std::vector<std::vector<std::string>> parts, std::vector<int> offsets,
                   std::vector<int> quiescent, ComplexMatrix u)
    : parts_(std::move(parts)), offsets_(std::move(offsets)), u_(std::move(u)) {
    if (parts_.empty()) {
        throw std::invalid_argument("PQCA needs at least one part");
    }
    if (parts_.size() != offsets_.size()) {
        throw std::invalid_argument("PQCA needs exactly one offset per part");
    }
    size_t total = 1;
    for (const auto &p : parts_) {
        if (p.empty()) {
            throw std::invalid_argument("PQCA part state set is empty");
        }
        std::set<std::string> unique(p.begin(), p.end());
        if (unique.size() != p.size()) {
            throw std::invalid_argument("PQCA part state names must be distinct");
        }
        total *= p.size();
        if (total > (size_t{1} << 12)) {
            throw SizeLimitError("PQCA composite state set too large");
        }
    }
    if (u_.rows() != total || u_.cols() != total) {
        throw std::invalid_argument("PQCA matrix must be |Q| x |Q|");
    }
    if (quiescent.size() != parts_.size()) {
        throw std::invalid_argument("PQCA quiescent state must name one sub-state per part");
    }
    quiescent_ = compose(quiescent);
    for (size_t k = 0; k < total; k++) {
        Amplitude expected = k == static_cast<size_t>(quiescent_) ? Amplitude{1.0} : Amplitude{};
        if (u_.at(k, static_cast<size_t>(quiescent_)) != expected ||
            u_.at(static_cast<size_t>(quiescent_), k) != expected) {
            throw std::invalid_argument("PQCA matrix must fix the quiescent state");
        }
    }
}

int PqcaSpec::compose(std::span<const int> part_states) const {
    if (part_states.size() != parts_.size()) {
        throw std::invalid_argument("composite state needs one sub-state per part");
    }
    int idx = 0;
    for (size_t k = 0; k < parts_.size(); k++) {
        int s = part_states[k];
        if (s < 0 || s >= static_cast<int>(parts_[k].size())) {
            throw std::invalid_argument("sub-state outside its part");
        }
        idx = idx * static_cast<int>(parts_[k].size()) + s;
    }
    return idx;
}

std::vector<int> PqcaSpec::decompose(int composite) const {
    std::vector<int> out(parts_.size());
    for (size_t k = parts_.size(); k-- > 0;) {
        int base = static_cast<int>(parts_[k].size());
        out[k] = composite % base;
        composite /= base;
    }
    return out;
}

std::string PqcaSpec::state_name(int composite) const {
    std::vector<int> p = decompose(composite);
    std::string out = "(";
    for (size_t k = 0; k < p.size(); k++) {
        if (k > 0) {
            out += ",";
        }
        out += parts_[k][static_cast<size_t>(p[k])];
    }
    return out + ")";
}

int PqcaSpec::compose_named(std::span<const std::string> names) const {
    if (names.size() != parts_.size()) {
        throw std::invalid_argument("composite state needs one sub-state per part");
    }
    std::vector<int> idx(names.size());
    for (size_t k = 0; k < names.size(); k++) {
        auto it = std::find(parts_[k].begin(), parts_[k].end(), names[k]);
        if (it == parts_[k].end()) {
            throw std::invalid_argument("unknown sub-state '" + names[k] + "'");
        }
        idx[k] = static_cast<int>(it - parts_[k].begin());
    }
    return compose(idx);
}

namespace {

QcaConfig route(const QcaConfig &c, const PqcaSpec &spec, int direction) {
    const auto lambda = spec.quiescent_parts();
    std::map<long long, std::vector<int>> cells;
    for (const auto &[j, s] : c.cells()) {
        std::vector<int> parts = spec.decompose(s);
        for (size_t k = 0; k < parts.size(); k++) {
            if (parts[k] == lambda[k]) {
                continue;
            }
            // Forward: old cell j part k lands in new cell j - offsets[k].
            long long dest = j - direction * spec.offsets()[k];
            auto [it, inserted] = cells.try_emplace(dest, lambda);
            it->second[k] = parts[k];
        }
    }
    std::map<long long, int> composite;
    for (const auto &[i, parts] : cells) {
        composite.emplace(i, spec.compose(parts));
    }
    return QcaConfig(composite, spec.quiescent());
}

}  // namespace

QcaConfig permute_step(const QcaConfig &c, const PqcaSpec &spec) {
    return route(c, spec, +1);
}

QcaConfig inverse_permute_step(const QcaConfig &c, const PqcaSpec &spec) {
    return route(c, spec, -1);
}

Superposition pqca_step(const Superposition &state, const PqcaSpec &spec, const Tolerance &tol) {
    double ns = norm_sq(state);
    if (std::abs(ns - 1.0) > tol.eps_norm) {
        throw NormalizationError("pqca_step needs a normalized state, got norm_sq = " + std::to_string(ns));
    }
    const ComplexMatrix &u = spec.u();
    const size_t k = u.rows();
    const int q = spec.quiescent();
    AmplitudeAccumulator acc;
    for (const auto &[label, a] : state) {
        QcaConfig routed = permute_step(QcaConfig::from_label(label), spec);
        // Expand u cell by cell; each partial product is a map from the
        // configuration built so far to its amplitude.
        std::vector<std::pair<std::map<long long, int>, Amplitude>> partial{{{}, a}};
        for (const auto &[i, s] : routed.cells()) {
            std::vector<std::pair<std::map<long long, int>, Amplitude>> next;
            for (size_t t = 0; t < k; t++) {
                Amplitude m = u.at(t, static_cast<size_t>(s));
                if (m == Amplitude{}) {
                    continue;
                }
                for (const auto &[cells, amp] : partial) {
                    auto grown = cells;
                    if (static_cast<int>(t) != q) {
                        grown.emplace(i, static_cast<int>(t));
                    }
                    next.emplace_back(std::move(grown), amp * m);
                }
            }
            partial = std::move(next);
            if (partial.size() > kMaxSuccessorBranches) {
                throw SizeLimitError("pqca_step branch count exceeds the limit");
            }
        }
        for (auto &[cells, amp] : partial) {
            acc.add(QcaConfig(cells, q).label(), amp);
        }
    }
    return std::move(acc).finish(tol);
}

QcaSpec as_qca(const PqcaSpec &spec) {
    const int k = spec.num_states();
    const int r = spec.num_parts();
    std::vector<std::string> names;
    for (int s = 0; s < k; s++) {
        names.push_back(spec.state_name(s));
    }
    std::vector<DeltaEntry> entries;
    std::vector<int> tuple(static_cast<size_t>(r), 0);
    std::vector<int> routed(static_cast<size_t>(r));
    // Odometer over Q^r neighbourhood tuples.
    while (true) {
        for (int p = 0; p < r; p++) {
            routed[static_cast<size_t>(p)] = spec.decompose(tuple[static_cast<size_t>(p)])[static_cast<size_t>(p)];
        }
        int source = spec.compose(routed);
        for (int t = 0; t < k; t++) {
            Amplitude a = spec.u().at(static_cast<size_t>(t), static_cast<size_t>(source));
            if (a != Amplitude{}) {
                entries.push_back({tuple, t, a});
            }
        }
        int p = r;
        while (p > 0) {
            p--;
            if (++tuple[static_cast<size_t>(p)] < k) {
                break;
            }
            tuple[static_cast<size_t>(p)] = 0;
            if (p == 0) {
                return QcaSpec(std::move(names), spec.quiescent(), spec.offsets(), entries);
            }
        }
    }
}

bool check_pqca_unitary(const PqcaSpec &spec, const Tolerance &tol) {
    return is_unitary_matrix(spec.u(), tol.eps_unitary);
}

PqcaSpec epr_spec() {
    const std::vector<std::string> side{"0", "+", "-"};
    std::vector<std::vector<std::string>> parts{side, {"0"}, side};
    const int n = 9;
    ComplexMatrix u = ComplexMatrix::identity(n);
    auto idx = [](int l, int r) { return static_cast<size_t>(l * 3 + r); };
    const size_t plus_minus = idx(1, 2);  // (+,0,-)
    const size_t minus_plus = idx(2, 1);  // (-,0,+)
    const double h = std::numbers::sqrt2 / 2;
    u.at(plus_minus, plus_minus) = h;
    u.at(minus_plus, plus_minus) = h;
    u.at(plus_minus, minus_plus) = h;
    u.at(minus_plus, minus_plus) = -h;
    return PqcaSpec(std::move(parts), {1, 0, -1}, {0, 0, 0}, std::move(u));
}

QcaConfig epr_initial_config(const PqcaSpec &epr) {
    const std::vector<std::string> left{"0", "0", "-"};
    const std::vector<std::string> right{"+", "0", "0"};
    return QcaConfig({{-1, epr.compose_named(left)}, {1, epr.compose_named(right)}}, epr.quiescent());
}

}  // namespace qcab
