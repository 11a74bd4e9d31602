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

#include "qcab/amplitude.h"

#include <cmath>

namespace qcab {

void Tolerance::validate() const {
    if (!(eps_norm > 0) || !(eps_unitary > 0) || !(eps_drop > 0)) {
        throw std::invalid_argument("tolerances must be strictly positive");
    }
    if (!(eps_drop < eps_norm)) {
        throw std::invalid_argument("eps_drop must be smaller than eps_norm");
    }
}

Superposition::Superposition(TermMap terms) : terms_(std::move(terms)) {
    for (const auto &[label, a] : terms_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude for label '" + label + "'");
        }
    }
}

Superposition Superposition::basis(Label label) {
    TermMap m;
    m.emplace(std::move(label), Amplitude{1.0, 0.0});
    return Superposition(std::move(m));
}

Amplitude Superposition::amplitude(const Label &label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Amplitude{} : it->second;
}

void AmplitudeAccumulator::add(const Label &label, Amplitude amplitude) {
    sums_[label] += amplitude;
}

void AmplitudeAccumulator::add(Label &&label, Amplitude amplitude) {
    sums_[std::move(label)] += amplitude;
}

Superposition AmplitudeAccumulator::finish(const Tolerance &tol) && {
    Superposition::TermMap out;
    for (auto &[label, a] : sums_) {
        if (std::norm(a) >= tol.eps_drop) {
            out.emplace(label, a);
        }
    }
    sums_.clear();
    return Superposition(std::move(out));
}

double norm_sq(const Superposition &s) {
    double total = 0;
    for (const auto &[label, a] : s) {
        total += std::norm(a);
    }
    return total;
}

Amplitude inner_product(const Superposition &a, const Superposition &b) {
    // Walk both sorted maps in lockstep.
    Amplitude total{};
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            total += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return total;
}

std::vector<MeasurementOutcome> measure_projective(
    const Superposition &s, const std::function<std::string(const Label &)> &partition, const Tolerance &tol) {
    double total = norm_sq(s);
    if (std::abs(total - 1.0) > tol.eps_norm) {
        throw NormalizationError("measurement requires a unit state, got norm_sq = " + std::to_string(total));
    }
    std::map<std::string, Superposition::TermMap> groups;
    for (const auto &[label, a] : s) {
        groups[partition(label)].emplace(label, a);
    }
    std::vector<MeasurementOutcome> out;
    out.reserve(groups.size());
    for (auto &[tag, terms] : groups) {
        double p = 0;
        for (const auto &[label, a] : terms) {
            p += std::norm(a);
        }
        if (p > 0) {
            double scale = 1.0 / std::sqrt(p);
            for (auto &[label, a] : terms) {
                a *= scale;
            }
        }
        out.push_back({tag, p, Superposition(std::move(terms))});
    }
    return out;
}

Superposition prune(const Superposition &s, const Tolerance &tol) {
    Superposition::TermMap kept;
    for (const auto &[label, a] : s) {
        if (std::norm(a) >= tol.eps_drop) {
            kept.emplace_hint(kept.end(), label, a);
        }
    }
    return Superposition(std::move(kept));
}

double max_amplitude_difference(const Superposition &a, const Superposition &b) {
    double worst = 0;
    for (const auto &[label, x] : a) {
        worst = std::max(worst, std::abs(x - b.amplitude(label)));
    }
    for (const auto &[label, y] : b) {
        if (!a.terms().contains(label)) {
            worst = std::max(worst, std::abs(y));
        }
    }
    return worst;
}

}  // namespace qcab
