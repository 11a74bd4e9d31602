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

#include "qcab/qtm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace qcab {

QtmSpec::QtmSpec(std::vector<std::string> alphabet, int blank, std::vector<std::string> states, int initial,
                 int final, std::vector<QtmTransition> transitions, const Tolerance &tol)
    : alphabet_(std::move(alphabet)),
      blank_(blank),
      states_(std::move(states)),
      initial_(initial),
      final_(final),
      transitions_(std::move(transitions)) {
    const int ns = num_symbols();
    const int nq = num_states();
    if (ns == 0 || nq == 0) {
        throw std::invalid_argument("QTM needs a non-empty alphabet and state set");
    }
    if (std::set<std::string>(alphabet_.begin(), alphabet_.end()).size() != alphabet_.size() ||
        std::set<std::string>(states_.begin(), states_.end()).size() != states_.size()) {
        throw std::invalid_argument("QTM symbol and state names must be distinct");
    }
    auto symbol_ok = [&](int s) { return s >= 0 && s < ns; };
    auto state_ok = [&](int q) { return q >= 0 && q < nq; };
    if (!symbol_ok(blank_) || !state_ok(initial_) || !state_ok(final_)) {
        throw std::invalid_argument("QTM blank, q0 and qf must be declared");
    }
    by_source_.resize(static_cast<size_t>(nq * ns));
    std::set<std::tuple<int, int, int, int, int>> seen;
    for (const auto &t : transitions_) {
        if (!state_ok(t.state) || !state_ok(t.next_state) || !symbol_ok(t.read) || !symbol_ok(t.write)) {
            throw std::invalid_argument("QTM transition refers to an undeclared state or symbol");
        }
        if (t.move != Move::kLeft && t.move != Move::kStay && t.move != Move::kRight) {
            throw std::invalid_argument("QTM move must be L, S or R");
        }
        if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag()) ||
            std::abs(t.amplitude) > 1.0 + tol.eps_norm) {
            throw std::invalid_argument("QTM amplitudes must be finite with magnitude at most 1");
        }
        if (!seen.emplace(t.state, t.read, t.write, t.next_state, static_cast<int>(t.move)).second) {
            throw std::invalid_argument("duplicate QTM transition");
        }
        if (t.amplitude != Amplitude{}) {
            by_source_[static_cast<size_t>(t.state * ns + t.read)].push_back(t);
        }
    }
}

std::span<const QtmTransition> QtmSpec::branches(int state, int read) const {
    return by_source_.at(static_cast<size_t>(state * num_symbols() + read));
}

int QtmSpec::symbol_index(const std::string &name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) {
        throw std::invalid_argument("unknown tape symbol '" + name + "'");
    }
    return static_cast<int>(it - alphabet_.begin());
}

int QtmSpec::state_index(const std::string &name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) {
        throw std::invalid_argument("unknown QTM state '" + name + "'");
    }
    return static_cast<int>(it - states_.begin());
}

std::vector<int> QtmSpec::parse_input(const std::string &input) const {
    std::vector<int> out;
    for (char c : input) {
        out.push_back(symbol_index(std::string(1, c)));
    }
    return out;
}

QtmConfig::QtmConfig(const std::map<long long, int> &tape, long long head, int state, int blank)
    : head_(head), state_(state) {
    for (const auto &[i, s] : tape) {
        if (s != blank) {
            tape_.emplace(i, s);
        }
    }
}

int QtmConfig::symbol_at(long long i, int blank) const {
    auto it = tape_.find(i);
    return it == tape_.end() ? blank : it->second;
}

int QtmConfig::read(int blank) const {
    return symbol_at(head_, blank);
}

Label QtmConfig::label() const {
    Label out = "q" + std::to_string(state_) + "@" + std::to_string(head_) + "|";
    bool first = true;
    for (const auto &[i, s] : tape_) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += std::to_string(i) + ":" + std::to_string(s);
    }
    return out;
}

QtmConfig QtmConfig::from_label(const Label &label) {
    auto at = label.find('@');
    auto bar = label.find('|');
    if (label.empty() || label[0] != 'q' || at == Label::npos || bar == Label::npos || bar < at) {
        throw std::invalid_argument("malformed QTM configuration label '" + label + "'");
    }
    QtmConfig c;
    try {
        c.state_ = std::stoi(label.substr(1, at - 1));
        c.head_ = std::stoll(label.substr(at + 1, bar - at - 1));
        size_t pos = bar + 1;
        while (pos < label.size()) {
            size_t comma = label.find(',', pos);
            if (comma == Label::npos) {
                comma = label.size();
            }
            std::string cell = label.substr(pos, comma - pos);
            auto colon = cell.find(':');
            if (colon == std::string::npos) {
                throw std::invalid_argument(cell);
            }
            c.tape_[std::stoll(cell.substr(0, colon))] = std::stoi(cell.substr(colon + 1));
            pos = comma + 1;
        }
    } catch (const std::logic_error &) {
        throw std::invalid_argument("malformed QTM configuration label '" + label + "'");
    }
    return c;
}

QtmConfig initial_config(const QtmSpec &spec, std::span<const int> input) {
    std::map<long long, int> tape;
    for (size_t i = 0; i < input.size(); i++) {
        if (input[i] < 0 || input[i] >= spec.num_symbols()) {
            throw std::invalid_argument("input symbol outside the alphabet");
        }
        tape.emplace(static_cast<long long>(i), input[i]);
    }
    return QtmConfig(tape, 0, spec.initial(), spec.blank());
}

namespace {

template <typename Sink>
void expand(const QtmConfig &c, Amplitude a, const QtmSpec &spec, Sink &&sink) {
    if (c.state() == spec.final()) {
        sink(c, a);
        return;
    }
    const int blank = spec.blank();
    for (const auto &t : spec.branches(c.state(), c.read(blank))) {
        std::map<long long, int> tape = c.tape();
        if (t.write == blank) {
            tape.erase(c.head());
        } else {
            tape[c.head()] = t.write;
        }
        sink(QtmConfig(tape, c.head() + static_cast<int>(t.move), t.next_state, blank), a * t.amplitude);
    }
}

Superposition step_unchecked(const Superposition &state, const QtmSpec &spec, const Tolerance &tol) {
    AmplitudeAccumulator acc;
    for (const auto &[label, a] : state) {
        expand(QtmConfig::from_label(label), a, spec,
               [&](const QtmConfig &next, Amplitude amp) { acc.add(next.label(), amp); });
    }
    return std::move(acc).finish(tol);
}

}  // namespace

Superposition qtm_step(const Superposition &state, const QtmSpec &spec, const Tolerance &tol) {
    double ns = norm_sq(state);
    if (std::abs(ns - 1.0) > tol.eps_norm) {
        throw NormalizationError("qtm_step needs a normalized state, got norm_sq = " + std::to_string(ns));
    }
    return step_unchecked(state, spec, tol);
}

double acceptance_probability(const QtmSpec &spec, std::span<const int> input, int steps, long long k,
                              const std::set<int> &accept, const Tolerance &tol) {
    if (steps < 0) {
        throw std::invalid_argument("steps must be non-negative");
    }
    Superposition s = Superposition::basis(initial_config(spec, input).label());
    for (int t = 0; t < steps; t++) {
        s = qtm_step(s, spec, tol);
    }
    double p = 0;
    for (const auto &[label, a] : s) {
        if (accept.contains(QtmConfig::from_label(label).symbol_at(k, spec.blank()))) {
            p += std::norm(a);
        }
    }
    return p;
}

bool is_unidirectional(const QtmSpec &spec) {
    std::map<int, Move> entered;
    for (const auto &t : spec.transitions()) {
        if (t.amplitude == Amplitude{}) {
            continue;
        }
        auto [it, inserted] = entered.emplace(t.next_state, t.move);
        if (!inserted && it->second != t.move) {
            return false;
        }
    }
    return true;
}

QtmWindowReport check_well_formed_window(const QtmSpec &spec, int window, int steps, const Tolerance &tol) {
    if (window < 1) {
        throw std::invalid_argument("window must be positive");
    }
    if (steps < 0) {
        throw std::invalid_argument("steps must be non-negative");
    }
    const int ns = spec.num_symbols();
    const int blank = spec.blank();
    double tapes = std::pow(static_cast<double>(ns), window);
    if (tapes * spec.num_states() * window > static_cast<double>(kMaxQtmWindowConfigs)) {
        throw SizeLimitError("QTM window audit domain exceeds the enumeration limit");
    }
    auto inside = [&](long long i) { return i >= 0 && i < window; };
    // A configuration belongs to the domain when every branch keeps the head
    // inside the window; final-state configurations never move.
    auto in_domain = [&](const QtmConfig &c) {
        if (!inside(c.head())) {
            return false;
        }
        for (const auto &[i, s] : c.tape()) {
            if (!inside(i)) {
                return false;
            }
        }
        if (c.state() == spec.final()) {
            return true;
        }
        for (const auto &t : spec.branches(c.state(), c.read(blank))) {
            if (!inside(c.head() + static_cast<int>(t.move))) {
                return false;
            }
        }
        return true;
    };

    std::vector<QtmConfig> domain;
    const auto num_tapes = static_cast<uint64_t>(tapes);
    for (uint64_t code = 0; code < num_tapes; code++) {
        uint64_t rest = code;
        std::map<long long, int> tape;
        for (int i = window - 1; i >= 0; i--) {
            tape.emplace(i, static_cast<int>(rest % static_cast<uint64_t>(ns)));
            rest /= static_cast<uint64_t>(ns);
        }
        for (int q = 0; q < spec.num_states(); q++) {
            for (int h = 0; h < window; h++) {
                QtmConfig c(tape, h, q, blank);
                if (in_domain(c)) {
                    domain.push_back(std::move(c));
                }
            }
        }
    }

    // Gram matrix of the images through an inverted index on target labels.
    std::unordered_map<Label, std::vector<std::pair<size_t, Amplitude>>> rows;
    for (size_t j = 0; j < domain.size(); j++) {
        expand(domain[j], Amplitude{1.0}, spec,
               [&](const QtmConfig &next, Amplitude amp) { rows[next.label()].emplace_back(j, amp); });
    }
    std::map<std::pair<size_t, size_t>, Amplitude> gram;
    for (auto &[label, entries] : rows) {
        std::map<size_t, Amplitude> merged;
        for (const auto &[j, amp] : entries) {
            merged[j] += amp;
        }
        for (auto a = merged.begin(); a != merged.end(); ++a) {
            for (auto b = a; b != merged.end(); ++b) {
                gram[{a->first, b->first}] += std::conj(a->second) * b->second;
            }
        }
    }
    QtmWindowReport report{true, window, domain.size(), 0.0, 0.0, std::nullopt};
    auto consider = [&](size_t i, size_t j, double dev) {
        if (dev > report.worst_deviation) {
            report.worst_deviation = dev;
            report.witness = std::make_pair(domain[i].label(), domain[j].label());
        }
    };
    for (size_t j = 0; j < domain.size(); j++) {
        auto it = gram.find({j, j});
        consider(j, j, std::abs((it == gram.end() ? 0.0 : it->second.real()) - 1.0));
    }
    for (const auto &[key, g] : gram) {
        if (key.first != key.second) {
            consider(key.first, key.second, std::abs(g));
        }
    }

    for (const auto &start : domain) {
        Superposition s = Superposition::basis(start.label());
        for (int t = 0; t < steps; t++) {
            bool contained = std::all_of(s.begin(), s.end(), [&](const auto &term) {
                return in_domain(QtmConfig::from_label(term.first));
            });
            if (!contained) {
                break;
            }
            s = step_unchecked(s, spec, tol);
            report.max_norm_drift = std::max(report.max_norm_drift, std::abs(norm_sq(s) - 1.0));
        }
    }
    report.ok = report.worst_deviation <= tol.eps_unitary && report.max_norm_drift <= tol.eps_norm;
    return report;
}

}  // namespace qcab
