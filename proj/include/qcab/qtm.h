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

#ifndef QCAB_QTM_H
#define QCAB_QTM_H

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcab/amplitude.h"

namespace qcab {

enum class Move : int { kLeft = -1, kStay = 0, kRight = 1 };

/// delta(state, read, write, next_state, move) = amplitude.
struct QtmTransition {
    int state;
    int read;
    int write;
    int next_state;
    Move move;
    Amplitude amplitude;
};

/// Single-tape quantum Turing machine <Sigma, Q, q0, qf, delta>. Symbols and
/// states are indices into the name tables; absent transitions are 0.
class QtmSpec {
   public:
    /// Throws std::invalid_argument for out-of-range indices, duplicate
    /// transitions, or |amplitude| > 1.
    QtmSpec(std::vector<std::string> alphabet, int blank, std::vector<std::string> states, int initial, int final,
            std::vector<QtmTransition> transitions, const Tolerance &tol = {});

    const std::vector<std::string> &alphabet() const {
        return alphabet_;
    }
    const std::vector<std::string> &states() const {
        return states_;
    }
    int num_symbols() const {
        return static_cast<int>(alphabet_.size());
    }
    int num_states() const {
        return static_cast<int>(states_.size());
    }
    int blank() const {
        return blank_;
    }
    int initial() const {
        return initial_;
    }
    int final() const {
        return final_;
    }
    const std::vector<QtmTransition> &transitions() const {
        return transitions_;
    }
    /// Non-zero transitions out of (state, read), in insertion order.
    std::span<const QtmTransition> branches(int state, int read) const;

    int symbol_index(const std::string &name) const;
    int state_index(const std::string &name) const;
    /// Each character of `input` is a one-character symbol name.
    std::vector<int> parse_input(const std::string &input) const;

   private:
    std::vector<std::string> alphabet_;
    int blank_;
    std::vector<std::string> states_;
    int initial_;
    int final_;
    std::vector<QtmTransition> transitions_;
    std::vector<std::vector<QtmTransition>> by_source_;
};

/// <tape, head, state>; the tape map holds non-blank cells only.
class QtmConfig {
   public:
    QtmConfig() = default;
    QtmConfig(const std::map<long long, int> &tape, long long head, int state, int blank);

    const std::map<long long, int> &tape() const {
        return tape_;
    }
    long long head() const {
        return head_;
    }
    int state() const {
        return state_;
    }
    int read(int blank) const;
    int symbol_at(long long i, int blank) const;

    /// "q<state>@<head>|i:s,..." with cells in increasing order.
    Label label() const;
    static QtmConfig from_label(const Label &label);

    auto operator<=>(const QtmConfig &other) const = default;

   private:
    std::map<long long, int> tape_;
    long long head_ = 0;
    int state_ = 0;
};

/// Input on cells 0.., head on cell 0, state q0.
QtmConfig initial_config(const QtmSpec &spec, std::span<const int> input);

/// One step. Configurations in the final state are fixed points. Throws
/// NormalizationError for a non-unit input.
Superposition qtm_step(const Superposition &state, const QtmSpec &spec, const Tolerance &tol = {});

/// Probability mass on configurations whose cell k holds a symbol in
/// `accept` after exactly `steps` steps from the initial configuration.
double acceptance_probability(const QtmSpec &spec, std::span<const int> input, int steps, long long k,
                              const std::set<int> &accept, const Tolerance &tol = {});

/// True iff every state is entered from a single move direction.
bool is_unidirectional(const QtmSpec &spec);

/// Bounded well-formedness audit over configurations with head and tape
/// inside [0, window). Configurations that could move the head out of the
/// window are excluded from the domain.
struct QtmWindowReport {
    bool ok;
    int window;
    size_t domain_size;
    double worst_deviation;
    /// Largest |norm_sq - 1| seen while running `steps` steps from each basis
    /// configuration in the domain (runs stop once a branch leaves the window).
    double max_norm_drift;
    std::optional<std::pair<Label, Label>> witness;
};

constexpr uint64_t kMaxQtmWindowConfigs = uint64_t{1} << 22;

QtmWindowReport check_well_formed_window(const QtmSpec &spec, int window, int steps, const Tolerance &tol = {});

}  // namespace qcab

#endif
