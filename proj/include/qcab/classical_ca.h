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

#ifndef QCAB_CLASSICAL_CA_H
#define QCAB_CLASSICAL_CA_H

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qcab/amplitude.h"

namespace qcab {

/// Lattice coordinate. One-dimensional automata leave the second entry at 0.
using Coord = std::array<long long, 2>;

/// A deterministic automaton <d, Q, N, delta> with Q = {0, ..., num_states-1}.
///
/// `table` is indexed by the neighbourhood states read in the order of
/// `neighborhood`, first offset most significant (base num_states).
class CaSpec {
   public:
    CaSpec(int dim, int num_states, std::vector<Coord> neighborhood, std::vector<int> table,
           std::optional<int> quiescent = std::nullopt);

    /// Builds the table by evaluating `rule` on every neighbourhood tuple.
    static CaSpec from_rule(int dim, int num_states, std::vector<Coord> neighborhood,
                            const std::function<int(std::span<const int>)> &rule,
                            std::optional<int> quiescent = std::nullopt);

    int dim() const {
        return dim_;
    }
    int num_states() const {
        return num_states_;
    }
    const std::vector<Coord> &neighborhood() const {
        return neighborhood_;
    }
    const std::vector<int> &table() const {
        return table_;
    }
    std::optional<int> quiescent() const {
        return quiescent_;
    }
    /// Largest |offset| component.
    long long radius() const;

    /// delta(states). Throws std::invalid_argument on wrong arity or a state
    /// outside Q.
    int apply(std::span<const int> states) const;

   private:
    int dim_;
    int num_states_;
    std::vector<Coord> neighborhood_;
    std::vector<int> table_;
    std::optional<int> quiescent_;
};

/// 8-bit Wolfram code. Bit (4l + 2c + r) is the next state for (l, c, r).
class EcaRule {
   public:
    /// Throws std::out_of_range outside [0, 255].
    explicit EcaRule(int number);

    int number() const {
        return number_;
    }
    int output(int left, int center, int right) const {
        return (number_ >> (left * 4 + center * 2 + right)) & 1;
    }

   private:
    int number_;
};

/// The radius-1 binary CaSpec for an elementary rule. Quiescent 0 for even
/// rules; odd rules (000 -> 1) have no quiescent state.
CaSpec eca_spec(EcaRule rule);

/// Inverse of eca_spec. Throws std::invalid_argument unless the spec is
/// 1-D, binary, with neighbourhood (-1, 0, 1).
int wolfram_number(const CaSpec &spec);

/// Conway's Life on the Moore neighbourhood (centre listed fifth).
CaSpec life_spec();

/// The canonical 2-D von Neumann neighbourhood (-1,0),(0,-1),(0,0),(0,1),(1,0).
std::vector<Coord> von_neumann_neighborhood();

/// A configuration with finite support over a quiescent background.
class FiniteConfig {
   public:
    /// Cells equal to `quiescent` are dropped.
    FiniteConfig(int quiescent, std::map<Coord, int> cells = {});

    /// 1-D helper: `bits[k]` goes to cell `origin + k`; '0' or '.' quiescent,
    /// any other digit is that state, '#' is 1.
    static FiniteConfig from_row(const std::string &row, long long origin = 0, int quiescent = 0);

    int quiescent() const {
        return quiescent_;
    }
    const std::map<Coord, int> &cells() const {
        return cells_;
    }
    int at(const Coord &z) const;
    FiniteConfig translated(const Coord &by) const;

    bool operator==(const FiniteConfig &other) const = default;

   private:
    int quiescent_;
    std::map<Coord, int> cells_;
};

/// A configuration repeating with per-axis period `shape` (ring or torus).
class PeriodicConfig {
   public:
    /// `cells` is row-major with shape[0] columns (x) and shape[1] rows (y).
    PeriodicConfig(std::array<long long, 2> shape, std::vector<int> cells);

    static PeriodicConfig from_row(const std::string &row);

    const std::array<long long, 2> &shape() const {
        return shape_;
    }
    const std::vector<int> &cells() const {
        return cells_;
    }
    /// Any coordinate; wraps around.
    int at(const Coord &z) const;

    bool operator==(const PeriodicConfig &other) const = default;

   private:
    std::array<long long, 2> shape_;
    std::vector<int> cells_;
};

/// One elementary-rule step. Throws std::invalid_argument on non-binary states.
FiniteConfig eca_step(const FiniteConfig &c, EcaRule rule);
PeriodicConfig eca_step(const PeriodicConfig &c, EcaRule rule);

/// The global transition function G_delta. Finite configs need the spec's
/// quiescent state to match the config's and to be stable.
FiniteConfig ca_step(const FiniteConfig &c, const CaSpec &spec);
PeriodicConfig ca_step(const PeriodicConfig &c, const CaSpec &spec);

/// trace[0] = c, trace[t+1] = step(trace[t]).
template <typename Config, typename Rule>
std::vector<Config> run_trace(const Config &c, const Rule &rule, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("steps must be non-negative");
    }
    std::vector<Config> trace;
    trace.reserve(static_cast<size_t>(steps) + 1);
    trace.push_back(c);
    for (int t = 0; t < steps; t++) {
        if constexpr (std::is_same_v<Rule, EcaRule>) {
            trace.push_back(eca_step(trace.back(), rule));
        } else {
            trace.push_back(ca_step(trace.back(), rule));
        }
    }
    return trace;
}

/// Result of a ring bijectivity check. Bijective on every ring is a necessary
/// condition for reversibility on the infinite line, not a proof of it.
struct RingReversibility {
    bool bijective;
    int ring_size;
    std::optional<std::pair<PeriodicConfig, PeriodicConfig>> collision;
};

constexpr uint64_t kMaxRingConfigs = uint64_t{1} << 24;

/// Enumerates all |Q|^ring_size ring configurations. Throws SizeLimitError
/// above kMaxRingConfigs and std::invalid_argument for d != 1.
RingReversibility is_reversible_on_ring(const CaSpec &spec, int ring_size);
RingReversibility is_reversible_on_ring(EcaRule rule, int ring_size);

/// Wolfram class for the demo rules 254, 170, 30 and 110. Lookup only.
int classify_demo(int rule);

/// '.' for quiescent cells, '#' otherwise, over cells [from, to].
std::string render_row(const FiniteConfig &c, long long from, long long to);
/// One text line per y, '.' for state 0.
std::string render_grid(const PeriodicConfig &c);

/// Plain PBM (P1). `rows[y][x]` true is black.
void write_pbm(std::ostream &out, const std::vector<std::vector<bool>> &rows);

}  // namespace qcab

#endif
