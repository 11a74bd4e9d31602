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

#include "qcab/classical_ca.h"

#include <algorithm>
#include <cctype>
#include <set>

namespace qcab {

namespace {

long long wrap(long long v, long long n) {
    long long r = v % n;
    return r < 0 ? r + n : r;
}

uint64_t checked_power(int base, size_t exp, uint64_t limit) {
    uint64_t total = 1;
    for (size_t k = 0; k < exp; k++) {
        total *= static_cast<uint64_t>(base);
        if (total > limit) {
            throw SizeLimitError("state count exceeds enumeration limit");
        }
    }
    return total;
}

}  // namespace

CaSpec::CaSpec(int dim, int num_states, std::vector<Coord> neighborhood, std::vector<int> table,
               std::optional<int> quiescent)
    : dim_(dim),
      num_states_(num_states),
      neighborhood_(std::move(neighborhood)),
      table_(std::move(table)),
      quiescent_(quiescent) {
    if (dim_ != 1 && dim_ != 2) {
        throw std::invalid_argument("only d = 1 and d = 2 are supported");
    }
    if (num_states_ < 1) {
        throw std::invalid_argument("state set must be non-empty");
    }
    if (neighborhood_.empty()) {
        throw std::invalid_argument("neighbourhood must be non-empty");
    }
    for (const auto &n : neighborhood_) {
        if (dim_ == 1 && n[1] != 0) {
            throw std::invalid_argument("1-D neighbourhood offsets must have zero y component");
        }
    }
    uint64_t expected = checked_power(num_states_, neighborhood_.size(), uint64_t{1} << 26);
    if (table_.size() != expected) {
        throw std::invalid_argument("rule table must have |Q|^|N| entries, missing delta entries");
    }
    for (int v : table_) {
        if (v < 0 || v >= num_states_) {
            throw std::invalid_argument("rule table output outside the state set");
        }
    }
    if (quiescent_ && (*quiescent_ < 0 || *quiescent_ >= num_states_)) {
        throw std::invalid_argument("quiescent state outside the state set");
    }
    if (quiescent_) {
        uint64_t all_quiescent = 0;
        for (size_t k = 0; k < neighborhood_.size(); k++) {
            all_quiescent = all_quiescent * static_cast<uint64_t>(num_states_) + static_cast<uint64_t>(*quiescent_);
        }
        if (table_[all_quiescent] != *quiescent_) {
            throw std::invalid_argument("declared quiescent state is not a fixed point of the rule");
        }
    }
}

CaSpec CaSpec::from_rule(int dim, int num_states, std::vector<Coord> neighborhood,
                         const std::function<int(std::span<const int>)> &rule, std::optional<int> quiescent) {
    size_t r = neighborhood.size();
    uint64_t count = checked_power(num_states, r, uint64_t{1} << 26);
    std::vector<int> table(count);
    std::vector<int> tuple(r);
    for (uint64_t idx = 0; idx < count; idx++) {
        uint64_t rest = idx;
        for (size_t k = r; k-- > 0;) {
            tuple[k] = static_cast<int>(rest % static_cast<uint64_t>(num_states));
            rest /= static_cast<uint64_t>(num_states);
        }
        table[idx] = rule(tuple);
    }
    return CaSpec(dim, num_states, std::move(neighborhood), std::move(table), quiescent);
}

long long CaSpec::radius() const {
    long long r = 0;
    for (const auto &n : neighborhood_) {
        r = std::max({r, std::abs(n[0]), std::abs(n[1])});
    }
    return r;
}

int CaSpec::apply(std::span<const int> states) const {
    if (states.size() != neighborhood_.size()) {
        throw std::invalid_argument("neighbourhood tuple has wrong arity");
    }
    size_t idx = 0;
    for (int s : states) {
        if (s < 0 || s >= num_states_) {
            throw std::invalid_argument("cell state outside the state set");
        }
        idx = idx * static_cast<size_t>(num_states_) + static_cast<size_t>(s);
    }
    return table_[idx];
}

EcaRule::EcaRule(int number) : number_(number) {
    if (number < 0 || number > 255) {
        throw std::out_of_range("elementary rule number must be in [0, 255]");
    }
}

CaSpec eca_spec(EcaRule rule) {
    std::vector<int> table(8);
    for (int idx = 0; idx < 8; idx++) {
        table[idx] = (rule.number() >> idx) & 1;
    }
    std::optional<int> quiescent;
    if (table[0] == 0) {
        quiescent = 0;
    }
    return CaSpec(1, 2, {{-1, 0}, {0, 0}, {1, 0}}, std::move(table), quiescent);
}

int wolfram_number(const CaSpec &spec) {
    const std::vector<Coord> expected = {{-1, 0}, {0, 0}, {1, 0}};
    if (spec.dim() != 1 || spec.num_states() != 2 || spec.neighborhood() != expected) {
        throw std::invalid_argument("not an elementary (1-D, binary, radius-1) automaton");
    }
    int number = 0;
    for (int idx = 0; idx < 8; idx++) {
        number |= spec.table()[idx] << idx;
    }
    return number;
}

CaSpec life_spec() {
    std::vector<Coord> moore;
    for (long long dx = -1; dx <= 1; dx++) {
        for (long long dy = -1; dy <= 1; dy++) {
            moore.push_back({dx, dy});
        }
    }
    return CaSpec::from_rule(
        2, 2, std::move(moore),
        [](std::span<const int> s) {
            int alive = 0;
            for (size_t k = 0; k < s.size(); k++) {
                if (k != 4) {
                    alive += s[k];
                }
            }
            if (s[4] == 1) {
                return (alive == 2 || alive == 3) ? 1 : 0;
            }
            return alive == 3 ? 1 : 0;
        },
        0);
}

std::vector<Coord> von_neumann_neighborhood() {
    return {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
}

FiniteConfig::FiniteConfig(int quiescent, std::map<Coord, int> cells) : quiescent_(quiescent) {
    for (auto &[z, s] : cells) {
        if (s != quiescent_) {
            cells_.emplace(z, s);
        }
    }
}

FiniteConfig FiniteConfig::from_row(const std::string &row, long long origin, int quiescent) {
    std::map<Coord, int> cells;
    for (size_t k = 0; k < row.size(); k++) {
        char ch = row[k];
        int s;
        if (ch == '.') {
            s = quiescent;
        } else if (ch == '#') {
            s = 1;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            s = ch - '0';
        } else {
            throw std::invalid_argument(std::string("bad cell character '") + ch + "'");
        }
        cells[{origin + static_cast<long long>(k), 0}] = s;
    }
    return FiniteConfig(quiescent, std::move(cells));
}

int FiniteConfig::at(const Coord &z) const {
    auto it = cells_.find(z);
    return it == cells_.end() ? quiescent_ : it->second;
}

FiniteConfig FiniteConfig::translated(const Coord &by) const {
    std::map<Coord, int> moved;
    for (const auto &[z, s] : cells_) {
        moved.emplace(Coord{z[0] + by[0], z[1] + by[1]}, s);
    }
    return FiniteConfig(quiescent_, std::move(moved));
}

PeriodicConfig::PeriodicConfig(std::array<long long, 2> shape, std::vector<int> cells)
    : shape_(shape), cells_(std::move(cells)) {
    if (shape_[0] < 1 || shape_[1] < 1) {
        throw std::invalid_argument("period lengths must be at least 1");
    }
    if (cells_.size() != static_cast<size_t>(shape_[0] * shape_[1])) {
        throw std::invalid_argument("periodic cell array does not match its shape");
    }
}

PeriodicConfig PeriodicConfig::from_row(const std::string &row) {
    FiniteConfig f = FiniteConfig::from_row(row);
    std::vector<int> cells(row.size());
    for (size_t k = 0; k < row.size(); k++) {
        cells[k] = f.at({static_cast<long long>(k), 0});
    }
    return PeriodicConfig({static_cast<long long>(row.size()), 1}, std::move(cells));
}

int PeriodicConfig::at(const Coord &z) const {
    long long x = wrap(z[0], shape_[0]);
    long long y = wrap(z[1], shape_[1]);
    return cells_[static_cast<size_t>(y * shape_[0] + x)];
}

namespace {

void require_binary(int s) {
    if (s != 0 && s != 1) {
        throw std::invalid_argument("elementary rules need binary states, found " + std::to_string(s));
    }
}

}  // namespace

FiniteConfig eca_step(const FiniteConfig &c, EcaRule rule) {
    if (c.quiescent() != 0) {
        throw std::invalid_argument("elementary rules use quiescent state 0");
    }
    std::set<long long> candidates;
    for (const auto &[z, s] : c.cells()) {
        require_binary(s);
        if (z[1] != 0) {
            throw std::invalid_argument("elementary rules act on 1-D configurations");
        }
        candidates.insert({z[0] - 1, z[0], z[0] + 1});
    }
    std::map<Coord, int> next;
    if (rule.output(0, 0, 0) != 0) {
        throw std::invalid_argument("rule does not fix the quiescent background; use a periodic configuration");
    }
    for (long long x : candidates) {
        int v = rule.output(c.at({x - 1, 0}), c.at({x, 0}), c.at({x + 1, 0}));
        if (v != 0) {
            next.emplace(Coord{x, 0}, v);
        }
    }
    return FiniteConfig(0, std::move(next));
}

PeriodicConfig eca_step(const PeriodicConfig &c, EcaRule rule) {
    if (c.shape()[1] != 1) {
        throw std::invalid_argument("elementary rules act on 1-D configurations");
    }
    for (int s : c.cells()) {
        require_binary(s);
    }
    long long n = c.shape()[0];
    std::vector<int> next(static_cast<size_t>(n));
    for (long long x = 0; x < n; x++) {
        next[static_cast<size_t>(x)] = rule.output(c.at({x - 1, 0}), c.at({x, 0}), c.at({x + 1, 0}));
    }
    return PeriodicConfig(c.shape(), std::move(next));
}

FiniteConfig ca_step(const FiniteConfig &c, const CaSpec &spec) {
    if (!spec.quiescent() || *spec.quiescent() != c.quiescent()) {
        throw std::invalid_argument("finite configuration needs the spec's quiescent state");
    }
    const int q = c.quiescent();
    std::vector<int> all_quiet(spec.neighborhood().size(), q);
    if (spec.apply(all_quiet) != q) {
        throw std::invalid_argument("quiescent state is not stable under this rule");
    }
    std::set<Coord> candidates;
    for (const auto &[z, s] : c.cells()) {
        for (const auto &n : spec.neighborhood()) {
            candidates.insert({z[0] - n[0], z[1] - n[1]});
        }
    }
    std::vector<int> tuple(spec.neighborhood().size());
    std::map<Coord, int> next;
    for (const auto &z : candidates) {
        for (size_t k = 0; k < tuple.size(); k++) {
            const auto &n = spec.neighborhood()[k];
            tuple[k] = c.at({z[0] + n[0], z[1] + n[1]});
        }
        int v = spec.apply(tuple);
        if (v != q) {
            next.emplace(z, v);
        }
    }
    return FiniteConfig(q, std::move(next));
}

PeriodicConfig ca_step(const PeriodicConfig &c, const CaSpec &spec) {
    if (spec.dim() == 1 && c.shape()[1] != 1) {
        throw std::invalid_argument("1-D rule applied to a 2-D configuration");
    }
    std::vector<int> tuple(spec.neighborhood().size());
    std::vector<int> next(c.cells().size());
    for (long long y = 0; y < c.shape()[1]; y++) {
        for (long long x = 0; x < c.shape()[0]; x++) {
            for (size_t k = 0; k < tuple.size(); k++) {
                const auto &n = spec.neighborhood()[k];
                tuple[k] = c.at({x + n[0], y + n[1]});
            }
            next[static_cast<size_t>(y * c.shape()[0] + x)] = spec.apply(tuple);
        }
    }
    return PeriodicConfig(c.shape(), std::move(next));
}

RingReversibility is_reversible_on_ring(const CaSpec &spec, int ring_size) {
    if (spec.dim() != 1) {
        throw std::invalid_argument("ring reversibility is defined for d = 1 only");
    }
    if (ring_size < 1) {
        throw std::invalid_argument("ring size must be positive");
    }
    const uint64_t k = static_cast<uint64_t>(spec.num_states());
    const uint64_t total = checked_power(spec.num_states(), static_cast<size_t>(ring_size), kMaxRingConfigs);
    const size_t n = static_cast<size_t>(ring_size);

    // Cell 0 is the most significant digit of a configuration's index.
    auto decode = [&](uint64_t idx) {
        std::vector<int> cells(n);
        for (size_t x = n; x-- > 0;) {
            cells[x] = static_cast<int>(idx % k);
            idx /= k;
        }
        return PeriodicConfig({ring_size, 1}, std::move(cells));
    };

    constexpr uint32_t kUnseen = UINT32_MAX;
    std::vector<uint32_t> preimage(total, kUnseen);
    for (uint64_t idx = 0; idx < total; idx++) {
        PeriodicConfig image = ca_step(decode(idx), spec);
        uint64_t img = 0;
        for (int s : image.cells()) {
            img = img * k + static_cast<uint64_t>(s);
        }
        if (preimage[img] != kUnseen) {
            return {false, ring_size, std::make_pair(decode(preimage[img]), decode(idx))};
        }
        preimage[img] = static_cast<uint32_t>(idx);
    }
    return {true, ring_size, std::nullopt};
}

RingReversibility is_reversible_on_ring(EcaRule rule, int ring_size) {
    return is_reversible_on_ring(eca_spec(rule), ring_size);
}

int classify_demo(int rule) {
    switch (rule) {
        case 254:
            return 1;
        case 170:
            return 2;
        case 30:
            return 3;
        case 110:
            return 4;
        default:
            throw std::invalid_argument("no demo class recorded for rule " + std::to_string(rule));
    }
}

std::string render_row(const FiniteConfig &c, long long from, long long to) {
    std::string out;
    for (long long x = from; x <= to; x++) {
        out.push_back(c.at({x, 0}) == c.quiescent() ? '.' : '#');
    }
    return out;
}

std::string render_grid(const PeriodicConfig &c) {
    std::string out;
    for (long long y = 0; y < c.shape()[1]; y++) {
        for (long long x = 0; x < c.shape()[0]; x++) {
            out.push_back(c.at({x, y}) == 0 ? '.' : '#');
        }
        out.push_back('\n');
    }
    return out;
}

void write_pbm(std::ostream &out, const std::vector<std::vector<bool>> &rows) {
    size_t width = rows.empty() ? 0 : rows.front().size();
    out << "P1\n" << width << " " << rows.size() << "\n";
    for (const auto &row : rows) {
        if (row.size() != width) {
            throw std::invalid_argument("ragged PBM image");
        }
        for (size_t x = 0; x < row.size(); x++) {
            if (x > 0) {
                out << ' ';
            }
            out << (row[x] ? '1' : '0');
        }
        out << '\n';
    }
}

}  // namespace qcab
