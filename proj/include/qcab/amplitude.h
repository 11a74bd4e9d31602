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

#ifndef QCAB_AMPLITUDE_H
#define QCAB_AMPLITUDE_H

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcab {

using Amplitude = std::complex<double>;

/// Basis labels are opaque byte strings. Each model module owns its encoding;
/// this layer only compares and hashes them.
using Label = std::string;

/// Thrown when an operation needs a unit vector and gets something else.
struct NormalizationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when an enumeration or branching guard is exceeded.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

struct Tolerance {
    double eps_norm = 1e-9;
    double eps_unitary = 1e-9;
    double eps_drop = 1e-14;

    /// Throws std::invalid_argument unless all values are positive and
    /// eps_drop < eps_norm.
    void validate() const;
};

/// A finite complex combination of basis labels.
///
/// Terms are kept sorted by label so iteration order, and therefore every
/// emitted trace, is deterministic. Values are immutable once built.
class Superposition {
   public:
    using TermMap = std::map<Label, Amplitude>;

    Superposition() = default;
    /// Throws std::invalid_argument if any amplitude is NaN or infinite.
    explicit Superposition(TermMap terms);

    static Superposition basis(Label label);

    const TermMap &terms() const {
        return terms_;
    }
    TermMap::const_iterator begin() const {
        return terms_.begin();
    }
    TermMap::const_iterator end() const {
        return terms_.end();
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Amplitude of `label`, zero when absent.
    Amplitude amplitude(const Label &label) const;

    bool operator==(const Superposition &other) const = default;

   private:
    TermMap terms_;
};

/// Sums amplitudes into a hash map and emits a pruned Superposition.
///
/// Pruning happens once in `finish`, after all contributions are in, so
/// pairs that cancel are not lost to early truncation.
class AmplitudeAccumulator {
   public:
    void add(const Label &label, Amplitude amplitude);
    void add(Label &&label, Amplitude amplitude);
    Superposition finish(const Tolerance &tol = {}) &&;

   private:
    std::unordered_map<Label, Amplitude> sums_;
};

double norm_sq(const Superposition &s);

/// Conjugate-linear in `a`.
Amplitude inner_product(const Superposition &a, const Superposition &b);

struct MeasurementOutcome {
    std::string tag;
    double probability;
    Superposition post_state;
};

/// Projective measurement. `partition` maps every label to its outcome tag.
/// Outcomes are returned sorted by tag. Throws NormalizationError unless
/// norm_sq(s) is within eps_norm of 1.
std::vector<MeasurementOutcome> measure_projective(
    const Superposition &s, const std::function<std::string(const Label &)> &partition, const Tolerance &tol = {});

/// Drops every term with |a|^2 < eps_drop.
Superposition prune(const Superposition &s, const Tolerance &tol = {});

/// Largest |a_label - b_label| over the union of both supports.
double max_amplitude_difference(const Superposition &a, const Superposition &b);

}  // namespace qcab

#endif
