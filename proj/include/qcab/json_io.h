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

#ifndef QCAB_JSON_IO_H
#define QCAB_JSON_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcab/classical_ca.h"
#include "qcab/gates.h"
#include "qcab/pqca.h"
#include "qcab/qca1d.h"
#include "qcab/qtm.h"

namespace qcab {

using Json = nlohmann::ordered_json;

/// Malformed JSON text or a document that does not match the expected shape.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json parse_json(const std::string &text);
Json read_json_file(const std::filesystem::path &path);
/// Two-space indented text with a trailing newline. Doubles use the shortest
/// representation that round-trips.
std::string dump_json(const Json &j);

/// [{"label", "re", "im"}, ...] sorted by label.
Json to_json(const Superposition &s);
Superposition superposition_from_json(const Json &j);

/// [[{"re", "im"}, ...], ...], row-major.
Json to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

/// {"arity": k, "matrix": [...]}, or a string naming a built-in gate.
Json to_json(const Gate &g);
Gate gate_from_json(const Json &j);
/// A list of gate literals or names.
std::vector<Gate> schedule_from_json(const Json &j);

/// {"d", "num_states", "neighborhood": [[x, y], ...] or [x, ...],
///  "table": [...], "quiescent"}; quiescent is optional.
Json to_json(const CaSpec &spec);
CaSpec ca_spec_from_json(const Json &j);

/// {"states", "quiescent", "neighborhood", "delta": [{"nbhd", "target", "re", "im"}]}
/// with states referred to by name.
Json to_json(const QcaSpec &spec);
QcaSpec qca_spec_from_json(const Json &j, SpecValidation validation = SpecValidation::kUnchecked);

/// {"parts", "offsets", "quiescent", "U"} with sub-states referred to by name.
Json to_json(const PqcaSpec &spec);
PqcaSpec pqca_spec_from_json(const Json &j);

/// {"alphabet", "blank", "states", "q0", "qf",
///  "delta": [{"q", "read", "write", "q2", "move": "L"|"S"|"R", "re", "im"}]}.
Json to_json(const QtmSpec &spec);
QtmSpec qtm_spec_from_json(const Json &j);

}  // namespace qcab

#endif
