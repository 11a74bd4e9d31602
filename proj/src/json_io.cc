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

#include "qcab/json_io.h"

#include <fstream>
#include <sstream>

namespace qcab {

namespace {

// Runs `f`, turning shape and construction errors into ParseError.
template <typename F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError &) {
        throw;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const std::out_of_range &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Amplitude amplitude_from(const Json &j) {
    double re = field(j, "re").get<double>();
    double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
    return {re, im};
}

Json amplitude_json(Amplitude a) {
    Json j = Json::object();
    j["re"] = a.real();
    j["im"] = a.imag();
    return j;
}

int index_of(const std::vector<std::string> &names, const Json &j, const char *what) {
    std::string name = j.is_string() ? j.get<std::string>() : j.dump();
    for (size_t k = 0; k < names.size(); k++) {
        if (names[k] == name) {
            return static_cast<int>(k);
        }
    }
    throw ParseError(std::string("unknown ") + what + " '" + name + "'");
}

std::vector<std::string> names_from(const Json &j) {
    std::vector<std::string> out;
    for (const auto &e : j) {
        out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    return out;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string dump_json(const Json &j) {
    return j.dump(2) + "\n";
}

Json to_json(const Superposition &s) {
    Json out = Json::array();
    for (const auto &[label, a] : s) {
        Json t = Json::object();
        t["label"] = label;
        t["re"] = a.real();
        t["im"] = a.imag();
        out.push_back(std::move(t));
    }
    return out;
}

Superposition superposition_from_json(const Json &j) {
    return guarded("superposition", [&] {
        if (!j.is_array()) {
            throw ParseError("superposition must be an array");
        }
        Superposition::TermMap terms;
        for (const auto &t : j) {
            auto label = field(t, "label").get<std::string>();
            if (!terms.emplace(label, amplitude_from(t)).second) {
                throw ParseError("duplicate label '" + label + "'");
            }
        }
        return Superposition(std::move(terms));
    });
}

Json to_json(const ComplexMatrix &m) {
    Json out = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(amplitude_json(m.at(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

ComplexMatrix matrix_from_json(const Json &j) {
    return guarded("matrix", [&] {
        if (!j.is_array() || j.empty() || !j[0].is_array()) {
            throw ParseError("matrix must be a non-empty array of rows");
        }
        const size_t rows = j.size();
        const size_t cols = j[0].size();
        ComplexMatrix m(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            if (!j[r].is_array() || j[r].size() != cols) {
                throw ParseError("matrix rows must have equal length");
            }
            for (size_t c = 0; c < cols; c++) {
                m.at(r, c) = amplitude_from(j[r][c]);
            }
        }
        return m;
    });
}

Json to_json(const Gate &g) {
    Json out = Json::object();
    out["arity"] = g.arity();
    out["matrix"] = to_json(g.matrix());
    return out;
}

Gate gate_from_json(const Json &j) {
    return guarded("gate", [&] {
        if (j.is_string()) {
            return named_gate(j.get<std::string>());
        }
        return Gate(field(j, "arity").get<int>(), matrix_from_json(field(j, "matrix")));
    });
}

std::vector<Gate> schedule_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("schedule must be an array of gates");
    }
    std::vector<Gate> out;
    for (const auto &g : j) {
        out.push_back(gate_from_json(g));
    }
    return out;
}

Json to_json(const CaSpec &spec) {
    Json out = Json::object();
    out["d"] = spec.dim();
    out["num_states"] = spec.num_states();
    Json nb = Json::array();
    for (const auto &z : spec.neighborhood()) {
        if (spec.dim() == 1) {
            nb.push_back(z[0]);
        } else {
            nb.push_back(Json::array({z[0], z[1]}));
        }
    }
    out["neighborhood"] = std::move(nb);
    out["table"] = spec.table();
    if (spec.quiescent()) {
        out["quiescent"] = *spec.quiescent();
    }
    return out;
}

CaSpec ca_spec_from_json(const Json &j) {
    return guarded("CA spec", [&] {
        int d = field(j, "d").get<int>();
        int k = field(j, "num_states").get<int>();
        std::vector<Coord> nb;
        for (const auto &z : field(j, "neighborhood")) {
            if (z.is_array()) {
                if (z.empty() || z.size() > 2) {
                    throw ParseError("neighbourhood offsets need one or two coordinates");
                }
                nb.push_back({z[0].get<long long>(), z.size() > 1 ? z[1].get<long long>() : 0});
            } else {
                nb.push_back({z.get<long long>(), 0});
            }
        }
        std::optional<int> q;
        if (j.contains("quiescent") && !j.at("quiescent").is_null()) {
            q = j.at("quiescent").get<int>();
        }
        return CaSpec(d, k, std::move(nb), field(j, "table").get<std::vector<int>>(), q);
    });
}

Json to_json(const QcaSpec &spec) {
    const auto &names = spec.state_names();
    Json out = Json::object();
    out["states"] = names;
    out["quiescent"] = names[static_cast<size_t>(spec.quiescent())];
    out["neighborhood"] = spec.neighborhood();
    Json delta = Json::array();
    for (const auto &e : spec.entries()) {
        Json row = Json::object();
        Json nbhd = Json::array();
        for (int s : e.neighborhood) {
            nbhd.push_back(names[static_cast<size_t>(s)]);
        }
        row["nbhd"] = std::move(nbhd);
        row["target"] = names[static_cast<size_t>(e.target)];
        row["re"] = e.amplitude.real();
        row["im"] = e.amplitude.imag();
        delta.push_back(std::move(row));
    }
    out["delta"] = std::move(delta);
    return out;
}

QcaSpec qca_spec_from_json(const Json &j, SpecValidation validation) {
    return guarded("QCA spec", [&] {
        auto names = names_from(field(j, "states"));
        int quiescent = index_of(names, field(j, "quiescent"), "state");
        auto nb = field(j, "neighborhood").get<std::vector<int>>();
        std::vector<DeltaEntry> entries;
        for (const auto &e : field(j, "delta")) {
            DeltaEntry d;
            for (const auto &s : field(e, "nbhd")) {
                d.neighborhood.push_back(index_of(names, s, "state"));
            }
            d.target = index_of(names, field(e, "target"), "state");
            d.amplitude = amplitude_from(e);
            entries.push_back(std::move(d));
        }
        return QcaSpec(std::move(names), quiescent, std::move(nb), entries, validation);
    });
}

Json to_json(const PqcaSpec &spec) {
    Json out = Json::object();
    out["parts"] = spec.parts();
    out["offsets"] = spec.offsets();
    Json q = Json::array();
    auto lambda = spec.quiescent_parts();
    for (size_t k = 0; k < lambda.size(); k++) {
        q.push_back(spec.parts()[k][static_cast<size_t>(lambda[k])]);
    }
    out["quiescent"] = std::move(q);
    out["U"] = to_json(spec.u());
    return out;
}

PqcaSpec pqca_spec_from_json(const Json &j) {
    return guarded("PQCA spec", [&] {
        std::vector<std::vector<std::string>> parts;
        for (const auto &p : field(j, "parts")) {
            parts.push_back(names_from(p));
        }
        auto offsets = field(j, "offsets").get<std::vector<int>>();
        const Json &q = field(j, "quiescent");
        if (!q.is_array() || q.size() != parts.size()) {
            throw ParseError("quiescent must list one sub-state per part");
        }
        std::vector<int> lambda;
        for (size_t k = 0; k < parts.size(); k++) {
            lambda.push_back(index_of(parts[k], q[k], "sub-state"));
        }
        return PqcaSpec(std::move(parts), std::move(offsets), std::move(lambda), matrix_from_json(field(j, "U")));
    });
}

namespace {

const char *move_name(Move m) {
    switch (m) {
        case Move::kLeft:
            return "L";
        case Move::kStay:
            return "S";
        case Move::kRight:
            return "R";
    }
    return "?";
}

Move move_from(const Json &j) {
    auto s = j.get<std::string>();
    if (s == "L") {
        return Move::kLeft;
    }
    if (s == "S") {
        return Move::kStay;
    }
    if (s == "R") {
        return Move::kRight;
    }
    throw ParseError("move must be \"L\", \"S\" or \"R\", got '" + s + "'");
}

}  // namespace

Json to_json(const QtmSpec &spec) {
    const auto &sigma = spec.alphabet();
    const auto &q = spec.states();
    Json out = Json::object();
    out["alphabet"] = sigma;
    out["blank"] = sigma[static_cast<size_t>(spec.blank())];
    out["states"] = q;
    out["q0"] = q[static_cast<size_t>(spec.initial())];
    out["qf"] = q[static_cast<size_t>(spec.final())];
    Json delta = Json::array();
    for (const auto &t : spec.transitions()) {
        Json row = Json::object();
        row["q"] = q[static_cast<size_t>(t.state)];
        row["read"] = sigma[static_cast<size_t>(t.read)];
        row["write"] = sigma[static_cast<size_t>(t.write)];
        row["q2"] = q[static_cast<size_t>(t.next_state)];
        row["move"] = move_name(t.move);
        row["re"] = t.amplitude.real();
        row["im"] = t.amplitude.imag();
        delta.push_back(std::move(row));
    }
    out["delta"] = std::move(delta);
    return out;
}

QtmSpec qtm_spec_from_json(const Json &j) {
    return guarded("QTM spec", [&] {
        auto sigma = names_from(field(j, "alphabet"));
        auto states = names_from(field(j, "states"));
        std::vector<QtmTransition> delta;
        for (const auto &e : field(j, "delta")) {
            delta.push_back(QtmTransition{
                index_of(states, field(e, "q"), "state"),
                index_of(sigma, field(e, "read"), "symbol"),
                index_of(sigma, field(e, "write"), "symbol"),
                index_of(states, field(e, "q2"), "state"),
                move_from(field(e, "move")),
                amplitude_from(e),
            });
        }
        int blank = index_of(sigma, field(j, "blank"), "symbol");
        int q0 = index_of(states, field(j, "q0"), "state");
        int qf = index_of(states, field(j, "qf"), "state");
        return QtmSpec(std::move(sigma), blank, std::move(states), q0, qf, std::move(delta));
    });
}

}  // namespace qcab
