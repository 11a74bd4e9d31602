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

#include <gtest/gtest.h>

#include <random>

#include "qcab/qtm_compiler.h"
#include "test_util.h"

using namespace qcab;

TEST(JsonIo, SuperpositionRoundTrip) {
    Superposition s(Superposition::TermMap{{"0:1", Amplitude(0.6, -0.1)}, {"", Amplitude(0, 0.2)}});
    EXPECT_EQ(superposition_from_json(parse_json(dump_json(to_json(s)))), s);
    Json j = parse_json(R"([{"label": "x", "re": 1}])");
    EXPECT_EQ(superposition_from_json(j), Superposition::basis("x"));
    EXPECT_THROW(superposition_from_json(parse_json(R"([{"re": 1}])")), ParseError);
    EXPECT_THROW(superposition_from_json(parse_json(R"({"label": "x"})")), ParseError);
}

TEST(JsonIo, MatrixRoundTripIsExact) {
    std::mt19937_64 rng(1);
    ComplexMatrix m = testutil::random_unitary(5, rng);
    EXPECT_EQ(matrix_from_json(parse_json(dump_json(to_json(m)))), m);
    EXPECT_THROW(matrix_from_json(parse_json(R"([[{"re": 1}], []])")), ParseError);
}

TEST(JsonIo, Gates) {
    EXPECT_EQ(gate_from_json(Json("CNOT")).matrix(), named_gate("CNOT").matrix());
    EXPECT_THROW(gate_from_json(Json("SWAP")), ParseError);
    Gate h = named_gate("H");
    EXPECT_EQ(gate_from_json(to_json(h)).matrix(), h.matrix());
    std::vector<Gate> sched = schedule_from_json(read_json_file(testutil::fixture("schedule.json")));
    ASSERT_EQ(sched.size(), 2u);
    EXPECT_EQ(sched[0].arity(), 2);
    EXPECT_EQ(sched[1].matrix(), named_gate("CNOT").matrix());
}

TEST(JsonIo, CaSpec) {
    CaSpec rule90 = ca_spec_from_json(read_json_file(testutil::fixture("rule90_2d.json")));
    EXPECT_EQ(rule90.dim(), 2);
    EXPECT_EQ(rule90.table(), (std::vector<int>{0, 1, 1, 0}));
    CaSpec life = life_spec();
    CaSpec back = ca_spec_from_json(to_json(life));
    EXPECT_EQ(back.table(), life.table());
    EXPECT_EQ(back.neighborhood(), life.neighborhood());
}

TEST(JsonIo, QcaSpec) {
    QcaSpec h = qca_spec_from_json(read_json_file(testutil::fixture("hadamard_qca.json")));
    EXPECT_EQ(h.num_states(), 3);
    EXPECT_TRUE(check_local_probability(h).ok);
    QcaSpec back = qca_spec_from_json(to_json(h));
    EXPECT_EQ(back.state_names(), h.state_names());
    ASSERT_EQ(back.entries().size(), h.entries().size());
    QcaSpec broken = qca_spec_from_json(read_json_file(testutil::fixture("broken_qca.json")));
    EXPECT_FALSE(check_local_probability(broken).ok);
    EXPECT_THROW(qca_spec_from_json(parse_json(R"({"states": ["0"]})")), ParseError);
}

TEST(JsonIo, PqcaSpec) {
    PqcaSpec epr = pqca_spec_from_json(read_json_file(testutil::fixture("epr_pqca.json")));
    EXPECT_EQ(epr.u(), epr_spec().u());
    EXPECT_EQ(epr.offsets(), epr_spec().offsets());
    PqcaSpec back = pqca_spec_from_json(to_json(epr_spec()));
    EXPECT_EQ(back.parts(), epr_spec().parts());
}

TEST(JsonIo, QtmSpec) {
    QtmSpec m = qtm_spec_from_json(read_json_file(testutil::fixture("interfering.json")));
    EXPECT_EQ(m.states().size(), 5u);
    EXPECT_EQ(m.initial(), m.state_index("A"));
    EXPECT_EQ(m.final(), m.state_index("qf"));
    EXPECT_EQ(m.transitions().size(), 12u);
    QtmSpec back = qtm_spec_from_json(to_json(m));
    EXPECT_EQ(back.transitions().size(), m.transitions().size());
    EXPECT_TRUE(is_unidirectional(m));
    EXPECT_FALSE(is_unidirectional(qtm_spec_from_json(read_json_file(testutil::fixture("two_way.json")))));
    EXPECT_THROW(
        qtm_spec_from_json(parse_json(R"({"alphabet": ["b"], "blank": "b", "states": ["q"], "q0": "q", "qf": "q",
                                          "delta": [{"q": "q", "read": "b", "write": "b", "q2": "q", "move": "X",
                                                     "re": 1}]})")),
        ParseError);
}

TEST(JsonIo, FixtureMachinesCompile) {
    for (const char *name : {"right_mover.json", "coin.json", "interfering.json"}) {
        QtmSpec m = qtm_spec_from_json(read_json_file(testutil::fixture(name)));
        EXPECT_NO_THROW(compile(m)) << name;
    }
    QtmSpec bad = qtm_spec_from_json(read_json_file(testutil::fixture("bad_coin.json")));
    EXPECT_THROW(compile(bad), CompileError);
}

TEST(JsonIo, Errors) {
    EXPECT_THROW(read_json_file(testutil::fixture("malformed.json")), ParseError);
    EXPECT_THROW(read_json_file(testutil::fixture("does_not_exist.json")), ParseError);
    EXPECT_THROW(parse_json("{"), ParseError);
    EXPECT_EQ(dump_json(parse_json(R"({"b": 1, "a": [0.5]})")), "{\n  \"b\": 1,\n  \"a\": [\n    0.5\n  ]\n}\n");
}
