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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcab/gates.h"
#include "test_util.h"

using namespace qcab;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

// EPR part codes: 0 -> "0", 1 -> "+", 2 -> "-". Composite = 3 * left + right.
int epr_code(int left, int right) {
    return 3 * left + right;
}

QcaConfig cells(std::initializer_list<std::pair<const long long, int>> m) {
    return QcaConfig(std::map<long long, int>(m), 0);
}

QcaConfig random_config(std::mt19937_64 &rng, const PqcaSpec &spec, int width) {
    std::map<long long, int> m;
    for (int i = 0; i < width; i++) {
        m[i] = static_cast<int>(rng() % static_cast<uint64_t>(spec.num_states()));
    }
    return QcaConfig(m, spec.quiescent());
}

}  // namespace

TEST(PqcaSpec, Validation) {
    ComplexMatrix id = ComplexMatrix::identity(4);
    EXPECT_NO_THROW(PqcaSpec({{"a", "b"}, {"x", "y"}}, {0, 1}, {0, 0}, id));
    EXPECT_THROW(PqcaSpec({{"a", "b"}, {"x", "y"}}, {0}, {0, 0}, id), std::invalid_argument);
    EXPECT_THROW(PqcaSpec({{"a", "b"}}, {0}, {0}, id), std::invalid_argument);
    ComplexMatrix moves_quiescent({{0, 1}, {1, 0}});
    EXPECT_THROW(PqcaSpec({{"a", "b"}}, {0}, {0}, moves_quiescent), std::invalid_argument);
}

TEST(PqcaSpec, CompositeIndexing) {
    PqcaSpec epr = epr_spec();
    EXPECT_EQ(epr.num_states(), 9);
    EXPECT_EQ(epr.num_parts(), 3);
    std::vector<std::string> pm{"+", "0", "-"};
    EXPECT_EQ(epr.compose_named(pm), epr_code(1, 2));
    EXPECT_EQ(epr.state_name(epr_code(2, 1)), "(-,0,+)");
    EXPECT_EQ(epr.decompose(epr_code(2, 1)), (std::vector<int>{2, 0, 1}));
    for (int c = 0; c < 9; c++) {
        EXPECT_EQ(epr.compose(epr.decompose(c)), c);
    }
}

TEST(PermuteStep, Examples) {
    PqcaSpec epr = epr_spec();
    EXPECT_EQ(permute_step(QcaConfig(), epr), QcaConfig());
    EXPECT_EQ(permute_step(epr_initial_config(epr), epr), cells({{0, epr_code(1, 2)}}));

    PqcaSpec single({{"a", "b", "c"}}, {0}, {0}, ComplexMatrix::identity(3));
    QcaConfig c = cells({{-2, 1}, {5, 2}});
    EXPECT_EQ(permute_step(c, single), c);
}

TEST(PermuteStep, InverseRecoversInput) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; trial++) {
        PqcaSpec spec = testutil::random_pqca(rng);
        QcaConfig c = random_config(rng, spec, 6);
        EXPECT_EQ(inverse_permute_step(permute_step(c, spec), spec), c);
        EXPECT_EQ(permute_step(inverse_permute_step(c, spec), spec), c);
    }
}

TEST(PqcaStep, EprOneStep) {
    PqcaSpec epr = epr_spec();
    Superposition s = pqca_step(basis_state(epr_initial_config(epr)), epr);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(std::abs(s.amplitude(cells({{0, epr_code(1, 2)}}).label()) - kH), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(cells({{0, epr_code(2, 1)}}).label()) - kH), 0.0, 1e-15);
}

TEST(PqcaStep, EprMirroredStartPicksUpTheSign) {
    PqcaSpec epr = epr_spec();
    Superposition s = pqca_step(basis_state(cells({{-1, epr_code(0, 1)}, {1, epr_code(2, 0)}})), epr);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s.amplitude(cells({{0, epr_code(1, 2)}}).label()).real(), kH, 1e-15);
    EXPECT_NEAR(s.amplitude(cells({{0, epr_code(2, 1)}}).label()).real(), -kH, 1e-15);
}

TEST(PqcaStep, EprParticlesSeparate) {
    PqcaSpec epr = epr_spec();
    Superposition s = basis_state(epr_initial_config(epr));
    s = pqca_step(s, epr);
    for (int t = 2; t <= 25; t++) {
        s = pqca_step(s, epr);
        long long d = t - 1;
        Superposition::TermMap expected;
        expected[cells({{-d, epr_code(1, 0)}, {d, epr_code(0, 2)}}).label()] = kH;
        expected[cells({{-d, epr_code(2, 0)}, {d, epr_code(0, 1)}}).label()] = kH;
        ASSERT_LE(max_amplitude_difference(s, Superposition(expected)), 1e-12) << t;
    }
}

TEST(PqcaStep, IdentityIsNoOp) {
    PqcaSpec id({{"a", "b"}, {"x", "y"}}, {0, 0}, {0, 0}, ComplexMatrix::identity(4));
    Superposition s(Superposition::TermMap{{cells({{0, 3}}).label(), 0.6}, {cells({{2, 1}}).label(), 0.8}});
    EXPECT_EQ(pqca_step(s, id), s);
}

TEST(PqcaStep, NormPreservedFiftySteps) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; trial++) {
        PqcaSpec spec = testutil::random_pqca(rng);
        std::map<long long, int> m{{0, static_cast<int>(1 + rng() % static_cast<uint64_t>(spec.num_states() - 1))}};
        Superposition s = basis_state(QcaConfig(m, 0));
        for (int t = 0; t < 50; t++) {
            s = pqca_step(s, spec);
            ASSERT_NEAR(norm_sq(s), 1.0, 1e-10);
        }
    }
    EXPECT_THROW(pqca_step(Superposition(), epr_spec()), NormalizationError);
}

TEST(AsQca, EprAgreesWithEvolve) {
    PqcaSpec epr = epr_spec();
    QcaSpec flat = as_qca(epr);
    EXPECT_EQ(flat.neighborhood(), (std::vector<int>{1, 0, -1}));
    Superposition a = basis_state(epr_initial_config(epr));
    Superposition b = a;
    for (int t = 0; t < 6; t++) {
        a = pqca_step(a, epr);
        b = evolve(b, flat);
        EXPECT_LE(max_amplitude_difference(a, b), 1e-12);
    }
}

TEST(AsQca, IdentityPqcaGivesIdentityRule) {
    PqcaSpec id({{"a", "b", "c"}}, {0}, {0}, ComplexMatrix::identity(3));
    QcaSpec flat = as_qca(id);
    for (int q = 0; q < 3; q++) {
        for (int p = 0; p < 3; p++) {
            std::vector<int> t{q};
            EXPECT_EQ(flat.delta(t, p), Amplitude(q == p ? 1.0 : 0.0));
        }
    }
}

TEST(AsQca, RandomTwoPartAgreesOverFiveSteps) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; trial++) {
        PqcaSpec spec = testutil::random_pqca(rng, 3, {1, -1});
        while (spec.num_states() < 3) {
            spec = testutil::random_pqca(rng, 3, {1, -1});
        }
        QcaSpec flat = as_qca(spec);
        std::map<long long, int> m;
        m[static_cast<long long>(rng() % 8)] = 1 + static_cast<int>(rng() % static_cast<uint64_t>(spec.num_states() - 1));
        m[static_cast<long long>(rng() % 8)] = 1 + static_cast<int>(rng() % static_cast<uint64_t>(spec.num_states() - 1));
        Superposition a = basis_state(QcaConfig(m, 0));
        Superposition b = a;
        for (int t = 0; t < 5; t++) {
            a = pqca_step(a, spec);
            b = evolve(b, flat);
            ASSERT_LE(max_amplitude_difference(a, b), 1e-10) << trial << " t=" << t;
        }
    }
}

TEST(CheckPqcaUnitary, Examples) {
    EXPECT_TRUE(check_pqca_unitary(epr_spec()));
    ComplexMatrix u = epr_spec().u();
    for (size_t j = 0; j < 9; j++) {
        u.at(4, j) *= 2.0;
    }
    PqcaSpec scaled(epr_spec().parts(), {1, 0, -1}, {0, 0, 0}, u);
    EXPECT_FALSE(check_pqca_unitary(scaled));
    ComplexMatrix perm({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    EXPECT_TRUE(check_pqca_unitary(PqcaSpec({{"a", "b", "c"}}, {0}, {0}, perm)));
}

TEST(EprSpec, MatrixAsPrinted) {
    const PqcaSpec epr = epr_spec();
    const ComplexMatrix &u = epr.u();
    const size_t s1 = static_cast<size_t>(epr_code(1, 2));
    const size_t s2 = static_cast<size_t>(epr_code(2, 1));
    for (size_t i = 0; i < 9; i++) {
        for (size_t j = 0; j < 9; j++) {
            bool in_block = (i == s1 || i == s2) && (j == s1 || j == s2);
            Amplitude expected = in_block ? Amplitude(i == s2 && j == s2 ? -kH : kH) : Amplitude(i == j ? 1.0 : 0.0);
            EXPECT_NEAR(std::abs(u.at(i, j) - expected), 0.0, 1e-15) << i << "," << j;
        }
    }
    EXPECT_TRUE(is_unitary_matrix(u, 1e-12));
}
