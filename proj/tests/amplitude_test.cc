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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcab/pqca.h"
#include "test_util.h"

using namespace qcab;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

Superposition sup(std::initializer_list<std::pair<const Label, Amplitude>> terms) {
    return Superposition(Superposition::TermMap(terms));
}

}  // namespace

TEST(Tolerance, Defaults) {
    Tolerance t;
    EXPECT_EQ(t.eps_norm, 1e-9);
    EXPECT_EQ(t.eps_unitary, 1e-9);
    EXPECT_EQ(t.eps_drop, 1e-14);
    EXPECT_NO_THROW(t.validate());
}

TEST(Tolerance, RejectsNonPositiveAndMisordered) {
    Tolerance t;
    t.eps_norm = 0;
    EXPECT_THROW(t.validate(), std::invalid_argument);
    t = Tolerance{};
    t.eps_drop = 1e-3;
    EXPECT_THROW(t.validate(), std::invalid_argument);
    t = Tolerance{};
    t.eps_unitary = -1;
    EXPECT_THROW(t.validate(), std::invalid_argument);
}

TEST(Superposition, RejectsNonFinite) {
    EXPECT_THROW(sup({{"x", Amplitude{NAN, 0}}}), std::invalid_argument);
    EXPECT_THROW(sup({{"x", Amplitude{0, INFINITY}}}), std::invalid_argument);
}

TEST(NormSq, Examples) {
    EXPECT_NEAR(norm_sq(sup({{"0", kH}, {"1", kH}})), 1.0, 1e-15);
    EXPECT_EQ(norm_sq(Superposition{}), 0.0);
    EXPECT_NEAR(norm_sq(sup({{"x", 0.6}, {"y", Amplitude{0, 0.8}}})), 1.0, 1e-15);
}

TEST(InnerProduct, OrthonormalBasis) {
    EXPECT_EQ(inner_product(Superposition::basis("0"), Superposition::basis("1")), Amplitude{});
    Superposition s = sup({{"a", 0.6}, {"b", Amplitude{0, 0.8}}});
    EXPECT_NEAR(std::abs(inner_product(s, s) - 1.0), 0.0, 1e-15);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
    Superposition a = sup({{"0", Amplitude{0, 1}}});
    Superposition b = sup({{"0", 1.0}});
    EXPECT_EQ(inner_product(a, b), Amplitude(0, -1));
    EXPECT_EQ(inner_product(b, a), Amplitude(0, 1));
}

TEST(InnerProduct, FactorsOverTensorProducts) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        std::array<std::array<Amplitude, 2>, 4> f;
        for (auto &v : f) {
            v = {testutil::random_gaussian(rng), testutil::random_gaussian(rng)};
        }
        auto tensor = [](const std::array<Amplitude, 2> &v, const std::array<Amplitude, 2> &u) {
            Superposition::TermMap m;
            for (int i = 0; i < 2; i++) {
                for (int j = 0; j < 2; j++) {
                    m[std::to_string(i) + std::to_string(j)] = v[static_cast<size_t>(i)] * u[static_cast<size_t>(j)];
                }
            }
            return Superposition(m);
        };
        auto inner2 = [](const std::array<Amplitude, 2> &x, const std::array<Amplitude, 2> &y) {
            return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
        };
        Amplitude lhs = inner_product(tensor(f[0], f[1]), tensor(f[2], f[3]));
        Amplitude rhs = inner2(f[0], f[2]) * inner2(f[1], f[3]);
        EXPECT_LT(std::abs(lhs - rhs), 1e-12 * (1 + std::abs(rhs)));
    }
}

TEST(InnerProduct, SelfProductIsNormSq) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        Superposition::TermMap m;
        for (int k = 0; k < 8; k++) {
            m["l" + std::to_string(k)] = testutil::random_gaussian(rng);
        }
        Superposition s(m);
        Amplitude ip = inner_product(s, s);
        EXPECT_NEAR(ip.imag(), 0.0, 1e-12);
        EXPECT_NEAR(ip.real(), norm_sq(s), 1e-12);
    }
}

TEST(MeasureProjective, BellStateFirstBit) {
    Superposition bell = sup({{"00", kH}, {"11", kH}});
    auto outcomes = measure_projective(bell, [](const Label &l) { return l.substr(0, 1); });
    ASSERT_EQ(outcomes.size(), 2u);
    EXPECT_EQ(outcomes[0].tag, "0");
    EXPECT_NEAR(outcomes[0].probability, 0.5, 1e-15);
    EXPECT_EQ(outcomes[0].post_state.size(), 1u);
    EXPECT_NEAR(std::abs(outcomes[0].post_state.amplitude("00")), 1.0, 1e-15);
    EXPECT_EQ(outcomes[1].tag, "1");
    EXPECT_NEAR(outcomes[1].probability, 0.5, 1e-15);
}

TEST(MeasureProjective, ProductStateFirstBitIsCertain) {
    Superposition s = sup({{"00", kH}, {"01", kH}});
    auto outcomes = measure_projective(s, [](const Label &l) { return l.substr(0, 1); });
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_EQ(outcomes[0].tag, "0");
    EXPECT_NEAR(outcomes[0].probability, 1.0, 1e-15);
    EXPECT_LT(max_amplitude_difference(outcomes[0].post_state, s), 1e-15);
}

TEST(MeasureProjective, IdentityPartition) {
    auto outcomes = measure_projective(Superposition::basis("1"), [](const Label &l) { return l; });
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_EQ(outcomes[0].tag, "1");
    EXPECT_EQ(outcomes[0].probability, 1.0);
}

TEST(MeasureProjective, RejectsUnnormalizedAndZero) {
    auto id = [](const Label &l) { return l; };
    EXPECT_THROW(measure_projective(sup({{"0", 0.5}}), id), NormalizationError);
    EXPECT_THROW(measure_projective(Superposition{}, id), NormalizationError);
}

TEST(MeasureProjective, ProbabilitiesSumToOne) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; trial++) {
        Superposition::TermMap m;
        double total = 0;
        for (int k = 0; k < 16; k++) {
            Amplitude a = testutil::random_gaussian(rng);
            m[std::to_string(k % 2) + std::to_string(k / 2)] = a;
            total += std::norm(a);
        }
        for (auto &[l, a] : m) {
            a /= std::sqrt(total);
        }
        auto outcomes = measure_projective(Superposition(m), [](const Label &l) { return l.substr(0, 1); });
        double p = 0;
        for (const auto &o : outcomes) {
            p += o.probability;
            EXPECT_NEAR(norm_sq(o.post_state), 1.0, 1e-9);
        }
        EXPECT_NEAR(p, 1.0, 1e-9);
    }
}

TEST(Prune, Examples) {
    Superposition s = sup({{"0", 1.0}, {"1", 1e-20}});
    Superposition p = prune(s);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.amplitude("0"), Amplitude{1.0});
    EXPECT_EQ(prune(Superposition::basis("0")), Superposition::basis("0"));
    EXPECT_EQ(prune(p), p);
}

TEST(Prune, EprStateStaysTwoSparse) {
    PqcaSpec epr = epr_spec();
    Superposition s = basis_state(epr_initial_config(epr));
    for (int t = 0; t < 50; t++) {
        s = pqca_step(s, epr);
    }
    EXPECT_EQ(prune(s).size(), 2u);
}

TEST(Accumulator, SumsAndDropsCancellations) {
    AmplitudeAccumulator acc;
    acc.add("a", 0.5);
    acc.add("a", 0.5);
    acc.add("b", kH);
    acc.add("b", -kH);
    Superposition s = std::move(acc).finish();
    EXPECT_EQ(s.size(), 1u);
    EXPECT_EQ(s.amplitude("a"), Amplitude{1.0});
}

TEST(Superposition, SortedIteration) {
    Superposition s = sup({{"b", 1.0}, {"a", 1.0}, {"c", 1.0}});
    std::string order;
    for (const auto &[l, a] : s) {
        order += l;
    }
    EXPECT_EQ(order, "abc");
}
