/*
   Copyright 2026 The hopfore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "hopfore/decomp/decompose.hpp"

namespace hopfore {
namespace {

using Multiset = LabelMultiset<IndecLabel>;

class DecompTest : public ::testing::Test {
   protected:
    AlgebraPtr alg = make_dihedral(3);
    SimpleIndex eps = *alg->find("eps");
    SimpleIndex lam = *alg->find("lam");
    SimpleIndex chi = *alg->find("chi");
    SimpleIndex v1 = *alg->find("1");
    SimpleIndex v2 = *alg->find("2");

    Cyclotomic c(long v) const { return Cyclotomic(6, v); }
    IndecLabel nil(int t, SimpleIndex i) const { return IndecLabel::nil(t, i); }
    IndecLabel eig(int t, SimpleIndex i, long b) const { return IndecLabel::eig(t, i, c(b)); }

    Multiset both(const ExplicitModule& m) const {
        const auto fast = decompose(m);
        const auto ref = decompose_reference(m);
        EXPECT_EQ(fast.multiset, ref.multiset) << format_multiset(*alg, fast.multiset) << " vs " << format_multiset(*alg, ref.multiset);
        EXPECT_EQ(fast.eigenvalues_found, ref.eigenvalues_found);
        return fast.multiset;
    }
};

TEST_F(DecompTest, IsotypicMultiplicities) {
    std::vector<long> expected(alg->simple_count(), 0);
    expected[eps] = 2;
    expected[chi] = 1;
    EXPECT_EQ(isotypic_multiplicities(module_nilpotent(alg, 3, eps)), expected);
    const auto simple = module_nilpotent(alg, 1, v1);
    std::vector<long> one(alg->simple_count(), 0);
    one[v1] = 1;
    EXPECT_EQ(isotypic_multiplicities(simple), one);
    one[v1] = 2;
    EXPECT_EQ(isotypic_multiplicities(direct_sum(simple, simple)), one);
}

TEST_F(DecompTest, NonIntegerMultiplicityOnBrokenAction) {
    auto m = module_nilpotent(alg, 1, v1);
    m.gen_actions[0] = Matrix::scalar(2, c(2));  // not of finite order
    try {
        isotypic_multiplicities(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIntegerMultiplicity);
    }
}

TEST_F(DecompTest, NilTensorNil) {
    EXPECT_EQ(both(tensor(module_nilpotent(alg, 2, eps), module_nilpotent(alg, 3, eps))), (Multiset{{nil(4, eps), 1}, {nil(2, chi), 1}}));
}

TEST_F(DecompTest, OppositeEigenvaluesGiveNilpotentSummands) {
    EXPECT_EQ(both(tensor(module_eigen(alg, 1, eps, c(1)), module_eigen(alg, 1, eps, c(-1)))),
              (Multiset{{nil(2, eps), 1}, {nil(2, chi), 1}}));
}

TEST_F(DecompTest, EigenTensorEigen) {
    const auto r = decompose(tensor(module_eigen(alg, 1, v1, c(1)), module_eigen(alg, 1, v1, c(1))));
    EXPECT_EQ(r.multiset, (Multiset{{eig(1, eps, 2), 2}, {eig(1, lam, 2), 2}, {eig(1, v1, 2), 2}}));
    EXPECT_EQ(r.total_dim, 16u);
    EXPECT_EQ(r.eigenvalues_found, (std::vector<Cyclotomic>{c(2)}));
}

TEST_F(DecompTest, RoundTrip) {
    for (SimpleIndex i = 0; i < alg->simple_count(); ++i)
        for (int t = 1; t <= 4; ++t) EXPECT_EQ(both(module_nilpotent(alg, t, i)), (Multiset{{nil(t, i), 1}}));
    const Cyclotomic beta = parse_cyclotomic("1/2-w", 6);
    for (SimpleIndex i : alg->representatives())
        for (int t = 1; t <= 3; ++t)
            EXPECT_EQ(both(module_eigen(alg, t, i, beta)), (Multiset{{IndecLabel::eig(t, i, beta), 1}}));
    // Non-representatives come back as the orbit representative.
    EXPECT_EQ(decompose(module_eigen(alg, 1, chi, c(3))).multiset, (Multiset{{eig(1, eps, 3), 1}}));
    EXPECT_EQ(decompose(module_eigen(alg, 2, v2, c(3))).multiset, (Multiset{{eig(2, v1, 3), 1}}));
}

TEST_F(DecompTest, Additivity) {
    const auto a = tensor(module_nilpotent(alg, 2, v1), module_eigen(alg, 1, lam, c(2)));
    const auto b = tensor(module_nilpotent(alg, 3, chi), module_nilpotent(alg, 2, v2));
    auto expected = decompose(a).multiset;
    add_to(expected, decompose(b).multiset);
    EXPECT_EQ(both(direct_sum(a, b)), expected);
    EXPECT_EQ(decompose(zero_module(alg)).multiset, Multiset{});
}

TEST_F(DecompTest, IncompletePoolIsLoud) {
    auto m = module_eigen(alg, 1, eps, c(5));
    m.provenance.clear();
    try {
        decompose(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CandidatePoolIncomplete);
    }
    EXPECT_EQ(decompose(m, {c(5)}).multiset, (Multiset{{eig(1, eps, 5), 1}}));
}

TEST_F(DecompTest, RefusesAlgebraWithSmallQ) {
    const auto g = GroupData::cyclic(4);
    std::vector<SimpleRep> simples;
    std::vector<Cyclotomic> chi_values;
    for (int k = 0; k < 4; ++k) {
        simples.push_back({"c" + std::to_string(k), 0, {Matrix::scalar(1, Cyclotomic::zeta(4, k))}, {}});
        chi_values.push_back(Cyclotomic::zeta(4, k));
    }
    const auto bad = std::make_shared<const AlgebraData>(custom_algebra(g, simples, 2, chi_values));
    try {
        decompose(module_nilpotent(bad, 2, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFusionReady);
    }
}

// Fast and reference paths agree on random tensor products.
TEST_F(DecompTest, FastMatchesReferenceOnRandomTensors) {
    std::mt19937 rng(7);
    const std::vector<Cyclotomic> betas = {c(1), c(-1), c(2), Cyclotomic(6, Rational(1, 2))};
    auto random_label_module = [&]() {
        std::uniform_int_distribution<int> coin(0, 1), len(1, 2);
        std::uniform_int_distribution<std::size_t> simple(0, alg->simple_count() - 1), b(0, betas.size() - 1);
        if (coin(rng)) return module_nilpotent(alg, len(rng) + 1, simple(rng));
        return module_eigen(alg, len(rng), simple(rng), betas[b(rng)]);
    };
    for (int k = 0; k < 12; ++k) {
        const auto m = tensor(random_label_module(), random_label_module());
        const auto r = both(m);
        EXPECT_EQ(multiset_dim(*alg, r), m.dim);
    }
}

TEST(CyclicDecomp, FastMatchesReferenceWithSFour) {
    const auto g = GroupData::cyclic(4);
    std::vector<SimpleRep> simples;
    std::vector<Cyclotomic> chi;
    for (int k = 0; k < 4; ++k) {
        simples.push_back({"c" + std::to_string(k), 0, {Matrix::scalar(1, Cyclotomic::zeta(4, k))}, {}});
        chi.push_back(Cyclotomic::zeta(4, k));
    }
    const auto alg = std::make_shared<const AlgebraData>(custom_algebra(g, simples, 1, chi));
    const auto m = tensor(module_nilpotent(alg, 3, 1), module_nilpotent(alg, 3, 2));
    EXPECT_EQ(decompose(m).multiset, decompose_reference(m).multiset);
    EXPECT_EQ(multiset_dim(*alg, decompose(m).multiset), 9u);
    const auto e = tensor(module_eigen(alg, 1, 0, Cyclotomic(4, 1L)), module_nilpotent(alg, 5, 3));
    EXPECT_EQ(decompose(e).multiset, decompose_reference(e).multiset);
}

}  // namespace
}  // namespace hopfore
