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

#include <functional>
#include <map>

#include "hopfore/grouprep/algebra.hpp"

namespace hopfore {
namespace {

using Coeffs = std::map<SimpleIndex, long>;

SimpleIndex idx(const AlgebraData& alg, const std::string& name) {
    auto i = alg.find(name);
    if (!i) throw std::runtime_error("no simple " + name);
    return *i;
}

SimpleIndex two_dim(const AlgebraData& alg, int l) { return idx(alg, std::to_string(l)); }

TEST(Group, DihedralRelations) {
    const auto g = GroupData::dihedral(6);
    EXPECT_EQ(g.size(), 12u);
    const std::size_t a = g.generators()[0], b = g.generators()[1];
    EXPECT_EQ(g.power(a, 6), g.identity());
    EXPECT_EQ(g.power(b, 2), g.identity());
    EXPECT_EQ(g.power(g.mul(b, a), 2), g.identity());
    EXPECT_TRUE(g.is_central(g.power(a, 3)));
    EXPECT_FALSE(g.is_central(a));
    for (std::size_t x = 0; x < g.size(); ++x) {
        std::size_t prod = g.identity();
        for (std::size_t k : g.word(x)) prod = g.mul(prod, g.generators()[k]);
        EXPECT_EQ(prod, x);
    }
}

TEST(Group, RejectsBrokenTables) {
    EXPECT_THROW(GroupData({{0, 1}, {1, 1}}, {1}), Error);                   // no inverse for 1
    EXPECT_THROW(GroupData({{0, 1}, {1, 0}}, {0}), Error);                   // does not generate
    EXPECT_THROW(GroupData({{0, 1, 2}, {1, 2, 0}}, {1}), Error);             // not square
    try {
        GroupData({{0, 1}, {1, 0}}, {5});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidGroup);
    }
}

TEST(DihedralAlgebra, MThreeBasics) {
    const auto alg = dihedral_algebra(3);
    EXPECT_EQ(alg.group().size(), 12u);
    ASSERT_EQ(alg.simple_count(), 6u);
    std::size_t squares = 0;
    std::vector<std::size_t> dims;
    for (SimpleIndex i = 0; i < alg.simple_count(); ++i) {
        dims.push_back(alg.dim(i));
        squares += alg.dim(i) * alg.dim(i);
    }
    EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 1, 1, 2, 2}));
    EXPECT_EQ(squares, 12u);
    EXPECT_EQ(alg.s(), 2);
    EXPECT_EQ(alg.q(), Cyclotomic(6, -1L));
    EXPECT_TRUE(alg.fusion_ready());
    EXPECT_EQ(alg.trivial(), idx(alg, "eps"));

    EXPECT_EQ(alg.sigma(idx(alg, "eps")), idx(alg, "chi"));
    EXPECT_EQ(alg.sigma(idx(alg, "chi")), idx(alg, "eps"));
    EXPECT_EQ(alg.sigma(idx(alg, "lam")), idx(alg, "lamchi"));
    EXPECT_EQ(alg.sigma(two_dim(alg, 1)), two_dim(alg, 2));

    EXPECT_TRUE(alg.omega(idx(alg, "eps")).is_one());
    EXPECT_EQ(alg.omega(idx(alg, "chi")), Cyclotomic(6, -1L));
    EXPECT_EQ(alg.omega(two_dim(alg, 1)), Cyclotomic(6, -1L));

    EXPECT_EQ(alg.representatives(), (std::vector<SimpleIndex>{idx(alg, "eps"), idx(alg, "lam"), two_dim(alg, 1)}));
    EXPECT_EQ(alg.representative(idx(alg, "lamchi")), idx(alg, "lam"));
}

TEST(DihedralAlgebra, RejectsBadM) {
    for (int m : {-3, 0, 1, 2, 4}) {
        try {
            dihedral_algebra(m);
            FAIL() << m;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
        }
    }
}

TEST(DihedralAlgebra, FusionExamples) {
    const auto a3 = dihedral_algebra(3);
    EXPECT_EQ(fusion_coeffs(a3, two_dim(a3, 1), two_dim(a3, 1)),
              (Coeffs{{idx(a3, "eps"), 1}, {idx(a3, "lam"), 1}, {two_dim(a3, 2), 1}}));
    const auto a5 = dihedral_algebra(5);
    EXPECT_EQ(fusion_coeffs(a5, two_dim(a5, 1), two_dim(a5, 4)),
              (Coeffs{{two_dim(a5, 3), 1}, {idx(a5, "chi"), 1}, {idx(a5, "lamchi"), 1}}));
    for (SimpleIndex i = 0; i < a5.simple_count(); ++i)
        EXPECT_EQ(fusion_coeffs(a5, a5.trivial(), i), (Coeffs{{i, 1}}));
    EXPECT_THROW(fusion_coeffs(a5, 99, 0), Error);
}

// Every clause of the classical D_n tensor table, for several m.
TEST(DihedralAlgebra, ClassicalTensorTable) {
    for (int m : {3, 5, 7, 9}) {
        const auto alg = dihedral_algebra(m);
        const int n = 2 * m;
        const auto eps = idx(alg, "eps"), lam = idx(alg, "lam"), chi = idx(alg, "chi"), lamchi = idx(alg, "lamchi");
        EXPECT_EQ(fusion_coeffs(alg, lam, lam), (Coeffs{{eps, 1}}));
        EXPECT_EQ(fusion_coeffs(alg, chi, chi), (Coeffs{{eps, 1}}));
        EXPECT_EQ(fusion_coeffs(alg, lam, chi), (Coeffs{{lamchi, 1}}));
        for (int l = 1; l < m; ++l) {
            EXPECT_EQ(fusion_coeffs(alg, lam, two_dim(alg, l)), (Coeffs{{two_dim(alg, l), 1}}));
            EXPECT_EQ(fusion_coeffs(alg, chi, two_dim(alg, l)), (Coeffs{{two_dim(alg, m - l), 1}}));
            for (int t = 1; t < m; ++t) {
                Coeffs expected;
                if (l == t) {
                    expected = {{eps, 1}, {lam, 1}, {two_dim(alg, 2 * l < m ? 2 * l : n - 2 * l), 1}};
                } else if (l + t < m) {
                    expected = {{two_dim(alg, std::abs(l - t)), 1}, {two_dim(alg, l + t), 1}};
                } else if (l + t == m) {
                    expected = {{two_dim(alg, std::abs(l - t)), 1}, {chi, 1}, {lamchi, 1}};
                } else {
                    expected = {{two_dim(alg, std::abs(l - t)), 1}, {two_dim(alg, n - l - t), 1}};
                }
                EXPECT_EQ(fusion_coeffs(alg, two_dim(alg, l), two_dim(alg, t)), expected) << "m=" << m << " l=" << l << " t=" << t;
            }
        }
        for (SimpleIndex i = 0; i < alg.simple_count(); ++i) {
            EXPECT_EQ(alg.sigma_power(i, alg.s()), i);
            EXPECT_TRUE((alg.omega(i) * alg.omega(i)).is_one());
            for (SimpleIndex j = 0; j < alg.simple_count(); ++j) {
                EXPECT_EQ(alg.fusion_row(i, j), alg.fusion_row(j, i));
                std::size_t total = 0;
                for (SimpleIndex l = 0; l < alg.simple_count(); ++l) total += alg.fusion(i, j, l) * alg.dim(l);
                EXPECT_EQ(total, alg.dim(i) * alg.dim(j));
            }
        }
        EXPECT_EQ(alg.representatives().size(), 2u + static_cast<std::size_t>((m - 1) / 2));
    }
}

std::vector<SimpleRep> d6_simples_by_hand() {
    const int n = 6;
    auto one = [](long v) { return Matrix::scalar(1, Cyclotomic(6, v)); };
    std::vector<SimpleRep> out = {
        {"eps", 0, {one(1), one(1)}, {}},
        {"lam", 0, {one(1), one(-1)}, {}},
        {"chi", 0, {one(-1), one(1)}, {}},
        {"lamchi", 0, {one(-1), one(-1)}, {}},
    };
    for (int l = 1; l <= 2; ++l) {
        Matrix a = Matrix::from_rows(n, {{Cyclotomic::zeta(n, l), Cyclotomic(n)}, {Cyclotomic(n), Cyclotomic::zeta(n, -l)}});
        Matrix b = Matrix::from_rows(n, {{Cyclotomic(n), Cyclotomic(n, 1L)}, {Cyclotomic(n, 1L), Cyclotomic(n)}});
        out.push_back({std::to_string(l), 0, {a, b}, {}});
    }
    return out;
}

std::vector<Cyclotomic> d6_chi(const GroupData& g) {
    std::vector<Cyclotomic> chi;
    for (std::size_t x = 0; x < g.size(); ++x) chi.emplace_back(6, (x % 6) % 2 == 0 ? 1L : -1L);
    return chi;
}

TEST(CustomAlgebra, HandBuiltD6MatchesBuiltIn) {
    const auto g = GroupData::dihedral(6);
    const auto custom = custom_algebra(g, d6_simples_by_hand(), 3, d6_chi(g));
    const auto builtin = dihedral_algebra(3);
    EXPECT_TRUE(custom == builtin);
    EXPECT_EQ(custom.mode(), AlgebraData::Mode::Custom);
    EXPECT_EQ(builtin.mode(), AlgebraData::Mode::Dihedral);
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InternalInconsistency;
}

TEST(CustomAlgebra, Validation) {
    const auto g = GroupData::dihedral(6);
    EXPECT_EQ(kind_of([&] { custom_algebra(g, d6_simples_by_hand(), g.identity(), d6_chi(g)); }), ErrorKind::TrivialQ);
    EXPECT_EQ(kind_of([&] { custom_algebra(g, d6_simples_by_hand(), 1, d6_chi(g)); }), ErrorKind::NotCentral);
    auto missing = d6_simples_by_hand();
    missing.pop_back();
    EXPECT_EQ(kind_of([&] { custom_algebra(g, missing, 3, d6_chi(g)); }), ErrorKind::IncompleteSimpleList);

    // eps + lam as a 2-dimensional reducible representation
    auto reducible = d6_simples_by_hand();
    reducible[5].gen_matrices = {Matrix::from_rows(6, {{Cyclotomic(6, 1L), Cyclotomic(6)}, {Cyclotomic(6), Cyclotomic(6, 1L)}}),
                                 Matrix::from_rows(6, {{Cyclotomic(6, 1L), Cyclotomic(6)}, {Cyclotomic(6), Cyclotomic(6, -1L)}})};
    EXPECT_EQ(kind_of([&] { custom_algebra(g, reducible, 3, d6_chi(g)); }), ErrorKind::NotIrreducible);

    auto dup = d6_simples_by_hand();
    dup[1].id = "eps";
    EXPECT_EQ(kind_of([&] { custom_algebra(g, dup, 3, d6_chi(g)); }), ErrorKind::InvalidParameter);
}

TEST(CustomAlgebra, CyclicFourWithFaithfulCharacter) {
    const auto g = GroupData::cyclic(4);
    std::vector<SimpleRep> simples;
    std::vector<Cyclotomic> chi;
    for (int k = 0; k < 4; ++k) {
        simples.push_back({"c" + std::to_string(k), 0, {Matrix::scalar(1, Cyclotomic::zeta(4, k))}, {}});
        chi.push_back(Cyclotomic::zeta(4, k));
    }
    const auto alg = custom_algebra(g, simples, 1, chi);
    EXPECT_EQ(alg.q(), Cyclotomic::zeta(4));
    EXPECT_EQ(alg.s(), 4);
    EXPECT_EQ(alg.q_order(), 4);
    EXPECT_TRUE(alg.fusion_ready());
    EXPECT_EQ(alg.sigma(0), 1u);
    EXPECT_EQ(alg.representatives(), (std::vector<SimpleIndex>{0}));
    EXPECT_EQ(alg.omega(2), Cyclotomic(4, -1L));
}

TEST(CustomAlgebra, NotFusionReadyWhenQHasSmallerOrder) {
    // C_4 with a = g^2: q = chi(g^2) = -1 while s = 4.
    const auto g = GroupData::cyclic(4);
    std::vector<SimpleRep> simples;
    std::vector<Cyclotomic> chi;
    for (int k = 0; k < 4; ++k) {
        simples.push_back({"c" + std::to_string(k), 0, {Matrix::scalar(1, Cyclotomic::zeta(4, k))}, {}});
        chi.push_back(Cyclotomic::zeta(4, k));
    }
    const auto alg = custom_algebra(g, simples, 2, chi);
    EXPECT_EQ(alg.q_order(), 2);
    EXPECT_FALSE(alg.fusion_ready());
}

}  // namespace
}  // namespace hopfore
