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

#include "hopfore/hopfore.hpp"
#include "support.hpp"

namespace hopfore {
namespace {

class ExprTest : public ::testing::Test {
   protected:
    AlgebraPtr alg = make_dihedral(3);
    std::string round_trip(const std::string& src) { return print_expr(*parse_expr(src, *alg)); }
    GrothElement groth(const std::string& src) { return evaluate_expr<SimpleLabel>(*parse_expr(src, *alg), alg); }
    GreenElement green(const std::string& src) { return evaluate_expr<IndecLabel>(*parse_expr(src, *alg), alg); }
};

TEST_F(ExprTest, ParsesProductOfLabels) {
    const ExprPtr e = parse_expr("V[3](1) * V[2](eps;1)", *alg);
    ASSERT_EQ(e->op, LabelExpr::Op::Mul);
    EXPECT_EQ(e->args[0]->label, IndecLabel::nil(3, *alg->find("1")));
    EXPECT_EQ(e->args[1]->label, IndecLabel::eig(2, alg->trivial(), Cyclotomic(6, 1)));
}

TEST_F(ExprTest, AliasesResolveToLabels) {
    const SimpleIndex eps = alg->trivial();
    EXPECT_EQ(parse_label("x", *alg), IndecLabel::nil(1, *alg->find("1")));
    EXPECT_EQ(parse_label("y", *alg), IndecLabel::nil(2, eps));
    EXPECT_EQ(parse_label("z", *alg), IndecLabel::nil(3, eps));
    EXPECT_EQ(parse_label("w[1/2]", *alg), IndecLabel::eig(1, eps, Cyclotomic(6, mpq_class(1, 2))));
    EXPECT_EQ(parse_label("y[-1+w]", *alg), IndecLabel::eig(1, eps, parse_cyclotomic("-1+w", 6)));
    EXPECT_EQ(parse_label("lamchi", *alg), IndecLabel::nil(1, *alg->find("lamchi")));
}

TEST_F(ExprTest, ChiRelationEvaluatesToZero) {
    EXPECT_TRUE(groth("x^3 - 3*x - (1+lam)*chi").is_zero());
    EXPECT_EQ(groth("x*x").to_string(), "1 + lam + V[1](2)");
    EXPECT_EQ(green("y*y - (1 + chi)*y").to_string(), "0");
    EXPECT_EQ(green("-2*x + 2*x"), GreenElement(alg));
}

TEST_F(ExprTest, PrintParseRoundTrip) {
    for (const std::string s : {"1 + lam + V[1](2)", "x^3 - 3*x - (1 + lam)*chi", "V[3](1)*V[2](eps;1)", "-2*y + z^2",
                                "(x + y)*(x - z)^2", "w[-3/2+w]*y[2]", "x - (y - z)", "x*(y*z)", "V[1](eps;-1)"})
        EXPECT_EQ(round_trip(s), s);
}

TEST_F(ExprTest, CanonicalFormsRoundTrip) {
    std::mt19937 rng(11);
    const SimpleIndex n_simples = alg->simple_count();
    std::uniform_int_distribution<int> pick_simple(0, static_cast<int>(n_simples) - 1), pick_t(1, 4), coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        GreenElement e(alg);
        for (int k = 0; k < 3; ++k) {
            const SimpleIndex i = static_cast<SimpleIndex>(pick_simple(rng));
            const IndecLabel L = k == 2 ? IndecLabel::eig(pick_t(rng), alg->representative(i), testing::random_nonzero(rng, 6))
                                        : IndecLabel::nil(pick_t(rng), i);
            e += coeff(rng) * GreenElement::basis(alg, L);
        }
        const std::string printed = e.to_string();
        if (e.is_zero()) continue;
        EXPECT_EQ(round_trip(printed), printed);
        EXPECT_EQ(green(printed), e) << printed;
        const GrothElement g = to_groth(e);
        EXPECT_EQ(groth(g.to_string()), g) << g.to_string();
    }
}

TEST_F(ExprTest, ZeroBetaIsASyntaxErrorPointingToTheNilModule) {
    try {
        parse_expr("V[2](eps;0)", *alg);
        FAIL() << "expected SyntaxError";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
        EXPECT_NE(std::string(e.what()).find("V[4](eps)"), std::string::npos) << e.what();
    }
}

TEST_F(ExprTest, ErrorsCarryPositions) {
    auto kind_of = [&](const std::string& s) {
        try {
            parse_expr(s, *alg);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Overflow;  // sentinel: nothing thrown
    };
    EXPECT_EQ(kind_of("x +* y"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("V[2](eps"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("V[0](eps)"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("(x + y"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("x^"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("V[1](eps;1/0)"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("V[1](9)"), ErrorKind::UnknownLabel);
    EXPECT_EQ(kind_of("q"), ErrorKind::UnknownLabel);
    try {
        parse_expr("x + ?", *alg);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_label("x + y", *alg), Error);
}

AlgebraPtr cyclic4() {
    const auto g = GroupData::cyclic(4);
    std::vector<SimpleRep> simples;
    std::vector<Cyclotomic> chi;
    for (int k = 0; k < 4; ++k) {
        simples.push_back({"c" + std::to_string(k), 0, {Matrix::scalar(1, Cyclotomic::zeta(4, k))}, {}});
        chi.push_back(Cyclotomic::zeta(4, k));
    }
    return std::make_shared<const AlgebraData>(custom_algebra(g, simples, 1, chi));
}

TEST(JsonTest, CustomAlgebraMatchesDirectConstruction) {
    const Json j = Json::parse(R"({
        "field_order": 4,
        "mul_table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
        "generators": [1],
        "element_names": ["1","g","g^2","g^3"],
        "simples": [{"id":"c0","matrices":[[["1"]]]}, {"id":"c1","matrices":[[["w"]]]},
                    {"id":"c2","matrices":[[[-1]]]}, {"id":"c3","matrices":[[["-w"]]]}],
        "chi": ["w"],
        "central": 1
    })");
    const AlgebraData alg = algebra_from_json(j);
    EXPECT_EQ(alg, *cyclic4());
    EXPECT_EQ(alg.s(), 4);
    const Json summary = algebra_summary_to_json(alg);
    EXPECT_EQ(summary["q"], "w");
    EXPECT_EQ(summary["representatives"].size(), 1u);
}

TEST(JsonTest, MalformedAlgebraFilesAreRejected) {
    EXPECT_THROW(algebra_from_json(Json::parse(R"({"field_order": 4})")), Error);
    EXPECT_THROW(algebra_from_json(Json::parse(R"({
        "field_order": 2, "mul_table": [[0,1],[1,0]], "generators": [1],
        "simples": [{"id":"a","matrices":[[["1"]]]}, {"id":"b","matrices":[[["-1"]]]}],
        "chi": ["1"], "central": 1})")),
                 Error);  // chi(a) = 1
}

TEST(JsonTest, DecompositionAndModuleExport) {
    const auto alg = make_dihedral(3);
    const SimpleIndex eps = alg->trivial();
    const auto r = decompose(tensor(build_module(alg, IndecLabel::nil(2, eps)), build_module(alg, IndecLabel::nil(3, eps))));
    const Json j = decomposition_to_json(*alg, r);
    EXPECT_EQ(j["total_dim"], 6);
    ASSERT_EQ(j["summands"].size(), 2u);
    EXPECT_EQ(j["summands"][0]["label"], "V[4](eps)");
    EXPECT_EQ(j["summands"][1]["label"], "V[2](chi)");
    EXPECT_TRUE(j["summands"][0]["beta"].is_null());

    const ExplicitModule m = build_module(alg, IndecLabel::eig(1, *alg->find("1"), Cyclotomic(6, 2)));
    const Json mj = module_to_json(m);
    EXPECT_EQ(mj["dim"], 4);
    EXPECT_EQ(mj["generators"].size(), 2u);
    EXPECT_EQ(matrix_from_json(mj["x"], 6), m.x_action);
    EXPECT_EQ(matrix_from_json(mj["generators"][1]["matrix"], 6), m.gen_actions[1]);
}

TEST(JsonTest, ReportUsesPassFailStatus) {
    const std::vector<IdentityCheck> checks = {{"a = a", "J", true, "1", "1"}, {"b = c", "U", false, "2", "3"}};
    const Json j = report_to_json(checks);
    EXPECT_EQ(j[0]["status"], "pass");
    EXPECT_EQ(j[1]["status"], "fail");
    EXPECT_EQ(j[1]["family"], "U");
}

}  // namespace
}  // namespace hopfore
