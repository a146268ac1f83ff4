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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfore/hopfore.hpp"

namespace {

using namespace hopfore;

std::vector<Cyclotomic> betas(int order, std::initializer_list<const char*> lits) {
    std::vector<Cyclotomic> out;
    for (const char* s : lits) out.push_back(parse_cyclotomic(s, order));
    return out;
}

struct Grid {
    AlgebraPtr alg;
    std::vector<IndecLabel> labels;
    std::vector<GridCase> cases;
    const GridCase& at(std::size_t a, std::size_t b) const { return cases[a * labels.size() + b]; }
};

std::vector<Grid> build_grids() {
    std::vector<Grid> grids;
    for (int m : {3, 5}) {
        Grid g;
        g.alg = make_dihedral(m);
        g.labels = grid_labels(*g.alg, 3, 2, betas(2 * m, {"1", "-1", "2", "1/2"}));
        g.cases = run_fusion_grid(g.alg, g.labels);
        grids.push_back(std::move(g));
    }
    return grids;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome criterion_fusion_grid(const std::vector<Grid>& grids) {
    std::ostringstream d;
    bool ok = true;
    for (const auto& g : grids) {
        std::size_t bad = 0;
        for (const auto& c : g.cases)
            if (!c.agree()) {
                if (bad++ < 3)
                    std::cerr << "  mismatch m=" << *g.alg->dihedral_m() << ": " << format_label(*g.alg, c.left) << " (x) "
                              << format_label(*g.alg, c.right) << " closed " << format_multiset(*g.alg, c.closed) << " matrix "
                              << (c.error.empty() ? format_multiset(*g.alg, c.oracle) : c.error) << "\n";
            }
        ok = ok && bad == 0;
        d << (d.tellp() > 0 ? "; " : "") << "m=" << *g.alg->dihedral_m() << ": " << g.cases.size() << " ordered pairs, " << bad
          << " mismatches";
    }
    return {ok, d.str()};
}

Outcome criterion_power_binomials() {
    std::size_t checked = 0, bad = 0;
    for (int m : {3, 5, 7}) {
        const auto alg = make_dihedral(m);
        const auto x = GrothElement::simple(alg, *alg->find("1"));
        GrothElement p = x;
        for (int l = 1; l < m; ++l, p = p * x) {
            ++checked;
            if (!(p == x_power_binomial(alg, l))) ++bad;
        }
    }
    return {bad == 0, std::to_string(checked) + " powers x^l for m in {3,5,7}, " + std::to_string(bad) + " differ"};
}

Outcome criterion_presentation() {
    std::size_t checked = 0, bad = 0;
    for (int m : {3, 5, 7}) {
        const auto alg = make_dihedral(m);
        PresentationConfig cfg;
        cfg.betas = betas(2 * m, {"1", "-1", "2", "-2", "1/2"});
        cfg.tmax = 6;
        for (const auto& c : verify_presentation(alg, PresentationPart::All, cfg)) {
            ++checked;
            if (!c.pass) {
                ++bad;
                std::cerr << "  failed m=" << m << " [" << c.family << "] " << c.identity_name << ": " << c.lhs << " vs " << c.rhs << "\n";
            }
        }
    }
    return {bad == 0, std::to_string(checked) + " identities for m in {3,5,7}, " + std::to_string(bad) + " fail"};
}

// Smallest k with N^k = 0, read off the rank sequence of N.
std::size_t nilpotency_index(const Matrix& n) {
    Matrix p = Matrix::identity(n.order(), n.rows());
    for (std::size_t k = 0; k <= n.rows(); ++k) {
        if (linalg::rank(p) == 0) return k;
        p = p * n;
    }
    return n.rows() + 1;
}

std::size_t radical_length(const ExplicitModule& m, const IndecLabel& L) {
    const AlgebraData& alg = *m.alg;
    if (L.is_nil()) return nilpotency_index(m.x_action);
    // x^s is central, so the radical layers are those of x^s - beta.
    const Matrix xs = linalg::mat_pow(m.x_action, static_cast<unsigned long>(alg.s()));
    return nilpotency_index(xs - Matrix::scalar(m.dim, L.beta));
}

Outcome criterion_structure(const std::vector<Grid>& grids) {
    std::size_t dim_bad = 0, round_bad = 0, radical_bad = 0, sum_bad = 0;
    for (const auto& g : grids) {
        const AlgebraData& alg = *g.alg;
        for (const auto& c : g.cases) {
            const std::size_t expected = label_dim(alg, c.left) * label_dim(alg, c.right);
            if (multiset_dim(alg, c.closed) != expected || multiset_dim(alg, c.oracle) != expected || c.tensor_dim != expected) ++dim_bad;
        }
        for (const auto& L : g.labels) {
            const ExplicitModule m = build_module(g.alg, L);
            const LabelMultiset<IndecLabel> single{{canonicalize(alg, L), 1}};
            if (!(decompose(m).multiset == single)) ++round_bad;
            if (radical_length(m, L) != static_cast<std::size_t>(L.t)) ++radical_bad;
        }
    }
    const Grid& g = grids.front();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, g.labels.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        const ExplicitModule left = tensor(build_module(g.alg, g.labels[a]), build_module(g.alg, g.labels[b]));
        const ExplicitModule right = tensor(build_module(g.alg, g.labels[c]), build_module(g.alg, g.labels[d]));
        LabelMultiset<IndecLabel> expected = decompose(left).multiset;
        add_to(expected, decompose(right).multiset, 1);
        if (!(decompose(direct_sum(left, right)).multiset == expected)) ++sum_bad;
    }
    const bool ok = dim_bad + round_bad + radical_bad + sum_bad == 0;
    std::ostringstream d;
    d << "dimension violations " << dim_bad << ", round-trip failures " << round_bad << ", radical-length failures " << radical_bad
      << ", direct-sum additivity failures " << sum_bad << "/20";
    return {ok, d.str()};
}

Outcome criterion_grothendieck(const std::vector<Grid>& grids) {
    const Grid& g = grids.front();
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, g.labels.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), terms(1, 3);
    auto random_element = [&] {
        GreenElement e(g.alg);
        for (int k = terms(rng); k > 0; --k) e += coeff(rng) * GreenElement::basis(g.alg, g.labels[pick(rng)]);
        return e;
    };
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const GreenElement a = random_element(), b = random_element();
        if (!(to_groth(a * b) == to_groth(a) * to_groth(b))) ++bad;
    }
    return {bad == 0, "50 random Green ring pairs at m=3, " + std::to_string(bad) + " break multiplicativity"};
}

Outcome criterion_tail_start(const std::vector<Grid>& grids) {
    // V_10 (x) V_7 over kC_4 with chi faithful and a the generator (s = 4):
    // 10 = 2*4 + 2 and 7 = 1*4 + 3 put the pair in the p + p' > s branch.
    const auto group = GroupData::cyclic(4);
    std::vector<SimpleRep> simples;
    std::vector<Cyclotomic> chi;
    for (int k = 0; k < 4; ++k) {
        simples.push_back({"c" + std::to_string(k), 0, {Matrix::scalar(1, Cyclotomic::zeta(4, k))}, {}});
        chi.push_back(Cyclotomic::zeta(4, k));
    }
    const auto alg = std::make_shared<const AlgebraData>(custom_algebra(group, simples, 1, chi));
    const IndecLabel a = IndecLabel::nil(10, 0), b = IndecLabel::nil(7, 0);
    const auto oracle = decompose(tensor(build_module(alg, a), build_module(alg, b))).multiset;
    const auto at_p = tensor_labels(*alg, a, b, {NilTailStart::StartAtP});
    const std::size_t dim_zero = multiset_dim(*alg, tensor_labels(*alg, a, b, {NilTailStart::StartAtZero}));
    const std::size_t dim_pprime = multiset_dim(*alg, tensor_labels(*alg, a, b, {NilTailStart::StartAtPPrime}));
    bool grid_ok = true;
    for (const auto& g : grids)
        for (const auto& c : g.cases) grid_ok = grid_ok && c.agree();
    const bool ok = grid_ok && at_p == oracle && multiset_dim(*alg, at_p) == 70 && (dim_zero != 70 || dim_pprime != 70);
    std::ostringstream d;
    d << "grid passes with u = p..s-1: " << (grid_ok ? "yes" : "no") << "; C_4 V[10](c0) (x) V[7](c0), dim 70: u = p gives "
      << multiset_dim(*alg, at_p) << (at_p == oracle ? " (equals matrix decomposition)" : " (differs from matrix decomposition)")
      << ", u = 0 gives " << dim_zero << ", u = p' gives " << dim_pprime;
    return {ok, d.str()};
}

Outcome criterion_commutativity(const std::vector<Grid>& grids) {
    std::size_t pairs = 0, bad = 0;
    for (const auto& g : grids)
        for (std::size_t a = 0; a < g.labels.size(); ++a)
            for (std::size_t b = a + 1; b < g.labels.size(); ++b) {
                ++pairs;
                if (!(g.at(a, b).closed == g.at(b, a).closed)) ++bad;
            }
    return {bad == 0, std::to_string(pairs) + " unordered pairs for m in {3,5}, " + std::to_string(bad) + " not symmetric"};
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    bool all = true;
    auto report = [&](int n, const char* name, const std::function<Outcome()>& f) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        all = all && o.pass;
        std::printf("criterion %d %s: %s (%s) [%.1fs]\n", n, name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
    };

    std::vector<Grid> grids;
    try {
        grids = build_grids();
    } catch (const std::exception& e) {
        std::printf("grid construction failed: %s\n", e.what());
        return 1;
    }
    std::printf("# fusion grid built in %.1fs\n", std::chrono::duration<double>(Clock::now() - start).count());

    report(1, "closed-form fusion vs matrix decomposition", [&] { return criterion_fusion_grid(grids); });
    report(2, "powers of V_1 in the Grothendieck ring", [] { return criterion_power_binomials(); });
    report(3, "ring presentation identities", [] { return criterion_presentation(); });
    report(4, "structural invariants", [&] { return criterion_structure(grids); });
    report(5, "Green to Grothendieck ring map", [&] { return criterion_grothendieck(grids); });
    report(6, "nil tail start u = p", [&] { return criterion_tail_start(grids); });
    report(7, "commutativity of fusion", [&] { return criterion_commutativity(grids); });
    return all ? 0 : 1;
}
