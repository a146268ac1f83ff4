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

/*
   Explicit H-modules.  A module stores one matrix per group generator and one
   for x, acting on column vectors.

   Basis conventions: the modules built from a simple V_i are split into blocks
   x^j V_i, j = 0, 1, ...; block j carries the basis of V_i moved by x^j.  From
   x g = chi^-1(g) g x one gets g x^j v = chi(g)^j x^j (g v), so g acts on block
   j by chi^j(g) rho_i(g).  Tensor products use the left-major Kronecker basis.
*/

#ifndef HOPFORE_HOPFMOD_MODULE_HPP
#define HOPFORE_HOPFMOD_MODULE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hopfore/hopfmod/labels.hpp"

namespace hopfore {

struct ExplicitModule {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Matrix> gen_actions;
    Matrix x_action;
    std::vector<Cyclotomic> provenance;  ///< eigenvalue hints for x^s, kept sorted and unique
    std::optional<IndecLabel> label_hint;
};

namespace detail {

inline void normalize_provenance(std::vector<Cyclotomic>& p) {
    std::sort(p.begin(), p.end(), [](const Cyclotomic& a, const Cyclotomic& b) { return lexicographic_compare(a, b) < 0; });
    p.erase(std::unique(p.begin(), p.end()), p.end());
}

inline void require_same_algebra(const ExplicitModule& m, const ExplicitModule& n) {
    if (!m.alg || !n.alg) throw Error(ErrorKind::AlgebraMismatch, "module without algebra");
    if (m.alg != n.alg && !(*m.alg == *n.alg)) throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras");
}

/// Places `block` at block position (row_block, col_block) of `target`.
inline void put_block(Matrix& target, std::size_t row0, std::size_t col0, const Matrix& block) {
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) target(row0 + r, col0 + c) = block(r, c);
}

/// Generator actions for the blocks x^j V_i, j < blocks.
inline std::vector<Matrix> block_generator_actions(const AlgebraData& alg, SimpleIndex i, std::size_t blocks) {
    const auto& group = alg.group();
    const SimpleRep& rep = alg.simple(i);
    const std::size_t d = rep.dim;
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < group.generators().size(); ++k) {
        const Cyclotomic& c = alg.chi()[group.generators()[k]];
        Matrix m(alg.field_order(), blocks * d, blocks * d);
        Cyclotomic twist(alg.field_order(), 1L);
        for (std::size_t j = 0; j < blocks; ++j) {
            put_block(m, j * d, j * d, twist * rep.gen_matrices[k]);
            twist *= c;
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// x moving block j onto block j+1 identically and killing the last block.
inline Matrix block_shift(int order, std::size_t blocks, std::size_t d) {
    Matrix x(order, blocks * d, blocks * d);
    const Cyclotomic one(order, 1L);
    for (std::size_t j = 0; j + 1 < blocks; ++j)
        for (std::size_t r = 0; r < d; ++r) x((j + 1) * d + r, j * d + r) = one;
    return x;
}

}  // namespace detail

/// V_t(i): x^t V_i = 0.
inline ExplicitModule module_nilpotent(const AlgebraPtr& alg, int t, SimpleIndex i) {
    check_label(*alg, IndecLabel::nil(t, i));
    const std::size_t blocks = static_cast<std::size_t>(t);
    ExplicitModule m;
    m.alg = alg;
    m.dim = blocks * alg->dim(i);
    m.gen_actions = detail::block_generator_actions(*alg, i, blocks);
    m.x_action = detail::block_shift(alg->field_order(), blocks, alg->dim(i));
    m.provenance = {Cyclotomic(alg->field_order())};
    m.label_hint = IndecLabel::nil(t, i);
    return m;
}

/// Coefficients alpha_0..alpha_{t-1} with (y - beta)^t = y^t - sum_l alpha_l y^l.
inline std::vector<Cyclotomic> eigen_recurrence(const Cyclotomic& beta, int t) {
    std::vector<Cyclotomic> alpha;
    const Cyclotomic minus_beta = -beta;
    Integer binom = 1;  // C(t, l)
    for (int l = 0; l < t; ++l) {
        alpha.push_back(-(minus_beta.pow(t - l).scaled(Rational(binom))));
        binom = binom * (t - l) / (l + 1);
    }
    return alpha;
}

/// V_t(i, beta): (x^s - beta)^t = 0, of dimension t s dim V_i.
inline ExplicitModule module_eigen(const AlgebraPtr& alg, int t, SimpleIndex i, const Cyclotomic& beta) {
    if (beta.is_zero()) {
        check_label(*alg, IndecLabel::nil(t, i));
        throw Error(ErrorKind::ZeroBeta, "beta = 0: V_t(i,0) is the nilpotent module V[" + std::to_string(t * alg->s()) + "](" +
                                             alg->name(i) + ")");
    }
    check_label(*alg, IndecLabel::eig(t, i, beta));
    const std::size_t s = static_cast<std::size_t>(alg->s());
    const std::size_t blocks = static_cast<std::size_t>(t) * s;
    const std::size_t d = alg->dim(i);
    ExplicitModule m;
    m.alg = alg;
    m.dim = blocks * d;
    m.gen_actions = detail::block_generator_actions(*alg, i, blocks);
    m.x_action = detail::block_shift(alg->field_order(), blocks, d);
    const auto alpha = eigen_recurrence(beta, t);
    for (int l = 0; l < t; ++l)
        for (std::size_t r = 0; r < d; ++r) m.x_action(static_cast<std::size_t>(l) * s * d + r, (blocks - 1) * d + r) = alpha[l];
    m.provenance = {beta};
    m.label_hint = IndecLabel::eig(t, i, beta);
    return m;
}

inline ExplicitModule build_module(const AlgebraPtr& alg, const IndecLabel& L) {
    return L.is_nil() ? module_nilpotent(alg, L.t, L.i) : module_eigen(alg, L.t, L.i, L.beta);
}

/// Matrix of every group element on M.
inline std::vector<Matrix> element_actions(const ExplicitModule& m) { return expand_representation(m.alg->group(), m.gen_actions); }

/// Matrix of one group element on M, from its word in the generators.
inline Matrix element_action(const ExplicitModule& m, std::size_t g) {
    const auto& group = m.alg->group();
    Matrix out = Matrix::identity(m.alg->field_order(), m.dim);
    for (std::size_t k : group.word(g)) out = out * m.gen_actions[k];
    return out;
}

/// Coproduct action: g -> g (x) g, x -> x (x) a + 1 (x) x.
inline ExplicitModule tensor(const ExplicitModule& m, const ExplicitModule& n) {
    detail::require_same_algebra(m, n);
    const AlgebraData& alg = *m.alg;
    ExplicitModule out;
    out.alg = m.alg;
    out.dim = m.dim * n.dim;
    for (std::size_t k = 0; k < m.gen_actions.size(); ++k)
        out.gen_actions.push_back(linalg::tensor_product(m.gen_actions[k], n.gen_actions[k]));
    const Matrix a_on_n = element_action(n, alg.central());
    out.x_action = linalg::tensor_product(m.x_action, a_on_n);
    out.x_action += linalg::tensor_product(Matrix::identity(alg.field_order(), m.dim), n.x_action);

    std::vector<Cyclotomic> scales{Cyclotomic(alg.field_order(), 1L)};
    for (SimpleIndex i = 0; i < alg.simple_count(); ++i) scales.push_back(alg.omega_power_s(i));
    detail::normalize_provenance(scales);
    out.provenance = m.provenance;
    out.provenance.insert(out.provenance.end(), n.provenance.begin(), n.provenance.end());
    for (const auto& u : scales)
        for (const auto& alpha : m.provenance)
            for (const auto& beta : n.provenance) out.provenance.push_back(u * alpha + beta);
    detail::normalize_provenance(out.provenance);
    return out;
}

inline ExplicitModule direct_sum(const ExplicitModule& m, const ExplicitModule& n) {
    detail::require_same_algebra(m, n);
    const int order = m.alg->field_order();
    auto diag = [&](const Matrix& a, const Matrix& b) {
        Matrix out(order, m.dim + n.dim, m.dim + n.dim);
        detail::put_block(out, 0, 0, a);
        detail::put_block(out, m.dim, m.dim, b);
        return out;
    };
    ExplicitModule out;
    out.alg = m.alg;
    out.dim = m.dim + n.dim;
    for (std::size_t k = 0; k < m.gen_actions.size(); ++k) out.gen_actions.push_back(diag(m.gen_actions[k], n.gen_actions[k]));
    out.x_action = diag(m.x_action, n.x_action);
    out.provenance = m.provenance;
    out.provenance.insert(out.provenance.end(), n.provenance.begin(), n.provenance.end());
    detail::normalize_provenance(out.provenance);
    return out;
}

/// The zero-dimensional module, neutral for direct_sum.
inline ExplicitModule zero_module(const AlgebraPtr& alg) {
    ExplicitModule m;
    m.alg = alg;
    m.gen_actions.assign(alg->group().generators().size(), Matrix(alg->field_order(), 0, 0));
    m.x_action = Matrix(alg->field_order(), 0, 0);
    return m;
}

/// Names of violated defining relations; empty when M is a valid module.
inline std::vector<std::string> validate(const ExplicitModule& m) {
    std::vector<std::string> report;
    if (!m.alg) return {"module has no algebra"};
    const AlgebraData& alg = *m.alg;
    const auto& group = alg.group();
    if (m.gen_actions.size() != group.generators().size()) return {"expected one matrix per group generator"};
    bool shapes_ok = m.x_action.rows() == m.dim && m.x_action.cols() == m.dim;
    for (const auto& g : m.gen_actions) shapes_ok = shapes_ok && g.rows() == m.dim && g.cols() == m.dim;
    if (!shapes_ok) return {"action matrices are not dim x dim"};
    for (const auto& g : m.gen_actions)
        if (g.order() != alg.field_order()) return {"action matrices live in a different field"};
    if (m.x_action.order() != alg.field_order()) return {"action matrices live in a different field"};

    const auto all = element_actions(m);
    if (!is_homomorphism(group, all, m.gen_actions)) report.push_back("group relations (multiplication table)");
    if (alg.dihedral_m()) {
        const std::size_t n = 2 * static_cast<std::size_t>(*alg.dihedral_m());
        const Matrix id = Matrix::identity(alg.field_order(), m.dim);
        const Matrix& a = m.gen_actions[0];
        const Matrix& b = m.gen_actions[1];
        if (!(linalg::mat_pow(a, n) == id)) report.push_back("a^n = 1");
        if (!(b * b == id)) report.push_back("b^2 = 1");
        const Matrix ba = b * a;
        if (!(ba * ba == id)) report.push_back("(ba)^2 = 1");
    }
    for (std::size_t k = 0; k < m.gen_actions.size(); ++k) {
        const std::size_t g = group.generators()[k];
        const Matrix& rho = m.gen_actions[k];
        const Cyclotomic chi_inv = alg.chi()[g].inverse();
        if (!(m.x_action * rho == chi_inv * (rho * m.x_action)))
            report.push_back("x " + group.name(g) + " = chi^-1(" + group.name(g) + ") " + group.name(g) + " x");
    }
    return report;
}

}  // namespace hopfore

#endif
