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
   Matrix-level decomposition of an explicit module into indecomposables.

   decompose() works one isotypic component U_c of the group action at a time.
   X = x^s is central, so it preserves every U_c; its generalized eigenspaces
   there come from a finite candidate pool (module provenance, 0, extras) whose
   completeness is checked by dimension.

   For beta != 0 the Jordan type of X - beta on the c-part gives the lengths:
   V_r(i, beta) contributes (s / |orbit of i|) d_c Jordan blocks of size r for
   every c in the orbit of i.

   For beta = 0 the x-chains are counted by socle type.  x maps type d to type
   sigma(d); the socle of V_t(i) is x^{t-1} V_i of type sigma^{t-1}(i), so with
     mu_j(c) = dim(ker x  intersect  x^j W_{sigma^-j c}) / d_c
             = (rank x^j - rank x^{j+1} on W_{sigma^-j c}) / d_c
   the number of V_t(i) is mu_{t-1}(c) - mu_t(c) with c = sigma^{t-1}(i).

   decompose_reference() follows the socle-layer description literally: it
   builds K_j = ker N  intersect  im N^j as subspaces and reads off the group
   types in K_j from the induced action.  It is slower and exists to cross-check
   the fast path.
*/

#ifndef HOPFORE_DECOMP_DECOMPOSE_HPP
#define HOPFORE_DECOMP_DECOMPOSE_HPP

#include <map>
#include <string>
#include <vector>

#include "hopfore/hopfmod/module.hpp"

namespace hopfore {

struct DecompResult {
    LabelMultiset<IndecLabel> multiset;
    std::size_t total_dim = 0;
    std::vector<Cyclotomic> eigenvalues_found;  ///< eigenvalues of x^s, sorted
};

namespace detail {

inline long exact_count(const Rational& value, const std::string& what, ErrorKind kind) {
    if (value.get_den() != 1 || sgn(value) < 0) throw Error(kind, what + " is not a nonnegative integer: " + value.get_str());
    return value.get_num().get_si();
}

inline long divide_exactly(long num, long den, const std::string& what) {
    if (den <= 0 || num < 0 || num % den != 0)
        throw Error(ErrorKind::InternalInconsistency, what + ": " + std::to_string(num) + " / " + std::to_string(den));
    return num / den;
}

inline std::vector<long> isotypic_from_traces(const AlgebraData& alg, const std::vector<Cyclotomic>& traces) {
    std::vector<long> out;
    for (SimpleIndex c = 0; c < alg.simple_count(); ++c) {
        const Cyclotomic ip = alg.inner_product(traces, alg.simple(c).character);
        if (!ip.is_rational())
            throw Error(ErrorKind::NonIntegerMultiplicity, "multiplicity of " + alg.name(c) + " is " + ip.to_string());
        out.push_back(exact_count(ip.rational_part(), "multiplicity of " + alg.name(c), ErrorKind::NonIntegerMultiplicity));
    }
    return out;
}

inline std::vector<Cyclotomic> candidate_pool(const ExplicitModule& m, const std::vector<Cyclotomic>& extra) {
    std::vector<Cyclotomic> pool = m.provenance;
    pool.emplace_back(m.alg->field_order());
    for (const auto& c : extra) {
        if (c.order() != m.alg->field_order()) throw Error(ErrorKind::OrderMismatch, "extra candidate lives in a different field");
        pool.push_back(c);
    }
    normalize_provenance(pool);
    return pool;
}

/// Ranks of n^0, n^1, ... until they stop decreasing; the last entry repeats
/// once so that ranks[j + 1] is defined for every block size found.
inline std::vector<std::size_t> power_ranks(const Matrix& n) {
    std::vector<std::size_t> ranks{n.rows()};
    Matrix p = n;
    while (true) {
        const std::size_t r = linalg::rank(p);
        ranks.push_back(r);
        if (r == ranks[ranks.size() - 2]) break;
        if (r == 0) {
            ranks.push_back(0);
            break;
        }
        p = p * n;
    }
    return ranks;
}

inline std::size_t rank_at(const std::vector<std::size_t>& ranks, std::size_t j) {
    return j < ranks.size() ? ranks[j] : ranks.back();
}

inline std::size_t orbit_size(const AlgebraData& alg, SimpleIndex i) { return alg.orbit(i).size(); }

/// kG-restriction of an indecomposable, as multiplicities per simple.
inline void add_restriction(const AlgebraData& alg, const IndecLabel& L, long mult, std::vector<long>& into) {
    if (L.is_nil()) {
        for (int j = 0; j < L.t; ++j) into[alg.sigma_power(L.i, j)] += mult;
    } else {
        for (int j = 0; j < alg.s(); ++j) into[alg.sigma_power(L.i, j)] += mult * L.t;
    }
}

inline void cross_check(const AlgebraData& alg, const DecompResult& result, const std::vector<long>& iso) {
    if (multiset_dim(alg, result.multiset) != result.total_dim)
        throw Error(ErrorKind::InternalInconsistency, "decomposition does not account for the whole dimension");
    std::vector<long> from_labels(alg.simple_count(), 0);
    for (const auto& [label, mult] : result.multiset) {
        if (mult <= 0) throw Error(ErrorKind::InternalInconsistency, "nonpositive multiplicity for " + format_label(alg, label));
        add_restriction(alg, label, mult, from_labels);
    }
    if (from_labels != iso) throw Error(ErrorKind::InternalInconsistency, "group types of the summands disagree with the module");
}

inline void require_ready(const ExplicitModule& m) {
    if (!m.alg) throw Error(ErrorKind::InvalidParameter, "module without algebra");
    if (!m.alg->fusion_ready())
        throw Error(ErrorKind::NotFusionReady, "x^s decomposition needs |q| = s (here |q| = " + std::to_string(m.alg->q_order()) +
                                                   ", s = " + std::to_string(m.alg->s()) + ")");
}

}  // namespace detail

/// Multiplicity of each simple kG-module in the restriction of M.
inline std::vector<long> isotypic_multiplicities(const ExplicitModule& m) {
    std::vector<Cyclotomic> traces;
    for (const auto& a : element_actions(m)) traces.push_back(a.trace());
    return detail::isotypic_from_traces(*m.alg, traces);
}

inline DecompResult decompose(const ExplicitModule& m, const std::vector<Cyclotomic>& extra_candidates = {}) {
    detail::require_ready(m);
    const AlgebraData& alg = *m.alg;
    const int order = alg.field_order();
    const std::size_t count = alg.simple_count();
    const auto& group = alg.group();

    DecompResult result;
    result.total_dim = m.dim;
    if (m.dim == 0) return result;

    const auto actions = element_actions(m);
    std::vector<Cyclotomic> traces;
    for (const auto& a : actions) traces.push_back(a.trace());
    const auto iso = detail::isotypic_from_traces(alg, traces);

    const Matrix x_s = linalg::mat_pow(m.x_action, static_cast<unsigned long>(alg.s()));
    const auto pool = detail::candidate_pool(m, extra_candidates);

    std::vector<Subspace> component(count);
    std::vector<Matrix> nil_part(count);  // ambient basis of the x-nilpotent part of each component
    // Jordan data of x^s - beta on each component, per nonzero beta.
    std::map<std::size_t, std::map<SimpleIndex, std::vector<std::size_t>>> eig_ranks;  // pool index -> c -> ranks on W
    std::vector<bool> found(pool.size(), false);

    for (SimpleIndex c = 0; c < count; ++c) {
        const std::size_t dc = alg.dim(c);
        const std::size_t nc = static_cast<std::size_t>(iso[c]) * dc;
        nil_part[c] = Matrix(order, m.dim, 0);
        if (nc == 0) continue;
        Matrix idem(order, m.dim, m.dim);
        for (std::size_t g = 0; g < group.size(); ++g) idem.add_scaled(alg.simple(c).character[group.inverse(g)], actions[g]);
        component[c] = Subspace(idem);
        if (component[c].dim() != nc) throw Error(ErrorKind::InternalInconsistency, "isotypic component has the wrong dimension");
        const Matrix xc = component[c].restrict_to(x_s, component[c]);

        std::size_t covered = 0;
        for (std::size_t b = 0; b < pool.size(); ++b) {
            Matrix shifted = xc;
            if (!pool[b].is_zero())
                for (std::size_t k = 0; k < nc; ++k) shifted(k, k) -= pool[b];
            const auto ranks = detail::power_ranks(shifted);
            const std::size_t w = nc - ranks.back();
            if (w == 0) continue;
            found[b] = true;
            covered += w;
            if (pool[b].is_zero()) {
                const Matrix stable = linalg::mat_pow(xc, ranks.size());
                nil_part[c] = component[c].basis() * linalg::kernel_basis(stable);
            } else {
                auto& on_w = eig_ranks[b][c];
                for (std::size_t r : ranks) on_w.push_back(r - (nc - w));
            }
        }
        if (covered != nc)
            throw Error(ErrorKind::CandidatePoolIncomplete, "eigenvalues of x^s on the " + alg.name(c) + "-component cover " +
                                                                std::to_string(covered) + " of " + std::to_string(nc) +
                                                                " dimensions; supply extra candidates");
    }
    for (std::size_t b = 0; b < pool.size(); ++b)
        if (found[b]) result.eigenvalues_found.push_back(pool[b]);

    // x-free summands, read off at orbit representatives.
    for (const auto& [b, per_c] : eig_ranks) {
        for (const auto& [c, ranks] : per_c) {
            if (alg.representative(c) != c) continue;
            const long unit = static_cast<long>(alg.dim(c)) * (alg.s() / static_cast<long>(detail::orbit_size(alg, c)));
            for (std::size_t r = 1; r + 1 <= ranks.size(); ++r) {
                const long blocks = static_cast<long>(detail::rank_at(ranks, r - 1)) - 2 * static_cast<long>(detail::rank_at(ranks, r)) +
                                    static_cast<long>(detail::rank_at(ranks, r + 1));
                const long mult = detail::divide_exactly(blocks, unit, "Jordan blocks per summand");
                if (mult > 0) result.multiset[IndecLabel::eig(static_cast<int>(r), c, pool[b])] += mult;
            }
        }
    }

    // x-nilpotent summands: rank of x^j on the nilpotent part of each type.
    std::vector<std::vector<std::size_t>> chain_ranks(count);
    std::size_t longest = 0;
    for (SimpleIndex d = 0; d < count; ++d) {
        Matrix y = nil_part[d];
        std::size_t r = y.cols();
        chain_ranks[d].push_back(r);
        while (r > 0) {
            y = m.x_action * y;
            r = linalg::rank(y);
            chain_ranks[d].push_back(r);
        }
        longest = std::max(longest, chain_ranks[d].size());
    }
    auto mu = [&](std::size_t j, SimpleIndex c) {
        const SimpleIndex d = alg.sigma_power(c, -static_cast<long>(j));
        const long diff = static_cast<long>(detail::rank_at(chain_ranks[d], j)) - static_cast<long>(detail::rank_at(chain_ranks[d], j + 1));
        return detail::divide_exactly(diff, static_cast<long>(alg.dim(c)), "socle layer");
    };
    for (std::size_t t = 1; t < longest; ++t)
        for (SimpleIndex i = 0; i < count; ++i) {
            const SimpleIndex c = alg.sigma_power(i, static_cast<long>(t) - 1);
            const long mult = mu(t - 1, c) - mu(t, c);
            if (mult < 0) throw Error(ErrorKind::InternalInconsistency, "negative chain count");
            if (mult > 0) result.multiset[IndecLabel::nil(static_cast<int>(t), i)] += mult;
        }

    detail::cross_check(alg, result, iso);
    return result;
}

namespace detail {

/// Group-type multiplicities of the socle layers K_j = ker n  intersect  im n^j
/// of a nilpotent n on a kG-module with the given element actions (all in one
/// basis).  Entry [j][c] is the number of copies of V_c in K_j.
inline std::vector<std::vector<long>> socle_layers(const AlgebraData& alg, const Matrix& n, const std::vector<Matrix>& actions) {
    const int order = alg.field_order();
    std::vector<std::vector<long>> out;
    Matrix image = Matrix::identity(order, n.rows());
    while (true) {
        const Matrix k_basis = image * linalg::kernel_basis(n * image);
        const Subspace layer(k_basis);
        std::vector<Cyclotomic> traces;
        for (const auto& a : actions) traces.push_back(layer.dim() == 0 ? Cyclotomic(order) : layer.restrict_to(a, layer).trace());
        out.push_back(isotypic_from_traces(alg, traces));
        if (layer.dim() == 0) break;
        image = linalg::image_basis(n * image);
    }
    return out;
}

}  // namespace detail

/// Same contract as decompose(), computed from explicit socle layers over the
/// whole generalized eigenspaces.
inline DecompResult decompose_reference(const ExplicitModule& m, const std::vector<Cyclotomic>& extra_candidates = {}) {
    detail::require_ready(m);
    const AlgebraData& alg = *m.alg;
    const std::size_t count = alg.simple_count();
    DecompResult result;
    result.total_dim = m.dim;
    if (m.dim == 0) return result;

    const auto actions = element_actions(m);
    const auto iso = isotypic_multiplicities(m);
    const Matrix x_s = linalg::mat_pow(m.x_action, static_cast<unsigned long>(alg.s()));
    std::size_t covered = 0;
    for (const auto& beta : detail::candidate_pool(m, extra_candidates)) {
        const Matrix shifted = x_s - Matrix::scalar(m.dim, beta);
        const Subspace w(linalg::kernel_basis(linalg::mat_pow(shifted, m.dim)));
        if (w.dim() == 0) continue;
        covered += w.dim();
        result.eigenvalues_found.push_back(beta);
        std::vector<Matrix> on_w;
        for (const auto& a : actions) on_w.push_back(w.restrict_to(a, w));
        if (beta.is_zero()) {
            const auto mu = detail::socle_layers(alg, w.restrict_to(m.x_action, w), on_w);
            auto at = [&](std::size_t j, SimpleIndex c) { return j < mu.size() ? mu[j][c] : 0L; };
            for (std::size_t t = 1; t < mu.size(); ++t)
                for (SimpleIndex i = 0; i < count; ++i) {
                    const SimpleIndex c = alg.sigma_power(i, static_cast<long>(t) - 1);
                    const long mult = at(t - 1, c) - at(t, c);
                    if (mult < 0) throw Error(ErrorKind::InternalInconsistency, "negative chain count");
                    if (mult > 0) result.multiset[IndecLabel::nil(static_cast<int>(t), i)] += mult;
                }
        } else {
            const auto mu = detail::socle_layers(alg, w.restrict_to(shifted, w), on_w);
            auto at = [&](std::size_t j, SimpleIndex c) { return j < mu.size() ? mu[j][c] : 0L; };
            for (SimpleIndex c : alg.representatives()) {
                const long copies = alg.s() / static_cast<long>(detail::orbit_size(alg, c));
                for (std::size_t r = 1; r < mu.size(); ++r) {
                    const long mult = detail::divide_exactly(at(r - 1, c) - at(r, c), copies, "socle copies");
                    if (mult > 0) result.multiset[IndecLabel::eig(static_cast<int>(r), c, beta)] += mult;
                }
            }
        }
    }
    if (covered != m.dim)
        throw Error(ErrorKind::CandidatePoolIncomplete,
                    "eigenvalues of x^s cover " + std::to_string(covered) + " of " + std::to_string(m.dim) + " dimensions");
    detail::cross_check(alg, result, iso);
    return result;
}

}  // namespace hopfore

#endif
