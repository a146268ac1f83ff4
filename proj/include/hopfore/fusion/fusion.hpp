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
   Closed-form tensor products of indecomposables.

   Four rules, by the kinds of the two factors:
     Nil (x) Nil  lengths n >= t written n = r's + p', t = rs + p; the shape
                  depends on p + p' <= s or not and on p <= p' or not;
     Nil (x) Eig  V_p(i) (x) V_t(j, b), p = us + r;
     Eig (x) Nil  the same with b replaced by omega_i^s b;
     Eig (x) Eig  eigenvalue omega_j^s a + b, collapsing to nilpotent
                  summands when that is zero.
   In every rule the kG fusion coefficients N_{i,j}^l distribute the result
   over the simple types l.
*/

#ifndef HOPFORE_FUSION_FUSION_HPP
#define HOPFORE_FUSION_FUSION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "hopfore/hopfmod/labels.hpp"

namespace hopfore {

/// Where the last summand of the Nil (x) Nil rule starts in the case
/// p + p' > s, p >= p'.  Only StartAtP conserves dimension; the other two are
/// kept so the alternatives can be tested.
enum class NilTailStart { StartAtP, StartAtZero, StartAtPPrime };

struct FusionOptions {
    NilTailStart nil_tail_start = NilTailStart::StartAtP;
};

/// Eig with beta = 0 becomes Nil(t s, i); Eig otherwise takes the orbit
/// representative; Nil is unchanged.
inline IndecLabel canonicalize(const AlgebraData& alg, const IndecLabel& L) {
    if (L.t < 1) throw Error(ErrorKind::InvalidParameter, "length must be positive, got " + std::to_string(L.t));
    if (L.i >= alg.simple_count()) throw Error(ErrorKind::UnknownLabel, "simple index " + std::to_string(L.i) + " out of range");
    if (L.is_nil()) return L;
    if (L.beta.is_zero()) return IndecLabel::nil(L.t * alg.s(), L.i);
    return IndecLabel::eig(L.t, alg.representative(L.i), L.beta);
}

inline SimpleLabel canonicalize(const AlgebraData& alg, const SimpleLabel& S) {
    check_label(alg, S);
    if (S.is_torsion()) return S;
    return SimpleLabel::free(alg.representative(S.i), S.beta);
}

namespace detail {

/// Accumulates summands; length 0 is the zero module and is dropped.
class SummandSink {
   public:
    explicit SummandSink(const AlgebraData& alg) : alg_(alg) {}

    void add(IndecLabel L, long mult) {
        if (mult == 0 || L.t == 0) return;
        if (L.t < 0 || mult < 0) throw Error(ErrorKind::InternalInconsistency, "negative length or multiplicity in a fusion rule");
        out_[canonicalize(alg_, L)] += mult;
    }
    void nil(long length, SimpleIndex i, long mult) { add(IndecLabel::nil(static_cast<int>(length), i), mult); }
    void eig(long length, SimpleIndex i, const Cyclotomic& beta, long mult) {
        add(IndecLabel::eig(static_cast<int>(length), i, beta), mult);
    }

    LabelMultiset<IndecLabel> take() { return std::move(out_); }

   private:
    const AlgebraData& alg_;
    LabelMultiset<IndecLabel> out_;
};

/// V_p(i) (x) V_t(j, beta) with the eigenvalue already twisted as needed.
inline void nil_times_eig(const AlgebraData& alg, SummandSink& sink, long p, SimpleIndex i, long t, SimpleIndex j,
                          const Cyclotomic& beta) {
    const long s = alg.s();
    const long u = p / s, r = p % s;
    for (const auto& [l, n] : fusion_coeffs(alg, i, j)) {
        for (long m = 1; m <= std::min(t, u); ++m) sink.eig(2 * m - 1 + std::abs(t - u), l, beta, n * (s - r));
        for (long m = 1; m <= std::min(t, u + 1); ++m) sink.eig(2 * m - 1 + std::abs(t - u - 1), l, beta, n * r);
    }
}

inline void eig_times_eig(const AlgebraData& alg, SummandSink& sink, long p, SimpleIndex i, const Cyclotomic& alpha, long t,
                          SimpleIndex j, const Cyclotomic& beta) {
    const long s = alg.s();
    const Cyclotomic gamma = alg.omega_power_s(j) * alpha + beta;
    for (const auto& [l, n] : fusion_coeffs(alg, i, j))
        for (long m = 0; m < s; ++m) {
            const SimpleIndex type = alg.sigma_power(l, m);
            for (long u = 1; u <= std::min(p, t); ++u) {
                const long length = 2 * u - 1 + std::abs(p - t);
                if (gamma.is_zero())
                    sink.nil(s * length, type, n);
                else
                    sink.eig(length, type, gamma, n);
            }
        }
}

/// V_n(i) (x) V_t(j) with n >= t.
inline void nil_times_nil(const AlgebraData& alg, SummandSink& sink, long n, SimpleIndex i, long t, SimpleIndex j,
                          const FusionOptions& options) {
    const long s = alg.s();
    const long r_ = t / s, p = t % s;
    const long rp = n / s, pp = n % s;
    // Summand families: m = 0..m_last, u = u_first..u_last, each V_len(sigma^u(l))
    // with len = (stride - 2m) s, or len = n + t - 1 - 2ms - 2u when stride is empty.
    struct Range {
        long m_last, u_first, u_last;
        std::optional<long> stride;
    };
    const std::nullopt_t walk = std::nullopt;
    std::vector<Range> ranges;
    if (p + pp <= s) {
        if (p <= pp) {
            ranges = {{r_, 0, p - 1, walk}, {r_ - 1, p, pp - 1, r_ + rp}, {r_ - 1, pp, p + pp - 1, walk}, {r_ - 1, p + pp, s - 1, r_ + rp - 1}};
        } else {
            ranges = {{r_, 0, pp - 1, walk}, {r_, pp, p - 1, r_ + rp}, {r_ - 1, p, p + pp - 1, walk}, {r_ - 1, p + pp, s - 1, r_ + rp - 1}};
        }
    } else {
        const long mbar = p + pp - s - 1;
        if (p <= pp) {
            ranges = {{r_, 0, mbar, r_ + rp + 1}, {r_, mbar + 1, p - 1, walk}, {r_ - 1, p, pp - 1, r_ + rp}, {r_ - 1, pp, s - 1, walk}};
        } else {
            long tail = p;
            if (options.nil_tail_start == NilTailStart::StartAtZero) tail = 0;
            if (options.nil_tail_start == NilTailStart::StartAtPPrime) tail = pp;
            ranges = {{r_, 0, mbar, r_ + rp + 1}, {r_, mbar + 1, pp - 1, walk}, {r_, pp, p - 1, r_ + rp}, {r_ - 1, tail, s - 1, walk}};
        }
    }
    for (const auto& [l, mult] : fusion_coeffs(alg, i, j))
        for (const auto& range : ranges)
            for (long m = 0; m <= range.m_last; ++m)
                for (long u = range.u_first; u <= range.u_last; ++u) {
                    const long length = range.stride ? (*range.stride - 2 * m) * s : n + t - 1 - 2 * m * s - 2 * u;
                    sink.nil(length, alg.sigma_power(l, u), mult);
                }
}

inline void require_fusion_ready(const AlgebraData& alg) {
    if (!alg.fusion_ready())
        throw Error(ErrorKind::NotFusionReady, "closed-form tensor rules need |q| = s (here |q| = " + std::to_string(alg.q_order()) +
                                                   ", s = " + std::to_string(alg.s()) + ")");
}

}  // namespace detail

/// Decomposition of L (x) R into indecomposables, in canonical labels.
inline LabelMultiset<IndecLabel> tensor_labels(const AlgebraData& alg, const IndecLabel& left, const IndecLabel& right,
                                               const FusionOptions& options = {}) {
    detail::require_fusion_ready(alg);
    const IndecLabel L = canonicalize(alg, left);
    const IndecLabel R = canonicalize(alg, right);
    check_label(alg, L);
    check_label(alg, R);
    detail::SummandSink sink(alg);
    if (L.is_nil() && R.is_nil()) {
        if (L.t >= R.t)
            detail::nil_times_nil(alg, sink, L.t, L.i, R.t, R.i, options);
        else
            detail::nil_times_nil(alg, sink, R.t, R.i, L.t, L.i, options);
    } else if (L.is_nil()) {
        detail::nil_times_eig(alg, sink, L.t, L.i, R.t, R.i, R.beta);
    } else if (R.is_nil()) {
        detail::nil_times_eig(alg, sink, R.t, R.i, L.t, L.i, alg.omega_power_s(R.i) * L.beta);
    } else {
        detail::eig_times_eig(alg, sink, L.t, L.i, L.beta, R.t, R.i, R.beta);
    }
    return sink.take();
}

/// Composition factors with multiplicity.
inline LabelMultiset<SimpleLabel> comp_factors(const AlgebraData& alg, const IndecLabel& label) {
    const IndecLabel L = canonicalize(alg, label);
    check_label(alg, L);
    LabelMultiset<SimpleLabel> out;
    if (L.is_nil()) {
        for (int l = 0; l < L.t; ++l) out[SimpleLabel::torsion(alg.sigma_power(L.i, l))] += 1;
    } else {
        out[SimpleLabel::free(L.i, L.beta)] += L.t;
    }
    return out;
}

/// The simple H-module viewed as a kG-module.
inline std::map<SimpleIndex, long> simple_restriction(const AlgebraData& alg, const SimpleLabel& label) {
    const SimpleLabel S = canonicalize(alg, label);
    std::map<SimpleIndex, long> out;
    if (S.is_torsion()) {
        out[S.i] = 1;
    } else {
        for (int j = 0; j < alg.s(); ++j) out[alg.sigma_power(S.i, j)] += 1;
    }
    return out;
}

/// Product of two simple H-modules in the Grothendieck ring, via their
/// composition factors.
inline LabelMultiset<SimpleLabel> tensor_simples(const AlgebraData& alg, const SimpleLabel& a, const SimpleLabel& b) {
    const SimpleLabel A = canonicalize(alg, a);
    const SimpleLabel B = canonicalize(alg, b);
    auto lift = [](const SimpleLabel& S) {
        return S.is_torsion() ? IndecLabel::nil(1, S.i) : IndecLabel::eig(1, S.i, S.beta);
    };
    LabelMultiset<SimpleLabel> out;
    for (const auto& [label, mult] : tensor_labels(alg, lift(A), lift(B))) add_to(out, comp_factors(alg, label), mult);
    return out;
}

}  // namespace hopfore

#endif
