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
   Integer combinations of isomorphism classes.  RingElement<IndecLabel> is the
   Green ring (classes of indecomposables, product = tensor product);
   RingElement<SimpleLabel> is the Grothendieck ring (classes of simples,
   product = composition factors of the tensor product).
*/

#ifndef HOPFORE_GREENRING_RING_HPP
#define HOPFORE_GREENRING_RING_HPP

#include <string>
#include <type_traits>

#include "hopfore/fusion/fusion.hpp"

namespace hopfore {

namespace detail {

inline long checked_add(long a, long b) {
    long out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "ring coefficient overflow");
    return out;
}

inline long checked_mul(long a, long b) {
    long out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "ring coefficient overflow");
    return out;
}

inline LabelMultiset<IndecLabel> label_product(const AlgebraData& alg, const IndecLabel& a, const IndecLabel& b) {
    return tensor_labels(alg, a, b);
}

inline LabelMultiset<SimpleLabel> label_product(const AlgebraData& alg, const SimpleLabel& a, const SimpleLabel& b) {
    return tensor_simples(alg, a, b);
}

inline IndecLabel unit_label(const AlgebraData& alg, const IndecLabel*) { return IndecLabel::nil(1, alg.trivial()); }
inline SimpleLabel unit_label(const AlgebraData& alg, const SimpleLabel*) { return SimpleLabel::torsion(alg.trivial()); }

inline bool is_plain_simple(const IndecLabel& L) { return L.is_nil() && L.t == 1; }
inline bool is_plain_simple(const SimpleLabel& S) { return S.is_torsion(); }

}  // namespace detail

template <class Label>
class RingElement {
   public:
    RingElement() = default;
    explicit RingElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static RingElement basis(AlgebraPtr alg, const Label& label) {
        RingElement out(alg);
        out.add_term(canonicalize(*alg, label), 1);
        return out;
    }
    static RingElement integer(AlgebraPtr alg, long n) {
        const Label* tag = nullptr;
        RingElement out(alg);
        out.add_term(detail::unit_label(*alg, tag), n);
        return out;
    }
    static RingElement one(AlgebraPtr alg) { return integer(std::move(alg), 1); }
    /// The class of the simple kG-module with index i (x acting as zero).
    static RingElement simple(AlgebraPtr alg, SimpleIndex i) {
        if constexpr (std::is_same_v<Label, IndecLabel>)
            return basis(alg, IndecLabel::nil(1, i));
        else
            return basis(alg, SimpleLabel::torsion(i));
    }

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    const LabelMultiset<Label>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    long coefficient(const Label& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Label& label, long coeff) {
        if (coeff == 0) return;
        long& slot = terms_[label];
        slot = detail::checked_add(slot, coeff);
        if (slot == 0) terms_.erase(label);
    }

    RingElement& operator+=(const RingElement& o) {
        adopt(o);
        for (const auto& [label, c] : o.terms_) add_term(label, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        adopt(o);
        for (const auto& [label, c] : o.terms_) add_term(label, detail::checked_mul(-1, c));
        return *this;
    }
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator-(const RingElement& a) { return RingElement(a.alg_) - a; }

    friend RingElement operator*(long k, const RingElement& a) {
        RingElement out(a.alg_);
        for (const auto& [label, c] : a.terms_) out.add_term(label, detail::checked_mul(k, c));
        return out;
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        const AlgebraPtr& alg = a.alg_ ? a.alg_ : b.alg_;
        RingElement out(alg);
        if (a.is_zero() || b.is_zero()) return out;
        require_same(a, b);
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [lb, cb] : b.terms_) {
                const long c = detail::checked_mul(ca, cb);
                for (const auto& [l, mult] : detail::label_product(*alg, la, lb)) out.add_term(l, detail::checked_mul(c, mult));
            }
        return out;
    }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    RingElement pow(unsigned long e) const {
        RingElement out = one(alg_);
        for (unsigned long k = 0; k < e; ++k) out = out * *this;
        return out;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

    /// Terms in label order, e.g. "1 + lam - 2*V[2](eps)".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [label, c] : terms_) {
            const long mag = c < 0 ? -c : c;
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;
            if (mag != 1) out += std::to_string(mag) + "*";
            out += term_name(label);
        }
        return out;
    }

   private:
    std::string term_name(const Label& label) const {
        const AlgebraData& alg = *alg_;
        if (alg.dihedral_m() && detail::is_plain_simple(label) && alg.dim(label.i) == 1)
            return label.i == alg.trivial() ? "1" : alg.name(label.i);
        return format_label(alg, label);
    }

    static void require_same(const RingElement& a, const RingElement& b) {
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_ && !(*a.alg_ == *b.alg_))
            throw Error(ErrorKind::RingMismatch, "ring elements over different algebras");
    }

    void adopt(const RingElement& o) {
        require_same(*this, o);
        if (!alg_) alg_ = o.alg_;
    }

    AlgebraPtr alg_;
    LabelMultiset<Label> terms_;
};

using GreenElement = RingElement<IndecLabel>;
using GrothElement = RingElement<SimpleLabel>;

template <class Label>
RingElement<Label> ring_mul(const RingElement<Label>& a, const RingElement<Label>& b) {
    return a * b;
}

/// The canonical map from the Green ring onto the Grothendieck ring.
inline GrothElement to_groth(const GreenElement& a) {
    GrothElement out(a.algebra());
    for (const auto& [label, c] : a.terms())
        for (const auto& [simple, mult] : comp_factors(*a.algebra(), label)) out.add_term(simple, detail::checked_mul(c, mult));
    return out;
}

}  // namespace hopfore

#endif
