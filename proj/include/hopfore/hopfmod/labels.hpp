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

#ifndef HOPFORE_HOPFMOD_LABELS_HPP
#define HOPFORE_HOPFMOD_LABELS_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "hopfore/grouprep/algebra.hpp"

namespace hopfore {

/// Isomorphism class of an indecomposable module: Nil is V_t(i), Eig is
/// V_t(i, beta).  Eig labels are meant to hold the orbit representative of i;
/// see canonicalize() in the fusion module.
struct IndecLabel {
    enum class Kind { Nil, Eig };

    Kind kind = Kind::Nil;
    int t = 1;
    SimpleIndex i = 0;
    Cyclotomic beta;  ///< unused for Nil

    static IndecLabel nil(int t, SimpleIndex i) { return {Kind::Nil, t, i, Cyclotomic()}; }
    static IndecLabel eig(int t, SimpleIndex i, Cyclotomic beta) { return {Kind::Eig, t, i, std::move(beta)}; }

    bool is_nil() const noexcept { return kind == Kind::Nil; }

    /// Output order: kind, simple index, length, then beta coefficients.
    friend std::strong_ordering operator<=>(const IndecLabel& a, const IndecLabel& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (auto c = a.t <=> b.t; c != 0) return c;
        if (a.kind == Kind::Nil) return std::strong_ordering::equal;
        return lexicographic_compare(a.beta, b.beta);
    }
    friend bool operator==(const IndecLabel& a, const IndecLabel& b) { return (a <=> b) == 0; }
};

/// Isomorphism class of a simple module: V_i (x acts as zero) or the x-free
/// simple V(i, beta).
struct SimpleLabel {
    enum class Kind { Torsion, Free };

    Kind kind = Kind::Torsion;
    SimpleIndex i = 0;
    Cyclotomic beta;  ///< unused for Torsion

    static SimpleLabel torsion(SimpleIndex i) { return {Kind::Torsion, i, Cyclotomic()}; }
    static SimpleLabel free(SimpleIndex i, Cyclotomic beta) { return {Kind::Free, i, std::move(beta)}; }

    bool is_torsion() const noexcept { return kind == Kind::Torsion; }

    friend std::strong_ordering operator<=>(const SimpleLabel& a, const SimpleLabel& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (a.kind == Kind::Torsion) return std::strong_ordering::equal;
        return lexicographic_compare(a.beta, b.beta);
    }
    friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) { return (a <=> b) == 0; }
};

template <class Label>
using LabelMultiset = std::map<Label, long>;

inline void check_label(const AlgebraData& alg, const IndecLabel& L) {
    if (L.i >= alg.simple_count()) throw Error(ErrorKind::UnknownLabel, "simple index " + std::to_string(L.i) + " out of range");
    if (L.t < 1) throw Error(ErrorKind::InvalidParameter, "length must be positive, got " + std::to_string(L.t));
    if (L.kind == IndecLabel::Kind::Eig) {
        if (L.beta.order() != alg.field_order()) throw Error(ErrorKind::OrderMismatch, "beta lives in a different field");
        if (L.beta.is_zero()) throw Error(ErrorKind::ZeroBeta, "beta = 0: use V[" + std::to_string(L.t * alg.s()) + "](" + alg.name(L.i) + ")");
    }
}

inline void check_label(const AlgebraData& alg, const SimpleLabel& S) {
    if (S.i >= alg.simple_count()) throw Error(ErrorKind::UnknownLabel, "simple index " + std::to_string(S.i) + " out of range");
    if (S.kind == SimpleLabel::Kind::Free) {
        if (S.beta.order() != alg.field_order()) throw Error(ErrorKind::OrderMismatch, "beta lives in a different field");
        if (S.beta.is_zero()) throw Error(ErrorKind::ZeroBeta, "beta = 0 does not name an x-free simple");
    }
}

inline std::size_t label_dim(const AlgebraData& alg, const IndecLabel& L) {
    const std::size_t base = static_cast<std::size_t>(L.t) * alg.dim(L.i);
    return L.is_nil() ? base : base * static_cast<std::size_t>(alg.s());
}

inline std::size_t label_dim(const AlgebraData& alg, const SimpleLabel& S) {
    return S.is_torsion() ? alg.dim(S.i) : alg.dim(S.i) * static_cast<std::size_t>(alg.s());
}

inline std::string format_label(const AlgebraData& alg, const IndecLabel& L) {
    std::string out = "V[" + std::to_string(L.t) + "](" + alg.name(L.i);
    if (!L.is_nil()) out += ";" + L.beta.to_string();
    return out + ")";
}

inline std::string format_label(const AlgebraData& alg, const SimpleLabel& S) {
    std::string out = "V[1](" + alg.name(S.i);
    if (!S.is_torsion()) out += ";" + S.beta.to_string();
    return out + ")";
}

template <class Label>
std::size_t multiset_dim(const AlgebraData& alg, const LabelMultiset<Label>& ms) {
    std::size_t total = 0;
    for (const auto& [label, mult] : ms) total += static_cast<std::size_t>(mult) * label_dim(alg, label);
    return total;
}

template <class Label>
std::string format_multiset(const AlgebraData& alg, const LabelMultiset<Label>& ms) {
    std::string out = "{";
    bool first = true;
    for (const auto& [label, mult] : ms) {
        if (!first) out += ", ";
        first = false;
        if (mult != 1) out += std::to_string(mult) + "*";
        out += format_label(alg, label);
    }
    return out + "}";
}

template <class Label>
void add_to(LabelMultiset<Label>& into, const LabelMultiset<Label>& from, long factor = 1) {
    for (const auto& [label, mult] : from) {
        long& slot = into[label];
        slot += factor * mult;
        if (slot == 0) into.erase(label);
    }
}

}  // namespace hopfore

#endif
