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
   Polynomials in x = [V_1] with coefficients in the group ring of the four
   linear characters {eps, lam, chi, lamchi} (a Klein four-group), and the
   conversions between them and the simple-class basis of the Grothendieck
   ring of kD_n.  Also the closed forms for [V_l], x^l, chi x and x^m that the
   presentation checks compare against.
*/

#ifndef HOPFORE_GREENRING_XBASIS_HPP
#define HOPFORE_GREENRING_XBASIS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfore/greenring/ring.hpp"

namespace hopfore {

/// Element of Z[K4]; index 0 eps, 1 lam, 2 chi, 3 lamchi, product = xor.
using K4Coeff = std::array<long, 4>;

inline const std::array<const char*, 4>& k4_names() {
    static const std::array<const char*, 4> names = {"eps", "lam", "chi", "lamchi"};
    return names;
}

class XPoly {
   public:
    XPoly() = default;

    static XPoly constant(const K4Coeff& c) {
        XPoly p;
        p.set(0, c);
        return p;
    }
    static XPoly integer(long n) { return constant({n, 0, 0, 0}); }
    static XPoly character(int k, long n = 1) {
        K4Coeff c{};
        c[k] = n;
        return constant(c);
    }
    static XPoly monomial(std::size_t degree, long n = 1) {
        XPoly p;
        p.set(degree, {n, 0, 0, 0});
        return p;
    }

    std::size_t size() const noexcept { return c_.size(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    K4Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K4Coeff{}; }

    void set(std::size_t k, const K4Coeff& value) {
        if (k >= c_.size()) c_.resize(k + 1, K4Coeff{});
        c_[k] = value;
        trim();
    }

    XPoly& operator+=(const XPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K4Coeff{});
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            for (int g = 0; g < 4; ++g) c_[k][g] = detail::checked_add(c_[k][g], o.c_[k][g]);
        trim();
        return *this;
    }
    XPoly& operator-=(const XPoly& o) { return *this += -1 * o; }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

    friend XPoly operator*(long k, XPoly p) {
        for (auto& c : p.c_)
            for (auto& v : c) v = detail::checked_mul(k, v);
        p.trim();
        return p;
    }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        XPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, K4Coeff{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                for (int g = 0; g < 4; ++g)
                    for (int h = 0; h < 4; ++h) {
                        long& slot = out.c_[i + j][g ^ h];
                        slot = detail::checked_add(slot, detail::checked_mul(a.c_[i][g], b.c_[j][h]));
                    }
        out.trim();
        return out;
    }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

    /// Highest degree first, e.g. "x^3 - 3*x + (chi + lamchi)".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const K4Coeff& c = c_[k];
            int nonzero = 0, only = 0;
            for (int g = 0; g < 4; ++g)
                if (c[g] != 0) ++nonzero, only = g;
            if (nonzero == 0) continue;
            const std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
            if (nonzero == 1) {
                const long v = c[only];
                const long mag = v < 0 ? -v : v;
                out += first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
                std::string body;
                if (mag != 1) body = std::to_string(mag);
                if (only != 0) body += (body.empty() ? "" : "*") + std::string(k4_names()[only]);
                if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
                if (body.empty()) body = "1";
                out += body;
            } else {
                bool all_negative = true;
                for (int g = 0; g < 4; ++g)
                    if (c[g] > 0) all_negative = false;
                const long sign = all_negative ? -1 : 1;
                out += first ? (all_negative ? "-" : "") : (all_negative ? " - " : " + ");
                std::string inner;
                for (int g = 0; g < 4; ++g) {
                    if (c[g] == 0) continue;
                    const long v = sign * c[g];
                    const long mag = v < 0 ? -v : v;
                    inner += inner.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
                    const std::string name = g == 0 ? "1" : k4_names()[g];
                    inner += mag == 1 ? name : std::to_string(mag) + (g == 0 ? "" : "*" + name);
                }
                out += "(" + inner + ")" + (mono.empty() ? "" : "*" + mono);
            }
            first = false;
        }
        return out;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == K4Coeff{}) c_.pop_back();
    }

    std::vector<K4Coeff> c_;
};

namespace detail {

inline long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_slong_p()) throw Error(ErrorKind::Overflow, "binomial coefficient too large");
    return b.get_si();
}

/// num / den * binom, asserting the result is an integer.
inline long integral_ratio(long num, long den, long binom) {
    const Integer prod = Integer(num) * binom;
    if (den == 0 || prod % den != 0)
        throw Error(ErrorKind::InternalInconsistency,
                    "closed-form coefficient " + std::to_string(num) + "/" + std::to_string(den) + "*" + std::to_string(binom) + " is not an integer");
    return Integer(prod / den).get_si();
}

inline void require_dihedral(const AlgebraData& alg) {
    if (!alg.dihedral_m()) throw Error(ErrorKind::UnsupportedLabel, "x-basis conversions need the dihedral algebra");
}

}  // namespace detail

/// Simple index of the linear character k (0 eps, 1 lam, 2 chi, 3 lamchi).
inline SimpleIndex k4_simple(const AlgebraData& alg, int k) {
    detail::require_dihedral(alg);
    return *alg.find(k4_names()[k]);
}

/// Index of the two-dimensional simple V_l.
inline SimpleIndex two_dim_simple(const AlgebraData& alg, int l) {
    detail::require_dihedral(alg);
    auto i = alg.find(std::to_string(l));
    if (!i) throw Error(ErrorKind::UnknownLabel, "no simple V_" + std::to_string(l));
    return *i;
}

/// [V_l], 1 <= l <= m-1, as a polynomial in x.
inline XPoly two_dim_class_in_x(int l) {
    XPoly out;
    if (l % 2 == 1) {
        const long r = (l + 1) / 2;
        for (long i = 0; i <= r - 1; ++i) {
            const long c = detail::integral_ratio(2 * r - 1, 2 * r - 1 - 2 * i, detail::binomial(2 * r - 2 - i, i));
            out += XPoly::monomial(static_cast<std::size_t>(2 * r - 1 - 2 * i), i % 2 ? -c : c);
        }
    } else {
        const long r = l / 2;
        for (long i = 0; i <= r - 1; ++i) {
            const long c = detail::integral_ratio(2 * r, 2 * r - i, detail::binomial(2 * r - i, i));
            out += XPoly::monomial(static_cast<std::size_t>(2 * r - 2 * i), i % 2 ? -c : c);
        }
        const long sign = r % 2 ? -1 : 1;
        out += XPoly::constant({sign, sign, 0, 0});
    }
    return out;
}

/// The polynomial equal to chi x.
inline XPoly chi_x_poly(int m) {
    XPoly out;
    for (long i = 0; i <= (m - 3) / 2; ++i) {
        const long c = detail::integral_ratio(m - 1, m - 1 - i, detail::binomial(m - 1 - i, i));
        out += XPoly::monomial(static_cast<std::size_t>(m - 1 - 2 * i), i % 2 ? -c : c);
    }
    const long sign = ((m - 1) / 2) % 2 ? -1 : 1;
    return out + XPoly::constant({sign, sign, 0, 0});
}

/// The polynomial equal to x^m.
inline XPoly x_power_m_poly(int m) {
    XPoly out;
    for (long i = 1; i <= (m - 1) / 2; ++i) {
        const long c = detail::integral_ratio(m, m - 2 * i, detail::binomial(m - 1 - i, i));
        out += XPoly::monomial(static_cast<std::size_t>(m - 2 * i), (i - 1) % 2 ? -c : c);
    }
    return out + XPoly::constant({0, 0, 1, 1});
}

/// x^l, 1 <= l <= m-1, as the binomial combination of simple classes.
inline GrothElement x_power_binomial(const AlgebraPtr& alg, int l) {
    GrothElement out(alg);
    if (l % 2 == 1) {
        const long r = (l + 1) / 2;
        for (long j = 1; j <= r; ++j)
            out.add_term(SimpleLabel::torsion(two_dim_simple(*alg, static_cast<int>(2 * j - 1))), detail::binomial(2 * r - 1, r - j));
    } else {
        const long r = l / 2;
        const long c = detail::binomial(2 * r - 1, r - 1);
        out.add_term(SimpleLabel::torsion(k4_simple(*alg, 0)), c);
        out.add_term(SimpleLabel::torsion(k4_simple(*alg, 1)), c);
        for (long j = 1; j <= r; ++j)
            out.add_term(SimpleLabel::torsion(two_dim_simple(*alg, static_cast<int>(2 * j))), detail::binomial(2 * r, r - j));
    }
    return out;
}

/// Evaluates a polynomial in x = [V_1] in any ring whose elements can be
/// built from simple classes.
template <class Label>
RingElement<Label> evaluate_x_poly(const AlgebraPtr& alg, const XPoly& p) {
    detail::require_dihedral(*alg);
    using E = RingElement<Label>;
    const E x = E::simple(alg, two_dim_simple(*alg, 1));
    E out(alg), power = E::one(alg);
    for (std::size_t k = 0; k < p.size(); ++k) {
        const K4Coeff c = p.coeff(k);
        E coeff(alg);
        for (int g = 0; g < 4; ++g) coeff += c[g] * E::simple(alg, k4_simple(*alg, g));
        out += coeff * power;
        if (k + 1 < p.size()) power = power * x;
    }
    return out;
}

inline GrothElement x_basis_to_groth(const AlgebraPtr& alg, const XPoly& p) { return evaluate_x_poly<SimpleLabel>(alg, p); }

namespace detail {

/// Matrix (over Q) whose columns are the coordinates of the elements on the
/// given labels; empty if some element has support outside them.
template <class Label>
std::optional<Matrix> coordinate_matrix(const std::vector<RingElement<Label>>& elems, const std::vector<Label>& index) {
    Matrix out(1, index.size(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c) {
        std::size_t seen = 0;
        for (std::size_t r = 0; r < index.size(); ++r) {
            const long v = elems[c].coefficient(index[r]);
            if (v != 0) ++seen;
            out(r, c) = Cyclotomic(1, v);
        }
        if (seen != elems[c].terms().size()) return std::nullopt;
    }
    return out;
}

inline bool is_integral(const Matrix& m) {
    for (const auto& e : m.entries())
        if (e.rational_part().get_den() != 1) return false;
    return true;
}

}  // namespace detail

/// True when elems form a Z-basis of the free abelian group on index.
template <class Label>
bool is_z_basis(const std::vector<RingElement<Label>>& elems, const std::vector<Label>& index) {
    if (elems.size() != index.size()) return false;
    const auto a = detail::coordinate_matrix(elems, index);
    if (!a) return false;
    if (linalg::rank(*a) != index.size()) return false;
    return detail::is_integral(linalg::solve(*a, Matrix::identity(1, index.size())));
}

/// Integer coordinates of target in the Z-basis elems (over index).
template <class Label>
std::optional<std::vector<long>> z_coordinates(const std::vector<RingElement<Label>>& elems, const std::vector<Label>& index,
                                               const RingElement<Label>& target) {
    const auto a = detail::coordinate_matrix(elems, index);
    const auto b = detail::coordinate_matrix(std::vector<RingElement<Label>>{target}, index);
    if (!a || !b) return std::nullopt;
    Matrix sol;
    try {
        sol = linalg::solve(*a, *b);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (!(*a * sol == *b) || !detail::is_integral(sol)) return std::nullopt;
    std::vector<long> out;
    for (std::size_t k = 0; k < sol.rows(); ++k) out.push_back(sol(k, 0).rational_part().get_num().get_si());
    return out;
}

/// Simple kD_n classes in index order.
inline std::vector<SimpleLabel> group_simple_labels(const AlgebraData& alg) {
    std::vector<SimpleLabel> out;
    for (SimpleIndex i = 0; i < alg.simple_count(); ++i) out.push_back(SimpleLabel::torsion(i));
    return out;
}

/// {1, lam, chi, lamchi, x, ..., x^{m-1}} in the Grothendieck ring.
inline std::vector<GrothElement> x1_basis(const AlgebraPtr& alg) {
    detail::require_dihedral(*alg);
    std::vector<GrothElement> out;
    for (int g = 0; g < 4; ++g) out.push_back(GrothElement::simple(alg, k4_simple(*alg, g)));
    const GrothElement x = GrothElement::simple(alg, two_dim_simple(*alg, 1));
    GrothElement p = x;
    for (int l = 1; l < *alg->dihedral_m(); ++l) {
        out.push_back(p);
        p = p * x;
    }
    return out;
}

/// {1, lam, chi, lamchi, x^l, chi x^l : 1 <= l <= (m-1)/2}.
inline std::vector<GrothElement> x2_basis(const AlgebraPtr& alg) {
    detail::require_dihedral(*alg);
    std::vector<GrothElement> out;
    for (int g = 0; g < 4; ++g) out.push_back(GrothElement::simple(alg, k4_simple(*alg, g)));
    const GrothElement x = GrothElement::simple(alg, two_dim_simple(*alg, 1));
    const GrothElement chi = GrothElement::simple(alg, k4_simple(*alg, 2));
    GrothElement p = x;
    for (int l = 1; l <= (*alg->dihedral_m() - 1) / 2; ++l) {
        out.push_back(p);
        out.push_back(chi * p);
        p = p * x;
    }
    return out;
}

/// Coordinates on {1, lam, chi, lamchi, x, ..., x^{m-1}} as a polynomial.
inline XPoly groth_to_x_basis(const GrothElement& a) {
    const AlgebraPtr& alg = a.algebra();
    if (!alg) return XPoly{};
    detail::require_dihedral(*alg);
    for (const auto& [label, c] : a.terms())
        if (!label.is_torsion()) throw Error(ErrorKind::UnsupportedLabel, "x-free simple " + format_label(*alg, label) + " has no x-basis form");
    const auto coords = z_coordinates(x1_basis(alg), group_simple_labels(*alg), a);
    if (!coords) throw Error(ErrorKind::InternalInconsistency, "element has no integer coordinates on the x-basis");
    XPoly out = XPoly::constant({(*coords)[0], (*coords)[1], (*coords)[2], (*coords)[3]});
    for (std::size_t k = 4; k < coords->size(); ++k) out += XPoly::monomial(k - 3, (*coords)[k]);
    return out;
}

/// Coordinates on {1, lam, chi, lamchi, x^l, chi x^l} as
/// (constant K4 part, [(coeff of x^l, coeff of chi x^l)]).
inline std::pair<K4Coeff, std::vector<std::pair<long, long>>> groth_to_x2_basis(const GrothElement& a) {
    const AlgebraPtr& alg = a.algebra();
    detail::require_dihedral(*alg);
    for (const auto& [label, c] : a.terms())
        if (!label.is_torsion()) throw Error(ErrorKind::UnsupportedLabel, "x-free simple " + format_label(*alg, label) + " has no x-basis form");
    const auto coords = z_coordinates(x2_basis(alg), group_simple_labels(*alg), a);
    if (!coords) throw Error(ErrorKind::InternalInconsistency, "element has no integer coordinates on the second x-basis");
    std::pair<K4Coeff, std::vector<std::pair<long, long>>> out;
    out.first = {(*coords)[0], (*coords)[1], (*coords)[2], (*coords)[3]};
    for (std::size_t k = 4; k + 1 < coords->size(); k += 2) out.second.emplace_back((*coords)[k], (*coords)[k + 1]);
    return out;
}

inline std::string x2_to_string(const std::pair<K4Coeff, std::vector<std::pair<long, long>>>& c) {
    XPoly p = XPoly::constant(c.first);
    for (std::size_t l = 0; l < c.second.size(); ++l) {
        p += XPoly::monomial(l + 1, c.second[l].first);
        p += XPoly::character(2, c.second[l].second) * XPoly::monomial(l + 1);
    }
    return p.to_string();
}

}  // namespace hopfore

#endif
