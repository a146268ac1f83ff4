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
   Exact arithmetic in the cyclotomic field Q(zeta_n), stored as the quotient
   ring Q[y]/(Phi_n(y)).  An element is the list of its coordinates in the
   power basis 1, y, ..., y^(phi(n)-1); because Phi_n is irreducible of degree
   phi(n) that list is unique, so equality is coordinate equality.

   Elements of different orders never mix: every binary operation checks the
   order and throws OrderMismatch instead of embedding.
*/

#ifndef HOPFORE_EXACTNUM_CYCLOTOMIC_HPP
#define HOPFORE_EXACTNUM_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfore/error.hpp"

namespace hopfore {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

// Dense polynomials, lowest degree first, no trailing zeros (zero polynomial = empty).
template <class T>
void trim(std::vector<T>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Quotient and remainder over a field (or exact division over Z when the divisor is monic).
template <class T>
std::pair<std::vector<T>, std::vector<T>> poly_divmod(std::vector<T> num, const std::vector<T>& den) {
    if (den.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    trim(num);
    if (num.size() < den.size()) return {{}, num};
    std::vector<T> quot(num.size() - den.size() + 1, T(0));
    const T& lead = den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        T coeff = num[k + den.size() - 1] / lead;
        quot[k] = coeff;
        if (sgn(coeff) == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= coeff * den[j];
    }
    trim(quot);
    trim(num);
    return {quot, num};
}

inline std::vector<Integer> cyclotomic_polynomial_uncached(int n,
                                                           const std::map<int, std::vector<Integer>>& known) {
    // y^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, Integer(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(poly, known.at(d));
        if (!r.empty()) throw Error(ErrorKind::InternalInconsistency, "cyclotomic division left a remainder");
        poly = std::move(q);
    }
    return poly;
}

}  // namespace detail

/// Per-order data shared by all elements of Q(zeta_n).  Instances live for the
/// whole program and are obtained through CyclotomicField::get.
class CyclotomicField {
   public:
    static const CyclotomicField& get(int order) {
        if (order < 1) throw Error(ErrorKind::InvalidParameter, "cyclotomic order must be positive");
        static std::mutex mutex;
        static std::map<int, std::unique_ptr<CyclotomicField>> fields;
        static std::map<int, std::vector<Integer>> polys;
        std::lock_guard lock(mutex);
        if (auto it = fields.find(order); it != fields.end()) return *it->second;
        for (int d = 1; d <= order; ++d) {
            if (order % d == 0 && !polys.contains(d)) polys.emplace(d, detail::cyclotomic_polynomial_uncached(d, polys));
        }
        auto field = std::unique_ptr<CyclotomicField>(new CyclotomicField(order, polys.at(order)));
        return *fields.emplace(order, std::move(field)).first->second;
    }

    int order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return degree_; }

    /// Coefficients of Phi_n, lowest degree first; monic.
    const std::vector<Integer>& modulus() const noexcept { return modulus_; }

    /// Coordinates of y^k for k in [degree, 2*degree - 2].
    const std::vector<Rational>& high_power(std::size_t k) const { return high_powers_[k - degree_]; }

    /// Coordinates of zeta^k, k taken modulo the order.
    const std::vector<Rational>& root_power(long k) const {
        long r = k % order_;
        if (r < 0) r += order_;
        return roots_[static_cast<std::size_t>(r)];
    }

   private:
    CyclotomicField(int order, std::vector<Integer> modulus)
        : order_(order), degree_(modulus.size() - 1), modulus_(std::move(modulus)) {
        std::vector<Rational> current(degree_, Rational(0));
        current[0] = 1;
        std::size_t limit = std::max<std::size_t>(static_cast<std::size_t>(order_), 2 * degree_ - 1);
        std::vector<std::vector<Rational>> powers;
        for (std::size_t k = 0; k < limit; ++k) {
            powers.push_back(current);
            current = times_y(current);
        }
        roots_.assign(powers.begin(), powers.begin() + order_);
        for (std::size_t k = degree_; k + 1 < 2 * degree_; ++k) high_powers_.push_back(powers[k]);
    }

    std::vector<Rational> times_y(const std::vector<Rational>& v) const {
        std::vector<Rational> out(degree_, Rational(0));
        const Rational top = v[degree_ - 1];
        for (std::size_t i = degree_ - 1; i > 0; --i) out[i] = v[i - 1];
        out[0] = 0;
        if (sgn(top) != 0) {
            for (std::size_t i = 0; i < degree_; ++i) out[i] -= top * Rational(modulus_[i]);
        }
        return out;
    }

    int order_;
    std::size_t degree_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Rational>> high_powers_;
    std::vector<std::vector<Rational>> roots_;
};

class Cyclotomic {
   public:
    /// Zero of Q(zeta_order).
    explicit Cyclotomic(int order = 1) : field_(&CyclotomicField::get(order)), c_(field_->degree(), Rational(0)) {}

    Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { c_[0] = value; }
    Cyclotomic(int order, long value) : Cyclotomic(order) { c_[0] = value; }

    /// zeta_order^k.
    static Cyclotomic zeta(int order, long k = 1) {
        Cyclotomic out(order);
        out.c_ = out.field_->root_power(k);
        return out;
    }

    static Cyclotomic from_coefficients(int order, std::vector<Rational> coeffs) {
        Cyclotomic out(order);
        if (coeffs.size() != out.c_.size())
            throw Error(ErrorKind::ShapeMismatch, "coefficient list length must equal phi(order)");
        out.c_ = std::move(coeffs);
        for (auto& q : out.c_) q.canonicalize();
        return out;
    }

    int order() const noexcept { return field_->order(); }
    const CyclotomicField& field() const noexcept { return *field_; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }

    bool is_rational() const noexcept {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }

    bool is_one() const noexcept { return is_rational() && c_[0] == 1; }

    /// Constant coordinate; meaningful as "the value" only when is_rational().
    const Rational& rational_part() const noexcept { return c_[0]; }

    Cyclotomic operator-() const {
        Cyclotomic out(*this);
        for (auto& q : out.c_) q = -q;
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
        return *this;
    }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        *this = *this * o;
        return *this;
    }

    Cyclotomic& operator/=(const Cyclotomic& o) {
        *this = *this / o;
        return *this;
    }

    /// this += f * g, without building the product as a temporary element when
    /// one factor is rational.
    Cyclotomic& add_product(const Cyclotomic& f, const Cyclotomic& g) {
        check(f);
        check(g);
        if (f.is_rational()) {
            const Rational& r = f.c_[0];
            if (sgn(r) == 0) return *this;
            for (std::size_t i = 0; i < c_.size(); ++i)
                if (sgn(g.c_[i]) != 0) c_[i] += r * g.c_[i];
            return *this;
        }
        if (g.is_rational()) return add_product(g, f);
        return *this += f * g;
    }

    /// this -= f * g.
    Cyclotomic& sub_product(const Cyclotomic& f, const Cyclotomic& g) {
        check(f);
        check(g);
        if (f.is_rational()) {
            const Rational& r = f.c_[0];
            if (sgn(r) == 0) return *this;
            for (std::size_t i = 0; i < c_.size(); ++i)
                if (sgn(g.c_[i]) != 0) c_[i] -= r * g.c_[i];
            return *this;
        }
        if (g.is_rational()) return sub_product(g, f);
        return *this -= f * g;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        if (a.is_rational()) return b.scaled(a.c_[0]);
        if (b.is_rational()) return a.scaled(b.c_[0]);
        const std::size_t d = a.c_.size();
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        Cyclotomic out(a.order());
        for (std::size_t i = 0; i < d; ++i) out.c_[i] = prod[i];
        for (std::size_t k = d; k < prod.size(); ++k) {
            if (sgn(prod[k]) == 0) continue;
            const auto& red = a.field_->high_power(k);
            for (std::size_t i = 0; i < d; ++i)
                if (sgn(red[i]) != 0) out.c_[i] += prod[k] * red[i];
        }
        return out;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic scaled(const Rational& r) const {
        Cyclotomic out(order());
        if (sgn(r) == 0) return out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) out.c_[i] = c_[i] * r;
        return out;
    }

    /// Multiplicative inverse through the extended Euclidean algorithm for the
    /// residue polynomial against Phi_n.
    Cyclotomic inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        if (is_rational()) return Cyclotomic(order(), Rational(1) / c_[0]);
        std::vector<Rational> r0;
        for (const auto& z : field_->modulus()) r0.emplace_back(z);
        std::vector<Rational> r1 = c_;
        detail::trim(r1);
        // Invariant: r_k = s_k * a (mod Phi_n); only the a-coefficient is tracked.
        std::vector<Rational> s0, s1{Rational(1)};
        while (r1.size() > 1) {
            auto [q, rem] = detail::poly_divmod(r0, r1);
            auto qs = detail::poly_mul(q, s1);
            std::vector<Rational> s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw Error(ErrorKind::InternalInconsistency, "element shares a factor with Phi_n");
        const Rational scale = Rational(1) / r1[0];
        auto reduced = detail::poly_divmod(s1, modulus_rational()).second;
        Cyclotomic out(order());
        for (std::size_t i = 0; i < reduced.size(); ++i) out.c_[i] = reduced[i] * scale;
        return out;
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic result(order(), 1L);
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    /// Total order on coordinate lists; used only to make label sets deterministic.
    friend std::strong_ordering lexicographic_compare(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order() != b.order()) return a.order() <=> b.order();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    /// Literal form accepted by parse_cyclotomic, e.g. "-1/3+2*w^2".
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& q = c_[k];
            if (sgn(q) == 0) continue;
            Rational mag = abs(q);
            if (!out.empty())
                out += sgn(q) < 0 ? "-" : "+";
            else if (sgn(q) < 0)
                out += "-";
            std::string mono = k == 0 ? "" : (k == 1 ? "w" : "w^" + std::to_string(k));
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

   private:
    void check(const Cyclotomic& o) const {
        if (field_ != o.field_)
            throw Error(ErrorKind::OrderMismatch, "Q(zeta_" + std::to_string(order()) + ") vs Q(zeta_" +
                                                      std::to_string(o.order()) + ")");
    }

    std::vector<Rational> modulus_rational() const {
        std::vector<Rational> m;
        for (const auto& z : field_->modulus()) m.emplace_back(z);
        return m;
    }

    const CyclotomicField* field_;
    std::vector<Rational> c_;
};

namespace detail {

class CyclotomicParser {
   public:
    CyclotomicParser(std::string_view src, int order) : src_(src), order_(order) {}

    Cyclotomic parse() {
        Cyclotomic v = sum();
        skip();
        if (pos_ != src_.size()) fail("unexpected character");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError,
                    msg + " at position " + std::to_string(pos_) + " in cyclotomic literal '" + std::string(src_) + "'");
    }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(src_.substr(start, pos_ - start));
    }

    Cyclotomic sum() {
        Cyclotomic acc(order_);
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Cyclotomic first = term();
        acc = negate ? -first : first;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Cyclotomic term() {
        Cyclotomic acc = power();
        while (true) {
            if (eat('*')) {
                acc *= power();
            } else if (eat('/')) {
                Cyclotomic d = power();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else {
                break;
            }
        }
        return acc;
    }

    Cyclotomic power() {
        Cyclotomic base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = std::stol(digits());
            if (neg && base.is_zero()) fail("zero to a negative power");
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    Cyclotomic atom() {
        skip();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == 'w') {
            ++pos_;
            return Cyclotomic::zeta(order_, 1);
        }
        if (c == '(') {
            ++pos_;
            Cyclotomic v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic(order_, Rational(Integer(digits())));
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    int order_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses literals such as "2", "-1/3", "w^2", "1+w", "(1-w)^-1" in Q(zeta_order).
inline Cyclotomic parse_cyclotomic(std::string_view src, int order) {
    return detail::CyclotomicParser(src, order).parse();
}

}  // namespace hopfore

#endif
