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
   The Hopf-Ore datum (G, a, chi) together with everything derived from the
   simple kG-modules: the permutation sigma with V_chi (x) V_i = V_sigma(i),
   the central scalars omega_i, the fusion coefficients N_{i,j}^l and the
   sigma-orbits with their representatives.

   Simple modules are referred to by their position in simples(); that order
   is also the label order used for sorting and for picking orbit
   representatives (least position wins).
*/

#ifndef HOPFORE_GROUPREP_ALGEBRA_HPP
#define HOPFORE_GROUPREP_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hopfore/grouprep/group.hpp"

namespace hopfore {

using SimpleIndex = std::size_t;

struct SimpleRep {
    std::string id;
    std::size_t dim = 0;
    std::vector<Matrix> gen_matrices;
    std::vector<Cyclotomic> character;  ///< trace per group element
};

/// Smallest e > 0 with c^e = 1, if c is a root of unity in its field.
inline std::optional<int> root_of_unity_order(const Cyclotomic& c) {
    if (c.is_zero()) return std::nullopt;
    Cyclotomic p = c;
    const int bound = 2 * c.order();
    for (int e = 1; e <= bound; ++e) {
        if (p.is_one()) return e;
        p *= c;
    }
    return std::nullopt;
}

class AlgebraData {
   public:
    enum class Mode { Dihedral, Custom };

    const GroupData& group() const noexcept { return group_; }
    int field_order() const noexcept { return field_order_; }
    std::size_t central() const noexcept { return central_; }
    const std::vector<Cyclotomic>& chi() const noexcept { return chi_; }
    const Cyclotomic& q() const noexcept { return q_; }
    int s() const noexcept { return s_; }
    int q_order() const noexcept { return q_order_; }
    bool fusion_ready() const noexcept { return q_order_ == s_; }
    Mode mode() const noexcept { return mode_; }
    /// m for kD_{2m}(chi, a^m, 0); empty in custom mode.
    std::optional<int> dihedral_m() const noexcept { return dihedral_m_; }

    const std::vector<SimpleRep>& simples() const noexcept { return simples_; }
    std::size_t simple_count() const noexcept { return simples_.size(); }
    const SimpleRep& simple(SimpleIndex i) const { return simples_.at(i); }
    const std::string& name(SimpleIndex i) const { return simples_.at(i).id; }
    std::size_t dim(SimpleIndex i) const { return simples_.at(i).dim; }
    SimpleIndex trivial() const noexcept { return trivial_; }

    std::optional<SimpleIndex> find(std::string_view id) const {
        for (SimpleIndex i = 0; i < simples_.size(); ++i)
            if (simples_[i].id == id) return i;
        return std::nullopt;
    }

    SimpleIndex sigma(SimpleIndex i) const { return sigma_.at(i); }

    /// sigma^k(i) for any integer k.
    SimpleIndex sigma_power(SimpleIndex i, long k) const {
        long r = k % s_;
        if (r < 0) r += s_;
        for (long j = 0; j < r; ++j) i = sigma_[i];
        return i;
    }

    const Cyclotomic& omega(SimpleIndex i) const { return omega_.at(i); }
    const Cyclotomic& omega_power_s(SimpleIndex i) const { return omega_s_.at(i); }

    /// N_{i,j}^l as a dense vector over l.
    const std::vector<long>& fusion_row(SimpleIndex i, SimpleIndex j) const { return fusion_.at(i).at(j); }
    long fusion(SimpleIndex i, SimpleIndex j, SimpleIndex l) const { return fusion_.at(i).at(j).at(l); }

    SimpleIndex representative(SimpleIndex i) const { return rep_.at(i); }
    /// Orbit representatives, ascending.
    const std::vector<SimpleIndex>& representatives() const noexcept { return reps_; }
    std::vector<SimpleIndex> orbit(SimpleIndex i) const {
        std::vector<SimpleIndex> out;
        for (SimpleIndex j = 0; j < simples_.size(); ++j)
            if (rep_[j] == rep_[i]) out.push_back(j);
        return out;
    }

    /// (1/|G|) sum_g f(g) h(g^-1)
    Cyclotomic inner_product(const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& h) const {
        Cyclotomic acc(field_order_);
        for (std::size_t g = 0; g < group_.size(); ++g) acc.add_product(f[g], h[group_.inverse(g)]);
        return acc.scaled(Rational(1, static_cast<long>(group_.size())));
    }

    /// Equality of the mathematical content; the construction mode is ignored.
    friend bool operator==(const AlgebraData& a, const AlgebraData& b) {
        if (!(a.group_ == b.group_) || a.field_order_ != b.field_order_ || a.central_ != b.central_) return false;
        if (a.chi_ != b.chi_ || a.simples_.size() != b.simples_.size()) return false;
        for (std::size_t i = 0; i < a.simples_.size(); ++i) {
            const auto& x = a.simples_[i];
            const auto& y = b.simples_[i];
            if (x.id != y.id || x.dim != y.dim || x.gen_matrices != y.gen_matrices || x.character != y.character) return false;
        }
        return a.q_ == b.q_ && a.s_ == b.s_ && a.q_order_ == b.q_order_ && a.sigma_ == b.sigma_ && a.omega_ == b.omega_ &&
               a.fusion_ == b.fusion_ && a.rep_ == b.rep_;
    }

   private:
    friend AlgebraData custom_algebra(GroupData group, std::vector<SimpleRep> simples, std::size_t central,
                                      std::vector<Cyclotomic> chi);
    friend AlgebraData dihedral_algebra(int m);

    explicit AlgebraData(GroupData group) : group_(std::move(group)) {}

    GroupData group_;
    int field_order_ = 1;
    std::size_t central_ = 0;
    std::vector<Cyclotomic> chi_;
    Cyclotomic q_;
    int s_ = 1;
    int q_order_ = 1;
    Mode mode_ = Mode::Custom;
    std::optional<int> dihedral_m_;
    std::vector<SimpleRep> simples_;
    SimpleIndex trivial_ = 0;
    std::vector<SimpleIndex> sigma_;
    std::vector<Cyclotomic> omega_;
    std::vector<Cyclotomic> omega_s_;
    std::vector<std::vector<std::vector<long>>> fusion_;
    std::vector<SimpleIndex> rep_;
    std::vector<SimpleIndex> reps_;
};

namespace detail {

inline long exact_nonnegative_integer(const Cyclotomic& c, const std::string& what) {
    if (!c.is_rational() || c.rational_part().get_den() != 1 || sgn(c.rational_part()) < 0)
        throw Error(ErrorKind::InvalidParameter, what + " is not a nonnegative integer: " + c.to_string());
    return c.rational_part().get_num().get_si();
}

}  // namespace detail

/// Builds the Hopf-Ore datum from caller-supplied simple modules.  Characters
/// are recomputed from the matrices; the list must be complete and irreducible.
inline AlgebraData custom_algebra(GroupData group, std::vector<SimpleRep> simples, std::size_t central,
                                  std::vector<Cyclotomic> chi) {
    if (simples.empty()) throw Error(ErrorKind::IncompleteSimpleList, "no simple modules supplied");
    AlgebraData alg(std::move(group));
    const GroupData& g = alg.group_;
    const std::size_t n = g.size();
    if (simples.front().gen_matrices.empty()) throw Error(ErrorKind::InvalidParameter, "simple without generator matrices");
    const int order = simples.front().gen_matrices.front().order();
    alg.field_order_ = order;

    if (chi.size() != n) throw Error(ErrorKind::InvalidParameter, "chi needs one value per group element");
    for (std::size_t x = 0; x < n; ++x) {
        if (chi[x].order() != order) throw Error(ErrorKind::OrderMismatch, "chi lives in a different field");
        for (std::size_t h : g.generators())
            if (!(chi[x] * chi[h] == chi[g.mul(x, h)])) throw Error(ErrorKind::InvalidParameter, "chi is not a linear character");
    }
    if (!chi[g.identity()].is_one()) throw Error(ErrorKind::InvalidParameter, "chi(1) must be 1");
    if (central >= n) throw Error(ErrorKind::InvalidParameter, "central element out of range");
    if (!g.is_central(central)) throw Error(ErrorKind::NotCentral, "element " + g.name(central) + " is not central");
    if (chi[central].is_one()) throw Error(ErrorKind::TrivialQ, "chi(a) = 1");
    alg.central_ = central;
    alg.chi_ = std::move(chi);
    alg.q_ = alg.chi_[central];

    int s = 1;
    for (std::size_t h : g.generators()) {
        auto e = root_of_unity_order(alg.chi_[h]);
        if (!e) throw Error(ErrorKind::InvalidParameter, "chi takes a value that is not a root of unity");
        s = std::lcm(s, *e);
    }
    alg.s_ = s;
    alg.q_order_ = *root_of_unity_order(alg.q_);

    std::size_t dim_square_sum = 0;
    std::vector<std::vector<Matrix>> expanded;
    for (auto& rep : simples) {
        if (rep.gen_matrices.empty()) throw Error(ErrorKind::InvalidParameter, "simple '" + rep.id + "' has no matrices");
        rep.dim = rep.gen_matrices.front().rows();
        for (const auto& m : rep.gen_matrices)
            if (m.order() != order) throw Error(ErrorKind::OrderMismatch, "simple '" + rep.id + "' lives in a different field");
        auto all = expand_representation(g, rep.gen_matrices);
        if (!is_homomorphism(g, all, rep.gen_matrices))
            throw Error(ErrorKind::InvalidParameter, "matrices of '" + rep.id + "' violate the group relations");
        rep.character.clear();
        for (const auto& m : all) rep.character.push_back(m.trace());
        dim_square_sum += rep.dim * rep.dim;
        expanded.push_back(std::move(all));
    }
    for (std::size_t i = 0; i < simples.size(); ++i) {
        if (!alg.inner_product(simples[i].character, simples[i].character).is_one())
            throw Error(ErrorKind::NotIrreducible, "'" + simples[i].id + "' is not irreducible");
        for (std::size_t j = 0; j < i; ++j) {
            if (simples[i].id == simples[j].id) throw Error(ErrorKind::InvalidParameter, "duplicate label '" + simples[i].id + "'");
            if (!alg.inner_product(simples[i].character, simples[j].character).is_zero())
                throw Error(ErrorKind::InvalidParameter, "'" + simples[i].id + "' and '" + simples[j].id + "' are isomorphic");
        }
    }
    if (dim_square_sum != n) throw Error(ErrorKind::IncompleteSimpleList, "sum of squared dimensions differs from |G|");
    alg.simples_ = std::move(simples);
    const std::size_t count = alg.simples_.size();

    alg.trivial_ = count;
    for (SimpleIndex i = 0; i < count; ++i) {
        const auto& ch = alg.simples_[i].character;
        bool trivial = alg.simples_[i].dim == 1;
        for (std::size_t x = 0; x < n && trivial; ++x) trivial = ch[x].is_one();
        if (trivial) alg.trivial_ = i;
    }

    alg.fusion_.assign(count, std::vector<std::vector<long>>(count, std::vector<long>(count, 0)));
    for (SimpleIndex i = 0; i < count; ++i)
        for (SimpleIndex j = 0; j < count; ++j) {
            std::vector<Cyclotomic> prod;
            for (std::size_t x = 0; x < n; ++x) prod.push_back(alg.simples_[i].character[x] * alg.simples_[j].character[x]);
            for (SimpleIndex l = 0; l < count; ++l)
                alg.fusion_[i][j][l] = detail::exact_nonnegative_integer(alg.inner_product(prod, alg.simples_[l].character),
                                                                         "fusion coefficient");
        }

    // sigma(i): the unique l with V_chi (x) V_i = V_l.
    for (SimpleIndex i = 0; i < count; ++i) {
        std::vector<Cyclotomic> twisted;
        for (std::size_t x = 0; x < n; ++x) twisted.push_back(alg.chi_[x] * alg.simples_[i].character[x]);
        std::optional<SimpleIndex> image;
        for (SimpleIndex l = 0; l < count; ++l) {
            const Cyclotomic ip = alg.inner_product(twisted, alg.simples_[l].character);
            if (ip.is_one()) image = l;
            else if (!ip.is_zero()) throw Error(ErrorKind::InternalInconsistency, "V_chi (x) V_i is not simple");
        }
        if (!image) throw Error(ErrorKind::IncompleteSimpleList, "V_chi (x) V_i is missing from the simple list");
        alg.sigma_.push_back(*image);
    }

    for (SimpleIndex i = 0; i < count; ++i) {
        const Matrix& a = expanded[i][central];
        const Cyclotomic w = a(0, 0);
        if (!(a == Matrix::scalar(a.rows(), w)))
            throw Error(ErrorKind::NotIrreducible, "central element does not act by a scalar on '" + alg.simples_[i].id + "'");
        alg.omega_.push_back(w);
        alg.omega_s_.push_back(w.pow(alg.s_));
    }

    alg.rep_.assign(count, count);
    for (SimpleIndex i = 0; i < count; ++i) {
        if (alg.rep_[i] != count) continue;
        SimpleIndex j = i;
        do {
            alg.rep_[j] = i;
            j = alg.sigma_[j];
        } while (j != i);
        alg.reps_.push_back(i);
    }
    return alg;
}

/// kD_n(chi, a^m, 0) with n = 2m, m odd.  Simples in label order
/// eps, lam, chi, lamchi, 1, ..., m-1 over Q(zeta_n).
inline AlgebraData dihedral_algebra(int m) {
    if (m <= 1 || m % 2 == 0) throw Error(ErrorKind::InvalidParameter, "dihedral algebra needs odd m > 1, got " + std::to_string(m));
    const int n = 2 * m;
    GroupData group = GroupData::dihedral(static_cast<std::size_t>(n));
    auto scalar = [n](long v) { return Matrix::scalar(1, Cyclotomic(n, v)); };
    std::vector<SimpleRep> simples;
    // (name, value on a, value on b) for the four linear characters.
    const std::vector<std::tuple<std::string, long, long>> linear = {
        {"eps", 1, 1}, {"lam", 1, -1}, {"chi", -1, 1}, {"lamchi", -1, -1}};
    for (const auto& [name, va, vb] : linear) simples.push_back({name, 1, {scalar(va), scalar(vb)}, {}});
    for (int l = 1; l < m; ++l) {
        Matrix a(n, 2, 2), b(n, 2, 2);
        a(0, 0) = Cyclotomic::zeta(n, l);
        a(1, 1) = Cyclotomic::zeta(n, -l);
        b(0, 1) = Cyclotomic(n, 1L);
        b(1, 0) = Cyclotomic(n, 1L);
        simples.push_back({std::to_string(l), 2, {a, b}, {}});
    }
    std::vector<Cyclotomic> chi;
    for (std::size_t x = 0; x < group.size(); ++x) {
        const std::size_t k = x % static_cast<std::size_t>(n);
        chi.emplace_back(n, k % 2 == 0 ? 1L : -1L);  // chi(a) = -1, chi(b) = 1
    }
    const std::size_t central = static_cast<std::size_t>(m);  // a^m
    AlgebraData alg = custom_algebra(std::move(group), std::move(simples), central, std::move(chi));
    alg.mode_ = AlgebraData::Mode::Dihedral;
    alg.dihedral_m_ = m;
    return alg;
}

using AlgebraPtr = std::shared_ptr<const AlgebraData>;

inline AlgebraPtr make_dihedral(int m) { return std::make_shared<const AlgebraData>(dihedral_algebra(m)); }

/// N_{i,j}^l for the l with nonzero coefficient.
inline std::map<SimpleIndex, long> fusion_coeffs(const AlgebraData& alg, SimpleIndex i, SimpleIndex j) {
    if (i >= alg.simple_count() || j >= alg.simple_count()) throw Error(ErrorKind::UnknownLabel, "simple index out of range");
    std::map<SimpleIndex, long> out;
    const auto& row = alg.fusion_row(i, j);
    for (SimpleIndex l = 0; l < row.size(); ++l)
        if (row[l] != 0) out[l] = row[l];
    return out;
}

}  // namespace hopfore

#endif
