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
   Exact checks of the ring presentations of G_0 and r for kD_n(chi, a^m, 0),
   with x = [V_1], y = [V_2(eps)], z = [V_3(eps)], y_b = w_b = [V(eps, b)].
   Relations indexed by scalars are checked for every pair from a finite set
   of betas; basis statements are checked as unimodularity of coordinate
   matrices on the configured finite supports.
*/

#ifndef HOPFORE_GREENRING_PRESENTATION_HPP
#define HOPFORE_GREENRING_PRESENTATION_HPP

#include <string>
#include <vector>

#include "hopfore/greenring/xbasis.hpp"

namespace hopfore {

struct IdentityCheck {
    std::string identity_name;
    std::string family;  ///< relation family, e.g. "J" for the G_0(kD_n) relations
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

enum class PresentationPart { GrothGroup, GrothFull, GreenTorsion, GreenFull, Combined, All };

inline PresentationPart parse_presentation_part(const std::string& name) {
    if (name == "groth_kDn") return PresentationPart::GrothGroup;
    if (name == "groth_H") return PresentationPart::GrothFull;
    if (name == "green_R") return PresentationPart::GreenTorsion;
    if (name == "green_H") return PresentationPart::GreenFull;
    if (name == "combined") return PresentationPart::Combined;
    if (name == "all") return PresentationPart::All;
    throw Error(ErrorKind::InvalidParameter, "unknown presentation part '" + name + "'");
}

struct PresentationConfig {
    std::vector<Cyclotomic> betas;
    int tmax = 6;
};

namespace detail {

class CheckList {
   public:
    explicit CheckList(std::string family) : family_(std::move(family)) {}

    template <class E>
    void equal(const std::string& name, const E& lhs, const E& rhs) {
        out_.push_back({name, family_, lhs == rhs, lhs.to_string(), rhs.to_string()});
    }
    void holds(const std::string& name, bool pass, const std::string& lhs, const std::string& rhs) {
        out_.push_back({name, family_, pass, lhs, rhs});
    }
    void family(std::string f) { family_ = std::move(f); }
    std::vector<IdentityCheck> take() { return std::move(out_); }

   private:
    std::string family_;
    std::vector<IdentityCheck> out_;
};

struct DihedralNames {
    AlgebraPtr alg;
    int m;
    SimpleIndex eps, lam, chi, lamchi;

    explicit DihedralNames(const AlgebraPtr& a) : alg(a) {
        detail::require_dihedral(*a);
        m = *a->dihedral_m();
        eps = k4_simple(*a, 0);
        lam = k4_simple(*a, 1);
        chi = k4_simple(*a, 2);
        lamchi = k4_simple(*a, 3);
    }

    std::string b(const Cyclotomic& beta) const { return beta.to_string(); }
};

inline bool supported_on_nil_up_to(const GreenElement& e, int max_len) {
    for (const auto& [label, c] : e.terms())
        if (!label.is_nil() || label.t > max_len) return false;
    return true;
}

inline bool supported_on_eig_up_to(const GreenElement& e, const Cyclotomic& beta, int max_len) {
    for (const auto& [label, c] : e.terms())
        if (label.is_nil() || !(label.beta == beta) || label.t > max_len) return false;
    return true;
}

inline std::string basis_verdict(bool ok) { return ok ? "Z-basis" : "not a Z-basis"; }

inline std::vector<IdentityCheck> check_groth_group(const DihedralNames& d) {
    const AlgebraPtr& alg = d.alg;
    CheckList out("J");
    using E = GrothElement;
    const E x = E::simple(alg, two_dim_simple(*alg, 1));
    const E lam = E::simple(alg, d.lam), chi = E::simple(alg, d.chi);
    out.equal("lam*x = x", lam * x, x);
    out.equal("chi*x = f(x)", chi * x, x_basis_to_groth(alg, chi_x_poly(d.m)));
    out.equal("x^m = g(x)", x.pow(static_cast<unsigned long>(d.m)), x_basis_to_groth(alg, x_power_m_poly(d.m)));

    out.family("V_1 powers");
    E p = x;
    for (int l = 1; l < d.m; ++l) {
        out.equal("x^" + std::to_string(l) + " binomial decomposition", p, x_power_binomial(alg, l));
        p = p * x;
    }
    out.family("x-expansion");
    for (int l = 1; l < d.m; ++l) {
        const XPoly closed = two_dim_class_in_x(l);
        out.equal("[V_" + std::to_string(l) + "] = " + closed.to_string(), E::simple(alg, two_dim_simple(*alg, l)), x_basis_to_groth(alg, closed));
    }
    out.family("basis");
    const auto index = group_simple_labels(*alg);
    out.holds("X_1 = {1, lam, chi, lamchi, x, ..., x^(m-1)}", is_z_basis(x1_basis(alg), index), basis_verdict(is_z_basis(x1_basis(alg), index)),
              "Z-basis");
    for (SimpleIndex i = 0; i < alg->simple_count(); ++i) {
        const E v = E::simple(alg, i);
        const XPoly coords = groth_to_x_basis(v);
        out.equal("X_1 round trip of " + format_label(*alg, SimpleLabel::torsion(i)) + " = " + coords.to_string(), x_basis_to_groth(alg, coords), v);
    }
    const bool x2 = is_z_basis(x2_basis(alg), index);
    out.holds("X_2 = {1, lam, chi, lamchi, x^l, chi*x^l}", x2, basis_verdict(x2), "Z-basis");
    return out.take();
}

inline std::vector<IdentityCheck> check_groth_full(const DihedralNames& d, const PresentationConfig& cfg) {
    const AlgebraPtr& alg = d.alg;
    CheckList out("U");
    using E = GrothElement;
    auto yb = [&](const Cyclotomic& b) { return E::basis(alg, SimpleLabel::free(d.eps, b)); };
    const E one = E::one(alg), chi = E::simple(alg, d.chi);
    for (const auto& b : cfg.betas) out.equal("chi*y[" + d.b(b) + "] = y[" + d.b(b) + "]", chi * yb(b), yb(b));
    for (std::size_t i = 0; i < cfg.betas.size(); ++i)
        for (std::size_t j = i; j < cfg.betas.size(); ++j) {
            const auto &a = cfg.betas[i], &b = cfg.betas[j];
            const Cyclotomic s = a + b;
            if (s.is_zero())
                out.equal("y[" + d.b(a) + "]*y[" + d.b(b) + "] = 2*(1+chi)", yb(a) * yb(b), 2 * (one + chi));
            else
                out.equal("y[" + d.b(a) + "]*y[" + d.b(b) + "] = 2*y[" + d.b(s) + "]", yb(a) * yb(b), 2 * yb(s));
        }

    out.family("basis");
    std::vector<E> elems = x1_basis(alg);
    std::vector<SimpleLabel> index = group_simple_labels(*alg);
    const E lam = E::simple(alg, d.lam), x = E::simple(alg, two_dim_simple(*alg, 1));
    for (const auto& b : cfg.betas) {
        elems.push_back(lam * yb(b));
        E p = yb(b);
        for (int l = 0; l <= (d.m - 1) / 2; ++l) {
            elems.push_back(p);
            p = x * p;
        }
        for (SimpleIndex i : alg->representatives()) index.push_back(SimpleLabel::free(i, b));
    }
    const bool ok = is_z_basis(elems, index);
    out.holds("X_1 and {lam*y[b], x^l*y[b]} over the configured betas", ok, basis_verdict(ok), "Z-basis");
    return out.take();
}

inline std::vector<IdentityCheck> check_green_torsion(const DihedralNames& d, const PresentationConfig& cfg) {
    const AlgebraPtr& alg = d.alg;
    CheckList out("R");
    using E = GreenElement;
    auto v = [&](int t, SimpleIndex i) { return E::basis(alg, IndecLabel::nil(t, i)); };
    const E one = E::one(alg), chi = E::simple(alg, d.chi);
    const E y = v(2, d.eps), z = v(3, d.eps);
    out.equal("y^2 = (1+chi)*y", y * y, (one + chi) * y);

    out.family("V_2, V_3 products");
    out.equal("V_2(eps) (x) V_1(eps) = V_2(eps)", y * v(1, d.eps), y);
    out.equal("V_3(eps) (x) V_1(eps) = V_3(eps)", z * v(1, d.eps), z);
    const int top = 2 * cfg.tmax + 2;
    for (int t = 2; t <= top; ++t) {
        const std::string ts = std::to_string(t);
        if (t % 2 == 0)
            out.equal("y*[V_" + ts + "(eps)] = [V_" + ts + "(eps)] + [V_" + ts + "(chi)]", y * v(t, d.eps), v(t, d.eps) + v(t, d.chi));
        else
            out.equal("y*[V_" + ts + "(eps)] = [V_" + std::to_string(t + 1) + "(eps)] + [V_" + std::to_string(t - 1) + "(chi)]", y * v(t, d.eps),
                      v(t + 1, d.eps) + v(t - 1, d.chi));
        if (t >= 3)
            out.equal("z*[V_" + ts + "(eps)] = [V_" + std::to_string(t + 2) + "(eps)] + [V_" + std::to_string(t - 2) + "(eps)] + [V_" + ts + "(chi)]",
                      z * v(t, d.eps), v(t + 2, d.eps) + v(t - 2, d.eps) + v(t, d.chi));
    }

    out.family("leading terms");
    E zt = one;
    for (int t = 0; t <= cfg.tmax; ++t) {
        const std::string ts = std::to_string(t);
        const E diff = zt - v(2 * t + 1, d.eps);
        out.holds("z^" + ts + " = [V_" + std::to_string(2 * t + 1) + "(eps)] mod M_" + std::to_string(2 * t - 1),
                  supported_on_nil_up_to(diff, 2 * t - 1), zt.to_string(), "[V_" + std::to_string(2 * t + 1) + "(eps)] + (" + diff.to_string() + ")");
        const E yzt = y * zt;
        const E diff2 = yzt - v(2 * t + 2, d.eps);
        out.holds("y*z^" + ts + " = [V_" + std::to_string(2 * t + 2) + "(eps)] mod M_" + std::to_string(2 * t), supported_on_nil_up_to(diff2, 2 * t),
                  yzt.to_string(), "[V_" + std::to_string(2 * t + 2) + "(eps)] + (" + diff2.to_string() + ")");
        zt = zt * z;
    }

    out.family("basis");
    std::vector<E> r_basis;
    for (const auto& g : x2_basis(alg)) {
        E lifted(alg);
        for (const auto& [label, c] : g.terms()) lifted.add_term(IndecLabel::nil(1, label.i), c);
        r_basis.push_back(lifted);
    }
    std::vector<E> elems;
    std::vector<IndecLabel> index;
    E zpow = one;
    for (int t = 0; t <= cfg.tmax; ++t) {
        for (const auto& r : r_basis) {
            elems.push_back(r * zpow);
            elems.push_back(r * y * zpow);
        }
        zpow = zpow * z;
    }
    for (int l = 1; l <= 2 * cfg.tmax + 2; ++l)
        for (SimpleIndex i = 0; i < alg->simple_count(); ++i) index.push_back(IndecLabel::nil(l, i));
    const bool ok = is_z_basis(elems, index);
    out.holds("{r*z^t, r*y*z^t : r in X_2, t <= " + std::to_string(cfg.tmax) + "} spans M_" + std::to_string(2 * cfg.tmax + 2), ok, basis_verdict(ok),
              "Z-basis");
    return out.take();
}

inline std::vector<IdentityCheck> check_green_full(const DihedralNames& d, const PresentationConfig& cfg) {
    const AlgebraPtr& alg = d.alg;
    CheckList out("W");
    using E = GreenElement;
    auto wb = [&](int t, const Cyclotomic& b) { return E::basis(alg, IndecLabel::eig(t, d.eps, b)); };
    const E one = E::one(alg), chi = E::simple(alg, d.chi), lam = E::simple(alg, d.lam);
    const E y = E::basis(alg, IndecLabel::nil(2, d.eps)), z = E::basis(alg, IndecLabel::nil(3, d.eps));
    const E x = E::simple(alg, two_dim_simple(*alg, 1));
    for (const auto& b : cfg.betas) {
        out.equal("chi*w[" + d.b(b) + "] = w[" + d.b(b) + "]", chi * wb(1, b), wb(1, b));
        out.equal("y*w[" + d.b(b) + "] = 2*w[" + d.b(b) + "]", y * wb(1, b), 2 * wb(1, b));
    }
    for (std::size_t i = 0; i < cfg.betas.size(); ++i)
        for (std::size_t j = i; j < cfg.betas.size(); ++j) {
            const auto &a = cfg.betas[i], &b = cfg.betas[j];
            const Cyclotomic s = a + b;
            if (s.is_zero())
                out.equal("w[" + d.b(a) + "]*w[" + d.b(b) + "] = (1+chi)*y", wb(1, a) * wb(1, b), (one + chi) * y);
            else
                out.equal("w[" + d.b(a) + "]*w[" + d.b(b) + "] = 2*w[" + d.b(s) + "]", wb(1, a) * wb(1, b), 2 * wb(1, s));
        }

    out.family("leading terms");
    for (const auto& b : cfg.betas) {
        E zw = wb(1, b);
        for (int l = 1; l <= cfg.tmax; ++l) {
            const std::string ls = std::to_string(l);
            out.equal("z*[V_" + ls + "(eps;" + d.b(b) + ")] = [V_" + std::to_string(l + 1) + "] + [V_" + ls + "] + [V_" + std::to_string(l - 1) + "]",
                      z * wb(l, b), wb(l + 1, b) + wb(l, b) + (l > 1 ? wb(l - 1, b) : E(alg)));
            zw = z * zw;
            const E diff = zw - wb(l + 1, b);
            out.holds("z^" + ls + "*w[" + d.b(b) + "] = [V_" + std::to_string(l + 1) + "(eps;" + d.b(b) + ")] mod P_" + ls,
                      supported_on_eig_up_to(diff, b, l), zw.to_string(),
                      "[V_" + std::to_string(l + 1) + "(eps;" + d.b(b) + ")] + (" + diff.to_string() + ")");
        }
    }

    out.family("basis");
    for (const auto& b : cfg.betas) {
        std::vector<E> elems;
        std::vector<IndecLabel> index;
        E zw = wb(1, b);
        for (int l = 0; l < cfg.tmax; ++l) {
            elems.push_back(lam * zw);
            E p = zw;
            for (int i = 0; i <= (d.m - 1) / 2; ++i) {
                elems.push_back(p);
                p = x * p;
            }
            zw = z * zw;
        }
        for (int l = 1; l <= cfg.tmax; ++l)
            for (SimpleIndex i : alg->representatives()) index.push_back(IndecLabel::eig(l, i, b));
        const bool ok = is_z_basis(elems, index);
        out.holds("{lam*z^l*w, x^i*z^l*w : l < " + std::to_string(cfg.tmax) + "} for beta = " + d.b(b), ok, basis_verdict(ok), "Z-basis");
    }
    return out.take();
}

inline std::vector<IdentityCheck> check_combined(const DihedralNames& d, const PresentationConfig& cfg) {
    const AlgebraPtr& alg = d.alg;
    CheckList out("Q");
    using E = GreenElement;
    auto w = [&](const Cyclotomic& b) { return E::basis(alg, IndecLabel::eig(1, d.eps, b)); };
    const E one = E::one(alg), chi = E::simple(alg, d.chi), lam = E::simple(alg, d.lam);
    const E x = E::simple(alg, two_dim_simple(*alg, 1));
    const E y = E::basis(alg, IndecLabel::nil(2, d.eps));
    out.equal("chi*x = f(x)", chi * x, evaluate_x_poly<IndecLabel>(alg, chi_x_poly(d.m)));
    out.equal("x^m = g(x)", x.pow(static_cast<unsigned long>(d.m)), evaluate_x_poly<IndecLabel>(alg, x_power_m_poly(d.m)));
    out.equal("y^2 = (1+chi)*y", y * y, (one + chi) * y);
    out.equal("lam*x = x", lam * x, x);
    for (const auto& b : cfg.betas) {
        out.equal("chi*w[" + d.b(b) + "] = w[" + d.b(b) + "]", chi * w(b), w(b));
        out.equal("y*w[" + d.b(b) + "] = 2*w[" + d.b(b) + "]", y * w(b), 2 * w(b));
    }
    for (std::size_t i = 0; i < cfg.betas.size(); ++i)
        for (std::size_t j = i; j < cfg.betas.size(); ++j) {
            const auto &a = cfg.betas[i], &b = cfg.betas[j];
            const Cyclotomic s = a + b;
            if (s.is_zero())
                out.equal("w[" + d.b(a) + "]*w[" + d.b(b) + "] = (1+chi)*y", w(a) * w(b), (one + chi) * y);
            else
                out.equal("w[" + d.b(a) + "]*w[" + d.b(b) + "] = 2*w[" + d.b(s) + "]", w(a) * w(b), 2 * w(s));
        }
    return out.take();
}

}  // namespace detail

inline std::vector<IdentityCheck> verify_presentation(const AlgebraPtr& alg, PresentationPart part, const PresentationConfig& cfg) {
    const detail::DihedralNames d(alg);
    for (const auto& b : cfg.betas) {
        if (b.order() != alg->field_order()) throw Error(ErrorKind::OrderMismatch, "beta lives in a different field");
        if (b.is_zero()) throw Error(ErrorKind::ZeroBeta, "beta set must not contain 0");
    }
    if (cfg.tmax < 0) throw Error(ErrorKind::InvalidParameter, "tmax must be nonnegative");
    std::vector<IdentityCheck> out;
    auto append = [&](std::vector<IdentityCheck> more) { out.insert(out.end(), more.begin(), more.end()); };
    const bool all = part == PresentationPart::All;
    if (all || part == PresentationPart::GrothGroup) append(detail::check_groth_group(d));
    if (all || part == PresentationPart::GrothFull) append(detail::check_groth_full(d, cfg));
    if (all || part == PresentationPart::GreenTorsion) append(detail::check_green_torsion(d, cfg));
    if (all || part == PresentationPart::GreenFull) append(detail::check_green_full(d, cfg));
    if (all || part == PresentationPart::Combined) append(detail::check_combined(d, cfg));
    return out;
}

}  // namespace hopfore

#endif
