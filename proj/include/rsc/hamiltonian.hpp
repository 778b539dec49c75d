#pragma once

#include <string>
#include <vector>

#include "hecke.hpp"

namespace rsc {

/// Spin of the model: the Pochhammer length per root-length orbit.
/// l1 sits on the long roots, l2 on the short ones.
struct SpinPair {
    int l1 = 0;
    int l2 = 0;

    bool valid() const { return l1 >= 0 && l2 >= 0; }
    std::string render() const { return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")"; }
};

inline int spin_of(const SpinPair& l, const ExpVec& alpha) {
    return RootSystemCn::is_long(alpha) ? l.l1 : l.l2;
}

/// Generic Hecke parameter attached to a root.
inline FieldScalar t_of(const ExpVec& alpha) {
    return RootSystemCn::is_long(alpha) ? FieldScalar::tl_pow(1) : FieldScalar::ts_pow(1);
}

namespace detail {

/// (t X^{mu} - t^{-1}) / (X^{mu} - 1) as a canonical RatFn; mu may be any
/// nonzero vector, the orientation is normalized internally.
inline RatFn hat_factor(int n, const ExpVec& mu, const FieldScalar& t) {
    LaurentPoly num(n);
    num.add_term(zero_exp(n), t.inverse());
    num.add_term(mu, -t);
    RatFn f(num);
    f.mul_binomial(FieldScalar::one(), mu, -1);
    return f;
}

} // namespace detail

/// Macdonald difference operator: the literal W-sum
///   sum_w prod_{alpha in hatR} (t_alpha X^{w(alpha)} - t_alpha^{-1})
///                              / (X^{w(alpha)} - 1) tau(w(omega_n^vee)),
/// so each orbit point of omega_n^vee carries its stabilizer multiplicity n!.
/// Only tau-parts appear; repeated shifts are collected.
inline NormalOp make_macdonald(const HeckeContext& ctx) {
    const auto& rs = ctx.rs();
    const int n = rs.n();
    const HalfVec omega = rs.omega_check(n);
    const auto hatR = rs.hatR();
    NormalOp m(n);
    for (const auto& w : rs.weyl()) {
        RatFn c = RatFn::one(n);
        for (const auto& alpha : hatR) c = c * detail::hat_factor(n, w.act(alpha), t_of(alpha));
        m.add_term(c, w.act(omega), WeylElem::identity(n));
    }
    return m;
}

/// Weight function at spin l: prod_{alpha > 0} (X^alpha; q^2)_{l_alpha},
/// kept factored so gauge conjugation cancels atoms instead of expanding.
inline FactoredWeight make_delta_plus(const RootSystemCn& rs, const SpinPair& l) {
    FactoredWeight d(rs.n());
    for (const auto& alpha : rs.positive_roots()) {
        int la = spin_of(l, alpha);
        for (int i = 0; i < la; ++i) d.mul_binomial(FieldScalar::q_pow(2 * i), alpha, 1);
    }
    return d;
}

/// Hamiltonian at spin l, conjugation path:
/// Delta+ M|_{t_alpha = q^{l_alpha}} (Delta+)^{-1}.
inline NormalOp make_H(const HeckeContext& ctx, const SpinPair& l) {
    NormalOp m = make_macdonald(ctx).specialize_t(l.l1, l.l2);
    return gauge_conjugate(m, make_delta_plus(ctx.rs(), l));
}

/// One W-summand of an explicitly assembled operator, kept unmerged so the
/// per-w structure stays inspectable.
struct WSummand {
    WeylElem w;
    HalfVec shift;
    RatFn coeff;
};

/// Hamiltonian at spin l, explicit path.  The gauge ratio wipes out the
/// rational part of every hatR_w^+ factor, leaving only its scalar, so the
/// w-summand is
///   prod_{beta in hatR_w^+} q^{-l_beta}
///   prod_{gamma in hatR_w^-} q^{l_gamma}
///       (1 - q^{-2 l_gamma} X^gamma)(1 - q^{2(l_gamma - 1)} X^gamma)
///       / [(1 - X^gamma)(1 - q^{-2} X^gamma)].
inline std::vector<WSummand> make_H_explicit_per_w(const HeckeContext& ctx, const SpinPair& l) {
    const auto& rs = ctx.rs();
    const int n = rs.n();
    const HalfVec omega = rs.omega_check(n);
    std::vector<WSummand> out;
    for (const auto& w : rs.weyl()) {
        auto [plus, minus] = rs.hatR_split(w);
        RatFn c = RatFn::one(n);
        for (const auto& beta : plus) c.mul_scalar(FieldScalar::q_pow(-spin_of(l, beta)));
        for (const auto& g : minus) {
            int lg = spin_of(l, g);
            c.mul_scalar(FieldScalar::q_pow(lg));
            c.mul_binomial(FieldScalar::q_pow(-2 * lg), g, 1);
            c.mul_binomial(FieldScalar::q_pow(2 * (lg - 1)), g, 1);
            c.mul_binomial(FieldScalar::one(), g, -1);
            c.mul_binomial(FieldScalar::q_pow(-2), g, -1);
        }
        out.push_back({w, w.act(omega), c});
    }
    return out;
}

inline NormalOp merge_summands(int n, const std::vector<WSummand>& parts) {
    NormalOp op(n);
    for (const auto& p : parts) op.add_term(p.coeff, p.shift, WeylElem::identity(n));
    return op;
}

inline NormalOp make_H_explicit(const HeckeContext& ctx, const SpinPair& l) {
    return merge_summands(ctx.n(), make_H_explicit_per_w(ctx, l));
}

/// Generic-t left factor of the intertwining identity C o Dhat = Dhat o M:
/// the Macdonald w-summand times, over gamma in hatR_w^-, the correction
///   (1 - t^2 X^gamma)(1 - q^{-2} t^{-2} X^gamma)
///   / [(1 - t^{-2} X^gamma)(1 - q^{-2} t^2 X^gamma)],  t = t_gamma.
inline NormalOp make_prop2_factor(const HeckeContext& ctx) {
    const auto& rs = ctx.rs();
    const int n = rs.n();
    const HalfVec omega = rs.omega_check(n);
    const auto hatR = rs.hatR();
    NormalOp op(n);
    for (const auto& w : rs.weyl()) {
        RatFn c = RatFn::one(n);
        for (const auto& alpha : hatR) c = c * detail::hat_factor(n, w.act(alpha), t_of(alpha));
        auto [plus, minus] = rs.hatR_split(w);
        (void)plus;
        for (const auto& g : minus) {
            FieldScalar t2 = t_of(g) * t_of(g);
            c.mul_binomial(t2, g, 1);
            c.mul_binomial(FieldScalar::q_pow(-2) * t2.inverse(), g, 1);
            c.mul_binomial(t2.inverse(), g, -1);
            c.mul_binomial(FieldScalar::q_pow(-2) * t2, g, -1);
        }
        op.add_term(c, w.act(omega), WeylElem::identity(n));
    }
    return op;
}

/// Shifted left operator of the spin-shift relation: the gauge transform of
/// the intertwining factor at t_alpha = q^{l_alpha}.  Its w-summand is
///   prod_{beta in hatR_w^+} q^{-l_beta}
///   prod_{gamma in hatR_w^-} q^{l_gamma}
///       (1 - q^{2 l_gamma} X^gamma)(1 - q^{-2(l_gamma + 1)} X^gamma)
///       / [(1 - X^gamma)(1 - q^{-2} X^gamma)],
/// which collapses to sum_w tau(w(omega_n^vee)) at l = (0,0) like the
/// Hamiltonian itself.
inline NormalOp make_H_shifted(const HeckeContext& ctx, const SpinPair& l) {
    const auto& rs = ctx.rs();
    const int n = rs.n();
    const HalfVec omega = rs.omega_check(n);
    NormalOp op(n);
    for (const auto& w : rs.weyl()) {
        auto [plus, minus] = rs.hatR_split(w);
        RatFn c = RatFn::one(n);
        for (const auto& beta : plus) c.mul_scalar(FieldScalar::q_pow(-spin_of(l, beta)));
        for (const auto& g : minus) {
            int lg = spin_of(l, g);
            c.mul_scalar(FieldScalar::q_pow(lg));
            c.mul_binomial(FieldScalar::q_pow(2 * lg), g, 1);
            c.mul_binomial(FieldScalar::q_pow(-2 * (lg + 1)), g, 1);
            c.mul_binomial(FieldScalar::one(), g, -1);
            c.mul_binomial(FieldScalar::q_pow(-2), g, -1);
        }
        op.add_term(c, w.act(omega), WeylElem::identity(n));
    }
    return op;
}

} // namespace rsc
