#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "op.hpp"
#include "report.hpp"

namespace rsc {

/// Affine Hecke operators for C_n acting on Laurent polynomials, with the
/// commuting difference operators built from them.  T_1..T_n are the finite
/// generators, T_0 the affine one (s_0 = tau(theta^vee) s_theta, with the
/// convention X^{-a_0} = q^{-2} X^theta).  Everything is built with generic
/// parameters (q, t_s, t_l); specializations are taken per built operator.
class HeckeContext {
public:
    explicit HeckeContext(int n) : rs_(n) {
        for (int i = 0; i <= n; ++i) {
            T_.push_back(build_T(i));
            // T^{-1} = T - (t - t^{-1}) by the quadratic relation.
            NormalOp inv = T_.back();
            FieldScalar t = t_param(i);
            inv.add_term(RatFn::scalar(n, -(t - t.inverse())), HalfVec::zero(n), WeylElem::identity(n));
            Tinv_.push_back(std::move(inv));
        }
    }

    int n() const { return rs_.n(); }
    const RootSystemCn& rs() const { return rs_; }

    /// t_{alpha_i}; the affine a_0 belongs to the long orbit.
    FieldScalar t_param(int i) const {
        if (i == 0) return FieldScalar::tl_pow(1);
        return RootSystemCn::is_long(rs_.simple(i)) ? FieldScalar::tl_pow(1) : FieldScalar::ts_pow(1);
    }

    const NormalOp& T(int i) const { return T_[static_cast<size_t>(i)]; }
    const NormalOp& Tinv(int i) const { return Tinv_[static_cast<size_t>(i)]; }

    /// The length-zero generator of the extended affine Weyl group: the order-2
    /// alcove-diagram automorphism pi = tau(omega_n^vee) v with
    /// v(eps_i) = -eps_{n+1-i}.  As a substitution operator it is its own
    /// inverse (v(omega_n^vee) = -omega_n^vee).
    WeylElem pi_weyl() const {
        std::vector<int> img(static_cast<size_t>(n()));
        std::vector<int8_t> sgn(static_cast<size_t>(n()), int8_t{-1});
        for (int i = 0; i < n(); ++i) img[static_cast<size_t>(i)] = n() - 1 - i;
        return WeylElem::from_parts(img, sgn);
    }

    NormalOp pi_hat() const {
        return NormalOp::from_term(RatFn::one(n()), rs_.omega_check(n()), pi_weyl());
    }

    /// T-indices of a reduced word for v = pi^{-1} t(omega_n^vee):
    /// (s_n)(s_{n-1} s_n)(s_{n-2} s_{n-1} s_n) ... (s_1 ... s_n).
    std::vector<int> v_word() const {
        std::vector<int> w;
        for (int k = 1; k <= n(); ++k)
            for (int j = n() - k + 1; j <= n(); ++j) w.push_back(j);
        return w;
    }

    /// The T-indices of the word (T_0 T_1 .. T_{n-1} T_n T_{n-1} .. T_i)^i,
    /// a reduced expression for t(omega_i^vee) when i < n.  For i = n that
    /// word gives the translation by 2 omega_n^vee instead (omega_n^vee is not
    /// in the coroot lattice), so Y^{omega_n^vee} goes through pi_hat.
    std::vector<int> y_word(int i) const {
        std::vector<int> base;
        for (int k = 0; k <= n(); ++k) base.push_back(k);
        for (int k = n() - 1; k >= i; --k) base.push_back(k);
        std::vector<int> word;
        for (int p = 0; p < i; ++p) word.insert(word.end(), base.begin(), base.end());
        return word;
    }

    /// Y^{omega_i^vee}, built on first use.  Composing one generator at a time
    /// keeps every product big-times-small.
    const NormalOp& Y_fund(int i) const {
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = yfund_.find(i);
            if (it != yfund_.end()) return it->second;
        }
        NormalOp y(n());
        if (i == n()) {
            y = pi_hat();
            for (int k : v_word()) y = NormalOp::compose(y, T(k));
        } else {
            y = NormalOp::identity(n());
            for (int k : y_word(i)) y = NormalOp::compose(y, T(k));
        }
        std::lock_guard<std::mutex> g(mu_);
        return yfund_.emplace(i, std::move(y)).first->second;
    }

    /// Inverse of Y^{omega_i^vee}: the reversed word in the T_j^{-1} (with the
    /// trailing involution pi_hat for i = n).
    const NormalOp& Y_fund_inv(int i) const {
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = yfund_inv_.find(i);
            if (it != yfund_inv_.end()) return it->second;
        }
        std::vector<int> word = i == n() ? v_word() : y_word(i);
        NormalOp y = NormalOp::identity(n());
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = NormalOp::compose(y, Tinv(*it));
        if (i == n()) y = NormalOp::compose(y, pi_hat());
        std::lock_guard<std::mutex> g(mu_);
        return yfund_inv_.emplace(i, std::move(y)).first->second;
    }

    /// Y^lambda for lambda in P^vee via the coordinates c_i = (lambda, alpha_i)
    /// and the proven pairwise commutativity of the fundamental Y's.  The
    /// concatenated word is folded one generator at a time.
    NormalOp Y(const HalfVec& lambda) const {
        if (!lambda.in_coweight_lattice()) throw NotInCoweightLattice("Y at " + lambda.render());
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = ymemo_.find(lambda);
            if (it != ymemo_.end()) return it->second;
        }
        NormalOp y = NormalOp::identity(n());
        for (int i = 1; i <= n(); ++i) {
            long long p2 = lambda.pair2(rs_.simple(i));
            if (p2 % 2 != 0) throw NotInCoweightLattice("Y coordinate at " + lambda.render());
            long long c = p2 / 2;
            std::vector<int> word = i == n() ? v_word() : y_word(i);
            for (long long k = 0; k < (c < 0 ? -c : c); ++k) {
                if (c > 0) {
                    if (i == n()) y = NormalOp::compose(y, pi_hat());
                    for (int j : word) y = NormalOp::compose(y, T(j));
                } else {
                    for (auto it = word.rbegin(); it != word.rend(); ++it)
                        y = NormalOp::compose(y, Tinv(*it));
                    if (i == n()) y = NormalOp::compose(y, pi_hat());
                }
            }
        }
        std::lock_guard<std::mutex> g(mu_);
        return ymemo_.emplace(lambda, std::move(y)).first->second;
    }

private:
    /// T_i = t s_i + (t - t^{-1}) (X^{-alpha_i} - 1)^{-1} (s_i - 1), written in
    /// normal form as
    ///   (t - t^{-1} X^{alpha}) / (1 - X^{alpha}) s_i
    ///   - (t - t^{-1}) X^{alpha} / (1 - X^{alpha}).
    /// For i = 0 substitute s_0 = tau(theta^vee) s_theta and X^{-a_0} = q^2 X^theta
    /// (with tau(xi) X^mu = q^{2(xi,mu)} X^mu, the operator tau(theta^vee) s_theta
    /// sends q^2 X^theta to its reciprocal, which is what the quadratic needs):
    ///   (t^{-1} - t q^2 X^theta) / (1 - q^2 X^theta) tau(theta^vee) s_theta
    ///   + (t - t^{-1}) / (1 - q^2 X^theta).
    NormalOp build_T(int i) const {
        const int n = rs_.n();
        NormalOp op(n);
        FieldScalar t = t_param(i);
        FieldScalar ti = t.inverse();
        if (i >= 1) {
            ExpVec a = rs_.simple(i);
            WeylElem si = WeylElem::simple_reflection(n, i);
            LaurentPoly ns(n);
            ns.add_term(zero_exp(n), t);
            ns.add_term(a, -ti);
            RatFn cs(ns);
            cs.mul_binomial(FieldScalar::one(), a, -1);
            LaurentPoly ne(n);
            ne.add_term(a, ti - t);
            RatFn ce(ne);
            ce.mul_binomial(FieldScalar::one(), a, -1);
            op.add_term(cs, HalfVec::zero(n), si);
            op.add_term(ce, HalfVec::zero(n), WeylElem::identity(n));
        } else {
            ExpVec th = rs_.theta();
            HalfVec thv = HalfVec::from_int(RootSystemCn::coroot(th));
            WeylElem sth = WeylElem::coordinate_flip(n, 1);
            LaurentPoly ns(n);
            ns.add_term(zero_exp(n), ti);
            ns.add_term(th, -(t * FieldScalar::q_pow(2)));
            RatFn cs(ns);
            cs.mul_binomial(FieldScalar::q_pow(2), th, -1);
            LaurentPoly ne(n);
            ne.add_term(zero_exp(n), t - ti);
            RatFn ce(ne);
            ce.mul_binomial(FieldScalar::q_pow(2), th, -1);
            op.add_term(cs, thv, sth);
            op.add_term(ce, HalfVec::zero(n), WeylElem::identity(n));
        }
        return op;
    }

    RootSystemCn rs_;
    std::vector<NormalOp> T_;
    std::vector<NormalOp> Tinv_;
    mutable std::mutex mu_;
    mutable std::map<int, NormalOp> yfund_;
    mutable std::map<int, NormalOp> yfund_inv_;
    mutable std::map<HalfVec, NormalOp> ymemo_;
};

/// A = sum over all w in W of Y^{w(omega_n^vee)}; orbit points carry their
/// stabilizer multiplicity n!.
inline NormalOp make_A(const HeckeContext& ctx) {
    std::map<HalfVec, int> mult;
    HalfVec wn = ctx.rs().omega_check(ctx.n());
    for (const auto& w : ctx.rs().weyl()) mult[w.act(wn)] += 1;
    NormalOp a(ctx.n());
    for (const auto& [lam, m] : mult) a = a + ctx.Y(lam).scaled(FieldScalar::integer(m));
    return a;
}

/// B = prod over alpha in R+ of (t_alpha^{-1} Y^{alpha^vee/2} - t_alpha Y^{-alpha^vee/2}),
/// expanded over the 2^{|R+|} sign choices; sign vectors sharing a shift are
/// collected before the Y-monomial is composed.  Fractional coweights never
/// appear: each full product lands in P^vee.
///
/// flip_simple >= 1 replaces the alpha_{flip_simple} factor by
/// (t^{-1} Y^{-alpha^vee/2} - t Y^{alpha^vee/2}) — the prefactor of the
/// intertwining identity, realized monomial-wise.
inline NormalOp make_B(const HeckeContext& ctx, int flip_simple = 0) {
    const auto& roots = ctx.rs().positive_roots();
    const int m = static_cast<int>(roots.size());
    ExpVec flip_root = flip_simple >= 1 ? ctx.rs().simple(flip_simple) : ExpVec();

    std::map<HalfVec, FieldScalar> coeffs;
    for (long mask = 0; mask < (1L << m); ++mask) {
        HalfVec lam = HalfVec::zero(ctx.n());
        FieldScalar c = FieldScalar::one();
        for (int a = 0; a < m; ++a) {
            const ExpVec& alpha = roots[static_cast<size_t>(a)];
            ExpVec cv = RootSystemCn::coroot(alpha);
            bool plus = (mask >> a) & 1;
            for (size_t k = 0; k < cv.size(); ++k) lam.d[k] += plus ? cv[k] : -cv[k];
            FieldScalar t = RootSystemCn::is_long(alpha) ? FieldScalar::tl_pow(1) : FieldScalar::ts_pow(1);
            bool flipped = flip_simple >= 1 && alpha == flip_root;
            if (!flipped)
                c = c * (plus ? t.inverse() : -t);
            else
                c = c * (plus ? -t : t.inverse());
        }
        if (!lam.in_coweight_lattice())
            throw ShiftNotInLattice("B expansion term " + lam.render());
        auto it = coeffs.find(lam);
        if (it == coeffs.end())
            coeffs.emplace(lam, c);
        else
            it->second = it->second + c;
    }

    NormalOp b(ctx.n());
    for (const auto& [lam, c] : coeffs) {
        if (c.is_zero()) continue;
        b = b + ctx.Y(lam).scaled(c);
    }
    return b;
}

/// Relation families of the affine Hecke algebra of type C_n:
/// quadratic (T_i - t)(T_i + t^{-1}) = 0 for all i; commutation for |i-j| >= 2;
/// length-3 braids in the A-type interior; length-4 braids at both ends of the
/// diagram (which exist only for n >= 2 — the n = 1 diagram has an infinite
/// bond, no braid relation).
inline std::vector<CheckItem> check_hecke(const HeckeContext& ctx) {
    std::vector<CheckItem> out;
    const int n = ctx.n();
    auto record = [&out](std::string name, bool ok) { out.push_back({std::move(name), ok, ""}); };

    for (int i = 0; i <= n; ++i) {
        FieldScalar t = ctx.t_param(i);
        NormalOp lhs = NormalOp::compose(ctx.T(i), ctx.T(i));
        NormalOp rhs = ctx.T(i).scaled(t - t.inverse()) + NormalOp::identity(n);
        record("quadratic i=" + std::to_string(i), op_equal(lhs, rhs));
        record("inverse i=" + std::to_string(i),
               op_equal(NormalOp::compose(ctx.T(i), ctx.Tinv(i)), NormalOp::identity(n)) &&
                   op_equal(NormalOp::compose(ctx.Tinv(i), ctx.T(i)), NormalOp::identity(n)));
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            record("commute i=" + std::to_string(i) + " j=" + std::to_string(j),
                   op_equal(NormalOp::compose(ctx.T(i), ctx.T(j)), NormalOp::compose(ctx.T(j), ctx.T(i))));
    for (int i = 1; i + 1 <= n - 1; ++i) {
        NormalOp lhs = NormalOp::compose(NormalOp::compose(ctx.T(i), ctx.T(i + 1)), ctx.T(i));
        NormalOp rhs = NormalOp::compose(NormalOp::compose(ctx.T(i + 1), ctx.T(i)), ctx.T(i + 1));
        record("braid3 i=" + std::to_string(i), op_equal(lhs, rhs));
    }
    if (n >= 2) {
        for (int i : {0, n - 1}) {
            NormalOp ab = NormalOp::compose(ctx.T(i), ctx.T(i + 1));
            NormalOp ba = NormalOp::compose(ctx.T(i + 1), ctx.T(i));
            record("braid4 i=" + std::to_string(i),
                   op_equal(NormalOp::compose(ab, ab), NormalOp::compose(ba, ba)));
        }
    }
    return out;
}

/// Eq.-10-type relations: for each finite i and fundamental coweight with
/// (omega^vee, alpha_i) = 1,
///     T_i Y^{omega^vee} - Y^{s_i(omega^vee)} T_i = (t - t^{-1}) Y^{omega^vee},
/// and plain commutation when the pairing is 0.
inline std::vector<CheckItem> check_TY(const HeckeContext& ctx) {
    std::vector<CheckItem> out;
    const int n = ctx.n();
    for (int i = 1; i <= n; ++i) {
        WeylElem si = WeylElem::simple_reflection(n, i);
        FieldScalar t = ctx.t_param(i);
        for (int j = 1; j <= n; ++j) {
            HalfVec om = ctx.rs().omega_check(j);
            long long pair = om.pair2(ctx.rs().simple(i)) / 2;
            std::string name = "TY i=" + std::to_string(i) + " omega=" + std::to_string(j) +
                               " pairing=" + std::to_string(pair);
            const NormalOp& y = ctx.Y_fund(j);
            if (pair == 0) {
                out.push_back({name, op_equal(NormalOp::compose(ctx.T(i), y), NormalOp::compose(y, ctx.T(i))), ""});
            } else {
                NormalOp lhs = NormalOp::compose(ctx.T(i), y) - NormalOp::compose(ctx.Y(si.act(om)), ctx.T(i));
                NormalOp rhs = y.scaled(t - t.inverse());
                out.push_back({name, op_equal(lhs, rhs), ""});
            }
        }
    }
    return out;
}

/// Pairwise commutativity of the fundamental Y's.
inline std::vector<CheckItem> check_Y_commute(const HeckeContext& ctx) {
    std::vector<CheckItem> out;
    for (int i = 1; i <= ctx.n(); ++i)
        for (int j = i + 1; j <= ctx.n(); ++j) {
            const NormalOp& yi = ctx.Y_fund(i);
            const NormalOp& yj = ctx.Y_fund(j);
            out.push_back({"Ycommute i=" + std::to_string(i) + " j=" + std::to_string(j),
                           op_equal(NormalOp::compose(yi, yj), NormalOp::compose(yj, yi)), ""});
        }
    if (out.empty()) out.push_back({"Ycommute n=1 vacuous", true, ""});
    return out;
}

} // namespace rsc
