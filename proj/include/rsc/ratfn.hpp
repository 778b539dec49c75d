#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace rsc {

/// Denominator atom (1 - c*X^mu) with mu lex-positive and c != 0.  Every
/// denominator this artifact produces is a product of such atoms: the Hecke
/// operators contribute (1 - X^alpha)-type factors, gauge conjugation
/// contributes Pochhammer atoms, and sigma maps atoms to unit multiples of
/// atoms.  Keeping the factored form makes cancellation trial division
/// instead of multivariate gcd.
struct Atom {
    ExpVec mu;
    FieldScalar c;

    LaurentPoly expand(int n) const {
        LaurentPoly p = LaurentPoly::one(n);
        p.add_term(mu, -c);
        return p;
    }

    std::string render() const { return "(1 - " + c.render() + LaurentPoly::render_exp(mu) + ")"; }
};

struct AtomCmp {
    bool operator()(const Atom& a, const Atom& b) const {
        if (a.mu != b.mu) return a.mu < b.mu;
        return FieldScalar::compare(a.c, b.c) < 0;
    }
};

using DenMap = std::map<Atom, int, AtomCmp>;

namespace detail {

// (1 - c*X^mu) = unit_scalar * X^{unit_mono} * (1 - c'*X^{mu'}) with mu'
// lex-positive.
struct CanonAtom {
    FieldScalar unit_scalar;
    ExpVec unit_mono;
    Atom atom;
};

inline CanonAtom canonicalize_binomial(const FieldScalar& c, const ExpVec& mu, int n) {
    if (is_zero_vec(mu)) throw std::logic_error("atom with mu = 0");
    if (c.is_zero()) throw std::logic_error("atom with c = 0");
    if (lex_positive(mu)) return CanonAtom{FieldScalar::one(), zero_exp(n), Atom{mu, c}};
    return CanonAtom{-c, mu, Atom{negate(mu), c.inverse()}};
}

} // namespace detail

/// Rational function in X_1..X_n: expanded numerator over a product of
/// canonical atoms.  The representation is canonical once the numerator is
/// not divisible by any denominator atom; simplify() maintains that.
class RatFn {
public:
    RatFn() : num_(0) {}
    explicit RatFn(int n) : num_(LaurentPoly::zero(n)) {}
    explicit RatFn(LaurentPoly num) : num_(std::move(num)) {}
    RatFn(LaurentPoly num, DenMap den) : num_(std::move(num)), den_(std::move(den)) { simplify(); }

    static RatFn zero(int n) { return RatFn(n); }
    static RatFn one(int n) { return RatFn(LaurentPoly::one(n)); }
    static RatFn scalar(int n, const FieldScalar& c) { return RatFn(LaurentPoly::constant(n, c)); }

    int n() const { return num_.n(); }
    const LaurentPoly& num() const { return num_; }
    const DenMap& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    LaurentPoly den_expanded() const { return expand_den(den_, n()); }

    /// Exact division of f by (1 - c*X^mu): along each residue-class chain of
    /// exponents mod Z*mu this is synthetic division by (1 - c*Y).
    static std::optional<LaurentPoly> divide_by_atom(const LaurentPoly& f, const Atom& a) {
        if (f.is_zero()) return f;
        size_t j = 0;
        while (a.mu[j] == 0) ++j; // lex-positive => a.mu[j] > 0
        const int step = a.mu[j];

        // no two exponents can differ by a positive multiple of mu when the
        // mu-leading coordinate spans less than one step; cheap rejection
        {
            int lo = f.terms().begin()->first[j], hi = lo;
            for (const auto& [e, c] : f.terms()) {
                lo = std::min(lo, e[j]);
                hi = std::max(hi, e[j]);
            }
            if (hi - lo < step) return std::nullopt;
        }

        std::map<ExpVec, std::map<int, FieldScalar>> chains;
        for (const auto& [e, c] : f.terms()) {
            int k = e[j] >= 0 ? e[j] / step : -((-e[j] + step - 1) / step);
            ExpVec rep = e;
            for (size_t i = 0; i < rep.size(); ++i) rep[i] -= k * a.mu[i];
            chains[rep][k] = c;
        }

        LaurentPoly g(f.n());
        for (const auto& [rep, chain] : chains) {
            int kmin = chain.begin()->first;
            int kmax = chain.rbegin()->first;
            FieldScalar carry = FieldScalar::zero();
            for (int k = kmin; k <= kmax; ++k) {
                auto it = chain.find(k);
                FieldScalar fk = it == chain.end() ? FieldScalar::zero() : it->second;
                carry = fk + a.c * carry; // g_k = f_k + c*g_{k-1}
                if (k == kmax) {
                    if (!carry.is_zero()) return std::nullopt; // remainder
                } else if (!carry.is_zero()) {
                    ExpVec e = rep;
                    for (size_t i = 0; i < e.size(); ++i) e[i] += k * a.mu[i];
                    g.add_term(e, carry);
                }
            }
        }
        return g;
    }

    void simplify() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            bool erased = false;
            while (it->second > 0) {
                auto q = divide_by_atom(num_, it->first);
                if (!q) break;
                num_ = std::move(*q);
                if (--it->second == 0) {
                    it = den_.erase(it);
                    erased = true;
                    break;
                }
                if (num_.is_zero()) break;
            }
            if (!erased) ++it;
            if (num_.is_zero()) {
                den_.clear();
                return;
            }
        }
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        DenMap all = a.den_;
        for (const auto& [at, m] : b.den_) {
            auto it = all.find(at);
            if (it == all.end())
                all[at] = m;
            else
                it->second = std::max(it->second, m);
        }
        DenMap da = diff(all, a.den_);
        DenMap db = diff(all, b.den_);
        LaurentPoly num = (da.empty() ? a.num_ : a.num_ * expand_den(da, a.n())) +
                          (db.empty() ? b.num_ : b.num_ * expand_den(db, a.n()));
        return RatFn(std::move(num), std::move(all));
    }

    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

    RatFn operator-() const {
        RatFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        if (a.is_zero() || b.is_zero()) return RatFn::zero(a.n());
        DenMap all = a.den_;
        for (const auto& [at, m] : b.den_) all[at] += m;
        return RatFn(a.num_ * b.num_, std::move(all));
    }

    /// Unreduced product / sum, for inner loops that accumulate many terms
    /// into one slot and reduce once at the end via simplify().
    static RatFn mul_raw(const RatFn& a, const RatFn& b) {
        if (a.is_zero() || b.is_zero()) return RatFn::zero(a.n());
        RatFn r(a.n());
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (const auto& [at, m] : b.den_) r.den_[at] += m;
        return r;
    }

    static RatFn add_raw(const RatFn& a, const RatFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        DenMap all = a.den_;
        for (const auto& [at, m] : b.den_) {
            auto it = all.find(at);
            if (it == all.end())
                all[at] = m;
            else
                it->second = std::max(it->second, m);
        }
        DenMap da = diff(all, a.den_);
        DenMap db = diff(all, b.den_);
        RatFn r(a.n());
        r.num_ = (da.empty() ? a.num_ : a.num_ * expand_den(da, a.n())) +
                 (db.empty() ? b.num_ : b.num_ * expand_den(db, a.n()));
        if (!r.num_.is_zero()) r.den_ = std::move(all);
        return r;
    }

    RatFn scaled(const FieldScalar& c) const {
        if (c.is_zero()) return RatFn::zero(n());
        RatFn r = *this;
        r.num_ = r.num_.scaled(c);
        return r;
    }

    RatFn mul_poly(const LaurentPoly& p) const {
        if (p.is_zero()) return RatFn::zero(n());
        RatFn r(num_ * p, den_);
        return r;
    }

    /// multiply by (1 - c*X^mu)^{+-1} given in any orientation.
    void mul_binomial(const FieldScalar& c, const ExpVec& mu, int power) {
        auto ca = detail::canonicalize_binomial(c, mu, n());
        if (power > 0) {
            for (int i = 0; i < power; ++i) {
                num_ = num_ * ca.atom.expand(n());
                num_ = num_.scaled(ca.unit_scalar).mono_shifted(ca.unit_mono);
            }
            simplify();
        } else if (power < 0) {
            for (int i = 0; i < -power; ++i) {
                den_[ca.atom] += 1;
                num_ = num_.scaled(ca.unit_scalar.inverse()).mono_shifted(negate(ca.unit_mono));
            }
            simplify();
        }
    }

    void mul_scalar(const FieldScalar& c) { num_ = num_.scaled(c); }
    void mul_monomial(const ExpVec& m) { num_ = num_.mono_shifted(m); }

    /// Substitution is a ring automorphism and maps atoms to unit multiples of
    /// atoms, so a canonical input stays canonical; no re-simplification.
    RatFn sigma(const HalfVec& lambda, const WeylElem& w) const {
        RatFn r(n());
        r.num_ = num_.sigma(lambda, w);
        for (const auto& [at, m] : den_) {
            ExpVec wmu = w.act(at.mu);
            FieldScalar c2 = at.c * FieldScalar::q_pow(static_cast<int>(lambda.pair2(wmu)));
            auto ca = detail::canonicalize_binomial(c2, wmu, n());
            r.den_[ca.atom] += m;
            if (!ca.unit_scalar.is_one() || !is_zero_vec(ca.unit_mono)) {
                FieldScalar u = ca.unit_scalar.inverse();
                ExpVec sh = negate(ca.unit_mono);
                for (int i = 0; i < m; ++i) r.num_ = r.num_.scaled(u).mono_shifted(sh);
            }
        }
        return r;
    }

    RatFn specialize_t(int l1, int l2) const {
        RatFn r(n());
        r.num_ = num_.specialize_t(l1, l2);
        for (const auto& [at, m] : den_) {
            FieldScalar c2 = at.c.specialize_t(l1, l2);
            if (c2.is_zero()) continue; // factor degenerates to 1
            r.den_[Atom{at.mu, c2}] += m;
        }
        r.simplify();
        return r;
    }

    friend bool ratfn_eq(const RatFn& a, const RatFn& b) { return (a - b).is_zero(); }

    /// Clears the denominator or reports why it cannot.
    LaurentPoly to_poly(const std::string& context = "") const {
        if (!den_.empty()) {
            std::string what = context.empty() ? "denominator survives" : context;
            what += "; residual den = " + render_den(den_);
            throw NonpolynomialResult(what);
        }
        return num_;
    }

    uint64_t eval_mod(const ModAssign& a) const {
        uint64_t d = 1;
        for (const auto& [at, m] : den_) {
            uint64_t xm = 1;
            for (size_t i = 0; i < at.mu.size(); ++i)
                xm = mod_mul(xm, mod_pow_signed(a.x[i], at.mu[i], a.p), a.p);
            uint64_t v = mod_sub(1, mod_mul(at.c.eval_mod(a), xm, a.p), a.p);
            if (v == 0) throw DenominatorVanishes("atom " + at.render());
            for (int i = 0; i < m; ++i) d = mod_mul(d, v, a.p);
        }
        return mod_mul(num_.eval_mod(a), mod_inv(d, a.p), a.p);
    }

    std::string render() const {
        if (den_.empty()) return num_.render();
        return "[" + num_.render() + "] / [" + render_den(den_) + "]";
    }

    static std::string render_den(const DenMap& den) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [at, m] : den) {
            if (!first) os << "*";
            first = false;
            os << at.render();
            if (m != 1) os << "^" << m;
        }
        return os.str();
    }

    static LaurentPoly expand_den(const DenMap& den, int n) {
        LaurentPoly p = LaurentPoly::one(n);
        for (const auto& [at, m] : den)
            for (int i = 0; i < m; ++i) p = p * at.expand(n);
        return p;
    }

private:
    static DenMap diff(const DenMap& big, const DenMap& small) {
        DenMap r;
        for (const auto& [at, m] : big) {
            auto it = small.find(at);
            int have = it == small.end() ? 0 : it->second;
            if (m > have) r[at] = m - have;
        }
        return r;
    }

    LaurentPoly num_;
    DenMap den_;
};

/// q-Pochhammer (x; q^2)_l = prod_{i=0}^{l-1} (1 - q^{2i} x) for a monomial or
/// polynomial argument.
inline LaurentPoly poch_q2(const LaurentPoly& x, int l) {
    LaurentPoly r = LaurentPoly::one(x.n());
    for (int i = 0; i < l; ++i) {
        LaurentPoly f = LaurentPoly::one(x.n()) - x.scaled(FieldScalar::q_pow(2 * i));
        r = r * f;
    }
    return r;
}

} // namespace rsc
