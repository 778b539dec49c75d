#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ratfn.hpp"
#include "root_system.hpp"

namespace rsc {

/// Key of a normal-ordered operator term: the q-shift tau(lambda) followed by
/// the Weyl part w.
struct OpKey {
    HalfVec shift;
    WeylElem w;

    friend bool operator<(const OpKey& a, const OpKey& b) {
        if (!(a.shift == b.shift)) return a.shift < b.shift;
        return a.w < b.w;
    }
    friend bool operator==(const OpKey& a, const OpKey& b) { return a.shift == b.shift && a.w == b.w; }
};

/// Difference-reflection operator in normal form:
///     sum over terms of  c_{lambda,w}(X) tau(lambda) w,
/// where tau(lambda) X^mu = q^{2(lambda,mu)} X^mu, (w f)(X) = f applied to the
/// w-permuted variables, and the coefficients are rational with factored
/// denominators.  Normal form makes composition, application and equality
/// purely mechanical.
class NormalOp {
public:
    using Terms = std::map<OpKey, RatFn>;

    NormalOp() : n_(0) {}
    explicit NormalOp(int n) : n_(n) {}

    static NormalOp zero(int n) { return NormalOp(n); }
    static NormalOp identity(int n) { return from_term(RatFn::one(n), HalfVec::zero(n), WeylElem::identity(n)); }
    static NormalOp weyl_op(int n, const WeylElem& w) { return from_term(RatFn::one(n), HalfVec::zero(n), w); }
    static NormalOp tau_op(int n, const HalfVec& lambda) {
        return from_term(RatFn::one(n), lambda, WeylElem::identity(n));
    }
    static NormalOp mult_op(const RatFn& c) {
        return from_term(c, HalfVec::zero(c.n()), WeylElem::identity(c.n()));
    }
    static NormalOp from_term(const RatFn& c, const HalfVec& lambda, const WeylElem& w) {
        NormalOp op(c.n());
        op.add_term(c, lambda, w);
        return op;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const RatFn& c, const HalfVec& lambda, const WeylElem& w) {
        if (c.is_zero()) return;
        OpKey k{lambda, w};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NormalOp operator+(const NormalOp& a, const NormalOp& b) {
        NormalOp r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(c, k.shift, k.w);
        return r;
    }
    friend NormalOp operator-(const NormalOp& a, const NormalOp& b) {
        NormalOp r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(-c, k.shift, k.w);
        return r;
    }
    NormalOp operator-() const {
        NormalOp r(n_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    NormalOp scaled(const FieldScalar& s) const {
        NormalOp r(n_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(s));
        return r;
    }

    /// left multiplication by a function: g * (c tau w) = (g c) tau w.
    NormalOp premultiplied(const RatFn& g) const {
        NormalOp r(n_);
        for (const auto& [k, c] : terms_) r.add_term(g * c, k.shift, k.w);
        return r;
    }

    /// (c1 tau(l1) w1)(c2 tau(l2) w2) = c1 sigma_{l1,w1}(c2) tau(l1 + w1 l2) (w1 w2),
    /// using that tau(l) and w act on products multiplicatively and
    /// w tau(l) w^{-1} = tau(w l).
    static NormalOp compose(const NormalOp& a, const NormalOp& b) {
        NormalOp r(a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                RatFn c = ca * cb.sigma(ka.shift, ka.w);
                r.add_term(c, ka.shift + ka.w.act(kb.shift), WeylElem::compose(ka.w, kb.w));
            }
        return r;
    }

    /// compose(a, b) - compose(b, a) accumulated into one term map, so the
    /// massive cancellations of a vanishing commutator happen while the sum
    /// is being built instead of between two fully simplified composites.
    static NormalOp commutator(const NormalOp& a, const NormalOp& b) {
        NormalOp r(a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                r.add_term(ca * cb.sigma(ka.shift, ka.w),
                           ka.shift + ka.w.act(kb.shift), WeylElem::compose(ka.w, kb.w));
                r.add_term(-(cb * ca.sigma(kb.shift, kb.w)),
                           kb.shift + kb.w.act(ka.shift), WeylElem::compose(kb.w, ka.w));
            }
        return r;
    }

    /// Apply to a rational function; always defined.
    RatFn apply_rat(const RatFn& f) const {
        RatFn acc = RatFn::zero(n_);
        for (const auto& [k, c] : terms_) acc = acc + c * f.sigma(k.shift, k.w);
        return acc;
    }

    RatFn apply_rat(const LaurentPoly& f) const {
        RatFn acc = RatFn::zero(n_);
        for (const auto& [k, c] : terms_) acc = acc + c.mul_poly(f.sigma(k.shift, k.w));
        return acc;
    }

    /// Apply to a Laurent polynomial expecting polynomial output; throws
    /// NonpolynomialResult when denominators survive.
    LaurentPoly apply(const LaurentPoly& f, const std::string& context = "operator application") const {
        return apply_rat(f).to_poly(context);
    }

    /// Restriction to Weyl-invariant inputs: w acts trivially there, so each
    /// term collapses onto its shift.  Result has identity Weyl parts only.
    NormalOp restrict_collapse() const {
        NormalOp r(n_);
        WeylElem e = WeylElem::identity(n_);
        for (const auto& [k, c] : terms_) r.add_term(c, k.shift, e);
        return r;
    }

    bool is_collapsed() const {
        for (const auto& [k, c] : terms_) {
            (void)c;
            if (!k.w.is_identity()) return false;
        }
        return true;
    }

    RatFn coeff_of(const HalfVec& lambda, const WeylElem& w) const {
        auto it = terms_.find(OpKey{lambda, w});
        return it == terms_.end() ? RatFn::zero(n_) : it->second;
    }
    RatFn coeff_of(const HalfVec& lambda) const { return coeff_of(lambda, WeylElem::identity(n_)); }

    NormalOp specialize_t(int l1, int l2) const {
        NormalOp r(n_);
        for (const auto& [k, c] : terms_) r.add_term(c.specialize_t(l1, l2), k.shift, k.w);
        return r;
    }

    friend bool op_equal(const NormalOp& a, const NormalOp& b) {
        NormalOp d = a - b;
        return d.terms_.empty();
    }

    /// Weaker comparison: equal action on a list of inputs.
    static bool equal_on(const NormalOp& a, const NormalOp& b, const std::vector<LaurentPoly>& inputs) {
        for (const auto& f : inputs)
            if (!ratfn_eq(a.apply_rat(f), b.apply_rat(f))) return false;
        return true;
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << "\n + ";
            first = false;
            os << "{" << c.render() << "} tau" << k.shift.render() << " w" << k.w.render();
        }
        return os.str();
    }

private:
    int n_;
    Terms terms_;
};

/// Multiplicative weight kept in factored form: unit * X^mono * prod atom^k
/// with k of either sign.  The gauge function Delta and its sigma-images live
/// here so conjugation cancels atoms instead of expanding them.
class FactoredWeight {
public:
    explicit FactoredWeight(int n)
        : n_(n), scalar_(FieldScalar::one()), mono_(zero_exp(n)) {}

    static FactoredWeight one(int n) { return FactoredWeight(n); }

    int n() const { return n_; }
    const FieldScalar& scalar() const { return scalar_; }
    const ExpVec& mono() const { return mono_; }
    const std::map<Atom, int, AtomCmp>& factors() const { return factors_; }

    void mul_scalar(const FieldScalar& s) { scalar_ = scalar_ * s; }
    void mul_monomial(const ExpVec& m) { mono_ = mono_ + m; }

    /// multiply by (1 - c X^mu)^k in any orientation.
    void mul_binomial(const FieldScalar& c, const ExpVec& mu, int k) {
        if (k == 0) return;
        auto ca = detail::canonicalize_binomial(c, mu, n_);
        for (int i = 0; i < std::abs(k); ++i) {
            if (k > 0) {
                scalar_ = scalar_ * ca.unit_scalar;
                mono_ = mono_ + ca.unit_mono;
            } else {
                scalar_ = scalar_ * ca.unit_scalar.inverse();
                mono_ = mono_ - ca.unit_mono;
            }
        }
        int& e = factors_[ca.atom];
        e += k;
        if (e == 0) factors_.erase(ca.atom);
    }

    FactoredWeight inverse() const {
        FactoredWeight r(n_);
        r.scalar_ = scalar_.inverse();
        r.mono_ = negate(mono_);
        for (const auto& [a, k] : factors_) r.factors_[a] = -k;
        return r;
    }

    friend FactoredWeight operator*(const FactoredWeight& a, const FactoredWeight& b) {
        FactoredWeight r = a;
        r.scalar_ = r.scalar_ * b.scalar_;
        r.mono_ = r.mono_ + b.mono_;
        for (const auto& [at, k] : b.factors_) {
            int& e = r.factors_[at];
            e += k;
            if (e == 0) r.factors_.erase(at);
        }
        return r;
    }

    FactoredWeight sigma(const HalfVec& lambda, const WeylElem& w) const {
        FactoredWeight r(n_);
        r.scalar_ = scalar_;
        r.mono_ = w.act(mono_);
        r.scalar_ = r.scalar_ * FieldScalar::q_pow(static_cast<int>(lambda.pair2(r.mono_)));
        for (const auto& [at, k] : factors_) {
            ExpVec wmu = w.act(at.mu);
            FieldScalar c2 = at.c * FieldScalar::q_pow(static_cast<int>(lambda.pair2(wmu)));
            r.mul_binomial(c2, wmu, k);
        }
        return r;
    }

    RatFn to_ratfn() const {
        RatFn r = RatFn::scalar(n_, scalar_);
        r.mul_monomial(mono_);
        for (const auto& [at, k] : factors_) r.mul_binomial(at.c, at.mu, k);
        return r;
    }

    FactoredWeight specialize_t(int l1, int l2) const {
        FactoredWeight r(n_);
        r.scalar_ = scalar_.specialize_t(l1, l2);
        r.mono_ = mono_;
        for (const auto& [at, k] : factors_) {
            FieldScalar c2 = at.c.specialize_t(l1, l2);
            if (c2.is_zero()) continue; // factor degenerates to 1
            int& e = r.factors_[Atom{at.mu, c2}];
            e += k;
            if (e == 0) r.factors_.erase(Atom{at.mu, c2});
        }
        return r;
    }

private:
    int n_;
    FieldScalar scalar_;
    ExpVec mono_;
    std::map<Atom, int, AtomCmp> factors_;
};

/// Delta * op * Delta^{-1} term by term: c tau(lambda) w picks up the ratio
/// Delta / sigma_{lambda,w}(Delta), which stays small because sigma permutes
/// the atom factors.
inline NormalOp gauge_conjugate(const NormalOp& op, const FactoredWeight& delta) {
    NormalOp r(op.n());
    for (const auto& [k, c] : op.terms()) {
        FactoredWeight ratio = delta * delta.sigma(k.shift, k.w).inverse();
        r.add_term(ratio.to_ratfn() * c, k.shift, k.w);
    }
    return r;
}

} // namespace rsc
