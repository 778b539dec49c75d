#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "modular.hpp"

namespace rsc {

using BigInt = boost::multiprecision::cpp_int;

// Monomial q^a ts^b tl^c.  Exponents are nonnegative; inverse parameters live
// in the denominator of FieldScalar.
struct PExp {
    int q = 0, ts = 0, tl = 0;

    int total() const { return q + ts + tl; }

    friend bool operator==(const PExp& a, const PExp& b) {
        return a.q == b.q && a.ts == b.ts && a.tl == b.tl;
    }
};

// degree-lex: total degree first, then (q, ts, tl) lexicographically.
struct PExpCmp {
    bool operator()(const PExp& a, const PExp& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.q != b.q) return a.q < b.q;
        if (a.ts != b.ts) return a.ts < b.ts;
        return a.tl < b.tl;
    }
};

/// Polynomial in (q, t_s, t_l) over arbitrary-precision integers.
class ParamPoly {
public:
    using Terms = std::map<PExp, BigInt, PExpCmp>;

    ParamPoly() = default;

    static ParamPoly integer(BigInt v) {
        ParamPoly r;
        if (v != 0) r.terms_[PExp{}] = std::move(v);
        return r;
    }
    static ParamPoly one() { return integer(1); }
    static ParamPoly monomial(int a, int b, int c, BigInt coeff = 1) {
        ParamPoly r;
        if (coeff != 0) r.terms_[PExp{a, b, c}] = std::move(coeff);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == PExp{} && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const PExp& e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return merged(a, b, false); }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return merged(a, b, true); }
    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        // a uniform exponent shift preserves degree-lex order, so a monomial
        // factor gives the product in one ordered pass
        if (a.terms_.size() == 1) {
            const auto& [ea, ca] = *a.terms_.begin();
            for (const auto& [eb, cb] : b.terms_)
                r.terms_.emplace_hint(r.terms_.end(), PExp{ea.q + eb.q, ea.ts + eb.ts, ea.tl + eb.tl}, ca * cb);
            return r;
        }
        if (b.terms_.size() == 1) return b * a;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(PExp{ea.q + eb.q, ea.ts + eb.ts, ea.tl + eb.tl}, ca * cb);
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    // total order, used for map keys; zero sorts first.
    static int compare(const ParamPoly& a, const ParamPoly& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        PExpCmp cmp;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (cmp(ia->first, ib->first)) return -1;
            if (cmp(ib->first, ia->first)) return 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != a.terms_.end()) return 1;
        if (ib != b.terms_.end()) return -1;
        return 0;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    PExp monomial_content() const {
        PExp m{1 << 30, 1 << 30, 1 << 30};
        for (const auto& [e, c] : terms_) {
            (void)c;
            m.q = std::min(m.q, e.q);
            m.ts = std::min(m.ts, e.ts);
            m.tl = std::min(m.tl, e.tl);
        }
        return m;
    }

    void divide_content(const BigInt& g) {
        if (g == 1) return;
        for (auto& [e, c] : terms_) c /= g;
    }

    void divide_monomial(const PExp& m) {
        if (m.q == 0 && m.ts == 0 && m.tl == 0) return;
        Terms t;
        // uniform shift keeps degree-lex order
        for (const auto& [e, c] : terms_)
            t.emplace_hint(t.end(), PExp{e.q - m.q, e.ts - m.ts, e.tl - m.tl}, c);
        terms_ = std::move(t);
    }

    // sign of the degree-lex leading coefficient; 0 for the zero polynomial.
    int leading_sign() const {
        if (terms_.empty()) return 0;
        return terms_.rbegin()->second < 0 ? -1 : 1;
    }

    /// t_l -> q^{l1}, t_s -> q^{l2}.  Total on polynomials.
    ParamPoly specialize(int l1, int l2) const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.add_term(PExp{e.q + l1 * e.tl + l2 * e.ts, 0, 0}, c);
        return r;
    }

    uint64_t eval_mod(const ModAssign& a) const {
        uint64_t acc = 0;
        const BigInt p = a.p;
        for (const auto& [e, c] : terms_) {
            BigInt cm = c % p;
            if (cm < 0) cm += p;
            uint64_t term = static_cast<uint64_t>(cm);
            term = mod_mul(term, mod_pow(a.q, static_cast<uint64_t>(e.q), a.p), a.p);
            term = mod_mul(term, mod_pow(a.ts, static_cast<uint64_t>(e.ts), a.p), a.p);
            term = mod_mul(term, mod_pow(a.tl, static_cast<uint64_t>(e.tl), a.p), a.p);
            acc = mod_add(acc, term, a.p);
        }
        return acc;
    }

    /// Canonical text: terms in degree-lex order, "c", "c*q^a*ts^b*tl^c",
    /// joined by " + ".  Exponent-1 factors keep the explicit "^1".
    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            if (e.q) os << "*q^" << e.q;
            if (e.ts) os << "*ts^" << e.ts;
            if (e.tl) os << "*tl^" << e.tl;
        }
        return os.str();
    }

private:
    static ParamPoly merged(const ParamPoly& a, const ParamPoly& b, bool negate_b) {
        ParamPoly r;
        PExpCmp cmp;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (cmp(ia->first, ib->first)) {
                r.terms_.emplace_hint(r.terms_.end(), *ia);
                ++ia;
            } else if (cmp(ib->first, ia->first)) {
                r.terms_.emplace_hint(r.terms_.end(), ib->first, negate_b ? -ib->second : ib->second);
                ++ib;
            } else {
                BigInt c = negate_b ? BigInt(ia->second - ib->second) : BigInt(ia->second + ib->second);
                if (c != 0) r.terms_.emplace_hint(r.terms_.end(), ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        for (; ia != a.terms_.end(); ++ia) r.terms_.emplace_hint(r.terms_.end(), *ia);
        for (; ib != b.terms_.end(); ++ib)
            r.terms_.emplace_hint(r.terms_.end(), ib->first, negate_b ? -ib->second : ib->second);
        return r;
    }

    Terms terms_;
};

/// Scalar field element: fraction of ParamPoly, normalized so that numerator
/// and denominator share no monomial factor and no integer content, and the
/// denominator's leading sign is positive.  Equality is decided by
/// cross-multiplication; representatives are canonical per construction path,
/// not per equivalence class.
class FieldScalar {
public:
    FieldScalar() : num_(), den_(ParamPoly::one()) {}
    FieldScalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::logic_error("FieldScalar: zero denominator");
        normalize();
    }

    static FieldScalar integer(BigInt v) { return FieldScalar(ParamPoly::integer(std::move(v)), ParamPoly::one()); }
    static FieldScalar zero() { return integer(0); }
    static FieldScalar one() { return integer(1); }

    /// q^k, t_s^k, t_l^k for k of either sign.
    static FieldScalar q_pow(int k) { return from_monomial(k, 0, 0); }
    static FieldScalar ts_pow(int k) { return from_monomial(0, k, 0); }
    static FieldScalar tl_pow(int k) { return from_monomial(0, 0, k); }

    static FieldScalar from_monomial(int a, int b, int c, BigInt coeff = 1) {
        PExp n{a > 0 ? a : 0, b > 0 ? b : 0, c > 0 ? c : 0};
        PExp d{a < 0 ? -a : 0, b < 0 ? -b : 0, c < 0 ? -c : 0};
        return FieldScalar(ParamPoly::monomial(n.q, n.ts, n.tl, std::move(coeff)),
                           ParamPoly::monomial(d.q, d.ts, d.tl, 1));
    }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        if (a.den_ == b.den_) return FieldScalar(a.num_ + b.num_, a.den_);
        return FieldScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
        if (a.den_ == b.den_) return FieldScalar(a.num_ - b.num_, a.den_);
        return FieldScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    FieldScalar operator-() const {
        FieldScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return FieldScalar(a.num_ * b.num_, a.den_ * b.den_);
    }

    FieldScalar inverse() const {
        if (is_zero()) throw std::logic_error("FieldScalar: inverse of zero");
        return FieldScalar(den_, num_);
    }
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) { return a * b.inverse(); }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    // representative order (not an order on the field); adequate for map keys.
    static int compare(const FieldScalar& a, const FieldScalar& b) {
        int c = ParamPoly::compare(a.den_, b.den_);
        if (c) return c;
        return ParamPoly::compare(a.num_, b.num_);
    }

    /// t_l -> q^{l1}, t_s -> q^{l2}; throws if the denominator collapses.
    FieldScalar specialize_t(int l1, int l2) const {
        ParamPoly d = den_.specialize(l1, l2);
        if (d.is_zero())
            throw ZeroDenominatorAfterSpecialization("den (" + den_.render() + ") at l=(" +
                                                     std::to_string(l1) + "," + std::to_string(l2) + ")");
        return FieldScalar(num_.specialize(l1, l2), std::move(d));
    }

    uint64_t eval_mod(const ModAssign& a) const {
        uint64_t d = den_.eval_mod(a);
        if (d == 0) throw DenominatorVanishes("scalar den " + den_.render());
        return mod_mul(num_.eval_mod(a), mod_inv(d, a.p), a.p);
    }

    /// Canonical text "(num)/(den)".
    std::string render() const { return "(" + num_.render() + ")/(" + den_.render() + ")"; }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = ParamPoly::one();
            return;
        }
        PExp mn = num_.monomial_content();
        PExp md = den_.monomial_content();
        PExp common{std::min(mn.q, md.q), std::min(mn.ts, md.ts), std::min(mn.tl, md.tl)};
        num_.divide_monomial(common);
        den_.divide_monomial(common);
        BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
        if (g > 1) {
            num_.divide_content(g);
            den_.divide_content(g);
        }
        if (den_.leading_sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    ParamPoly num_;
    ParamPoly den_;
};

} // namespace rsc
