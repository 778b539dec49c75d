#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "param.hpp"
#include "weyl.hpp"

namespace rsc {

/// Laurent polynomial in X_1..X_n with FieldScalar coefficients.  Terms are
/// kept in exponent-lex order, which is also the canonical rendering order.
class LaurentPoly {
public:
    using Terms = std::map<ExpVec, FieldScalar>;

    LaurentPoly() : n_(0) {}
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly zero(int n) { return LaurentPoly(n); }
    static LaurentPoly constant(int n, FieldScalar c) {
        LaurentPoly r(n);
        r.add_term(zero_exp(n), std::move(c));
        return r;
    }
    static LaurentPoly one(int n) { return constant(n, FieldScalar::one()); }
    static LaurentPoly monomial(int n, const ExpVec& e, FieldScalar c = FieldScalar::one()) {
        LaurentPoly r(n);
        r.add_term(e, std::move(c));
        return r;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_vec(terms_.begin()->first));
    }

    FieldScalar coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldScalar::zero() : it->second;
    }

    void add_term(const ExpVec& e, const FieldScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.n_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        // a one-term factor shifts exponents uniformly, which keeps lex order
        if (a.terms_.size() == 1) {
            const auto& [ea, ca] = *a.terms_.begin();
            bool unit = ca.is_one();
            for (const auto& [eb, cb] : b.terms_)
                r.terms_.emplace_hint(r.terms_.end(), ea + eb, unit ? cb : ca * cb);
            return r;
        }
        if (b.terms_.size() == 1) return b * a;
        // collect-sort-merge beats repeated map inserts on the big products
        std::vector<std::pair<ExpVec, FieldScalar>> prods;
        prods.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) prods.emplace_back(ea + eb, ca * cb);
        std::sort(prods.begin(), prods.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (size_t i = 0; i < prods.size();) {
            size_t j = i;
            FieldScalar acc = FieldScalar::zero();
            while (j < prods.size() && prods[j].first == prods[i].first) {
                acc = acc + prods[j].second;
                ++j;
            }
            if (!acc.is_zero()) r.terms_.emplace_hint(r.terms_.end(), prods[i].first, std::move(acc));
            i = j;
        }
        return r;
    }

    LaurentPoly scaled(const FieldScalar& c) const {
        LaurentPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    LaurentPoly mono_shifted(const ExpVec& s) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// sigma_{lambda,w}: X^mu -> q^{2(lambda, w(mu))} X^{w(mu)}.  With lambda=0
    /// this is the plain Weyl action.
    LaurentPoly sigma(const HalfVec& lambda, const WeylElem& w) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) {
            ExpVec we = w.act(e);
            long long qp = lambda.pair2(we);
            r.add_term(we, c * FieldScalar::q_pow(static_cast<int>(qp)));
        }
        return r;
    }

    LaurentPoly weyl_act(const WeylElem& w) const { return sigma(HalfVec::zero(n_), w); }

    /// tau(lambda): X^mu -> q^{2(lambda,mu)} X^mu.
    LaurentPoly tau(const HalfVec& lambda) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, c * FieldScalar::q_pow(static_cast<int>(lambda.pair2(e))));
        return r;
    }

    LaurentPoly specialize_t(int l1, int l2) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) r.add_term(e, c.specialize_t(l1, l2));
        return r;
    }

    bool is_invariant_under(const WeylElem& w) const { return weyl_act(w) == *this; }

    uint64_t eval_mod(const ModAssign& a) const {
        uint64_t acc = 0;
        for (const auto& [e, c] : terms_) {
            uint64_t t = c.eval_mod(a);
            for (size_t i = 0; i < e.size(); ++i)
                t = mod_mul(t, mod_pow_signed(a.x[i], e[i], a.p), a.p);
            acc = mod_add(acc, t, a.p);
        }
        return acc;
    }

    /// Canonical text; the scalar keeps its "(num)/(den)" wrapping so the
    /// string is unambiguous to parse back.
    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.render() << render_exp(e);
        }
        return os.str();
    }

    static std::string render_exp(const ExpVec& e) {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) s += "*X" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        return s;
    }

private:
    int n_;
    Terms terms_;
};

} // namespace rsc
