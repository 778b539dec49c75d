#pragma once

#include <string>
#include <vector>

#include "weyl.hpp"

namespace rsc {

/// Root data for type C_n in the epsilon coordinates: positive roots are
/// e_i - e_j and e_i + e_j for i < j together with the long roots 2 e_i.
/// Roots are stored as integer exponent vectors so that X^alpha is a Laurent
/// monomial.
class RootSystemCn {
public:
    explicit RootSystemCn(int n) : n_(n) {
        if (n < 1) throw std::logic_error("RootSystemCn: n >= 1 required");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                ExpVec a = zero_exp(n);
                a[static_cast<size_t>(i)] = 1;
                a[static_cast<size_t>(j)] = -1;
                positive_.push_back(a);
                a[static_cast<size_t>(j)] = 1;
                positive_.push_back(a);
            }
        for (int i = 0; i < n; ++i) {
            ExpVec a = zero_exp(n);
            a[static_cast<size_t>(i)] = 2;
            positive_.push_back(a);
        }
        weyl_ = enumerate_weyl(n);
    }

    int n() const { return n_; }
    const std::vector<ExpVec>& positive_roots() const { return positive_; }
    const std::vector<WeylElem>& weyl() const { return weyl_; }

    /// alpha_i = e_i - e_{i+1} for i < n, alpha_n = 2 e_n.
    ExpVec simple(int i) const {
        ExpVec a = zero_exp(n_);
        if (i < 1 || i > n_) throw std::logic_error("simple root index");
        if (i < n_) {
            a[static_cast<size_t>(i - 1)] = 1;
            a[static_cast<size_t>(i)] = -1;
        } else {
            a[static_cast<size_t>(n_ - 1)] = 2;
        }
        return a;
    }

    /// highest root theta = 2 e_1.
    ExpVec theta() const {
        ExpVec a = zero_exp(n_);
        a[0] = 2;
        return a;
    }

    static bool is_long(const ExpVec& a) {
        for (int v : a)
            if (v == 2 || v == -2) return true;
        return false;
    }

    /// coroot: (e_i +- e_j)^vee = e_i +- e_j, (2 e_i)^vee = e_i.
    static ExpVec coroot(const ExpVec& a) {
        if (!is_long(a)) return a;
        ExpVec r = a;
        for (auto& v : r) v /= 2;
        return r;
    }

    /// height of a positive root in the simple-root expansion.
    int height(const ExpVec& a) const {
        int i = -1, j = -1;
        for (int k = 0; k < n_; ++k) {
            if (a[static_cast<size_t>(k)] == 0) continue;
            if (i < 0)
                i = k;
            else
                j = k;
        }
        if (j < 0) return 2 * (n_ - 1 - i) + 1;            // 2 e_{i+1}
        if (a[static_cast<size_t>(j)] < 0) return j - i;   // e - e
        return 2 * n_ - 1 - i - j;                         // e + e
    }

    /// omega_i^vee = e_1 + .. + e_i for i < n; omega_n^vee = (1/2,..,1/2).
    HalfVec omega_check(int i) const {
        if (i < 1 || i > n_) throw std::logic_error("fundamental coweight index");
        HalfVec h = HalfVec::zero(n_);
        if (i < n_) {
            for (int k = 0; k < i; ++k) h.d[static_cast<size_t>(k)] = 2;
        } else {
            for (int k = 0; k < n_; ++k) h.d[static_cast<size_t>(k)] = 1;
        }
        return h;
    }

    /// rho^vee = sum of fundamental coweights; coordinates (n - k + 1/2).
    HalfVec rho_check() const {
        HalfVec h = HalfVec::zero(n_);
        for (int k = 0; k < n_; ++k) h.d[static_cast<size_t>(k)] = 2 * (n_ - k) - 1;
        return h;
    }

    /// hatR = {alpha in R+ : (alpha, omega_n^vee) = 1} =
    ///        {e_i + e_j, i < j} u {2 e_i}; size n(n+1)/2.
    std::vector<ExpVec> hatR() const {
        std::vector<ExpVec> r;
        HalfVec wn = omega_check(n_);
        for (const auto& a : positive_)
            if (wn.pair2(a) == 2) r.push_back(a);
        return r;
    }

    /// hatR_w^+ = w(hatR) n R+ and hatR_w^- = (-w(hatR)) n R+, each listed in
    /// the positive-root order.  Together they partition w(hatR) up to sign.
    std::pair<std::vector<ExpVec>, std::vector<ExpVec>> hatR_split(const WeylElem& w) const {
        std::vector<ExpVec> plus, minus;
        for (const auto& a : hatR()) {
            ExpVec wa = w.act(a);
            if (lex_positive(wa))
                plus.push_back(wa);
            else
                minus.push_back(negate(wa));
        }
        // every w(alpha) is a root, and a root is positive exactly when its
        // first nonzero coordinate is, so lex-positivity decides membership.
        std::sort(plus.begin(), plus.end());
        std::sort(minus.begin(), minus.end());
        return {plus, minus};
    }

    /// l(tau(lambda)) = sum over R+ of |(lambda, alpha)|; integral for every
    /// lambda in the coweight lattice.
    long long tau_length(const HalfVec& lambda) const {
        if (!lambda.in_coweight_lattice())
            throw NotInCoweightLattice("tau_length of " + lambda.render());
        long long s = 0;
        for (const auto& a : positive_) {
            long long p = lambda.pair2(a);
            s += p < 0 ? -p : p;
        }
        if (s % 2 != 0) throw std::logic_error("tau_length: odd pairing sum");
        return s / 2;
    }

private:
    int n_;
    std::vector<ExpVec> positive_;
    std::vector<WeylElem> weyl_;
};

} // namespace rsc
