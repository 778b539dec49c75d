#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rsc {

/// Exponent vector of a Laurent monomial X_1^{e_1}..X_n^{e_n}.
using ExpVec = std::vector<int>;

inline ExpVec zero_exp(int n) { return ExpVec(static_cast<size_t>(n), 0); }

inline ExpVec operator+(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline ExpVec operator-(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline ExpVec negate(const ExpVec& a) {
    ExpVec r = a;
    for (auto& v : r) v = -v;
    return r;
}

inline bool is_zero_vec(const ExpVec& a) {
    for (int v : a)
        if (v) return false;
    return true;
}

inline long long dot(const ExpVec& a, const ExpVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

// first nonzero entry positive
inline bool lex_positive(const ExpVec& a) {
    for (int v : a) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;
}

/// Element of P^vee stored with doubled coordinates so half-integers stay
/// exact.  Membership in P^vee for type C means all doubled entries share one
/// parity.
struct HalfVec {
    std::vector<int> d; // doubled coordinates

    static HalfVec zero(int n) { return HalfVec{std::vector<int>(static_cast<size_t>(n), 0)}; }
    static HalfVec from_int(const ExpVec& v) {
        HalfVec h;
        h.d.reserve(v.size());
        for (int e : v) h.d.push_back(2 * e);
        return h;
    }

    int n() const { return static_cast<int>(d.size()); }
    bool is_zero() const { return is_zero_vec(d); }

    bool in_coweight_lattice() const {
        if (d.empty()) return true;
        int par = ((d[0] % 2) + 2) % 2;
        for (int v : d)
            if ((((v % 2) + 2) % 2) != par) return false;
        return true;
    }

    friend HalfVec operator+(const HalfVec& a, const HalfVec& b) { return HalfVec{a.d + b.d}; }
    friend HalfVec operator-(const HalfVec& a, const HalfVec& b) { return HalfVec{a.d - b.d}; }
    HalfVec operator-() const { return HalfVec{negate(d)}; }

    friend bool operator==(const HalfVec& a, const HalfVec& b) { return a.d == b.d; }
    friend bool operator<(const HalfVec& a, const HalfVec& b) { return a.d < b.d; }

    /// 2*(lambda, mu) for integral mu — always an integer.
    long long pair2(const ExpVec& mu) const { return dot(d, mu); }

    std::string render() const {
        std::string s = "[";
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d[i]);
            s += "/2";
        }
        return s + "]";
    }
};

/// Signed permutation: w(e_i) = sign_[i] * e_{img_[i]} (0-based).
/// Text form lists images of e_1..e_n, e.g. "[+2,-1]".
class WeylElem {
public:
    WeylElem() = default;

    static WeylElem identity(int n) {
        WeylElem w;
        w.img_.resize(static_cast<size_t>(n));
        w.sign_.assign(static_cast<size_t>(n), 1);
        for (int i = 0; i < n; ++i) w.img_[static_cast<size_t>(i)] = i;
        return w;
    }

    /// s_i for i in 1..n-1 swaps e_i, e_{i+1}; s_n flips the sign of e_n.
    static WeylElem simple_reflection(int n, int i) {
        WeylElem w = identity(n);
        if (i < 1 || i > n) throw std::logic_error("simple_reflection: index out of range");
        if (i < n) {
            std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
        } else {
            w.sign_[static_cast<size_t>(n - 1)] = -1;
        }
        return w;
    }

    static WeylElem longest(int n) {
        WeylElem w = identity(n);
        for (auto& s : w.sign_) s = -1; // w0 = -id in type C
        return w;
    }

    /// Reflection in epsilon_k (the s_theta case is k = 1).
    static WeylElem coordinate_flip(int n, int k) {
        WeylElem w = identity(n);
        w.sign_[static_cast<size_t>(k - 1)] = -1;
        return w;
    }

    int n() const { return static_cast<int>(img_.size()); }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (img_[static_cast<size_t>(i)] != i || sign_[static_cast<size_t>(i)] != 1) return false;
        return true;
    }

    /// (a o b): apply b first.
    static WeylElem compose(const WeylElem& a, const WeylElem& b) {
        WeylElem r;
        size_t n = a.img_.size();
        r.img_.resize(n);
        r.sign_.resize(n);
        for (size_t i = 0; i < n; ++i) {
            int j = b.img_[i];
            r.img_[i] = a.img_[static_cast<size_t>(j)];
            r.sign_[i] = static_cast<int8_t>(b.sign_[i] * a.sign_[static_cast<size_t>(j)]);
        }
        return r;
    }

    WeylElem inverse() const {
        WeylElem r;
        size_t m = img_.size();
        r.img_.resize(m);
        r.sign_.resize(m);
        for (size_t i = 0; i < m; ++i) {
            r.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
            r.sign_[static_cast<size_t>(img_[i])] = sign_[i];
        }
        return r;
    }

    int img(int i) const { return img_[static_cast<size_t>(i)]; }
    int sign_at(int i) const { return sign_[static_cast<size_t>(i)]; }

    ExpVec act(const ExpVec& v) const {
        ExpVec r(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) r[static_cast<size_t>(img_[i])] = sign_[i] * v[i];
        return r;
    }

    HalfVec act(const HalfVec& v) const { return HalfVec{act(v.d)}; }

    /// determinant: permutation parity times product of signs.
    int sgn() const {
        std::vector<bool> seen(img_.size(), false);
        int parity = 1;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            size_t j = i, len = 0;
            while (!seen[j]) {
                seen[j] = true;
                j = static_cast<size_t>(img_[j]);
                ++len;
            }
            if (len % 2 == 0) parity = -parity;
        }
        for (int8_t s : sign_) parity *= s;
        return parity;
    }

    friend bool operator==(const WeylElem& a, const WeylElem& b) {
        return a.img_ == b.img_ && a.sign_ == b.sign_;
    }
    friend bool operator<(const WeylElem& a, const WeylElem& b) {
        if (a.img_ != b.img_) return a.img_ < b.img_;
        return a.sign_ < b.sign_;
    }

    std::string render() const {
        std::string s = "[";
        for (size_t i = 0; i < img_.size(); ++i) {
            if (i) s += ",";
            s += sign_[i] > 0 ? "+" : "-";
            s += std::to_string(img_[i] + 1);
        }
        return s + "]";
    }

    static WeylElem from_parts(std::vector<int> img, std::vector<int8_t> sign) {
        WeylElem w;
        w.img_ = std::move(img);
        w.sign_ = std::move(sign);
        return w;
    }

    static WeylElem parse(const std::string& text, int n) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw ParseError("WeylElem: " + text);
        WeylElem w;
        w.img_.resize(static_cast<size_t>(n));
        w.sign_.resize(static_cast<size_t>(n));
        size_t pos = 1;
        for (int i = 0; i < n; ++i) {
            size_t end = text.find_first_of(",]", pos);
            if (end == std::string::npos) throw ParseError("WeylElem: " + text);
            std::string tok = text.substr(pos, end - pos);
            if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) throw ParseError("WeylElem entry: " + tok);
            w.sign_[static_cast<size_t>(i)] = tok[0] == '+' ? 1 : -1;
            w.img_[static_cast<size_t>(i)] = std::stoi(tok.substr(1)) - 1;
            pos = end + 1;
        }
        return w;
    }

private:
    std::vector<int> img_;
    std::vector<int8_t> sign_;
};

/// All 2^n n! signed permutations in a fixed deterministic order.
inline std::vector<WeylElem> enumerate_weyl(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<WeylElem> out;
    out.reserve(perms.size() << n);
    for (const auto& pm : perms) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int8_t> sg(static_cast<size_t>(n), 1);
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) sg[static_cast<size_t>(i)] = -1;
            out.push_back(WeylElem::from_parts(pm, sg));
        }
    }
    std::sort(out.begin(), out.end()); // canonical enumeration order
    return out;
}

} // namespace rsc
