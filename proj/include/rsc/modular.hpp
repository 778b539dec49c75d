#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace rsc {

// Residue arithmetic modulo word-sized primes p > 2^60.  Products fit in
// unsigned __int128, so no Montgomery form is needed.

inline uint64_t mod_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t mod_inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw DenominatorVanishes("inverse of 0 mod p");
    return mod_pow(a % p, p - 2, p); // p prime
}

// a^e with e possibly negative.
inline uint64_t mod_pow_signed(uint64_t a, long long e, uint64_t p) {
    if (e >= 0) return mod_pow(a, static_cast<uint64_t>(e), p);
    return mod_inv(mod_pow(a, static_cast<uint64_t>(-e), p), p);
}

namespace detail {

inline bool miller_rabin_once(uint64_t n, uint64_t a, uint64_t d, int r) {
    uint64_t x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mod_mul(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

// Deterministic for all n < 3.3e24 with this base set.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % s == 0) return n == s;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!detail::miller_rabin_once(n, a, d, r)) return false;
    }
    return true;
}

// splitmix64: cheap seeded stream, used for every random draw in the modular
// lane so that (seed, stream indices) pins the run exactly.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t mix_u64(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ull + b + (a << 6) + (a >> 2)));
}

// k-th verification prime: first prime >= 2^60 + (seeded offset), distinct per
// prime index.  Always > 2^60 as the spec's probe layer requires.
inline uint64_t probe_prime(uint64_t seed, int index) {
    uint64_t base = 1ull << 60;
    uint64_t off = splitmix64(mix_u64(seed, 0x70726d ^ static_cast<uint64_t>(index))) & ((1ull << 58) - 1);
    uint64_t cand = (base + off) | 1ull;
    while (!is_prime_u64(cand)) cand += 2;
    return cand;
}

// One evaluation point: residues for the parameters and for X_1..X_n.
struct ModAssign {
    uint64_t p = 0;
    uint64_t q = 0;
    uint64_t ts = 0;
    uint64_t tl = 0;
    std::vector<uint64_t> x;
};

// Draw in [2, p-2]: 0 and +-1 are degenerate for every atom (1 - c X^mu), so
// they are excluded from sampling.
inline uint64_t sample_unit(uint64_t seed, uint64_t stream, uint64_t p) {
    uint64_t v = splitmix64(mix_u64(seed, stream));
    return 2 + v % (p - 3);
}

inline ModAssign sample_assignment(uint64_t seed, int prime_index, int point_index, int n, int attempt = 0) {
    ModAssign a;
    a.p = probe_prime(seed, prime_index);
    uint64_t s0 = mix_u64(mix_u64(seed, 0x7074 ^ static_cast<uint64_t>(point_index)),
                          0xA7 + static_cast<uint64_t>(attempt) * 1315423911ull);
    a.q = sample_unit(s0, 1, a.p);
    a.ts = sample_unit(s0, 2, a.p);
    a.tl = sample_unit(s0, 3, a.p);
    a.x.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a.x[static_cast<size_t>(i)] = sample_unit(s0, 16 + static_cast<uint64_t>(i), a.p);
    return a;
}

} // namespace rsc
