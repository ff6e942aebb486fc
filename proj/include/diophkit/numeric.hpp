#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace diophkit {

// Non-negative arbitrary-precision integer. Values in this toolkit grow
// doubly exponentially (2^(2^(n-2)) already at small n), so fixed-width
// arithmetic is never used for domain values.
using Nat = mpz_class;
using Int = mpz_class;

// A point of N^n; coordinate for variable x_i lives at index i-1.
using Tuple = std::vector<Nat>;

inline Nat nat_of(long v) { return Nat(v); }

// floor(sqrt(v)), v >= 0
inline Nat isqrt_floor(const Nat &v) {
    Nat r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// ceil(sqrt(v)), v >= 0
inline Nat isqrt_ceil(const Nat &v) {
    Nat r = isqrt_floor(v);
    if (r * r < v) r += 1;
    return r;
}

// floor(a/b), b > 0
inline Nat div_floor(const Nat &a, const Nat &b) {
    Nat q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ceil(a/b), b > 0
inline Nat div_ceil(const Nat &a, const Nat &b) {
    Nat q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string tuple_to_string(const Tuple &t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ' ';
        out += t[i].get_str();
    }
    return out;
}

}  // namespace diophkit
