#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sunit {

using Int = mpz_class;
using Rat = mpq_class;

// sentinel for ord_P(0)
inline constexpr long kValInfinity = LONG_MAX;

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    Rat r = 1;
    Rat b = e >= 0 ? base : Rat(1) / base;
    unsigned long k = e >= 0 ? e : -e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// largest e with p^e | n, for n != 0
inline long int_valuation(Int n, const Int& p) {
    if (n == 0) return kValInfinity;
    long v = 0;
    Int q, r;
    n = abs(n);
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

inline long rat_valuation(const Rat& x, const Int& p) {
    if (x == 0) return kValInfinity;
    return int_valuation(x.get_num(), p) - int_valuation(x.get_den(), p);
}

// Euclidean remainder in [0, m)
inline long mod_euclid(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline Int mod_euclid(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<long> primes_up_to(long n);

// full factorization, trial division then Pollard rho; n != 0
std::map<Int, unsigned> factor(Int n);

// divides out all factors of p from n, returns the p-free part
inline Int remove_factors(Int n, const Int& p) {
    Int q, r;
    while (n != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
    }
    return n;
}

inline bool is_squarefree(long d) {
    if (d == 0) return false;
    long n = d < 0 ? -d : d;
    for (long q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace sunit
