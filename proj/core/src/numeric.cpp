#include "sunit/numeric.hpp"

#include "sunit/errors.hpp"

namespace sunit {

std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<long> out;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xB5297A4Dul);
    while (true) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x;
        Int c = rng.get_z_range(n - 1) + 1;
        Int d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (n % p == 0) {
            ++out[p];
            factor_into(n / p, out);
            return;
        }
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factor(Int n) {
    if (n == 0) throw Error("factor(0)");
    n = abs(n);
    std::map<Int, unsigned> out;
    // trial division first, rho only for what survives
    for (long p = 2; p <= 100000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) factor_into(n, out);
    return out;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace sunit
