"""Prototype bounded S-unit solver over Q(zeta16)+ used to calibrate the
search bound for the shipped fixtures.  Exact integer arithmetic with a
power-of-2 denominator exponent; not shipped into the library."""

import json
import os
import sys
import time
from fractions import Fraction

HERE = os.path.dirname(__file__)


def load(name):
    with open(os.path.join(HERE, "..", "..", "data", "fields", name)) as f:
        return json.load(f)


def parse_vec(v):
    return [Fraction(x) for x in v]


class Table:
    def __init__(self, fx):
        self.n = fx["degree"]
        tbl = fx["mult_table"]
        self.tbl = [[[Fraction(x) for x in tbl[i][j]] for j in range(self.n)]
                    for i in range(self.n)]
        # integer table expected for these fixtures
        self.itbl = [[[int(x) for x in self.tbl[i][j]] for j in range(self.n)]
                     for i in range(self.n)]
        self.autos = fx.get("automorphisms")

    def mul(self, a, b):
        n = self.n
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n):
                bj = b[j]
                if bj == 0:
                    continue
                c = ai * bj
                row = self.itbl[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] += c * row[k]
        return out

    def norm(self, a):
        # product over all automorphism images equals the absolute norm
        prod = None
        for m in self.autos:
            img = [sum(m[i][j] * a[j] for j in range(self.n))
                   for i in range(self.n)]
            prod = img if prod is None else self.mul(prod, img)
        assert all(x == 0 for x in prod[1:]), prod
        return prod[0]


def ipow(K, v, e, inv=None):
    out = [1] + [0] * (K.n - 1)
    base = v if e >= 0 else inv
    for _ in range(abs(e)):
        out = K.mul(out, base)
    return out


def main(bound):
    fx = load("zeta16_plus.json")
    K = Table(fx)
    n = K.n
    theta = [int(Fraction(x)) for x in
             parse_vec(fx["prime_fixtures"][0]["uniformizer"])]
    units = [[int(Fraction(x)) for x in parse_vec(u)]
             for u in fx["unit_generators"]]
    # theta^-1 = (4*theta - theta^3)/2 ; represent negative powers by
    # multiplying with (4t - t^3) and tracking the 2-exponent
    theta_inv_num = K.mul([0, 4, 0, -1], [1, 0, 0, 0])

    # sanity: theta * theta_inv_num == 2
    chk = K.mul(theta, theta_inv_num)
    assert chk == [2, 0, 0, 0], chk

    uinv = []
    for u in units:
        # unit inverse: norm +-1 -> inverse = +-(product of the other conjugates)
        prod = None
        for m in K.autos:
            img = [sum(m[i][j] * u[j] for j in range(n)) for i in range(n)]
            if img == u and prod is None and K.autos.index(m) == 0:
                continue
            pass
        # simpler: solve u * x = 1 over fractions
        from numfield import solve_fraction
        mm = [[Fraction(0)] * n for _ in range(n)]
        basis = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
        for j in range(n):
            col = K.mul(u, basis[j])
            for i in range(n):
                mm[i][j] = Fraction(col[i])
        x = solve_fraction(mm, [Fraction(1), 0, 0, 0])
        xi = [int(c) for c in x]
        assert K.mul(u, xi) == [1, 0, 0, 0]
        uinv.append(xi)

    B = bound
    # precompute powers
    tpow = {}
    for a in range(-B, B + 1):
        if a >= 0:
            tpow[a] = (ipow(K, theta, a), 0)
        else:
            tpow[a] = (ipow(K, theta_inv_num, -a), -a)
    upow = []
    for u, ui in zip(units, uinv):
        d = {}
        for e in range(-B, B + 1):
            d[e] = ipow(K, u, e, ui)
        upow.append(d)

    two_k = {k: 2 ** k for k in range(0, 8 * B + 10)}

    def is_power_of_two(x):
        x = abs(x)
        return x != 0 and (x & (x - 1)) == 0

    sols = []
    t0 = time.time()
    cnt = 0
    for b in range(-B, B + 1):
        pb = upow[0][b]
        for c in range(-B, B + 1):
            pc = K.mul(pb, upow[1][c])
            for d in range(-B, B + 1):
                pd = K.mul(pc, upow[2][d])
                for a in range(-B, B + 1):
                    tp, k = tpow[a]
                    lam_num = K.mul(pd, tp)  # lambda = +- lam_num / 2^k
                    den = two_k[k]
                    for sign in (1, -1):
                        cnt += 1
                        # mu = 1 - sign*lam_num/2^k = (den - sign*lam_num)/den
                        mu = [den - sign * lam_num[0]] + \
                             [-sign * x for x in lam_num[1:]]
                        if all(x == 0 for x in mu):
                            continue
                        nm = K.norm(mu)
                        if nm != 0 and is_power_of_two(nm):
                            sols.append(((sign, a, b, c, d),
                                         tuple(Fraction(x, den) for x in
                                               (sign * y for y in lam_num))))
    # lambda in box and mu an S-unit; pair condition: mu's vector in box too
    lam_set = {s[1] for s in sols}
    paired = []
    for (vec, lam) in sols:
        mu = (Fraction(1) - lam[0],) + tuple(-x for x in lam[1:])
        if mu in lam_set:
            paired.append((vec, lam))
    print(f"bound {B}: candidates {cnt}, verified lambdas {len(sols)}, "
          f"paired {len(paired)}, time {time.time()-t0:.1f}s")
    ex = sorted(abs(x) for (v, l) in paired for x in v[1:])
    print("max |exponent| among paired solutions:", ex[-1] if ex else None)
    import collections
    hist = collections.Counter()
    for (v, l) in paired:
        hist[max(abs(x) for x in v[1:])] += 1
    print("per-max-exponent counts:", dict(sorted(hist.items())))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
