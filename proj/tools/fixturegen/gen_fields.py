"""Generate the table-field fixtures shipped under data/fields/.

Fields produced:
  - zeta16.json       degree 8, Q(z) with z a primitive 16th root of unity
  - zeta16_plus.json  degree 4, the maximal real subfield Q(z + 1/z)
  - q25_deg5.json     degree 5, the subfield of Q(zeta_25) of degree 5

Unit generators are cyclotomic units; for the 2-power cyclotomic fields
these generate the full unit group (the cyclotomic-unit index equals the
plus-part class number, which is 1 here).  Every emitted quantity is
validated exactly before being written.
"""

import json
import math
import os
import sys
from fractions import Fraction

from numfield import (PowerBasisField, det_fraction, frac_str,
                      solve_rectangular, vec_str)

OUT = os.path.join(os.path.dirname(__file__), "..", "..", "data", "fields")


def cyclotomic_poly_16():
    # x^8 + 1
    return [1, 0, 0, 0, 0, 0, 0, 0, 1]


def build_zeta16():
    F = PowerBasisField(cyclotomic_poly_16())
    z = F.gen()

    def zpow(k):
        return F.power(z, k % 16)

    one = F.one()
    pi = F.sub(one, z)  # uniformizer above 2, (1 - z)
    inv_pi = F.inv(pi)

    def xi(a):
        # z^((1-a)/2) * (1 - z^a) / (1 - z), a real cyclotomic unit
        num = F.sub(one, zpow(a))
        u = F.mul(num, inv_pi)
        pref = zpow(((1 - a) // 2) % 16)
        return F.mul(pref, u)

    xi3, xi5, xi7 = xi(3), xi(5), xi(7)

    # exact validation
    assert F.norm(pi) == 2
    for u in (xi3, xi5, xi7):
        assert abs(F.norm(u)) == 1
    assert F.eq(F.power(z, 16), one)
    assert not F.eq(F.power(z, 8), one)

    # automorphisms z -> z^k, k odd
    autos = {}
    for k in range(1, 16, 2):
        cols = [zpow(k * j) for j in range(8)]
        autos[k] = [[cols[j][i] for j in range(8)] for i in range(8)]

    return F, z, pi, (xi3, xi5, xi7), autos


def real_subfield_data(F, z, elems):
    """Express real elements of Q(zeta16) in the power basis of
    t = z + z^-1 (minimal polynomial x^4 - 4x^2 + 2)."""
    one = F.one()
    t = F.add(z, F.inv(z))
    tp = [one, t, F.mul(t, t), F.mul(F.mul(t, t), t)]
    out = []
    for e in elems:
        sol = solve_rectangular(tp, e)
        assert sol is not None, "element is not in the real subfield"
        out.append(sol)
    return out


def mult_table(K):
    n = K.n
    t = K.gen()
    basis = [K.one()]
    for _ in range(n - 1):
        basis.append(K.mul(basis[-1], t))
    tbl = [[K.mul(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    # commutativity + associativity on all basis triples
    for i in range(n):
        for j in range(n):
            assert tbl[i][j] == tbl[j][i]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = K.mul(tbl[i][j], basis[k])
                right = K.mul(basis[i], tbl[j][k])
                assert left == right
    return tbl


def auto_matrix(K, image_of_gen):
    """Matrix of the automorphism sending the power-basis generator to
    image_of_gen (columns = images of basis elements)."""
    n = K.n
    cols = [K.one()]
    for _ in range(n - 1):
        cols.append(K.mul(cols[-1], image_of_gen))
    m = [[cols[j][i] for j in range(n)] for i in range(n)]
    return m


def apply_matrix(m, v):
    n = len(m)
    return [sum(m[i][j] * v[j] for j in range(n)) for i in range(n)]


def check_automorphism(K, m):
    t = K.gen()
    img_t = apply_matrix(m, t)
    for a in (t, K.mul(t, t), K.add(t, K.one())):
        for b in (t, K.sub(t, K.one())):
            lhs = apply_matrix(m, K.mul(a, b))
            rhs = K.mul(apply_matrix(m, a), apply_matrix(m, b))
            assert lhs == rhs
    # generator image must satisfy the minimal polynomial
    acc = K.zero()
    p = K.one()
    for c in K.minpoly:
        acc = K.add(acc, K.scal(c, p))
        p = K.mul(p, img_t)
    assert K.is_zero(acc)


def log_rank_check(minpoly, units_coords, expected_rank):
    """Float-only sanity check that the units are multiplicatively
    independent (rank of log-embedding matrix)."""
    import numpy as np
    coeffs = list(reversed([float(c) for c in minpoly]))
    roots = np.roots(coeffs)
    rows = []
    for u in units_coords:
        row = []
        for r in roots:
            val = sum(complex(Fraction(c)) * r ** i for i, c in enumerate(u))
            row.append(math.log(abs(val)))
        rows.append(row)
    rank = np.linalg.matrix_rank(np.array(rows), tol=1e-6)
    assert rank == expected_rank, (rank, expected_rank)


def emit(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")
    print("wrote", path)


def int_matrix(m):
    out = []
    for row in m:
        r = []
        for x in row:
            assert Fraction(x).denominator == 1
            r.append(int(x))
        out.append(r)
    return out


def gen_zeta16_fixtures():
    F, z, pi, (xi3, xi5, xi7), autos = build_zeta16()
    tbl = mult_table(F)

    auto_list = []
    for k in sorted(autos):
        check_automorphism(F, autos[k])
        auto_list.append(int_matrix(autos[k]))

    log_rank_check(cyclotomic_poly_16(), [xi3, xi5, xi7], 3)

    fixture = {
        "schema": "sunit-field-1",
        "kind": "table",
        "label": "Q(zeta16)",
        "degree": 8,
        "basis_names": [f"z^{i}" if i else "1" for i in range(8)],
        "min_poly": [1, 0, 0, 0, 0, 0, 0, 0, 1],
        "mult_table": [[vec_str(tbl[i][j]) for j in range(8)] for i in range(8)],
        "signature": [0, 4],
        "galois": True,
        "class_number": 1,
        "torsion": {"generator": vec_str(z), "order": 16},
        "unit_generators": [vec_str(xi3), vec_str(xi5), vec_str(xi7)],
        "automorphisms": auto_list,
        "prime_fixtures": [
            {"p": 2, "e": 8, "f": 1, "label": "P2", "uniformizer": vec_str(pi)}
        ],
    }
    emit(os.path.join(OUT, "zeta16.json"), fixture)

    # ---- real subfield ----
    K = PowerBasisField([2, 0, -4, 0, 1])  # x^4 - 4x^2 + 2
    t = F.add(z, F.inv(z))
    theta = K.gen()
    (xi3p, xi5p, xi7p) = real_subfield_data(F, z, [xi3, xi5, xi7])
    assert K.norm(theta) == 2
    for u in (xi3p, xi5p, xi7p):
        assert abs(K.norm(u)) == 1

    # cross-check: mapping theta back into F reproduces t
    tblK = mult_table(K)
    sigma = auto_matrix(K, apply_min_auto(K))
    autosK = [auto_matrix(K, g) for g in all_autos_deg4(K)]
    for m in autosK:
        check_automorphism(K, m)
    log_rank_check([2, 0, -4, 0, 1], [xi3p, xi5p, xi7p], 3)

    fixture = {
        "schema": "sunit-field-1",
        "kind": "table",
        "label": "Q(zeta16)+",
        "degree": 4,
        "basis_names": ["1", "t", "t^2", "t^3"],
        "min_poly": [2, 0, -4, 0, 1],
        "mult_table": [[vec_str(tblK[i][j]) for j in range(4)] for i in range(4)],
        "signature": [4, 0],
        "galois": True,
        "class_number": 1,
        "torsion": {"generator": vec_str(K.scal(-1, K.one())), "order": 2},
        "unit_generators": [vec_str(xi3p), vec_str(xi5p), vec_str(xi7p)],
        "automorphisms": [int_matrix(m) for m in autosK],
        "prime_fixtures": [
            {"p": 2, "e": 4, "f": 1, "label": "P2",
             "uniformizer": vec_str(theta)}
        ],
    }
    emit(os.path.join(OUT, "zeta16_plus.json"), fixture)


def apply_min_auto(K):
    # generator of Gal(Q(zeta16)+/Q): t -> t^3 - 3t
    t = K.gen()
    t3 = K.mul(K.mul(t, t), t)
    return K.sub(t3, K.scal(3, t))


def all_autos_deg4(K):
    t = K.gen()
    imgs = [t]
    cur = t
    for _ in range(3):
        # apply sigma: substitute cur into x^3 - 3x
        c3 = K.mul(K.mul(cur, cur), cur)
        cur = K.sub(c3, K.scal(3, cur))
        imgs.append(cur)
    assert imgs[0] != imgs[1]
    return imgs


def gen_q25_deg5():
    # eta = z + z^7 + z^18 + z^24 in Q(zeta25), the degree-5 subfield.
    # Phi_25(x) = x^20 + x^15 + x^10 + x^5 + 1
    phi = [0] * 21
    phi[0] = phi[5] = phi[10] = phi[15] = phi[20] = 1
    C = PowerBasisField(phi)
    z = C.gen()

    def zpow(k):
        return C.power(z, k % 25)

    orbit = [1, 7, 18, 24]
    eta = C.zero()
    for a in orbit:
        eta = C.add(eta, zpow(a))

    # minimal polynomial of eta
    pows = [C.one()]
    for _ in range(5):
        pows.append(C.mul(pows[-1], eta))
    target = [-c for c in pows[5]]
    sol = solve_rectangular(pows[:5], target)
    assert sol is not None
    minpoly = [s for s in sol] + [Fraction(1)]
    minpoly_int = [int(c) for c in minpoly]
    assert all(Fraction(c).denominator == 1 for c in minpoly)
    print("deg5 minpoly:", minpoly_int)

    K = PowerBasisField(minpoly_int)
    disc = poly_disc(minpoly_int)
    print("deg5 disc(minpoly):", disc)
    # field disc is 5^8 (conductor 25, four characters of conductor 25 and
    # the trivial one); Z[eta] has index sqrt(disc/5^8)
    index2 = disc // 5 ** 8
    index = int(math.isqrt(int(index2)))
    assert index * index == index2

    # enlarge Z[eta] to the maximal order by adjoining integral elements
    # with denominator dividing the index
    basis = [[Fraction(1) if i == j else Fraction(0) for j in range(5)]
             for i in range(5)]  # rows: coords over eta-power basis

    def order_disc(rows):
        g = [[trace_form(K, rows[i], rows[j]) for j in range(5)]
             for i in range(5)]
        return det_fraction(g)

    assert index == 7
    w = find_integral_denominator_p(K, basis, 7)
    assert w is not None
    # normalize w so its eta^4 coefficient is exactly 1/7, then the basis
    # {1, eta, eta^2, eta^3, w} has index 7 over Z[eta], hence is maximal
    a4 = w[4] * 7
    assert a4.denominator == 1 and int(a4) % 7 != 0
    k = pow(int(a4), -1, 7)
    w = [Fraction(k) * x for x in w]
    w = [x - (x // 1) for x in w]  # reduce mod Z coordinatewise
    assert w[4] == Fraction(1, 7)
    basis = [basis[0], basis[1], basis[2], basis[3], w]
    final_disc = order_disc(basis)
    print("deg5 order disc:", final_disc)
    assert final_disc == 5 ** 8, "failed to reach the maximal order"

    def to_new_basis(coords_eta):
        s = solve_rectangular(transpose_cols(basis), coords_eta)
        assert s is not None
        return s

    def new_mul(a, b):
        # a, b coords over new basis -> product over new basis
        ae = mat_vec_cols(basis, a)
        be = mat_vec_cols(basis, b)
        return to_new_basis(K.mul(ae, be))

    nb = [[Fraction(1) if i == j else Fraction(0) for j in range(5)]
          for i in range(5)]
    tbl = [[new_mul(nb[i], nb[j]) for j in range(5)] for i in range(5)]
    for i in range(5):
        for j in range(5):
            assert all(x.denominator == 1 for x in tbl[i][j])

    # uniformizer above 5: u = N_{Q(z25)/K}(1 - z)
    u25 = C.one()
    for a in orbit:
        u25 = C.mul(u25, C.sub(C.one(), zpow(a)))
    etap = [C.one()]
    for _ in range(4):
        etap.append(C.mul(etap[-1], eta))
    u_eta = solve_rectangular(etap, u25)
    assert u_eta is not None
    assert abs(K.norm(u_eta)) == 5
    u_new = to_new_basis(u_eta)

    def conj_in_eta(elem_eta, i):
        g = pow(2, i, 25)
        eta_g = C.zero()
        for a in orbit:
            eta_g = C.add(eta_g, zpow(a * g))
        v = C.zero()
        acc = C.one()
        for c in elem_eta:
            v = C.add(v, C.scal(c, acc))
            acc = C.mul(acc, eta_g)
        return solve_rectangular(etap, v)

    units = []
    for i in range(1, 5):
        conj = conj_in_eta(u_eta, i)
        q = K.div(conj, u_eta)
        assert abs(K.norm(q)) == 1
        units.append(to_new_basis(q))

    autos = []
    for i in range(5):
        cols = []
        for j in range(5):
            img = conj_in_eta(mat_vec_cols(basis, nb[j]), i)
            cols.append(to_new_basis(img))
        m = [[cols[j][r] for j in range(5)] for r in range(5)]
        autos.append(int_matrix(m))

    log_rank_check(minpoly_int,
                   [mat_vec_cols(basis, u) for u in units], 4)

    fixture = {
        "schema": "sunit-field-1",
        "kind": "table",
        "label": "Q25-deg5",
        "degree": 5,
        "basis_names": ["1", "b1", "b2", "b3", "b4"],
        "mult_table": [[vec_str(tbl[i][j]) for j in range(5)] for i in range(5)],
        "signature": [5, 0],
        "galois": True,
        "class_number": 1,
        "torsion": {"generator": ["-1", "0", "0", "0", "0"], "order": 2},
        "unit_generators": [vec_str(u) for u in units],
        "automorphisms": autos,
        "prime_fixtures": [
            {"p": 5, "e": 5, "f": 1, "label": "P5",
             "uniformizer": vec_str(u_new)},
            {"p": 2, "e": 1, "f": 5, "label": "P2"},
            {"p": 3, "e": 1, "f": 5, "label": "P3"},
        ],
    }
    emit(os.path.join(OUT, "q25_deg5.json"), fixture)


def trace_form(K, a, b):
    return K.trace(K.mul(a, b))


def prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def transpose_cols(rows):
    n = len(rows)
    return [[rows[j][i] for i in range(n)] for j in range(n)]


def mat_vec_cols(rows, v):
    # element with coordinates v over the row basis -> eta-power coords
    n = len(rows)
    out = [Fraction(0)] * n
    for j in range(n):
        if v[j] != 0:
            for i in range(n):
                out[i] += v[j] * rows[j][i]
    return out


def find_integral_denominator_p(K, basis_rows, p):
    """Search for an element (sum a_i b_i)/p, a_i in [0,p), integral but
    not in the current order; char poly integrality is checked exactly."""
    n = 5
    from itertools import product as iproduct
    for a in iproduct(range(p), repeat=n):
        if all(x == 0 for x in a):
            continue
        coords = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                for j in range(n):
                    coords[j] += Fraction(a[i], p) * basis_rows[i][j]
        if is_integral(K, coords):
            return coords
    return None


def is_integral(K, coords):
    # characteristic polynomial of mult-by-x has integer coefficients
    import sympy
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                       for x in row] for row in K.mul_matrix(coords)])
    cp = m.charpoly()
    return all(c.is_Integer for c in cp.all_coeffs())


def poly_disc(coeffs):
    # disc = (-1)^(n(n-1)/2) * Res(f, f') / lc(f)
    from fractions import Fraction as Fr
    f = [Fr(c) for c in coeffs]
    n = len(f) - 1
    fp = [Fr(i) * f[i] for i in range(1, n + 1)]
    r = resultant(f, fp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r


def resultant(f, g):
    from fractions import Fraction as Fr
    f = list(f)
    g = list(g)

    def deg(p):
        d = len(p) - 1
        while d >= 0 and p[d] == 0:
            d -= 1
        return d

    res = Fr(1)
    while True:
        df, dg = deg(f), deg(g)
        if dg < 0:
            return Fr(0)
        if dg == 0:
            return res * g[0] ** df
        # f = q*g + r
        r = list(f)
        lg = g[dg]
        while deg(r) >= dg:
            dr = deg(r)
            c = r[dr] / lg
            for i in range(dg + 1):
                r[dr - dg + i] -= c * g[i]
        dr = deg(r)
        if dr < 0:
            return Fr(0)
        res *= (-1) ** (df * dg) * lg ** (df - dr)
        f, g = g, r[:dr + 1]


if __name__ == "__main__":
    gen_zeta16_fixtures()
    gen_q25_deg5()
    print("all field fixtures written")
