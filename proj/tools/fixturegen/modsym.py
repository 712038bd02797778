"""Weight-2 modular symbols for Gamma_0(N) over Q, used to compute the
newform eigenvalue fixtures shipped under data/newforms/.

Everything is exact (Fractions / sympy rationals).  The computation is
validated against the genus formula, Hecke commutativity, integrality of
characteristic polynomials, the Hasse bound, and point counts on a few
well-known elliptic curves before any fixture is emitted.
"""

import math
from fractions import Fraction

import sympy


# ---------- P^1(Z/N) ----------

class P1:
    def __init__(self, N):
        self.N = N
        units = [u for u in range(1, N) if math.gcd(u, N) == 1]
        seen = {}
        reps = []
        for c in range(N):
            for d in range(N):
                if math.gcd(math.gcd(c, d), N) != 1:
                    continue
                key = min(((u * c) % N, (u * d) % N) for u in units)
                if key not in seen:
                    seen[key] = len(reps)
                    reps.append(key)
        self.reps = reps
        self.index = seen
        self.units = units

    def lookup(self, c, d):
        N = self.N
        c %= N
        d %= N
        key = min(((u * c) % N, (u * d) % N) for u in self.units)
        return self.index[key]

    def __len__(self):
        return len(self.reps)


def lift_to_sl2(c, d, N):
    """Lift the class (c:d) mod N to a matrix [[a,b],[c',d']] in SL2(Z)."""
    for i in range(0, 12 * N + 2):
        for cc in (c + i * N, c - i * N):
            for j in range(0, 12 * N + 2):
                for dd in (d + j * N, d - j * N):
                    if math.gcd(cc, dd) == 1:
                        g, x, y = ext_gcd(cc, dd)
                        # a*dd - b*cc = 1 with a = y, b = -x
                        return (y, -x, cc, dd)
    raise RuntimeError("no SL2 lift found")


def ext_gcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    x0, x1, y0, y1 = 1, 0, 0, 1
    aa, bb = a, b
    while bb:
        q = aa // bb
        aa, bb = bb, aa - q * bb
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if aa < 0:
        aa, x0, y0 = -aa, -x0, -y0
    return (aa, x0, y0)


# ---------- linear algebra over Fraction ----------

def rref(rows, ncols):
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


class QuotientSpace:
    """Q[P1] modulo relation rows; basis = non-pivot columns."""

    def __init__(self, nsyms, relation_rows):
        reduced, pivots = rref(relation_rows, nsyms)
        self.nsyms = nsyms
        self.pivots = pivots
        pivset = set(pivots)
        self.basis_cols = [c for c in range(nsyms) if c not in pivset]
        self.col_of_basis = {c: i for i, c in enumerate(self.basis_cols)}
        # expression of each symbol in terms of basis columns
        expr = [None] * nsyms
        for c in self.basis_cols:
            v = [Fraction(0)] * len(self.basis_cols)
            v[self.col_of_basis[c]] = Fraction(1)
            expr[c] = v
        for row, p in zip(reduced, pivots):
            v = [Fraction(0)] * len(self.basis_cols)
            for c in self.basis_cols:
                if row[c] != 0:
                    v[self.col_of_basis[c]] -= row[c]
            expr[p] = v
        self.expr = expr

    @property
    def dim(self):
        return len(self.basis_cols)

    def sym_vec(self, idx):
        return self.expr[idx]


# ---------- modular symbols space ----------

class ModSym:
    def __init__(self, N):
        self.N = N
        self.p1 = P1(N)
        n = len(self.p1)
        rel = []
        seen = set()
        for i, (c, d) in enumerate(self.p1.reps):
            j = self.p1.lookup(d, -c)           # action of S
            key = tuple(sorted((i, j)))
            if ("S", key) not in seen:
                seen.add(("S", key))
                row = [Fraction(0)] * n
                row[i] += 1
                row[j] += 1
                rel.append(row)
            k = self.p1.lookup(d, -c - d)        # action of T
            k2 = self.p1.lookup(-c - d, c)       # action of T^2
            key = tuple(sorted((i, k, k2)))
            if ("T", key) not in seen:
                seen.add(("T", key))
                row = [Fraction(0)] * n
                row[i] += 1
                row[k] += 1
                row[k2] += 1
                rel.append(row)
        self.space = QuotientSpace(n, rel)
        self.lifts = [lift_to_sl2(c, d, N) for (c, d) in self.p1.reps]
        self._cusp_classes = None
        self._cuspidal = None

    @property
    def dim(self):
        return self.space.dim

    # --- paths ---

    def manin_of_pair(self, c, d):
        return self.space.sym_vec(self.p1.lookup(c, d))

    def vec_add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def vec_sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def zero(self):
        return [Fraction(0)] * self.dim

    def path_from_inf(self, cusp):
        """Modular symbol {oo, cusp} as a vector; cusp None means oo."""
        if cusp is None:
            return self.zero()
        p = cusp.numerator
        q = cusp.denominator
        # continued fraction convergents
        out = self.zero()
        pk1, qk1 = 1, 0   # p_{-1}, q_{-1}
        a, b = p, q
        k = 0
        pk, qk = None, None
        cf = []
        while b:
            ai = a // b
            cf.append(ai)
            a, b = b, a - ai * b
        pprev, qprev = 1, 0
        pcur, qcur = cf[0], 1
        out = self.vec_add(out, self.manin_of_pair(qcur, -qprev))
        # segment {p_{-1}/q_{-1}=oo, p_0/q_0}: k=0 sign (-1)^{k-1} = -1
        for k in range(1, len(cf)):
            pnext = cf[k] * pcur + pprev
            qnext = cf[k] * qcur + qprev
            sign = 1 if (k % 2 == 1) else -1   # (-1)^(k-1)
            out = self.vec_add(out, self.manin_of_pair(qnext, sign * qcur))
            pprev, qprev, pcur, qcur = pcur, qcur, pnext, qnext
        return out

    def path(self, alpha, beta):
        """{alpha, beta} with None = oo."""
        return self.vec_sub(self.path_from_inf(beta), self.path_from_inf(alpha))

    # --- boundary / cuspidal subspace ---

    def cusp_normalize(self, num, den):
        if den == 0:
            return (1, 0)
        g = math.gcd(num, den)
        num //= g
        den //= g
        if den < 0:
            num, den = -num, -den
        return (num, den)

    def cusps_equivalent(self, c1, c2):
        p1c, q1 = c1
        p2c, q2 = c2
        N = self.N
        if q1 == 0 and q2 == 0:
            return True
        s1 = self._cusp_s(p1c, q1)
        s2 = self._cusp_s(p2c, q2)
        g = math.gcd(q1 * q2, N)
        return (s1 * q2 - s2 * q1) % g == 0

    def _cusp_s(self, p, q):
        if q == 0:
            return p  # p = +-1
        if q == 1:
            return 0
        return pow(p % q, -1, q)

    def cusp_classes(self):
        if self._cusp_classes is not None:
            return self._cusp_classes
        classes = []

        def class_of(cusp):
            for i, rep in enumerate(classes):
                if self.cusps_equivalent(rep, cusp):
                    return i
            classes.append(cusp)
            return len(classes) - 1

        self._class_of = class_of
        self._cusp_classes = classes
        return classes

    def boundary_matrix(self):
        self.cusp_classes()
        cols = []
        entries = []  # list of dict class->coeff per basis col
        for bc in self.space.basis_cols:
            a, b, c, d = self.lifts[bc]
            start = self.cusp_normalize(b, d)
            end = self.cusp_normalize(a, c)
            col = {}
            i = self._class_of(end)
            col[i] = col.get(i, 0) + 1
            j = self._class_of(start)
            col[j] = col.get(j, 0) - 1
            entries.append(col)
        ncl = len(self._cusp_classes)
        mat = [[Fraction(entries[j].get(i, 0)) for j in range(self.dim)]
               for i in range(ncl)]
        return mat

    def cuspidal_basis(self):
        if self._cuspidal is not None:
            return self._cuspidal
        mat = self.boundary_matrix()
        # kernel of mat
        red, pivots = rref(mat, self.dim)
        pivset = set(pivots)
        free = [c for c in range(self.dim) if c not in pivset]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.dim
            v[fc] = Fraction(1)
            for row, p in zip(red, pivots):
                if row[fc] != 0:
                    v[p] = -row[fc]
            basis.append(v)
        self._cuspidal = basis
        return basis

    # --- Hecke ---

    def hecke_image_of_basis_col(self, idx, ell):
        a, b, c, d = self.lifts[self.space.basis_cols[idx]]
        alpha = (b, d)  # b/d, den 0 = oo
        beta = (a, c)
        mats = [(ell, 0, 0, 1)] + [(1, j, 0, ell) for j in range(ell)]
        out = self.zero()

        def apply(m, cusp):
            aa, bb, cc, dd = m
            p, q = cusp
            num = aa * p + bb * q
            den = cc * p + dd * q
            if den == 0:
                return None
            return Fraction(num, den)

        def as_cusp(pair):
            p, q = pair
            if q == 0:
                return None
            return Fraction(p, q)

        for m in mats:
            ia = apply(m, alpha)
            ib = apply(m, beta)
            out = self.vec_add(out, self.path(ia, ib))
        return out

    def hecke_matrix(self, ell):
        cols = [self.hecke_image_of_basis_col(i, ell) for i in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]


# ---------- subspace helpers ----------

def restrict_to_subspace(mat_full, basis):
    """Matrix of mat_full restricted to span(basis); basis vectors must be
    mapped into their own span (asserted)."""
    n = len(mat_full)
    k = len(basis)
    imgs = []
    for v in basis:
        img = [sum(mat_full[i][j] * v[j] for j in range(n)) for i in range(n)]
        imgs.append(img)
    # solve basis^T x = img for each
    cols = []
    for img in imgs:
        x = solve_in_span(basis, img)
        assert x is not None, "subspace not invariant"
        cols.append(x)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def solve_in_span(basis, target):
    m = len(target)
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    red, pivots = rref(aug, k + 1)
    sol = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        if p == k:
            return None  # inconsistent
        sol[p] = row[k]
    # verify
    for i in range(m):
        s = sum(sol[j] * basis[j][i] for j in range(k))
        if s != target[i]:
            return None
    return sol


def charpoly(mat):
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                       for x in row] for row in mat])
    return m.charpoly(sympy.Symbol('x'))


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scal(c, a):
    return [[c * x for x in row] for row in a]


def mat_eye(n):
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
