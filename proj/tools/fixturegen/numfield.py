"""Exact arithmetic in number fields given by a power basis, used to
precompute the table-field fixtures shipped under data/fields/.

Elements are coordinate vectors of Fractions over the basis
1, t, t^2, ..., t^(n-1) where t is a root of a monic integer minimal
polynomial.  Everything is exact; floats appear only in sanity checks
of multiplicative independence (log embeddings), never in emitted data.
"""

from fractions import Fraction
from itertools import product


class PowerBasisField:
    def __init__(self, minpoly):
        # minpoly: list of ints, ascending, monic (last coefficient 1)
        assert minpoly[-1] == 1
        self.minpoly = [Fraction(c) for c in minpoly]
        self.n = len(minpoly) - 1
        # reduction rows for t^n .. t^(2n-2)
        n = self.n
        rows = []
        cur = [-c for c in self.minpoly[:-1]]  # t^n
        rows.append(list(cur))
        for _ in range(n - 2):
            shifted = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            cur = [shifted[i] + top * rows[0][i] for i in range(n)]
            rows.append(list(cur))
        self.red_rows = rows

    def zero(self):
        return [Fraction(0)] * self.n

    def one(self):
        v = self.zero()
        v[0] = Fraction(1)
        return v

    def gen(self):
        v = self.zero()
        if self.n > 1:
            v[1] = Fraction(1)
        else:
            v[0] = -self.minpoly[0]
        return v

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def scal(self, c, a):
        c = Fraction(c)
        return [c * x for x in a]

    def mul(self, a, b):
        n = self.n
        conv = [Fraction(0)] * (2 * n - 1)
        for i in range(n):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(n):
                if b[j] != 0:
                    conv[i + j] += ai * b[j]
        out = conv[:n]
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c != 0:
                row = self.red_rows[k - n]
                for i in range(n):
                    out[i] += c * row[i]
        return out

    def power(self, a, e):
        if e < 0:
            return self.power(self.inv(a), -e)
        r = self.one()
        b = list(a)
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def mul_matrix(self, a):
        # matrix of multiplication by a, columns = a * basis_j
        cols = []
        v = list(a)
        cols.append(list(v))
        t = self.gen()
        for _ in range(self.n - 1):
            v = self.mul(v, t)
            cols.append(list(v))
        # entries M[i][j] = coordinate i of a*t^j
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def norm(self, a):
        return det_fraction(self.mul_matrix(a))

    def trace(self, a):
        m = self.mul_matrix(a)
        return sum(m[i][i] for i in range(self.n))

    def inv(self, a):
        # solve a*x = 1
        m = self.mul_matrix(a)
        rhs = self.one()
        sol = solve_fraction(m, rhs)
        if sol is None:
            raise ZeroDivisionError("field inverse of zero")
        return sol

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def is_zero(self, a):
        return all(x == 0 for x in a)


def det_fraction(m):
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def solve_fraction(m, rhs):
    n = len(m)
    aug = [m[i][:] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def solve_rectangular(cols, target):
    """Solve sum_j x_j * cols[j] = target exactly; cols are m-vectors.
    Returns None if inconsistent."""
    m = len(target)
    k = len(cols)
    aug = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    pivots = []
    row = 0
    for col in range(k):
        piv = None
        for r in range(row, m):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    # consistency
    for r in range(row, m):
        if aug[r][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = aug[i][k]
    return sol


def frac_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec_str(v):
    return [frac_str(x) for x in v]
