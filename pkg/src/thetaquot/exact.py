"""Exact rational kernel: multivariate homogeneous forms, fraction-free linear
algebra over Q, univariate gcd, and evaluation at big complex points.

Everything in here is exact except `evaluate`, which rounds the rational
coefficients once at the working precision.  Monomials are indexed densely in
graded-lex order (largest exponent tuple first), so coefficient vectors of a
fixed degree are directly comparable across the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from mpmath import mp, mpf, mpc

Q0 = Fraction(0)
Q1 = Fraction(1)


def monomial_exponents(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree `degree`, lex-descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree, nvars)
    return out


@dataclass(frozen=True)
class HomogeneousForm:
    """Homogeneous polynomial with exact rational coefficients.

    `terms` maps exponent tuples (summing to `degree`) to nonzero Fractions.
    """

    variables: tuple[str, ...]
    degree: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @staticmethod
    def from_dict(variables, degree, coeffs) -> "HomogeneousForm":
        terms = []
        for exps, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if sum(exps) != degree:
                raise ValueError(f"exponent {exps} has degree != {degree}")
            if len(exps) != len(variables):
                raise ValueError("exponent length mismatch")
            terms.append((tuple(exps), c))
        terms.sort(key=lambda t: t[0], reverse=True)
        return HomogeneousForm(tuple(variables), degree, tuple(terms))

    @staticmethod
    def from_coeff_vector(variables, degree, vec) -> "HomogeneousForm":
        exps = monomial_exponents(len(variables), degree)
        if len(vec) != len(exps):
            raise ValueError("coefficient vector has wrong length")
        return HomogeneousForm.from_dict(
            variables, degree, {e: c for e, c in zip(exps, vec)})

    def coeff_vector(self) -> list[Fraction]:
        d = dict(self.terms)
        return [d.get(e, Q0) for e in monomial_exponents(len(self.variables), self.degree)]

    def coeff(self, exps) -> Fraction:
        return dict(self.terms).get(tuple(exps), Q0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.variables != other.variables or self.degree != other.degree:
            raise ValueError("cannot add forms of different degree/variables")
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Q0) + c
        return HomogeneousForm.from_dict(self.variables, self.degree, acc)

    def __sub__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        return self + other.scale(-1)

    def scale(self, c) -> "HomogeneousForm":
        c = Fraction(c)
        return HomogeneousForm.from_dict(
            self.variables, self.degree, {e: c * v for e, v in self.terms})

    def __mul__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        if self.variables != other.variables:
            raise ValueError("variable mismatch")
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Q0) + c1 * c2
        return HomogeneousForm.from_dict(
            self.variables, self.degree + other.degree, acc)

    def __pow__(self, n: int) -> "HomogeneousForm":
        if n < 0:
            raise ValueError("negative power")
        result = HomogeneousForm.from_dict(self.variables, 0, {(0,) * len(self.variables): Q1})
        for _ in range(n):
            result = result * self
        return result

    def partial(self, var_index: int) -> "HomogeneousForm":
        acc = {}
        for e, c in self.terms:
            k = e[var_index]
            if k == 0:
                continue
            e2 = e[:var_index] + (k - 1,) + e[var_index + 1:]
            acc[e2] = acc.get(e2, Q0) + c * k
        return HomogeneousForm.from_dict(self.variables, self.degree - 1, acc)

    def eval_rational(self, point) -> Fraction:
        point = [Fraction(x) for x in point]
        total = Q0
        for e, c in self.terms:
            v = c
            for x, k in zip(point, e):
                v *= x ** k
            total += v
        return total

    def monic(self) -> "HomogeneousForm":
        """Scale so the first (graded-lex leading) nonzero coefficient is 1."""
        if self.is_zero():
            return self
        lead = self.terms[0][1]
        return self.scale(Q1 / lead)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.variables, e) if k)
            if mono:
                parts.append(f"({c})*{mono}")
            else:
                parts.append(f"({c})")
        return " + ".join(parts)


def evaluate(form: HomogeneousForm, point) -> mpc:
    """Evaluate a rational form at a complex point, at the ambient mp precision.

    Coordinate powers are cached, so the cost is one rounding per rational
    coefficient plus one multiply-add per term.
    """
    if len(point) != len(form.variables):
        raise ValueError("point length != number of variables")
    point = [mpc(x) for x in point]
    powers = []
    for x in point:
        row = [mpc(1)]
        for _ in range(form.degree):
            row.append(row[-1] * x)
        powers.append(row)
    total = mpc(0)
    for e, c in form.terms:
        v = mpf(c.numerator) / mpf(c.denominator)
        term = mpc(v)
        for i, k in enumerate(e):
            if k:
                term *= powers[i][k]
        total += term
    return total


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------

def _clear_row_denominators(row):
    den = lcm(*(f.denominator for f in row)) if row else 1
    return [int(f * den) for f in row]


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form over Q.  Returns (rref_rows, pivot_columns)."""
    m = [list(map(Fraction, r)) for r in rows if any(r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Q1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced-echelon basis of the right nullspace of a rational matrix.

    Elimination is fraction-free (Bareiss) on denominator-cleared integer rows
    to avoid intermediate blow-up; back-substitution restores exact Fractions.
    Basis vector k has 1 at the k-th free column and 0 at the other free ones.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    m = [_clear_row_denominators([Fraction(x) for x in r]) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return [[Q1 if i == j else Q0 for i in range(ncols)] for j in range(ncols)]

    # Bareiss fraction-free elimination, leftmost-pivot order.
    nrows = len(m)
    pivots: list[tuple[int, int]] = []  # (row, col)
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            for j in range(c, ncols):
                m[i][j] = (m[i][j] * piv - mic * m[r][j]) // prev
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Q0] * ncols
        vec[fc] = Q1
        for pr, pc in reversed(pivots):
            s = sum((Fraction(m[pr][j]) * vec[j] for j in range(pc + 1, ncols)), Q0)
            vec[pc] = -s / m[pr][pc]
        basis.append(vec)
    return basis


def solve_in_span(basis: list[list[Fraction]], target: list[Fraction]):
    """Coefficients expressing `target` in the span of `basis`, or None."""
    if not basis:
        return None if any(target) else []
    ncols = len(target)
    rows = [[basis[j][i] for j in range(len(basis))] + [target[i]] for i in range(ncols)]
    red, pivots = rref(rows)
    k = len(basis)
    if k in pivots:
        return None  # inconsistent
    coeffs = [Q0] * k
    for row, p in zip(red, pivots):
        coeffs[p] = row[k]
    # pivots beyond the unknowns cannot occur; verify exactness
    for i in range(ncols):
        s = sum((basis[j][i] * coeffs[j] for j in range(k)), Q0)
        if s != target[i]:
            return None
    return coeffs


def reduce_mod_span(vec: list[Fraction], span_rref: list[list[Fraction]],
                    span_pivots: list[int]) -> list[Fraction]:
    """Normal form of `vec` modulo a subspace given by its RREF basis."""
    v = list(vec)
    for row, p in zip(span_rref, span_pivots):
        if v[p] != 0:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


# ---------------------------------------------------------------------------
# Vanishing conditions for plane curves through fat points
# ---------------------------------------------------------------------------

def normalize_point(point) -> tuple[Fraction, ...]:
    """Projective normalization: divide by the last nonzero coordinate."""
    pt = [Fraction(x) for x in point]
    last = next((i for i in range(len(pt) - 1, -1, -1) if pt[i] != 0), None)
    if last is None:
        raise ValueError("degenerate projective point (all coordinates zero)")
    return tuple(x / pt[last] for x in pt)


def _partial_rows(exps_list, point, order):
    """Rows of partial-derivative evaluations of all monomials at one point.

    One row per multi-index alpha with |alpha| <= order; entry j is
    (d^alpha monomial_j)(point).
    """
    nvars = len(point)
    rows = []
    for total in range(order + 1):
        for alpha in monomial_exponents(nvars, total):
            row = []
            for e in exps_list:
                if any(a > k for a, k in zip(alpha, e)):
                    row.append(Q0)
                    continue
                c = Q1
                val = Q1
                for a, k, x in zip(alpha, e, point):
                    for s in range(a):
                        c *= (k - s)
                    val *= x ** (k - a)
                row.append(c * val)
            rows.append(row)
    return rows


def vanishing_matrix(points, degree: int, multiplicities) -> list[list[Fraction]]:
    """Linear conditions for degree-`degree` plane curves with multiplicity
    >= m_i at each point.  Columns follow `monomial_exponents(nvars, degree)`.
    """
    pts = [normalize_point(p) for p in points]
    nvars = len(pts[0])
    exps = monomial_exponents(nvars, degree)
    rows = []
    for p, m in zip(pts, multiplicities):
        rows.extend(_partial_rows(exps, p, m - 1))
    return rows


def curves_through(points, degree: int, multiplicities) -> list[HomogeneousForm]:
    """Basis of plane curves of given degree with prescribed multiplicities."""
    nvars = len(normalize_point(points[0]))
    basis = nullspace(vanishing_matrix(points, degree, multiplicities))
    names = tuple(f"u{i}" for i in range(nvars)) if nvars != 3 else ("x", "y", "z")
    return [HomogeneousForm.from_coeff_vector(names, degree, v) for v in basis]


# ---------------------------------------------------------------------------
# Univariate polynomials (dense, ascending coefficients)
# ---------------------------------------------------------------------------

def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_degree(p) -> int:
    return len(p) - 1


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Q0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(c) for c in p]
    quo = [Q0] * max(0, len(rem) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) - 1 >= dq and rem:
        f = rem[-1] / lead
        k = len(rem) - 1 - dq
        quo[k] = f
        for i, c in enumerate(q):
            rem[k + i] -= f * c
        poly_trim(rem)
    return poly_trim(quo), rem


def poly_gcd_univariate(p, q):
    """Monic gcd of two rational polynomials (ascending coefficient lists)."""
    a = poly_trim([Fraction(c) for c in p])
    b = poly_trim([Fraction(c) for c in q])
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def poly_derivative(p):
    return poly_trim([Fraction(c * (i + 1)) for i, c in enumerate(p[1:], start=0)])
