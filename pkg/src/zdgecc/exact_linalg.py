"""Exact integer/rational dense linear algebra.

Arbitrary-precision throughout: characteristic polynomials of integer
matrices, exact determinants, integer-root extraction with deflation, and
the block-matrix determinant identities (Schur complement, coronel of a
matrix, all-ones shifts, rank-one adjugate perturbations) used to derive
closed-form eccentricity spectra.

The characteristic polynomial is delegated to sympy's DomainMatrix over ZZ
(division-free Berkowitz); determinants, inverses and the identity checks
are implemented here independently, so the two routes cross-validate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

RatMatrix = list[list[Fraction]]


class SingularBlockError(ValueError):
    """Leading block is singular where the Schur complement needs its inverse."""


class EvaluationAtEigenvalueError(ValueError):
    """xI - M is singular at the requested evaluation point."""


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending by degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1 and not self.is_zero

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(tuple(out))

    def deflate(self, root: int) -> tuple["IntPoly", int]:
        """Synthetic division by (x - root); returns (quotient, remainder)."""
        desc = list(reversed(self.coeffs))
        out = [desc[0]]
        for c in desc[1:]:
            out.append(c + root * out[-1])
        rem = out.pop()
        return IntPoly(tuple(reversed(out))), rem

    def text(self) -> str:
        """Ascending text form like ``-4 - 6*x + x^3``."""
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            terms.append((c < 0, body))
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    @classmethod
    def from_descending(cls, coeffs) -> "IntPoly":
        return cls(tuple(reversed([int(c) for c in coeffs])))


def _as_fraction_matrix(mat) -> RatMatrix:
    rows = [[Fraction(x) for x in row] for row in np.asarray(mat, dtype=object)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


def determinant(mat) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = _as_fraction_matrix(mat)
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else Fraction(1)


def char_poly(mat) -> IntPoly:
    """Exact monic characteristic polynomial det(xI - M) of an integer matrix."""
    arr = np.asarray(mat)
    n = arr.shape[0]
    if arr.shape != (n, n):
        raise ValueError("matrix must be square")
    rows = []
    for row in arr.tolist():
        out = []
        for v in row:
            iv = int(v)
            if iv != v:
                raise ValueError(f"non-integer entry {v!r}")
            out.append(ZZ(iv))
        rows.append(out)
    dm = DomainMatrix(rows, (n, n), ZZ)
    return IntPoly.from_descending([int(c) for c in dm.charpoly()])


def _small_divisors(m: int) -> list[int]:
    """All positive divisors of |m| by trial division (|m| <= ~1e12)."""
    m = abs(m)
    divs = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            divs.append(d)
            if d != m // d:
                divs.append(m // d)
        d += 1
    return sorted(divs)


def integer_roots(
    poly: IntPoly, bound: int | None = None
) -> tuple[list[tuple[int, int]], IntPoly]:
    """All integer roots of a monic polynomial, with multiplicities, plus residual.

    Candidates come from an explicit root bound when given (exhaustive over
    [-bound, bound]); otherwise from the divisors of the constant term when it
    is small enough to factor by trial division, falling back to rounded
    numerical roots.  Every extraction is verified by exact synthetic
    division, so the result is exact regardless of the candidate source.
    """
    if not poly.is_monic:
        raise ValueError("integer_roots requires a monic polynomial")
    work = poly
    found: dict[int, int] = {}
    while work.degree > 0 and work.coeffs[0] == 0:
        work, _ = work.deflate(0)
        found[0] = found.get(0, 0) + 1
    if bound is not None:
        candidates = [c for c in range(-int(bound), int(bound) + 1) if c != 0]
    elif abs(work.coeffs[0]) <= 10**12 and work.degree > 0:
        divs = _small_divisors(work.coeffs[0])
        candidates = [s * d for d in divs for s in (1, -1)]
    elif work.degree > 0:
        candidates = _numeric_integer_candidates(work)
    else:
        candidates = []
    for cand in sorted(set(candidates)):
        while work.degree > 0:
            quo, rem = work.deflate(cand)
            if rem != 0:
                break
            work = quo
            found[cand] = found.get(cand, 0) + 1
    return sorted(found.items()), work


def _numeric_integer_candidates(poly: IntPoly) -> list[int]:
    coeffs = list(reversed(poly.coeffs))
    if max(abs(c) for c in coeffs) > 1e300:
        raise ValueError(
            "constant term too large to enumerate divisors and coefficients "
            "overflow float; pass an explicit root bound"
        )
    roots = np.roots([float(c) for c in coeffs])
    cands: set[int] = set()
    for r in roots:
        if abs(r.imag) < 1.0:
            base = int(round(r.real))
            cands.update((base - 1, base, base + 1))
    cands.discard(0)
    return sorted(cands)


@dataclass(frozen=True)
class IntegralityCertificate:
    """Outcome of the complete-linear-factorization test."""

    roots: tuple[tuple[int, int], ...]
    residual: IntPoly

    @property
    def integral(self) -> bool:
        return self.residual.degree == 0

    def text(self) -> str:
        parts = []
        for root, mult in self.roots:
            base = f"(x - {root})" if root >= 0 else f"(x + {-root})"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        if not self.integral:
            parts.append(f"({self.residual.text()})")
        return " * ".join(parts) if parts else "1"


def is_integral_spectrum(mat) -> tuple[bool, IntegralityCertificate]:
    """Whether the exact characteristic polynomial splits into integer linear factors.

    The root search is exhaustive: all eigenvalues of a symmetric matrix lie
    within the maximum absolute row sum, which bounds the candidate integers.
    """
    arr = np.asarray(mat, dtype=np.int64)
    if not np.array_equal(arr, arr.T):
        raise ValueError("integrality test expects a symmetric integer matrix")
    poly = char_poly(arr)
    bound = int(np.abs(arr).sum(axis=1).max()) if arr.size else 0
    roots, residual = integer_roots(poly, bound=bound)
    cert = IntegralityCertificate(tuple(roots), residual)
    return cert.integral, cert


def _identity(n: int) -> RatMatrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def _x_i_minus(mat: RatMatrix, x: Fraction) -> RatMatrix:
    n = len(mat)
    return [
        [(x if i == j else Fraction(0)) - mat[i][j] for j in range(n)]
        for i in range(n)
    ]


def _solve(mat: RatMatrix, rhs: list[list[Fraction]]) -> list[list[Fraction]] | None:
    """Solve mat @ X = rhs exactly; None when mat is singular."""
    n = len(mat)
    a = [row[:] + r[:] for row, r in zip(mat, rhs)]
    w = len(a[0])
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [v * inv for v in a[k]]
        for r in range(n):
            if r != k and a[r][k] != 0:
                f = a[r][k]
                a[r] = [v - f * w_ for v, w_ in zip(a[r], a[k])]
    return [row[n:w] for row in a]


def inverse(mat) -> RatMatrix:
    a = _as_fraction_matrix(mat)
    inv = _solve(a, _identity(len(a)))
    if inv is None:
        raise ValueError("matrix is singular")
    return inv


def schur_complement(mat, k: int) -> RatMatrix:
    """D - C A^{-1} B for the leading k x k block A."""
    m = _as_fraction_matrix(mat)
    n = len(m)
    if not 0 < k < n:
        raise ValueError(f"block size {k} out of range for order {n}")
    a = [row[:k] for row in m[:k]]
    b = [row[k:] for row in m[:k]]
    c = [row[:k] for row in m[k:]]
    d = [row[k:] for row in m[k:]]
    a_inv_b = _solve(a, b)
    if a_inv_b is None:
        raise SingularBlockError(f"leading {k}x{k} block is singular")
    size = n - k
    out = [
        [
            d[i][j] - sum(c[i][t] * a_inv_b[t][j] for t in range(k))
            for j in range(size)
        ]
        for i in range(size)
    ]
    return out


def schur_det_check(mat, k: int) -> bool:
    """det(M) == det(A) * det(M/A), exactly."""
    m = _as_fraction_matrix(mat)
    a = [row[:k] for row in m[:k]]
    comp = schur_complement(m, k)
    return determinant(m) == determinant(a) * determinant(comp)


def coronel(mat, x) -> Fraction:
    """Total sum of the entries of (xI - M)^{-1}."""
    m = _as_fraction_matrix(mat)
    x = Fraction(x)
    shifted = _x_i_minus(m, x)
    ones = [[Fraction(1)] for _ in m]
    sol = _solve(shifted, ones)
    if sol is None:
        raise EvaluationAtEigenvalueError(f"xI - M is singular at x = {x}")
    return sum(row[0] for row in sol)


def det_shifted_J(mat, beta, x) -> Fraction:
    """det(xI - A - beta*J), computed directly and via the coronel identity.

    The two routes must agree exactly: det(xI - A - beta*J) equals
    (1 - beta * coronel(A, x)) * det(xI - A).
    """
    a = _as_fraction_matrix(mat)
    beta = Fraction(beta)
    x = Fraction(x)
    shifted = _x_i_minus(a, x)
    direct_rows = [[v - beta for v in row] for row in shifted]
    direct = determinant(direct_rows)
    via_identity = (1 - beta * coronel(a, x)) * determinant(shifted)
    if direct != via_identity:
        raise ArithmeticError(
            f"shift identity violated: direct {direct} != identity {via_identity}"
        )
    return direct


def adjugate(mat) -> RatMatrix:
    """Adjugate matrix: det(M) * M^{-1} when invertible, cofactors otherwise."""
    m = _as_fraction_matrix(mat)
    n = len(m)
    det = determinant(m)
    if det != 0:
        inv = inverse(m)
        return [[det * inv[i][j] for j in range(n)] for i in range(n)]
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            sign = -1 if (i + j) % 2 else 1
            out[i][j] = sign * determinant(minor)
    return out


def det_rank_one_update(mat, u: Sequence, v: Sequence) -> Fraction:
    """det(M + u v^T), computed directly and as det(M) + v^T adj(M) u."""
    m = _as_fraction_matrix(mat)
    n = len(m)
    uu = [Fraction(x) for x in u]
    vv = [Fraction(x) for x in v]
    if len(uu) != n or len(vv) != n:
        raise ValueError("vector lengths must match matrix order")
    perturbed = [[m[i][j] + uu[i] * vv[j] for j in range(n)] for i in range(n)]
    direct = determinant(perturbed)
    adj = adjugate(m)
    via_identity = determinant(m) + sum(
        vv[i] * adj[i][j] * uu[j] for i in range(n) for j in range(n)
    )
    if direct != via_identity:
        raise ArithmeticError(
            f"rank-one identity violated: direct {direct} != identity {via_identity}"
        )
    return direct
