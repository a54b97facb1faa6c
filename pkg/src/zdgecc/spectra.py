"""Floating and exact spectra: Jacobi eigensolver, multiplicity clustering,
energy, spectral radius, and the energy gap between a graph and its complement.

Exact mode factors the characteristic polynomial over the integers (root
search bounded by the maximum absolute row sum, hence exhaustive) and tags
only the non-integer residual eigenvalues as floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from zdgecc import graphs
from zdgecc.eccentricity import eccentricity_matrix
from zdgecc.exact_linalg import char_poly, integer_roots
from zdgecc.number_theory import factorize

DEFAULT_EXACT_CAP = 150
DEFAULT_CLUSTER_TOL = 1e-6


class ConvergenceError(RuntimeError):
    """Jacobi sweeps did not reach the requested off-diagonal norm."""


class OversizeError(ValueError):
    """Exact spectrum requested above the configured order cap."""


class NotApplicableError(ValueError):
    """Requested family formula does not apply to this modulus."""


def _jacobi(mat: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic-by-rows Jacobi; returns (diagonal, rotation matrix, sweeps).

    Convergence is declared when the off-diagonal Frobenius norm drops below
    tol * max(1, ||M||_F); an absolute 1e-12 target is below what float64
    can reach once ||M|| is large.
    """
    a = np.array(mat, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v, 0
    iu = np.triu_indices(n, 1)
    target = tol * max(1.0, float(np.linalg.norm(a, "fro")))
    skip = target / n
    for sweep in range(max_sweeps):
        off = np.sqrt(2.0) * float(np.linalg.norm(a[iu]))
        if off <= target:
            return a.diagonal().copy(), v, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e10:
                    t = 0.5 / theta
                elif theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                v_p = v[:, p].copy()
                v_q = v[:, q].copy()
                v[:, p] = c * v_p - s * v_q
                v[:, q] = s * v_p + c * v_q
    raise ConvergenceError(
        f"off-diagonal norm still above {target:g} after {max_sweeps} sweeps"
    )


def eigenvalues_symmetric(
    mat, tol: float = 1e-12, max_sweeps: int = 100
) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Verifies the backward error ||M V - V diag|| <= 1e-8 * ||M|| on the
    accumulated rotations before returning.
    """
    a = np.asarray(mat, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a.size and float(np.abs(a - a.T).max()) > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    diag, v, _ = _jacobi(a, tol, max_sweeps)
    scale = max(1.0, float(np.linalg.norm(a, "fro")))
    back = float(np.linalg.norm(a @ v - v @ np.diag(diag), "fro"))
    if back > 1e-8 * scale:
        raise ConvergenceError(f"backward error {back:g} exceeds 1e-8 * ||M||")
    return np.sort(diag).tolist()


@dataclass(frozen=True)
class SpectrumEntry:
    """One distinct eigenvalue: exact rational or clustered float."""

    value: Fraction | float
    multiplicity: int
    exact: bool
    tol: float | None = None

    @property
    def float_value(self) -> float:
        return float(self.value)

    def value_text(self) -> str:
        if self.exact:
            return str(self.value)
        return "%.12g" % self.value


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset with strictly increasing distinct values."""

    entries: tuple[SpectrumEntry, ...]

    def __post_init__(self):
        vals = [e.float_value for e in self.entries]
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise ValueError("spectrum values must be strictly increasing")
        if any(e.multiplicity < 1 for e in self.entries):
            raise ValueError("multiplicities must be positive")

    @property
    def order(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def all_exact(self) -> bool:
        return all(e.exact for e in self.entries)

    def expand(self) -> list[SpectrumEntry]:
        out = []
        for e in self.entries:
            out.extend([e] * e.multiplicity)
        return out

    def energy(self) -> float:
        return float(sum(abs(e.float_value) * e.multiplicity for e in self.entries))

    def energy_exact(self) -> Fraction | None:
        if not self.all_exact:
            return None
        return sum(
            (abs(e.value) * e.multiplicity for e in self.entries), Fraction(0)
        )

    def spectral_radius(self) -> float:
        return max(abs(e.float_value) for e in self.entries)

    def least(self) -> float:
        return self.entries[0].float_value

    def largest(self) -> float:
        return self.entries[-1].float_value

    def eigen_sum(self) -> float:
        return float(sum(e.float_value * e.multiplicity for e in self.entries))

    def eigen_sum_exact(self) -> Fraction | None:
        if not self.all_exact:
            return None
        return sum(
            (e.value * e.multiplicity for e in self.entries), Fraction(0)
        )

    def text(self) -> str:
        return "{" + ", ".join(
            f"{e.value_text()}^{e.multiplicity}" for e in self.entries
        ) + "}"

    @classmethod
    def from_pairs(cls, pairs, *, cluster_tol: float | None = None) -> "Spectrum":
        """Build from (value, multiplicity, exact) triples, merging duplicates.

        Values equal exactly (both exact) or within 1e-9 (any float involved)
        are combined; zero multiplicities are dropped.
        """
        items = [
            (Fraction(v) if exact else float(v), int(m), bool(exact))
            for v, m, exact in pairs
            if m
        ]
        items.sort(key=lambda t: float(t[0]))
        merged: list[list] = []
        for v, m, exact in items:
            if merged:
                pv, pm, pexact = merged[-1]
                same = (
                    pv == v
                    if (exact and pexact)
                    else abs(float(pv) - float(v)) <= 1e-9
                )
                if same:
                    merged[-1][1] = pm + m
                    merged[-1][2] = pexact and exact
                    continue
            merged.append([v, m, exact])
        entries = tuple(
            SpectrumEntry(
                v if exact else float(v), m, exact,
                None if exact else cluster_tol,
            )
            for v, m, exact in merged
        )
        return cls(entries)


def _cluster(values: list[float], tol: float) -> list[tuple[float, int]]:
    """Group ascending floats into (mean, count) clusters at absolute tol."""
    out: list[tuple[float, int]] = []
    group: list[float] = []
    for v in values:
        if group and v - group[-1] > tol:
            out.append((sum(group) / len(group), len(group)))
            group = []
        group.append(v)
    if group:
        out.append((sum(group) / len(group), len(group)))
    return out


def spectrum(
    mat,
    mode: str = "auto",
    *,
    exact_cap: int = DEFAULT_EXACT_CAP,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> Spectrum:
    """Spectrum of a symmetric integer matrix.

    mode "float": Jacobi eigenvalues clustered at cluster_tol.
    mode "exact": integer eigenvalues extracted exactly from the
    characteristic polynomial; residual (irrational) eigenvalues are the
    leftover Jacobi values, tagged as floats.  Raises OversizeError above
    exact_cap.  mode "auto" picks "exact" when the order allows it.
    """
    arr = np.asarray(mat)
    n = arr.shape[0]
    if mode not in ("auto", "exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = "exact" if n <= exact_cap else "float"
    if mode == "float":
        eigs = eigenvalues_symmetric(arr)
        return Spectrum.from_pairs(
            [(v, m, False) for v, m in _cluster(eigs, cluster_tol)],
            cluster_tol=cluster_tol,
        )
    if n > exact_cap:
        raise OversizeError(f"order {n} exceeds exact cap {exact_cap}")
    poly = char_poly(arr)
    bound = int(np.abs(np.asarray(arr, dtype=np.int64)).sum(axis=1).max()) if n else 0
    roots, residual = integer_roots(poly, bound=bound)
    floats = eigenvalues_symmetric(arr)
    remaining = list(floats)
    for root, mult in roots:
        for _ in range(mult):
            idx = min(range(len(remaining)), key=lambda i: abs(remaining[i] - root))
            if abs(remaining[idx] - root) > 1e-6:
                raise ArithmeticError(
                    f"exact root {root} has no matching float eigenvalue "
                    f"(nearest {remaining[idx]!r})"
                )
            remaining.pop(idx)
    if len(remaining) != residual.degree:
        raise ArithmeticError(
            f"residual degree {residual.degree} but {len(remaining)} float "
            "eigenvalues left unmatched"
        )
    pairs: list[tuple[object, int, bool]] = [(r, m, True) for r, m in roots]
    pairs.extend((v, m, False) for v, m in _cluster(sorted(remaining), cluster_tol))
    return Spectrum.from_pairs(pairs, cluster_tol=cluster_tol)


def energy(spec: Spectrum) -> float:
    """Sum of absolute eigenvalues."""
    return spec.energy()


def spectral_radius(spec: Spectrum) -> float:
    """Largest absolute eigenvalue."""
    return spec.spectral_radius()


@dataclass(frozen=True)
class GapResult:
    gap: float
    bound: float
    within_bound: bool


def energy_gap(arg, *, exact_cap: int = DEFAULT_EXACT_CAP) -> GapResult:
    """Absolute eccentricity-energy gap between a zero-divisor graph and its
    complement, with the family bound.

    Accepts n for n = p1*p2 (two distinct primes; bound 3(p1+p2-2)^2) or
    n = p^3 (bound 3(p^2-1)^2), or an explicit (p1, p2) pair.  Anything else
    raises NotApplicableError.
    """
    if isinstance(arg, tuple):
        p1, p2 = arg
        n = p1 * p2
        fac = factorize(n)
        if fac.factors != tuple(sorted([(p1, 1), (p2, 1)])) or p1 == p2:
            raise NotApplicableError(f"({p1}, {p2}) is not a pair of distinct primes")
        bound = 3 * (p1 + p2 - 2) ** 2
    else:
        n = int(arg)
        fac = factorize(n)
        if len(fac.factors) == 2 and all(a == 1 for _, a in fac.factors):
            p1, p2 = (p for p, _ in fac.factors)
            bound = 3 * (p1 + p2 - 2) ** 2
        elif len(fac.factors) == 1 and fac.factors[0][1] == 3:
            p = fac.factors[0][0]
            bound = 3 * (p * p - 1) ** 2
        else:
            raise NotApplicableError(
                f"n = {n} is neither a product of two distinct primes nor a prime cube"
            )
    g = graphs.build_zdg(n)
    e_g = spectrum(eccentricity_matrix(g), "auto", exact_cap=exact_cap).energy()
    gc = graphs.complement(g)
    e_gc = spectrum(eccentricity_matrix(gc), "auto", exact_cap=exact_cap).energy()
    gap = abs(e_g - e_gc)
    return GapResult(gap=gap, bound=float(bound), within_bound=gap <= bound)
