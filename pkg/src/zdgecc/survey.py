"""Batch surveys over composite moduli with optional worker pool and cache.

Every record is computed by a pure function of (n, variant, options), so the
survey is deterministic and independent of the worker count; records are
always emitted sorted by n.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
from pathlib import Path

import zdgecc
from zdgecc.eccentricity import eccentricity_matrix, is_irreducible
from zdgecc.exact_linalg import is_integral_spectrum
from zdgecc.graphs import (
    Graph,
    build_compressed_zdg,
    build_extended_zdg,
    build_zdg,
    complement,
    is_complete,
    is_connected,
    is_star,
    is_tree,
)
from zdgecc.number_theory import is_prime
from zdgecc.report import fmt_float
from zdgecc.spectra import DEFAULT_CLUSTER_TOL, DEFAULT_EXACT_CAP, spectrum

VARIANTS = ("zdg", "extended", "compressed", "complement")


def variant_graph(n: int, variant: str) -> Graph:
    if variant == "zdg":
        return build_zdg(n)
    if variant == "extended":
        return build_extended_zdg(n)
    if variant == "compressed":
        return build_compressed_zdg(n)
    if variant == "complement":
        return complement(build_zdg(n))
    raise ValueError(f"unknown variant {variant!r}")


def survey_record(
    n: int,
    variant: str = "zdg",
    *,
    structure_only: bool = False,
    exact_cap: int = DEFAULT_EXACT_CAP,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> dict:
    g = variant_graph(n, variant)
    rec = {
        "kind": "survey",
        "n": n,
        "variant": variant,
        "vertices": g.n_vertices,
        "edges": g.n_edges,
        "connected": is_connected(g),
        "tree": is_tree(g),
        "star": is_star(g),
        "complete": is_complete(g),
    }
    if structure_only:
        return rec
    mat = eccentricity_matrix(g)
    if not rec["connected"]:
        rec["ecc_convention"] = "per-component"
    rec["irreducible"] = is_irreducible(mat)
    spec = spectrum(mat, "float", cluster_tol=cluster_tol)
    rec["energy"] = fmt_float(spec.energy())
    rec["spectral_radius"] = fmt_float(spec.spectral_radius())
    rec["least_eigenvalue"] = fmt_float(spec.least())
    rec["eigen_sum"] = fmt_float(spec.eigen_sum())
    if g.n_vertices <= exact_cap:
        integral, cert = is_integral_spectrum(mat)
        rec["integral"] = integral
        rec["residual"] = None if integral else cert.residual.text()
    else:
        rec["integral"] = None
        rec["residual"] = None
    return rec


def _cache_key(n: int, variant: str, opts: dict) -> str:
    material = {"n": n, "variant": variant, "version": zdgecc.__version__, **opts}
    blob = json.dumps(material, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def _worker(task):
    n, variant, opts = task
    return survey_record(n, variant, **opts)


def run_survey(
    max_n: int,
    variant: str = "zdg",
    *,
    workers: int = 1,
    structure_only: bool = False,
    exact_cap: int = DEFAULT_EXACT_CAP,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    cache_dir: str | os.PathLike | None = None,
) -> list[dict]:
    """Records for every composite 4 <= n <= max_n, sorted by n."""
    if max_n < 4:
        raise ValueError("max_n must be at least 4")
    opts = {
        "structure_only": structure_only,
        "exact_cap": exact_cap,
        "cluster_tol": cluster_tol,
    }
    ns = [n for n in range(4, max_n + 1) if not is_prime(n)]
    records: dict[int, dict] = {}
    todo: list[int] = []
    cache_path = Path(cache_dir) if cache_dir is not None else None
    if cache_path is not None:
        cache_path.mkdir(parents=True, exist_ok=True)
        for n in ns:
            f = cache_path / (_cache_key(n, variant, opts) + ".json")
            if f.exists():
                records[n] = json.loads(f.read_text())
            else:
                todo.append(n)
    else:
        todo = ns
    tasks = [(n, variant, opts) for n in todo]
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            fresh = pool.map(_worker, tasks)
    else:
        fresh = [_worker(t) for t in tasks]
    for n, rec in zip(todo, fresh):
        records[n] = rec
        if cache_path is not None:
            f = cache_path / (_cache_key(n, variant, opts) + ".json")
            f.write_text(json.dumps(rec, sort_keys=True))
    return [records[n] for n in ns]
