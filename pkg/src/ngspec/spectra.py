"""Graph matrices, symmetric eigensolvers and exact characteristic polynomials.

Laplacian convention: ``L = D - A`` (positive semidefinite, zero row sums).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .poly import Polynomial, charpoly

DEFAULT_TOL = 1e-10
CHARPOLY_CAP = 64


class MatrixKind(enum.Enum):
    ADJACENCY = "A"
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"


class ConvergenceError(RuntimeError):
    pass


def build_matrix(g: Graph, kind: MatrixKind) -> np.ndarray:
    a = g.adjacency()
    if kind is MatrixKind.ADJACENCY:
        return a
    d = np.diag(a.sum(axis=1))
    if kind is MatrixKind.LAPLACIAN:
        return d - a
    return d + a


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # descending
    kind: MatrixKind | None
    tol: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def largest(self) -> float:
        return self.values[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


def _check_symmetric(m: np.ndarray, tol: float) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.T)) > tol:
        raise ValueError("matrix is not symmetric")
    return m


def eig_symmetric(m, tol: float = DEFAULT_TOL, kind: MatrixKind | None = None,
                  method: str = "lapack") -> Spectrum:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    ``method="lapack"`` uses numpy's ``eigvalsh``; ``method="jacobi"`` runs the
    in-house cyclic Jacobi solver.  The reported ``tol`` is absolute:
    ``tol * max(1, ||m||_inf)``.
    """
    m = _check_symmetric(m, tol)
    scale = max(1.0, float(np.abs(m).sum(axis=1).max())) if m.size else 1.0
    if method == "lapack":
        vals = np.linalg.eigvalsh(m) if m.size else np.zeros(0)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(m, tol * scale)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    vals = np.sort(vals)[::-1]
    return Spectrum(tuple(float(v) for v in vals), kind, tol * scale)


def jacobi_eigenvalues(m: np.ndarray, tol: float = DEFAULT_TOL,
                       max_sweeps: int | None = None) -> np.ndarray:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm < ``tol``.

    By Weyl's inequality each diagonal entry is then within ``tol`` of an
    eigenvalue.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if max_sweeps is None:
        max_sweeps = 100 * max(n, 1)
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(a[offdiag] ** 2))
        if off < tol:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def spectrum(g: Graph, kind: MatrixKind, tol: float = DEFAULT_TOL,
             method: str = "lapack") -> Spectrum:
    return eig_symmetric(build_matrix(g, kind), tol, kind, method)


def char_poly_exact(m) -> Polynomial:
    """Exact det(xI - m) for an integer (or rational) square matrix."""
    rows = np.asarray(m, dtype=object).tolist() if not isinstance(m, list) else m
    if len(rows) > CHARPOLY_CAP:
        raise ValueError(f"exact characteristic polynomial capped at n={CHARPOLY_CAP}")
    rows = [[int(c) if isinstance(c, (np.integer,)) else c for c in r] for r in rows]
    return charpoly(rows)


@dataclass(frozen=True)
class KeyValues:
    mu1: float
    mu_n1: float  # algebraic connectivity
    q1: float

    @property
    def spread(self) -> float:
        return self.mu1 - self.mu_n1


def key_values(g: Graph, tol: float = DEFAULT_TOL) -> KeyValues:
    if g.n < 2:
        raise ValueError("key values need n >= 2")
    lap = spectrum(g, MatrixKind.LAPLACIAN, tol)
    q = spectrum(g, MatrixKind.SIGNLESS_LAPLACIAN, tol)
    return KeyValues(mu1=lap[0], mu_n1=lap[g.n - 2], q1=q[0])


def batch_eigvalsh(mats: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues for a stack of symmetric matrices."""
    return np.linalg.eigvalsh(mats)
