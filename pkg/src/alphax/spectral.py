"""The alpha-index: largest eigenvalue of A_alpha(G) = alpha*D + (1-alpha)*A.

The solver is a shifted power iteration on A_alpha + Delta(G) * I.  The shift
makes the iteration matrix entrywise nonnegative with the same eigenvectors,
so for a connected graph the dominant eigenpair is the Perron pair and the
all-ones start vector has positive overlap with it.  Convergence is certified
by the infinity-norm residual ||A_alpha x - rho x|| <= tol; hitting the
iteration cap without meeting it raises ConvergenceError carrying the last
residual.  Disconnected input is handled per component, keeping the largest
component value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, bits, neighbor_degree_sum
from . import kernels

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITERS = 100_000
CERT_TOL = 1e-9  # max allowed gap between matrix and closed-form column sums


def validate_alpha(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return a


class ConvergenceError(RuntimeError):
    """Power iteration missed the residual target within the iteration cap."""

    def __init__(self, residual: float, iterations: int, tol: float):
        super().__init__(
            f"power iteration stalled at residual {residual:.3e} "
            f"after {iterations} iterations (target {tol:.1e})"
        )
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    perron: np.ndarray
    residual: float
    iterations: int


def build_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    a = validate_alpha(alpha)
    mat = (1.0 - a) * g.adjacency_matrix()
    mat[np.diag_indices(g.n)] += a * np.asarray(g.degrees(), dtype=np.float64)
    return mat


def _solve_connected(g: Graph, alpha: float, tol: float, max_iters: int) -> SpectralResult:
    mat = build_alpha_matrix(g, alpha)
    shift = float(g.max_degree())
    radius, vec, residual, iters = kernels.power_iteration(mat, shift, tol, max_iters)
    if residual > tol:
        raise ConvergenceError(residual, iters, tol)
    return SpectralResult(radius=radius, perron=vec, residual=residual, iterations=iters)


def spectral_radius(
    g: Graph,
    alpha: float,
    *,
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> SpectralResult:
    """Largest eigenvalue of A_alpha(g) with a certified Perron vector.

    For connected g the returned vector is strictly positive with unit
    2-norm.  For disconnected g the value is the maximum over components and
    the vector is the winning component's Perron vector embedded in R^n.
    """
    validate_alpha(alpha)
    comps = g.component_masks()
    if len(comps) == 1:
        return _solve_connected(g, alpha, tol, max_iters)
    best: SpectralResult | None = None
    best_mask = 0
    for mask in comps:
        sub = g.induced_subgraph(mask)
        res = _solve_connected(sub, alpha, tol, max_iters)
        if best is None or res.radius > best.radius:
            best = res
            best_mask = mask
    assert best is not None
    vec = np.zeros(g.n)
    vec[list(bits(best_mask))] = best.perron
    return SpectralResult(best.radius, vec, best.residual, best.iterations)


# -- closed-form bounds ----------------------------------------------------


def bound_upper_degree(g: Graph, alpha: float) -> float:
    """max_u of alpha*d(u) + (1-alpha)/d(u) * sum of neighbour degrees.

    Valid upper bound for rho_alpha on graphs with minimum degree >= 1; for
    alpha in (1/2, 1) and connected g it is tight exactly on regular graphs.
    """
    a = validate_alpha(alpha)
    if g.min_degree() < 1:
        raise ValueError("degree bound needs minimum degree >= 1")
    return max(
        a * g.degree(u) + (1.0 - a) * neighbor_degree_sum(g, u) / g.degree(u)
        for u in range(g.n)
    )


def bound_upper_edge(g: Graph, alpha: float) -> float:
    """Edge version of the upper bound, via average neighbour degrees m(u)."""
    a = validate_alpha(alpha)
    if g.min_degree() < 1:
        raise ValueError("edge bound needs minimum degree >= 1")
    best = 0.0
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        mu = neighbor_degree_sum(g, u) / du
        mv = neighbor_degree_sum(g, v) / dv
        val = 0.5 * (
            a * (du + dv)
            + np.sqrt((a * (du - dv)) ** 2 + 4.0 * (1.0 - a) ** 2 * mu * mv)
        )
        best = max(best, val)
    return best


def bound_lower_delta(g: Graph, alpha: float) -> float:
    """Lower bound from the maximum degree, with a branch at alpha = 1/2."""
    a = validate_alpha(alpha)
    big_delta = g.max_degree()
    if a <= 0.5:
        return a * (big_delta + 1)
    return a * big_delta + (1.0 - a) ** 2 / a


# -- column-sum certificate ------------------------------------------------


def column_sum_certificate(g: Graph, alpha: float, n_param: int | None = None) -> list[float]:
    """Column sums of B = A_alpha^2 - alpha*n*A_alpha + 2(2a-1)(n-2)*I.

    Computed both from the matrix and from the closed form
    alpha*d(u)^2 + (1-alpha)*S(u) - alpha*n*d(u) + 2(2a-1)(n-2), where S(u)
    is the neighbour degree sum.  The two routes must agree to CERT_TOL; any
    disagreement raises, since it would mean the closed form is wrong.
    """
    a = validate_alpha(alpha)
    n = g.n if n_param is None else int(n_param)
    mat = build_alpha_matrix(g, a)
    b = mat @ mat - a * n * mat + 2.0 * (2.0 * a - 1.0) * (n - 2) * np.eye(g.n)
    by_matrix = b.sum(axis=0)
    const = 2.0 * (2.0 * a - 1.0) * (n - 2)
    by_formula = np.array(
        [
            a * g.degree(u) ** 2
            + (1.0 - a) * neighbor_degree_sum(g, u)
            - a * n * g.degree(u)
            + const
            for u in range(g.n)
        ]
    )
    gap = float(np.max(np.abs(by_matrix - by_formula)))
    if gap > CERT_TOL:
        raise AssertionError(
            f"column-sum closed form disagrees with the matrix by {gap:.3e}"
        )
    return [float(x) for x in by_formula]
