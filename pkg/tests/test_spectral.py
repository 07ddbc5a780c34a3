import math
import random

import numpy as np
import pytest

from alphax.graph import Graph
from alphax.spectral import (
    CERT_TOL,
    ConvergenceError,
    bound_lower_delta,
    bound_upper_degree,
    bound_upper_edge,
    build_alpha_matrix,
    column_sum_certificate,
    spectral_radius,
    validate_alpha,
)
from alphax.families import (
    disjoint_union,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_friendship,
    make_path,
    make_wheel,
)

from helpers import ALPHA_GRID, connected_class_reps, eig_rho, random_graph


def test_build_alpha_matrix_entries():
    g = make_path(3)
    m = build_alpha_matrix(g, 0.25)
    assert m[0, 0] == 0.25 * 1 and m[1, 1] == 0.25 * 2
    assert m[0, 1] == 0.75 and m[0, 2] == 0.0
    assert np.allclose(m, m.T)


def test_alpha_validation():
    for bad in (-0.1, 1.5, float("nan")):
        with pytest.raises(ValueError):
            validate_alpha(bad)
    assert validate_alpha(0) == 0.0
    assert validate_alpha(1) == 1.0


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_radius_matches_eigensolve_exhaustive(alpha):
    for n in (2, 3, 4, 5):
        for g in connected_class_reps(n):
            res = spectral_radius(g, alpha)
            assert abs(res.radius - eig_rho(g, alpha)) < 1e-8
            assert res.residual <= 1e-10


def test_radius_matches_eigensolve_random():
    rng = random.Random(314)
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.1, 0.9))
        a = rng.choice(ALPHA_GRID)
        assert abs(spectral_radius(g, a).radius - eig_rho(g, a)) < 1e-8


def test_disconnected_takes_component_maximum():
    g = disjoint_union(make_cycle(3), make_complete(5))
    res = spectral_radius(g, 0.5)
    assert abs(res.radius - 4.0) < 1e-10  # K_5 wins: regular of degree 4
    # Perron weight sits on the winning component, zero elsewhere
    assert np.all(res.perron[:3] == 0.0)
    assert np.all(res.perron[3:] > 0.0)


def test_perron_positive_and_normalized():
    rng = random.Random(99)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 8), 0.6)
        if not g.is_connected():
            continue
        res = spectral_radius(g, 0.75)
        assert res.perron.min() > 0
        assert abs(np.linalg.norm(res.perron) - 1.0) < 1e-9


def test_edgeless_graph_radius_zero():
    g = Graph.from_edge_list(3, [])
    assert spectral_radius(g, 0.5).radius == 0.0


def test_adding_edge_never_decreases_radius():
    rng = random.Random(5)
    for _ in range(25):
        g = random_graph(rng, 7, 0.4)
        missing = [
            (u, v)
            for u in range(7)
            for v in range(u + 1, 7)
            if not g.has_edge(u, v)
        ]
        if not missing:
            continue
        u, v = rng.choice(missing)
        a = rng.choice(ALPHA_GRID)
        assert spectral_radius(g.add_edge(u, v), a).radius >= spectral_radius(g, a).radius - 1e-10


def test_convergence_error_carries_state():
    with pytest.raises(ConvergenceError) as err:
        spectral_radius(make_path(4), 0.0, max_iters=2)
    assert err.value.iterations == 2
    assert err.value.residual > 0


def test_known_radii():
    assert abs(spectral_radius(make_wheel(7), 0.5).radius - 4.0) < 1e-10
    assert abs(spectral_radius(make_complete_bipartite(2, 6), 0.5).radius - 4.0) < 1e-10
    assert abs(spectral_radius(make_complete_bipartite(2, 6), 0.0).radius - 2 * math.sqrt(3)) < 1e-9
    assert abs(spectral_radius(make_friendship(3), 0.5).radius - 3.6861407) < 1e-7
    # r-regular graphs have radius exactly r for every alpha
    for a in ALPHA_GRID:
        assert abs(spectral_radius(make_cycle(9), a).radius - 2.0) < 1e-10


# -- bounds ----------------------------------------------------------------


def test_degree_bound_values():
    assert abs(bound_upper_degree(make_cycle(7), 0.6) - 2.0) < 1e-12
    assert abs(bound_upper_degree(make_complete_bipartite(1, 3), 0.5) - 2.0) < 1e-12
    assert abs(bound_upper_degree(make_wheel(7), 0.5) - 4.5) < 1e-12


def test_edge_bound_values():
    assert abs(bound_upper_edge(make_cycle(5), 0.5) - 2.0) < 1e-12
    assert abs(bound_upper_edge(make_complete_bipartite(2, 6), 0.5) - 4.0) < 1e-12
    # P_3 = K_{1,2} is bipartite semi-regular, so the bound is exact:
    # both edges give sqrt(m(u) m(v)) = sqrt(2 * 1) = rho(P_3)
    assert abs(bound_upper_edge(make_path(3), 0.0) - math.sqrt(2)) < 1e-12
    assert abs(spectral_radius(make_path(3), 0.0).radius - math.sqrt(2)) < 1e-10


def test_lower_bound_values():
    assert abs(bound_lower_delta(make_wheel(7), 0.5) - 3.5) < 1e-12
    assert abs(bound_lower_delta(make_wheel(7), 0.75) - (4.5 + 0.0625 / 0.75)) < 1e-12
    # graphs with a dominating vertex at alpha = 1/2: exactly n/2
    for n in (5, 8):
        assert abs(bound_lower_delta(make_wheel(n), 0.5) - n / 2) < 1e-12


def test_upper_bounds_reject_isolated_vertices():
    g = Graph.from_edge_list(3, [(0, 1)])
    with pytest.raises(ValueError):
        bound_upper_degree(g, 0.5)
    with pytest.raises(ValueError):
        bound_upper_edge(g, 0.5)
    bound_lower_delta(g, 0.5)  # no degree requirement here


def test_sandwich_on_samples():
    rng = random.Random(21)
    count = 0
    while count < 40:
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        if g.min_degree() < 1:
            continue
        count += 1
        for a in ALPHA_GRID:
            rho = spectral_radius(g, a).radius
            upper = min(bound_upper_degree(g, a), bound_upper_edge(g, a))
            assert bound_lower_delta(g, a) <= rho + 1e-8
            assert rho <= upper + 1e-8


def test_degree_bound_tight_only_on_regular():
    for n in (3, 4, 5):
        for g in connected_class_reps(n):
            for a in (0.6, 0.75):
                gap = bound_upper_degree(g, a) - spectral_radius(g, a).radius
                if g.is_regular():
                    assert abs(gap) < 1e-9
                else:
                    assert gap > 1e-8


# -- column-sum certificate ------------------------------------------------


def test_certificate_regular_closed_form():
    # any r-regular graph at alpha = 1/2: every column sums to r^2 - n*r/2
    c8 = make_cycle(8)
    assert column_sum_certificate(c8, 0.5) == pytest.approx([-4.0] * 8, abs=1e-12)
    k5 = make_complete(5)
    assert column_sum_certificate(k5, 0.5) == pytest.approx([16 - 10.0] * 5, abs=1e-12)


def test_certificate_bipartite_boundary_case():
    # K_{2,6} at alpha = 1/2 sits exactly on the boundary: every column sum 0
    sums = column_sum_certificate(make_complete_bipartite(2, 6), 0.5)
    assert sums == pytest.approx([0.0] * 8, abs=1e-12)


def test_certificate_two_routes_agree():
    rng = random.Random(42)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.9))
        a = rng.choice(ALPHA_GRID)
        sums = column_sum_certificate(g, a)
        n = g.n
        mat = build_alpha_matrix(g, a)
        b = mat @ mat - a * n * mat + 2 * (2 * a - 1) * (n - 2) * np.eye(n)
        assert np.max(np.abs(np.asarray(sums) - b.sum(axis=0))) <= CERT_TOL


def test_certificate_n_param_override():
    g = make_cycle(6)
    base = column_sum_certificate(g, 0.75)
    assert column_sum_certificate(g, 0.75, n_param=6) == base
    shifted = column_sum_certificate(g, 0.75, n_param=8)
    # larger n drives the sums down in the -alpha*n*d(u) term faster than the
    # +2(2a-1)(n-2) constant pushes back: d(u)=2, alpha=0.75 -> net -0.5 per step
    assert all(s2 < s1 for s1, s2 in zip(base, shifted))
