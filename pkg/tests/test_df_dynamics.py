from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dfmirror.df_dynamics import advance, c_from_xstar, df_map, iterate, solve_fixed_point
from dfmirror.descent_engines import grid_minimize_oracle
from dfmirror.errors import ConvergedToVertex, DomainError, NoConvergence
from dfmirror.influence_net import perron_left_eigenvector
from dfmirror.variational import objective

from conftest import REF_C, REF_X, STAR, random_centrality, random_interior


def exact_df_map(x, c):
    """Rational-arithmetic reference for the generic branch."""
    y = [Fraction(ci) / (1 - Fraction(xi)) for xi, ci in zip(x, c)]
    s = sum(y)
    return [v / s for v in y]


class TestMap:
    def test_vertex_branch(self):
        for i in range(3):
            e = np.eye(3)[i]
            np.testing.assert_array_equal(df_map(e, REF_C), e)

    def test_ref_first_step(self):
        np.testing.assert_allclose(df_map([0.6, 0.2, 0.2], REF_C), [4 / 7, 1 / 7, 2 / 7], atol=1e-16)

    def test_uniform_fixed(self):
        u = np.full(3, 1 / 3)
        np.testing.assert_allclose(df_map(u, u), u, atol=1e-16)

    def test_boundary_non_vertex_uses_generic_branch(self):
        out = df_map([0.0, 0.5, 0.5], REF_C)
        assert out.min() > 0

    def test_rejects_boundary_c(self):
        with pytest.raises(DomainError):
            df_map([0.2, 0.3, 0.5], [0.5, 0.5, 0.0])

    @given(st.integers(0, 2**32 - 1), st.integers(3, 8))
    @settings(max_examples=200, deadline=None)
    def test_matches_rational_reference(self, seed, n):
        rng = np.random.default_rng(seed)
        x, c = random_interior(rng, n), random_interior(rng, n)
        ref = np.array([float(v) for v in exact_df_map(x, c)])
        np.testing.assert_allclose(df_map(x, c), ref, rtol=1e-14, atol=1e-16)

    def test_simplex_preserved(self, rng):
        for _ in range(1000):
            n = int(rng.integers(3, 9))
            y = df_map(rng.dirichlet(np.ones(n)), random_interior(rng, n))
            assert y.min() >= 0
            assert abs(y.sum() - 1) <= 1e-14


class TestIterate:
    def test_ref(self):
        traj = iterate(np.full(3, 1 / 3), REF_C)
        assert traj.converged
        assert traj.final_step_norm < 1e-12
        np.testing.assert_allclose(traj.final, REF_X, atol=1e-11)
        assert traj.points.shape == (traj.iterations + 1, 3)

    def test_uniform(self, rng):
        u = np.full(3, 1 / 3)
        traj = iterate(random_interior(rng, 3), u)
        assert traj.converged
        np.testing.assert_allclose(traj.final, u, atol=1e-11)

    def test_star_heads_to_center(self, rng):
        c = perron_left_eigenvector(STAR).c
        traj = iterate(random_interior(rng, 3), c, max_iter=2000)
        assert not traj.converged
        assert np.argmax(traj.final) == 0
        assert traj.final[0] > 0.99
        assert np.all(np.diff(traj.points[50:, 0]) > 0)

    def test_vertex_start(self):
        traj = iterate([0, 0, 1.0], REF_C)
        assert traj.converged and traj.iterations == 0 and traj.points.shape == (1, 3)

    def test_zero_steps(self):
        traj = iterate([0.2, 0.3, 0.5], REF_C, max_iter=0)
        assert not traj.converged and traj.points.shape == (1, 3)

    def test_advance_matches_iterate(self, rng):
        c = random_centrality(rng, 5)
        starts = np.array([random_interior(rng, 5) for _ in range(4)] + [np.eye(5)[2]])
        batch = advance(starts, c, 30)
        for s, b in zip(starts, batch):
            np.testing.assert_allclose(iterate(s, c, tol=0, max_iter=30).final, b, atol=1e-15)
        np.testing.assert_array_equal(batch[-1], np.eye(5)[2])


class TestSolve:
    def test_ref(self):
        x, info = solve_fixed_point(REF_C, full_output=True)
        np.testing.assert_allclose(x, REF_X, atol=1e-8)
        assert info["iterations"] <= 200

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_centroid(self, n):
        np.testing.assert_allclose(solve_fixed_point(np.full(n, 1 / n)), 1 / n, atol=1e-10)

    def test_centroid_converse(self, rng):
        for _ in range(50):
            n = int(rng.integers(3, 7))
            c = random_centrality(rng, n)
            if np.max(np.abs(c - 1 / n)) > 1e-3:
                assert np.max(np.abs(solve_fixed_point(c) - 1 / n)) > 1e-6

    def test_star_signals_vertex(self):
        with pytest.raises(ConvergedToVertex) as exc:
            solve_fixed_point(perron_left_eigenvector(STAR).c)
        assert exc.value.index == 0

    def test_vertex_detected_during_iteration(self):
        c = [0.5 - 1e-11, 0.25, 0.25 + 1e-11]
        with pytest.raises(ConvergedToVertex) as exc:
            solve_fixed_point(c, x0=[1 - 1e-10, 5e-11, 5e-11])
        assert exc.value.index == 0

    def test_no_convergence(self):
        with pytest.raises(NoConvergence):
            solve_fixed_point(REF_C, max_iter=3)

    def test_residual(self, rng):
        for _ in range(30):
            c = random_centrality(rng, int(rng.integers(3, 9)))
            x = solve_fixed_point(c)
            assert np.max(np.abs(df_map(x, c) - x)) <= 1e-12

    def test_unique_basin(self, rng):
        c = random_centrality(rng, 5)
        ends = [iterate(random_interior(rng, 5), c).final for _ in range(20)]
        assert np.max(np.abs(np.array(ends) - ends[0])) <= 1e-8

    def test_permutation_equivariance(self, rng):
        for _ in range(20):
            n = int(rng.integers(3, 8))
            c = random_centrality(rng, n)
            perm = rng.permutation(n)
            np.testing.assert_allclose(solve_fixed_point(c[perm]), solve_fixed_point(c)[perm], atol=1e-10)

    def test_matches_grid_oracle(self, rng):
        for _ in range(50):
            c = random_centrality(rng, 3, max_c=0.4, dense=True)
            x = solve_fixed_point(c)
            sample = grid_minimize_oracle(c, 200)
            assert np.max(np.abs(sample.point - x)) <= 1 / 200
            assert objective(x, c).canonical <= sample.value + 1e-12


class TestInverseMap:
    def test_ref(self):
        np.testing.assert_allclose(c_from_xstar(REF_X), REF_C, atol=1e-15)
        x = [Fraction(3, 7), Fraction(1, 7), Fraction(3, 7)]
        denom = 1 - sum(v * v for v in x)
        assert denom == Fraction(30, 49)
        assert [v * (1 - v) / denom for v in x] == [Fraction(2, 5), Fraction(1, 5), Fraction(2, 5)]

    def test_uniform(self):
        np.testing.assert_allclose(c_from_xstar(np.full(4, 0.25)), 0.25, atol=1e-16)

    def test_boundary(self):
        with pytest.raises(DomainError):
            c_from_xstar([0.0, 0.5, 0.5])

    def test_round_trip(self, rng):
        for _ in range(50):
            c = random_centrality(rng, int(rng.integers(3, 9)))
            np.testing.assert_allclose(c_from_xstar(solve_fixed_point(c)), c, atol=1e-8)
