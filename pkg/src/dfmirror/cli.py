"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse failure, 2 validation failure,
3 convergence to a vertex (star topology), 4 no convergence,
5 unsupported dimension, 6 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io
from .descent_engines import md_solve, natural_gradient_step, objective_grid
from .df_dynamics import iterate, solve_fixed_point
from .errors import (
    ConvergedToVertex,
    DomainError,
    NoConvergence,
    UnsupportedDimension,
    ValidationError,
)
from .influence_net import perron_left_eigenvector, star_topology, validate_interaction_matrix
from .sampling import simplex_starts
from .simplex_core import as_interior_point, as_simplex_point, dual_to_primal, is_vertex, mirror_to_dual
from .variational import dual_scan, kkt_report
from .verification import run_verification

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_VERTEX, EXIT_NOCONV, EXIT_DIM, EXIT_VERIFY = range(7)


class CliExit(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _emit(args, lines) -> None:
    text = "".join(line + "\n" for line in lines)
    if args.out:
        try:
            io.write_text(args.out, text)
        except OSError as exc:
            raise CliExit(EXIT_IO, f"cannot write {args.out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _load_network(path):
    net = validate_interaction_matrix(io.read_matrix(path))
    return net, star_topology(net)


def _centrality(args) -> np.ndarray:
    """Centrality from --matrix (Perron vector) or --centrality (read as given)."""
    if args.matrix:
        net, topo = _load_network(args.matrix)
        if topo.star_center is not None and getattr(args, "reject_star", True):
            raise ConvergedToVertex(topo.star_center)
        return perron_left_eigenvector(net).c
    return as_interior_point(io.read_vector(args.centrality))


def cmd_validate(args):
    a = io.read_matrix(args.matrix)
    try:
        net = validate_interaction_matrix(a)
    except ValidationError as exc:
        raise CliExit(EXIT_INVALID, f"invalid: {exc}") from exc
    topo = star_topology(net)
    star = "none" if topo.star_center is None else f"node {topo.star_center + 1}"
    _emit(args, [
        f"irreducible: {'true' if topo.irreducible else 'false'}, star: {star}",
        "square: pass",
        "nonnegative: pass",
        "zero_diagonal: pass",
        "row_stochastic: pass",
        "strongly_connected: pass",
    ])


def cmd_centrality(args):
    net = validate_interaction_matrix(io.read_matrix(args.matrix))
    cv = perron_left_eigenvector(net, tol=args.tol, max_iter=args.max_iter)
    _emit(args, [io.record("c", cv.c), io.record("residual", cv.residual)])


def cmd_fixed_point(args):
    c = _centrality(args)
    x, info = solve_fixed_point(c, tol=args.tol, max_iter=args.max_iter, full_output=True)
    kkt = kkt_report(x, c)
    _emit(args, [
        io.record("x_star", x),
        io.record("iterations", info["iterations"]),
        io.record("step_norm", info["step_norm"]),
        io.record("nu", kkt.nu),
        io.record("max_stationarity", kkt.max_stationarity),
        io.record("feasibility", kkt.feasibility),
    ])


def _starts(args, n) -> np.ndarray:
    if args.x0:
        pts = np.atleast_2d(io.read_vector(args.x0))
        for p in pts:
            as_simplex_point(p)
        if pts.shape[1] != n:
            raise DomainError(f"initial points have dimension {pts.shape[1]}, network has {n}")
        return pts
    return simplex_starts(args.seed, args.starts, n)


def _trajectory(engine, x0, c, steps, tol, h) -> np.ndarray:
    if engine == "df" or is_vertex(x0):
        return iterate(x0, c, tol=tol, max_iter=steps).points
    if engine == "md":
        return md_solve(c, x0, h=h, tol=tol, max_iter=steps).points
    mu = mirror_to_dual(x0)
    points = [dual_to_primal(mu)]
    for _ in range(steps):
        mu = natural_gradient_step(mu, c)
        points.append(dual_to_primal(mu))
        if np.max(np.abs(points[-1] - points[-2])) < tol:
            break
    return np.array(points)


def cmd_iterate(args):
    c = _centrality(args)
    n = c.size
    lines = [io.record("start", "step", [f"x{i + 1}" for i in range(n)])]
    for s, x0 in enumerate(_starts(args, n)):
        for k, p in enumerate(_trajectory(args.engine, x0, c, args.steps, args.tol, args.h)):
            lines.append(io.record(s, k, p))
    _emit(args, lines)


def cmd_grid(args):
    c = _centrality(args)
    if c.size != 3:
        raise UnsupportedDimension(c.size)
    pts, values = objective_grid(c, args.resolution)
    x_star = solve_fixed_point(c, tol=args.tol, max_iter=args.max_iter)
    star_value = float(np.sum(x_star * np.log(x_star / c)) - np.sum((1 - x_star) * np.log(1 - x_star)))
    lines = ["x1,x2,x3,objective"]
    lines.extend(io.record(p, v) for p, v in zip(pts, values))
    lines.append(io.record(x_star, star_value, "fixed_point"))
    _emit(args, lines)


def cmd_kkt(args):
    c = _centrality(args)
    if args.x:
        x = as_interior_point(io.read_vector(args.x))
    else:
        x = solve_fixed_point(c, tol=args.tol, max_iter=args.max_iter)
    kkt = kkt_report(x, c)
    _emit(args, [
        io.record("x", x),
        io.record("nu", kkt.nu),
        io.record("stationarity", kkt.stationarity),
        io.record("max_stationarity", kkt.max_stationarity),
        io.record("feasibility", kkt.feasibility),
    ])


def cmd_dual(args):
    c = _centrality(args)
    scan = dual_scan(c, args.nu_min, args.nu_max, args.samples)
    lines = [
        io.record("best_nu", scan.best_nu),
        io.record("best_zeta", scan.best_zeta),
        io.record("refined_nu", scan.refined_nu),
        io.record("refined_zeta", scan.refined_zeta),
        io.record("primal_value", scan.primal_value),
        io.record("gap", scan.gap),
        io.record("concave", scan.is_concave()),
        "nu,zeta",
    ]
    lines.extend(io.record(nu, z) for nu, z in zip(scan.nu_grid, scan.zeta_values))
    _emit(args, lines)


def cmd_verify(args):
    net, topo = _load_network(args.matrix)
    if topo.star_center is not None:
        raise ConvergedToVertex(topo.star_center)
    claimed = None
    if args.centrality_override:
        claimed = as_interior_point(io.read_vector(args.centrality_override))
        if claimed.size != net.n:
            raise DomainError("override has the wrong dimension")
    results = run_verification(net, claimed, seed=args.seed, h=args.h)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} {r.detail}" for r in results]
    failed = [r.name for r in results if not r.passed]
    lines.append(f"summary: {len(results) - len(failed)}/{len(results)} passed")
    _emit(args, lines)
    if failed:
        raise CliExit(EXIT_VERIFY, "failed properties: " + ", ".join(failed))


def _common(p, tol=1e-12):
    p.add_argument("--tol", type=float, default=tol)
    p.add_argument("--max-iter", type=int, default=100_000)
    p.add_argument("--h", type=float, default=1.0, help="mirror-descent step size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default: stdout)")
    return p


def _network(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", help="interaction matrix document")
    g.add_argument("--centrality", help="centrality vector document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dfmirror", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = _common(sub.add_parser("validate", help="check an interaction matrix"))
    p.add_argument("matrix")
    p.set_defaults(func=cmd_validate)

    p = _common(sub.add_parser("centrality", help="Perron left eigenvector"), tol=1e-14)
    p.add_argument("matrix")
    p.set_defaults(func=cmd_centrality)

    p = _common(sub.add_parser("fixed-point", help="solve for the interior fixed point"))
    _network(p)
    p.set_defaults(func=cmd_fixed_point)

    p = _common(sub.add_parser("iterate", help="write trajectories"), tol=0.0)
    _network(p)
    p.add_argument("--x0", help="initial point(s) document")
    p.add_argument("--starts", type=int, default=6, help="number of seeded starts")
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--engine", choices=["df", "md", "ngd"], default="df")
    p.set_defaults(func=cmd_iterate, reject_star=False)

    p = _common(sub.add_parser("grid", help="objective on the barycentric grid (n = 3)"))
    _network(p)
    p.add_argument("--resolution", type=int, default=200)
    p.set_defaults(func=cmd_grid)

    p = _common(sub.add_parser("kkt", help="KKT residuals"))
    _network(p)
    p.add_argument("--x", help="point document (default: solved fixed point)")
    p.set_defaults(func=cmd_kkt)

    p = _common(sub.add_parser("dual", help="scan the Lagrange dual function"))
    _network(p)
    p.add_argument("--nu-min", type=float)
    p.add_argument("--nu-max", type=float)
    p.add_argument("--samples", type=int, default=2001)
    p.set_defaults(func=cmd_dual)

    p = _common(sub.add_parser("verify", help="run the cross-equivalence suite"))
    p.add_argument("matrix")
    p.add_argument("--centrality-override", help="claimed centrality vector document")
    p.set_defaults(func=cmd_verify)
    return parser


def _check_config(args):
    if args.command == "iterate":
        if not args.tol >= 0:
            raise CliExit(EXIT_INVALID, "--tol must be nonnegative")
    elif not args.tol > 0:
        raise CliExit(EXIT_INVALID, "--tol must be positive")
    if getattr(args, "resolution", 10) < 10:
        raise CliExit(EXIT_INVALID, "--resolution must be at least 10")
    if getattr(args, "steps", 0) < 0 or args.max_iter < 0:
        raise CliExit(EXIT_INVALID, "iteration counts must be nonnegative")
    if getattr(args, "starts", 1) < 1:
        raise CliExit(EXIT_INVALID, "--starts must be at least 1")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _check_config(args)
        args.func(args)
    except CliExit as exc:
        print(exc, file=sys.stderr)
        return exc.code
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConvergedToVertex as exc:
        print(f"error: {exc} (star topology)", file=sys.stderr)
        return EXIT_VERTEX
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except UnsupportedDimension as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIM
    except (ValidationError, DomainError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
