#!/usr/bin/env python3
"""
Command-line front end of the circle rectification toolkit.

Every subcommand is a handler that prints numbered progress, writes its
report and returns a CommandResult. main_cli maps the outcome to the exit
code: 0 when the verification passes, 1 when it fails, 2 on usage, parse,
configuration or input errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from .bundles import bundle_from_AB, exact_cone_rank, cone_rank
from .config import RunConfig, print_configuration_error
from .config.constants import (
    BELTRAMI_BALL,
    BELTRAMI_CURVATURE_PLANES,
    BELTRAMI_CURVATURE_POINTS,
    BELTRAMI_GEODESICS,
    BELTRAMI_STEPS,
    BELTRAMI_T,
    CURVATURE_BALL,
    CURVATURE_TOL,
    GENERIC_COUNT,
)
from .metrics import MetricField, MetricKind, curvature_survey, geodesic_integrate, random_ball_points
from .nets import char_determinant, classify_net, degenerate_test, orthogonal_complement, unit_disc
from .processors import BeltramiChecker, RectificationPipeline
from .reports import (
    BeltramiReportModel,
    BundleModel,
    ClassificationModel,
    CurvatureReportModel,
    DiagnosticModel,
    DirsModel,
    GenericityReportModel,
    NetModel,
    PolynomialModel,
    RectificationReportModel,
    SphereModel,
    TaylorReportModel,
    write_csv,
    write_json,
)
from .taylor import (
    closed_taylor,
    closed_taylor_values,
    degree_report,
    divisibility_chain,
    identity_check_fourth_order,
    identity_check_mixed,
    identity_check_third_order,
    numeric_taylor,
    rectifiability_diagnostic,
    symmetry_check,
)
from .utils import RunLogger
from .utils.exceptions import (
    CircleGeometryError,
    ConfigurationError,
    DegreeTooHighError,
    ExpressionSyntaxError,
    OutOfDomainError,
)
from .utils.poly_expr import parse_poly

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DIRECTION_BOX = 2.0
DEFAULT_GRID = 60
DEGENERATE_BALL = 2.0


class CommandResult(NamedTuple):
    """Outcome of one subcommand."""
    passed: bool
    summary: Dict[str, Any]


class InputError(CircleGeometryError):
    """An input file or flag value could not be used."""


class Console:
    """
    Numbered progress output.

    Progress goes to stdout when the report is written to a file and to
    stderr when the report itself is printed on stdout.
    """

    def __init__(self, config: RunConfig):
        self.quiet = config.quiet
        self.stream = sys.stdout if config.output else sys.stderr
        self.step = 0

    def start(self, text: str):
        self.step += 1
        if not self.quiet:
            print(f"{self.step}. {text}...", file=self.stream)

    def ok(self, text: str):
        if not self.quiet:
            print(f"✓ {text}", file=self.stream)

    def fail(self, text: str):
        if not self.quiet:
            print(f"✗ {text}", file=self.stream)


def _emit_json(model, config: RunConfig):
    text = write_json(model, config.output)
    if config.output is None:
        sys.stdout.write(text)


def _read_json(path: str) -> Any:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise InputError(f"Cannot read {path}", details=str(e))
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON", details=str(e))


def _validate(model_type, data: Any, path: str):
    try:
        return model_type.model_validate(data)
    except ValidationError as e:
        raise InputError(f"{path} does not hold a valid {model_type.__name__}", details=str(e))


def _parse_vector(text: str) -> np.ndarray:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return np.array(values)


def _parse_grid_size(text: str) -> int:
    try:
        count = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if count < GENERIC_COUNT:
        raise argparse.ArgumentTypeError(f"needs at least {GENERIC_COUNT} directions, got {count}")
    return count


def _parse_override(text: str):
    name, sep, value = text.partition("=")
    try:
        if not sep or not name:
            raise ValueError
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")


def _random_dirs(rng: np.random.Generator, count: int) -> List[List[float]]:
    return rng.uniform(-DIRECTION_BOX, DIRECTION_BOX, size=(count, 2)).tolist()


# Bundle commands

def handle_bundle_gen(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Generate the bundle of A(k, m), B(k, m) for seeded random directions."""
    console = Console(config)
    console.start("Parsing A and B")
    A, B = parse_poly(args.A), parse_poly(args.B)
    console.ok("Expressions parsed")

    console.start(f"Generating {args.n} members")
    dirs = _random_dirs(config.child_rngs(1)[0], args.n)
    bundle = bundle_from_AB(A, B, dirs)
    console.ok(f"Bundle with {len(bundle)} members ({len(bundle.circles)} circles)")

    _emit_json(BundleModel.from_domain(bundle), config)
    return CommandResult(True, {"members": len(bundle), "circles": len(bundle.circles)})


def handle_bundle_rectify(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Detect the second common point, rectify and verify."""
    console = Console(config)
    console.start(f"Loading {args.bundle}")
    bundle = _validate(BundleModel, _read_json(args.bundle), args.bundle).to_domain()
    console.ok(f"Bundle with {len(bundle)} members")

    console.start("Rectifying")
    pipeline = RectificationPipeline(samples_per_circle=config.samples, relative_tol=config.tol)
    report = pipeline.run(bundle)
    if report.second_point is None:
        console.fail("No second common point")
    elif report.rectified:
        console.ok(f"Second point {report.second_point}, max residual {report.max_residual:.3g}")
    else:
        console.fail(f"Residual {report.max_residual:.3g} exceeds {report.tolerance:.3g}")

    _emit_json(RectificationReportModel.from_domain(report, config.seed, config.tolerances), config)
    return CommandResult(report.rectified, pipeline.summary(report))


def handle_bundle_genericity(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Rank test of the first 54 directions of a bundle or dirs file."""
    console = Console(config)
    console.start(f"Loading {args.input}")
    data = _read_json(args.input)
    if isinstance(data, dict) and "dirs" in data:
        dirs = [tuple(d) for d in _validate(DirsModel, data, args.input).dirs]
    else:
        bundle = _validate(BundleModel, data, args.input).to_domain()
        dirs = [(t.k, t.m) for t in bundle.tangents]
    if len(dirs) < GENERIC_COUNT:
        raise InputError(f"Genericity needs {GENERIC_COUNT} directions", details=f"got {len(dirs)}")
    dirs = dirs[:GENERIC_COUNT]
    console.ok(f"Using the first {GENERIC_COUNT} of the directions")

    console.start("Computing the rank of the degree-9 cone matrix")
    rank = cone_rank(dirs)
    exact_rank = exact_cone_rank(dirs) if args.exact else None
    generic = (exact_rank if exact_rank is not None else rank) == GENERIC_COUNT
    if exact_rank is not None and exact_rank != rank:
        logger.warning("Numeric rank %d differs from exact rank %d", rank, exact_rank)
    (console.ok if generic else console.fail)(f"Rank {rank}" + ("" if exact_rank is None else f", exact {exact_rank}"))

    model = GenericityReportModel(seed=config.seed, tolerances=config.tolerances, count=len(dirs),
                                  rank=rank, generic=generic, exact_rank=exact_rank)
    _emit_json(model, config)
    return CommandResult(generic, {"rank": rank, "exact_rank": exact_rank, "generic": generic})


# Taylor commands

def _closed_vs_numeric(A, B, grid) -> float:
    """Largest relative deviation of numeric_taylor from the closed forms."""
    worst = 0.0
    for k, m in grid:
        a_value, b_value = float(A.evaluate(k, m)), float(B.evaluate(k, m))
        closed = np.array(closed_taylor_values(a_value, b_value, k, m).values())
        curve = bundle_from_AB(A, B, [(k, m)]).members[0].curve
        numeric = np.array(numeric_taylor(curve, k, m).values())
        scale = float(np.max(np.abs(closed)))
        diff = float(np.max(np.abs(numeric - closed)))
        if diff > 0.0:
            worst = max(worst, diff / max(scale, np.finfo(float).tiny))
    return worst


def handle_taylor_verify(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Closed forms against numeric extraction, exact identities and the diagnostic."""
    console = Console(config)
    console.start("Parsing A and B")
    A, B = parse_poly(args.A), parse_poly(args.B)
    console.ok("Expressions parsed")

    console.start("Checking the exact identities")
    sextet = closed_taylor(A, B)
    third_phi, third_psi = identity_check_third_order(A, B)
    fourth_phi, fourth_psi = identity_check_fourth_order(A, B)
    identities = {
        "third_order_phi": third_phi.is_zero(),
        "third_order_psi": third_psi.is_zero(),
        "mixed": identity_check_mixed(A, B).is_zero(),
        "fourth_order_phi": fourth_phi.is_zero(),
        "fourth_order_psi": fourth_psi.is_zero(),
    }
    degrees = degree_report(A, B)
    divisibility = divisibility_chain(sextet.phi2, sextet.psi2)
    try:
        violations = sorted(symmetry_check(A, B))
    except DegreeTooHighError:
        violations = ["degree<=1"]
    (console.ok if all(identities.values()) else console.fail)(
        f"{sum(identities.values())}/{len(identities)} identities hold exactly")

    console.start(f"Running the diagnostic on {args.grid} directions")
    grid = _random_dirs(config.child_rngs(1)[0], args.grid)
    closed = rectifiability_diagnostic(A.evaluate, B.evaluate, grid, source="closed")
    numeric = None
    closed_vs_numeric = None
    try:
        closed_vs_numeric = _closed_vs_numeric(A, B, grid)
        numeric = rectifiability_diagnostic(A.evaluate, B.evaluate, grid, source="numeric")
    except CircleGeometryError as e:
        logger.warning("Numeric extraction failed: %s", e.message)
    (console.ok if closed.rectifiable else console.fail)(f"Verdict {closed.verdict.value}")

    model = TaylorReportModel(
        seed=config.seed,
        tolerances=config.tolerances,
        A=PolynomialModel.from_domain(A),
        B=PolynomialModel.from_domain(B),
        identities=identities,
        degrees={name: (None if d == float("-inf") else int(d)) for name, d in degrees.degrees.items()},
        divisibility=divisibility,
        symmetry_violations=violations,
        closed_vs_numeric=closed_vs_numeric,
        closed=DiagnosticModel.from_domain(closed),
        numeric=None if numeric is None else DiagnosticModel.from_domain(numeric),
        verdict=closed.verdict.value,
    )
    _emit_json(model, config)
    passed = closed.rectifiable and all(identities.values())
    return CommandResult(passed, {"verdict": closed.verdict.value, "closed_vs_numeric": closed_vs_numeric})


# Net commands

def _load_net(path: str):
    return _validate(NetModel, _read_json(path), path).to_domain()


def handle_net_classify(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Classify a net as hyperbolic, euclidean or elliptic."""
    console = Console(config)
    console.start(f"Loading {args.net}")
    net = _load_net(args.net)
    console.ok("Net loaded")

    console.start("Classifying")
    S0 = orthogonal_complement(net)
    geometry = classify_net(net)
    console.ok(f"Class {geometry.value}")

    model = ClassificationModel(seed=config.seed, tolerances=config.tolerances,
                                geometry_class=geometry.value, S0=SphereModel.from_domain(S0),
                                disc=unit_disc(S0))
    _emit_json(model, config)
    return CommandResult(True, {"class": geometry.value})


def handle_net_degenerate(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Sample the characteristic determinant and flag degenerate points."""
    console = Console(config)
    console.start(f"Loading {args.net}")
    net = _load_net(args.net)
    console.ok("Net loaded")

    console.start(f"Sampling {args.samples} points")
    points = random_ball_points(config.child_rngs(1)[0], args.samples, DEGENERATE_BALL)
    rows = []
    for x in points:
        rows.append([x[0], x[1], x[2], char_determinant(net, x), float(degenerate_test(net, x))])
    degenerate = sum(int(row[4]) for row in rows)
    console.ok(f"{degenerate} degenerate points")

    header = ["x", "y", "z", "det", "degenerate"]
    if config.output:
        write_csv(config.output, header, rows)
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(format(float(v), ".17g") for v in row))
    return CommandResult(True, {"samples": len(rows), "degenerate": degenerate})


# Metric commands

def _metric(name: str) -> MetricField:
    try:
        return MetricField.named(name)
    except ValueError as e:
        raise InputError(str(e))


def handle_metric_geodesic(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Integrate one geodesic and write it as CSV."""
    console = Console(config)
    M = _metric(args.metric)
    console.start(f"Integrating a {M.name} geodesic over [0, {args.T:g}] in {args.steps} steps")
    passed = True
    try:
        path = geodesic_integrate(M, args.x0, args.v0, args.T, args.steps)
        console.ok(f"{len(path)} samples")
    except OutOfDomainError as e:
        path = e.partial_path
        passed = False
        console.fail(f"Left the domain after {0 if path is None else len(path)} samples")
        if path is None:
            raise

    rows = [[s.t, *s.x, *s.v] for s in path.samples]
    header = ["t", "x", "y", "z", "vx", "vy", "vz"]
    if config.output:
        write_csv(config.output, header, rows)
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(format(float(v), ".17g") for v in row))
    return CommandResult(passed, {"samples": len(rows), "complete": passed})


def handle_metric_curvature(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Survey sectional curvature at random points and planes."""
    console = Console(config)
    M = _metric(args.metric)
    tol = config.tolerances.get("curvature", CURVATURE_TOL)
    console.start(f"Sampling {args.samples} points x {args.planes} planes of {M.name}")
    survey = curvature_survey(M, config.child_rngs(1)[0], args.samples, args.planes, args.ball)
    passed = abs(survey.mean - M.expected_curvature) < tol and survey.stddev < tol
    (console.ok if passed else console.fail)(
        f"Mean {survey.mean:.6g} (expected {M.expected_curvature:g}), stddev {survey.stddev:.3g}")

    _emit_json(CurvatureReportModel.from_domain(survey, config.seed, config.tolerances), config)
    return CommandResult(passed, {"mean": survey.mean, "stddev": survey.stddev})


def handle_metric_check_beltrami(args: argparse.Namespace, config: RunConfig) -> CommandResult:
    """Geodesics are circles, their images are lines and curvature is constant."""
    console = Console(config)
    M = _metric(args.metric)
    console.start(f"Running the suite on {M.name}")
    checker = BeltramiChecker(M, n_geodesics=args.geodesics, ball=args.ball, T=args.T, steps=args.steps,
                              curvature_points=args.points, tolerances=config.tolerance_overrides)
    report = checker.check(config.seed)
    if report.passed:
        console.ok("All checks passed")
    else:
        console.fail(f"Failed: {', '.join(report.failures())}")

    model = BeltramiReportModel.from_domain(report)
    _emit_json(model, config)
    return CommandResult(report.passed, {"failures": report.failures(),
                                         "curvature_mean": model.curvature_mean})


# Argument parsing

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="Seed of the random generator (default: 0)")
    common.add_argument("--tol", type=float, help="Verification tolerance (default: 1e-7)")
    common.add_argument("--samples-per-circle", dest="samples_per_circle", type=int,
                        help="Samples per circle when verifying (default: 64)")
    common.add_argument("--set-tol", dest="set_tol", type=_parse_override, action="append", default=[],
                        metavar="NAME=VALUE",
                        help="Override a named tolerance (circle_rms, image_line, energy_drift, curvature)")
    common.add_argument("-o", "--output", help="Output file (default: stdout)")
    common.add_argument("--log-dir", dest="log_dir", help="Write a markdown run log to this directory")
    common.add_argument("-v", "--verbose", action="store_true", default=None, help="Enable debug logging")
    common.add_argument("-q", "--quiet", action="store_true", default=None, help="Suppress progress output")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with one sub-parser per command."""
    common = _common_options()
    metric_names = [kind.value for kind in MetricKind]
    parser = argparse.ArgumentParser(
        prog="circle-rectify",
        description="Rectifiable circle bundles, sphere nets and circular-geodesic metrics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s bundle gen --A "1" --B "0" --n 60 -o b.json     # Rectifiable bundle
  %(prog)s bundle rectify b.json -o report.json           # Second point and verification
  %(prog)s bundle genericity b.json --exact                # 54-line rank test
  %(prog)s taylor verify --A "k^2" --B "0"                 # Exits 1: not rectifiable
  %(prog)s net classify net.json                           # hyperbolic / euclidean / elliptic
  %(prog)s net degenerate net.json --samples 1000 -o locus.csv
  %(prog)s metric geodesic --metric circular-hyperbolic --x0 0.1,0,0 --v0 0,1,0 --T 0.4 -o path.csv
  %(prog)s metric curvature --metric klein-hyperbolic --samples 50
  %(prog)s metric check-beltrami --metric circular-hyperbolic -o report.json

Exit codes: 0 pass, 1 verification failure, 2 usage, parse or input error.
        """
    )
    groups = parser.add_subparsers(dest="group", metavar="{bundle,taylor,net,metric}")
    groups.required = True

    bundle = groups.add_parser("bundle", help="Generate, rectify and test circle bundles")
    bundle_cmds = bundle.add_subparsers(dest="command", required=True)
    gen = bundle_cmds.add_parser("gen", parents=[common], help="Generate the bundle of A and B")
    gen.add_argument("--A", required=True, help="Polynomial A(k, m), e.g. \"2*k + 1\"")
    gen.add_argument("--B", required=True, help="Polynomial B(k, m)")
    gen.add_argument("--n", type=int, default=DEFAULT_GRID, help="Number of members (default: 60)")
    gen.set_defaults(handler=handle_bundle_gen)
    rectify = bundle_cmds.add_parser("rectify", parents=[common], help="Rectify a bundle file")
    rectify.add_argument("bundle", help="Bundle JSON file")
    rectify.set_defaults(handler=handle_bundle_rectify)
    genericity = bundle_cmds.add_parser("genericity", parents=[common], help="54-line genericity test")
    genericity.add_argument("input", help="Bundle JSON or dirs JSON file")
    genericity.add_argument("--exact", action="store_true", help="Cross-check with exact rational elimination")
    genericity.set_defaults(handler=handle_bundle_genericity)

    taylor = groups.add_parser("taylor", help="Taylor coefficients and the rectifiability diagnostic")
    taylor_cmds = taylor.add_subparsers(dest="command", required=True)
    verify = taylor_cmds.add_parser("verify", parents=[common], help="Verify closed forms and identities")
    verify.add_argument("--A", required=True, help="Polynomial A(k, m)")
    verify.add_argument("--B", required=True, help="Polynomial B(k, m)")
    verify.add_argument("--grid", type=_parse_grid_size, default=DEFAULT_GRID,
                        help=f"Number of grid directions, at least {GENERIC_COUNT} (default: 60)")
    verify.set_defaults(handler=handle_taylor_verify)

    net = groups.add_parser("net", help="Sphere nets and characteristic maps")
    net_cmds = net.add_subparsers(dest="command", required=True)
    classify = net_cmds.add_parser("classify", parents=[common], help="Classify a net")
    classify.add_argument("net", help="Net JSON file")
    classify.set_defaults(handler=handle_net_classify)
    degenerate = net_cmds.add_parser("degenerate", parents=[common], help="Sample the degenerate locus")
    degenerate.add_argument("net", help="Net JSON file")
    degenerate.add_argument("--samples", type=int, default=1000, help="Number of sample points (default: 1000)")
    degenerate.set_defaults(handler=handle_net_degenerate)

    metric = groups.add_parser("metric", help="Circular-geodesic metrics")
    metric_cmds = metric.add_subparsers(dest="command", required=True)
    geodesic = metric_cmds.add_parser("geodesic", parents=[common], help="Integrate one geodesic")
    geodesic.add_argument("--metric", required=True, choices=metric_names)
    geodesic.add_argument("--x0", required=True, type=_parse_vector, help="Initial point a,b,c")
    geodesic.add_argument("--v0", required=True, type=_parse_vector, help="Initial velocity a,b,c")
    geodesic.add_argument("--T", type=float, default=BELTRAMI_T, help="Time horizon (default: 0.2)")
    geodesic.add_argument("--steps", type=int, default=BELTRAMI_STEPS, help="RK4 steps (default: 2000)")
    geodesic.set_defaults(handler=handle_metric_geodesic)
    curvature = metric_cmds.add_parser("curvature", parents=[common], help="Survey sectional curvature")
    curvature.add_argument("--metric", required=True, choices=metric_names)
    curvature.add_argument("--samples", type=int, default=BELTRAMI_CURVATURE_POINTS,
                           help="Number of sample points (default: 50)")
    curvature.add_argument("--planes", type=int, default=BELTRAMI_CURVATURE_PLANES,
                           help="Random planes per point (default: 3)")
    curvature.add_argument("--ball", type=float, default=CURVATURE_BALL,
                           help="Radius of the sampling ball (default: 0.8)")
    curvature.set_defaults(handler=handle_metric_curvature)
    beltrami = metric_cmds.add_parser("check-beltrami", parents=[common], help="Run the full suite")
    beltrami.add_argument("--metric", required=True, choices=metric_names)
    beltrami.add_argument("--geodesics", type=int, default=BELTRAMI_GEODESICS,
                          help="Number of geodesics (default: 50)")
    beltrami.add_argument("--ball", type=float, default=BELTRAMI_BALL,
                          help="Radius of the initial-point ball (default: 0.25)")
    beltrami.add_argument("--T", type=float, default=BELTRAMI_T, help="Time horizon (default: 0.2)")
    beltrami.add_argument("--steps", type=int, default=BELTRAMI_STEPS, help="RK4 steps (default: 2000)")
    beltrami.add_argument("--points", type=int, default=BELTRAMI_CURVATURE_POINTS,
                          help="Curvature survey points (default: 50)")
    beltrami.set_defaults(handler=handle_metric_check_beltrami)

    return parser


def load_run_config(args: argparse.Namespace) -> Optional[RunConfig]:
    """
    Environment configuration with the command-line flags on top.

    Returns:
        RunConfig: Validated configuration or None if validation fails
    """
    try:
        base = RunConfig.from_environment()
    except ConfigurationError as e:
        print_configuration_error(e)
        return None
    try:
        config = base.with_overrides(
            seed=args.seed, tol=args.tol, samples=args.samples_per_circle, output=args.output,
            log_dir=args.log_dir, verbose=args.verbose, quiet=args.quiet,
        )
        if args.set_tol:
            config = config.with_overrides(tolerance_overrides=dict(args.set_tol))
        return config
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return None


def main_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        int: Exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code in (0, None) else EXIT_USAGE

    config = load_run_config(args)
    if config is None:
        return EXIT_USAGE
    if config.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")

    command = f"{args.group} {args.command}"
    handler: Callable[[argparse.Namespace, RunConfig], CommandResult] = args.handler
    exit_code = EXIT_FAIL
    result: Optional[CommandResult] = None
    try:
        result = handler(args, config)
        exit_code = EXIT_PASS if result.passed else EXIT_FAIL

    except ExpressionSyntaxError as e:
        print(f"Error: {e}", file=sys.stderr)
        exit_code = EXIT_USAGE

    except InputError as e:
        print(f"Error: {e}", file=sys.stderr)
        exit_code = EXIT_USAGE

    except CircleGeometryError as e:
        print(f"Error: {command} failed - {e}", file=sys.stderr)
        exit_code = EXIT_FAIL

    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        exit_code = EXIT_USAGE

    except OSError as e:
        print(f"Error: Cannot write output - {e}", file=sys.stderr)
        exit_code = EXIT_USAGE

    if config.log_dir:
        verdict = {EXIT_PASS: "pass", EXIT_FAIL: "fail"}.get(exit_code, "error")
        log_path = RunLogger(config.log_dir).log_run(
            command, argv, config.seed, config.tolerances, verdict,
            None if result is None else result.summary,
        )
        logger.debug("Run log written to %s", log_path)

    return exit_code


def main():
    sys.exit(main_cli())


if __name__ == "__main__":
    main()
