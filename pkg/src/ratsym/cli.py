"""Command line front end.

Exit codes: 0 success, 2 usage or parse error, 3 precondition violated,
4 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import lab
from .decomposition import associated_primes, irreducible_decomposition, minimal_primes, primary_components_min
from .errors import ParseError, PreconditionError, RatsymError, StabilityError
from .monomial import MonomialIdeal, Ring, format_ideal, ideal_from_dict, ideal_to_dict
from .parsing import format_rational, parse_ideal, parse_rational
from .polyhedra import lp_minimize, newton_polyhedron, stability_denominator, symbolic_polyhedron
from .powers import (
    Method,
    differential_power_monomial,
    integral_closure,
    rational_power,
    rational_symbolic_power,
    saturated_power,
    waldschmidt,
    waldschmidt_sequence,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_CHECK_FAILED = 4

POWER_COMMANDS = {"rpower", "rsympower", "diffpower", "satpower"}
CHECK_KINDS = (
    "containment",
    "primdecomp",
    "binomial",
    "binomial-symbolic",
    "ass-star",
    "splitting",
    "agreement",
    "saturation",
    "root",
    "root-nonradical",
    "zariski-nagata",
)


class UsageError(RatsymError):
    pass


@dataclass
class Invocation:
    command: str
    ring: Ring | None = None
    ideal: MonomialIdeal | None = None
    ideal_b: MonomialIdeal | None = None
    aux: MonomialIdeal | None = None
    u: Fraction | None = None
    method: Method = Method.LOCALIZATION_CONTRACTION
    output_format: str = "text"
    kind: str | None = None
    valuation: tuple[int, ...] | None = None
    box_margin: int = 1
    options: dict = field(default_factory=dict)


def _ideal_arg(text: str, ring: Ring | None) -> MonomialIdeal:
    if text.lstrip().startswith("{"):
        I = ideal_from_dict(json.loads(text))
        if ring is not None and I.ring.variables != ring.variables:
            raise ParseError("structured ideal names a different ring")
        return I
    if ring is None:
        raise UsageError("--ring is required for ideals given as text")
    return parse_ideal(text, ring)


def _ring_arg(text: str | None) -> Ring | None:
    if text is None:
        return None
    try:
        return Ring.of(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="comma separated variable names, e.g. x,y,z")
    common.add_argument("-I", "--ideal", help='generators, e.g. "x*y, y*z"')
    common.add_argument("--format", dest="output_format", choices=("text", "structured", "cas"), default="text")
    common.add_argument("--box-margin", type=int, default=1, help="lattice scan margin (debugging)")

    power = argparse.ArgumentParser(add_help=False)
    power.add_argument("-u", required=True, help="positive rational exponent p/q")

    parser = argparse.ArgumentParser(prog="ratsym", description="Rational (symbolic) powers of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("closure", parents=[common], help="integral closure")
    sub.add_parser("rpower", parents=[common, power], help="rational power")
    p = sub.add_parser("rsympower", parents=[common, power], help="rational symbolic power")
    p.add_argument("--method", default=Method.LOCALIZATION_CONTRACTION.value,
                   choices=[m.value for m in Method if m not in (Method.NEWTON_SCALING,)])
    sub.add_parser("diffpower", parents=[common, power], help="rational differential power (char 0)")
    p = sub.add_parser("satpower", parents=[common, power], help="saturated power")
    p.add_argument("-K", required=True, help="auxiliary ideal K")
    sub.add_parser("np", parents=[common], help="Newton polyhedron")
    sub.add_parser("sp", parents=[common], help="symbolic polyhedron")
    p = sub.add_parser("waldschmidt", parents=[common], help="skew Waldschmidt constant")
    p.add_argument("-v", "--valuation", required=True, help="comma separated nonnegative integers")
    p.add_argument("--sequence", type=int, default=0, help="also print v(I^(k))/k for k <= N")
    sub.add_parser("ass", parents=[common], help="associated and minimal primes")
    sub.add_parser("decompose", parents=[common], help="irreducible and primary decomposition")
    p = sub.add_parser("stability-e", parents=[common], help="stability denominator e")
    p.add_argument("--verify", action="store_true", help="confirm e by a jump scan")

    p = sub.add_parser("check", parents=[common], help="verify an identity on one instance")
    p.add_argument("kind", choices=CHECK_KINDS)
    p.add_argument("-u")
    p.add_argument("-J", help="second ideal (binomial checks)")
    p.add_argument("--ring-a")
    p.add_argument("--ring-b")
    p.add_argument("--k-max", type=int)
    p.add_argument("--samples", help="k:m:j triples, e.g. 0:2:1,1:3:2")

    p = sub.add_parser("suite", parents=[common], help="run all checks on random corpora")
    p.add_argument("--standard", action="store_true", help="the standard corpus sizes (default)")
    p.add_argument("--count", type=int, help="squarefree corpus size")
    p.add_argument("--seed", type=int, default=lab.SuiteConfig.seed)
    p.add_argument("--jobs", type=int, help=f"worker processes (default ${lab.JOBS_ENV} or 1)")
    return parser


def parse_invocation(argv) -> Invocation:
    """Parse and validate. Raises UsageError, ParseError or SystemExit(2)."""
    ns = build_parser().parse_args(argv)
    inv = Invocation(ns.command, output_format=ns.output_format, box_margin=ns.box_margin)
    inv.ring = _ring_arg(ns.ring)
    u_text = getattr(ns, "u", None)
    if u_text is not None:
        inv.u = parse_rational(u_text)
        if inv.u <= 0:
            raise ParseError(f"u must be positive, got {u_text}")
    if ns.command == "check":
        inv.kind = ns.kind
        if ns.kind in ("binomial", "binomial-symbolic"):
            ring_a, ring_b = _ring_arg(ns.ring_a), _ring_arg(ns.ring_b)
            if ns.ideal is None or ns.J is None:
                raise UsageError("binomial checks need both -I and -J")
            inv.ideal = _ideal_arg(ns.ideal, ring_a)
            inv.ideal_b = _ideal_arg(ns.J, ring_b)
        elif ns.ideal is not None:
            inv.ideal = _ideal_arg(ns.ideal, inv.ring)
        if ns.kind not in ("ass-star", "splitting") and inv.u is None:
            raise UsageError(f"check {ns.kind} needs -u")
        inv.options["k_max"] = ns.k_max
        if ns.samples:
            try:
                inv.options["samples"] = [tuple(int(x) for x in t.split(":")) for t in ns.samples.split(",")]
            except ValueError:
                raise ParseError(f"malformed samples {ns.samples!r}") from None
    elif ns.command == "suite":
        inv.options.update(count=ns.count, seed=ns.seed, jobs=ns.jobs)
    else:
        if ns.ideal is None:
            raise UsageError(f"{ns.command} needs -I")
        inv.ideal = _ideal_arg(ns.ideal, inv.ring)
        inv.ring = inv.ideal.ring
    if ns.command == "rsympower":
        inv.method = Method(ns.method)
    if ns.command == "satpower":
        inv.aux = _ideal_arg(ns.K, inv.ring)
    if ns.command == "waldschmidt":
        try:
            inv.valuation = tuple(int(x) for x in ns.valuation.split(","))
        except ValueError:
            raise ParseError(f"malformed valuation {ns.valuation!r}") from None
        inv.options["sequence"] = ns.sequence
    if ns.command == "stability-e":
        inv.options["verify"] = ns.verify
    if ns.command in POWER_COMMANDS and inv.u is None:
        raise UsageError(f"{ns.command} needs -u")
    return inv


# rendering -------------------------------------------------------------------

def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def render_ideal(I: MonomialIdeal, fmt: str, extra: dict | None = None) -> str:
    if fmt == "structured":
        d = ideal_to_dict(I)
        d.update(extra or {})
        return _dumps(d)
    if fmt == "cas":
        return f"ideal({format_ideal(I)})"
    return format_ideal(I)


def render_primes(primes, fmt: str) -> list:
    if fmt == "structured":
        return [p.names() for p in primes]
    if fmt == "cas":
        return [f"ideal({', '.join(p.names())})" for p in primes]
    return [str(p) for p in primes]


def run(inv: Invocation) -> tuple[int, str]:
    fmt = inv.output_format
    I = inv.ideal
    cmd = inv.command
    if cmd == "closure":
        return EXIT_OK, render_ideal(integral_closure(I), fmt)
    if cmd == "rpower":
        r = rational_power(I, inv.u)
        return EXIT_OK, render_ideal(r.ideal, fmt, {"u": format_rational(r.u), "method": r.method.value})
    if cmd == "rsympower":
        r = rational_symbolic_power(I, inv.u, inv.method, margin=inv.box_margin)
        return EXIT_OK, render_ideal(r.ideal, fmt, {"u": format_rational(r.u), "method": r.method.value})
    if cmd == "diffpower":
        return EXIT_OK, render_ideal(differential_power_monomial(I, inv.u, margin=inv.box_margin), fmt,
                                     {"u": format_rational(inv.u)})
    if cmd == "satpower":
        return EXIT_OK, render_ideal(saturated_power(I, inv.u, inv.aux), fmt, {"u": format_rational(inv.u)})
    if cmd in ("np", "sp"):
        P = newton_polyhedron(I) if cmd == "np" else symbolic_polyhedron(I)
        return EXIT_OK, _dumps(P.to_dict()) if fmt == "structured" else str(P)
    if cmd == "waldschmidt":
        value = waldschmidt(I, inv.valuation)
        _, vertex = lp_minimize(symbolic_polyhedron(I), inv.valuation)
        seq = waldschmidt_sequence(I, inv.valuation, inv.options["sequence"]) if inv.options["sequence"] else []
        if fmt == "structured":
            return EXIT_OK, _dumps({
                "value": format_rational(value),
                "vertex": [format_rational(x) for x in vertex],
                "sequence": [format_rational(x) for x in seq],
            })
        lines = [format_rational(value)]
        lines += [f"k={k}: {format_rational(x)}" for k, x in enumerate(seq, start=1)]
        return EXIT_OK, "\n".join(lines)
    if cmd == "ass":
        ass, mins = associated_primes(I), minimal_primes(I)
        if fmt == "structured":
            return EXIT_OK, _dumps({"associated": render_primes(ass, fmt), "minimal": render_primes(mins, fmt)})
        return EXIT_OK, "\n".join(
            ["associated: " + " ".join(render_primes(ass, fmt)), "minimal: " + " ".join(render_primes(mins, fmt))]
        )
    if cmd == "decompose":
        comps = irreducible_decomposition(I)
        try:
            primary = primary_components_min(I)
        except PreconditionError:
            primary = None
        if fmt == "structured":
            out = {
                "irreducible": [dict(prime=c.prime().names(), **ideal_to_dict(c.ideal())) for c in comps],
                "primary": primary.to_list() if primary else None,
            }
            return EXIT_OK, _dumps(out)
        lines = [render_ideal(c.ideal(), fmt) for c in comps]
        return EXIT_OK, "\n".join(lines)
    if cmd == "stability-e":
        return EXIT_OK, str(stability_denominator(I, verify=inv.options["verify"]))
    if cmd == "check":
        report = _run_check(inv)
        return (EXIT_OK if report.passed else EXIT_CHECK_FAILED), _render_report(report, fmt)
    if cmd == "suite":
        cfg = lab.SuiteConfig(seed=inv.options["seed"], jobs=inv.options["jobs"])
        if inv.options["count"]:
            n = inv.options["count"]
            cfg = lab.SuiteConfig(count=n, nonsquarefree_count=max(1, n // 2), pair_count=max(1, n // 4),
                                  seed=cfg.seed, jobs=cfg.jobs)
        reports = lab.run_suite(cfg)
        failed = [r for r in reports if not r.passed]
        if fmt == "structured":
            text = "\n".join(_dumps(r.to_dict()) for r in reports)
        else:
            counts: dict = {}
            for r in reports:
                ok, bad = counts.get(r.theorem_id, (0, 0))
                counts[r.theorem_id] = (ok + r.passed, bad + (not r.passed))
            lines = [f"{tid}: {ok} passed, {bad} failed" for tid, (ok, bad) in sorted(counts.items())]
            lines += [r.line() for r in failed]
            text = "\n".join(lines)
        return (EXIT_CHECK_FAILED if failed else EXIT_OK), text
    raise UsageError(f"unknown command {cmd}")


def _run_check(inv: Invocation) -> lab.CheckReport:
    I, u, kind = inv.ideal, inv.u, inv.kind
    if I is None:
        raise UsageError(f"check {kind} needs -I")
    if kind == "containment":
        return lab.check_containment(I, u)
    if kind == "primdecomp":
        return lab.check_symbolic_primary_decomposition(I, u)
    if kind == "binomial":
        return lab.check_binomial_rational(I, inv.ideal_b, u)
    if kind == "binomial-symbolic":
        return lab.check_binomial_symbolic(I, inv.ideal_b, u)
    if kind == "ass-star":
        return lab.check_ass_star_stabilization(I, inv.options.get("k_max"))
    if kind == "splitting":
        return lab.check_splitting_stability(I, inv.options.get("samples"))
    if kind == "agreement":
        return lab.check_method_agreement(I, u)
    if kind == "saturation":
        return lab.check_saturation_identity(I, u)
    if kind == "root":
        return lab.check_root_characterization(I, u)
    if kind == "root-nonradical":
        return lab.check_nonradical_root(I, u)
    if kind == "zariski-nagata":
        return lab.check_zariski_nagata(I, u)
    raise UsageError(f"unknown check {kind}")


def _render_report(report: lab.CheckReport, fmt: str) -> str:
    if fmt == "structured":
        return _dumps(report.to_dict())
    return report.line()


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        inv = parse_invocation(argv)
        code, text = run(inv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except (ParseError, UsageError) as exc:
        print(f"ratsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StabilityError as exc:
        print(f"ratsym: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (PreconditionError, RatsymError, ValueError) as exc:
        print(f"ratsym: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
