"""``posetdim`` command line: generate, verify, solve, convert, refute and stats.

Exit codes: 0 success or true, 1 false, refuted or rejected, 2 usage or
parse errors, 3 timeout.
"""
from __future__ import annotations

import argparse
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence

import numpy as np

from src.app import reports
from src.config import Settings, get_settings
from src.generators import (
    antichain,
    build_gadget_poset,
    chain,
    incidence_poset,
    random_poset,
    standard_example,
)
from src.poset import FormatError, read_digraph, read_poset, write_digraph, write_poset
from src.realizers import (
    BooleanRealizer,
    LocalRealizer,
    NotAnExtension,
    NotARealizer,
    Realizer,
    local_width,
    read_certificate,
    verify_boolean_realizer,
    verify_local_realizer,
    verify_realizer,
    write_certificate,
)
from src.solvers import (
    SolverTimeout,
    decide_boolean_dimension_small,
    decide_dimension,
    decide_local_dimension_low,
    exact_chromatic_number,
)
from src.transforms import (
    NotALocalRealizer,
    boolean_to_realizer,
    local2_to_realizer,
    local3_to_boolean,
    ramsey_cycle_witness,
    refute_boolean_realizer,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

SETTINGS_FIELDS = ("timeout_s", "gadget_max_k", "seed", "log_level", "bdim_max_n", "bdim_max_d")

ROUTES = ("boolean-to-realizer", "local2-to-realizer", "local3-to-boolean")
# short names also accepted
ROUTE_ALIASES = {"thm1": "boolean-to-realizer", "thm2": "local2-to-realizer", "thm5": "local3-to-boolean"}
ALIASES = {"thm6": "gadget"}


@dataclass
class Outcome:
    code: int
    record: Dict[str, Any] = field(default_factory=dict)
    text: List[str] = field(default_factory=list)


def _load_certificate(path: Path, kind: type):
    cert = read_certificate(path)
    if not isinstance(cert, kind):
        raise FormatError(f"{path}: expected a {kind.__name__} file, found {type(cert).__name__}")
    return cert


def _prefix(args: argparse.Namespace, default: str) -> Path:
    return Path(args.output or default)


def _cmd_generate(args: argparse.Namespace, settings: Settings) -> Outcome:
    family, size = args.family, args.size
    written: List[str] = []

    def emit(obj, suffix: str, prefix: Path) -> None:
        path = prefix.with_name(prefix.name + suffix)
        if suffix == ".poset":
            write_poset(obj, path)
        elif suffix == ".graph":
            write_digraph(obj, path)
        else:
            write_certificate(obj, path)
        written.append(str(path))

    record: Dict[str, Any] = {"command": "generate", "family": family, "size": size}
    if family == "standard-example":
        prefix = _prefix(args, f"sk{size}")
        ex = standard_example(size)
        emit(ex.poset, ".poset", prefix)
        emit(ex.realizer, ".rlz", prefix)
        if ex.local is not None:
            emit(ex.local, ".lrlz", prefix)
        if ex.boolean is not None:
            emit(ex.boolean, ".brlz", prefix)
        record["n"] = ex.poset.n
    elif family == "incidence":
        prefix = _prefix(args, f"p{size}")
        inc = incidence_poset(size)
        emit(inc.poset, ".poset", prefix)
        emit(inc.boolean, ".brlz", prefix)
        record["n"] = inc.poset.n
    elif family == "gadget":
        if args.dry_run_sizes:
            frame = reports.size_frame(range(1, size + 1))
            record["sizes"] = reports.frame_records(frame)
            return Outcome(EXIT_OK, record, [reports.render(frame)])
        prefix = _prefix(args, f"gadget{size}")
        inst = build_gadget_poset(size, settings=settings)
        emit(inst.p, ".poset", prefix)
        emit(inst.g, ".graph", prefix)
        emit(inst.local_realizer(), ".lrlz", prefix)
        record.update(n=inst.p.n, vertices=inst.g.nv, edges=len(inst.edges))
    elif family in ("chain", "antichain"):
        prefix = _prefix(args, f"{family}{size}")
        poset = chain(size) if family == "chain" else antichain(size)
        emit(poset, ".poset", prefix)
        record["n"] = poset.n
    else:
        prefix = _prefix(args, f"random{size}")
        rng = np.random.default_rng(settings.seed)
        poset = random_poset(size, rng, density=args.density)
        emit(poset, ".poset", prefix)
        record.update(n=poset.n, seed=settings.seed)
    record["files"] = written
    return Outcome(EXIT_OK, record, [f"wrote {path}" for path in written])


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> Outcome:
    poset = read_poset(args.poset)
    kinds = {"realizer": Realizer, "boolean": BooleanRealizer, "local": LocalRealizer}
    cert = _load_certificate(args.certificate, kinds[args.kind])
    record: Dict[str, Any] = {"command": "verify", "kind": args.kind, "size": cert.size}
    if args.kind == "realizer":
        ok = verify_realizer(poset, cert)
    elif args.kind == "boolean":
        ok = verify_boolean_realizer(poset, cert)
    else:
        ok = verify_local_realizer(poset, cert)
        record["width"] = local_width(cert)
    record["valid"] = ok
    text = f"{args.kind} certificate of size {cert.size}: {'valid' if ok else 'INVALID'}"
    return Outcome(EXIT_OK if ok else EXIT_FALSE, record, [text])


def _cmd_solve(args: argparse.Namespace, settings: Settings) -> Outcome:
    record: Dict[str, Any] = {"command": "solve", "problem": args.problem}
    if args.problem == "chromatic":
        graph = read_digraph(args.input)
        chi = exact_chromatic_number(graph, settings=settings)
        record["chromatic_number"] = chi
        return Outcome(EXIT_OK, record, [f"chromatic number: {chi}"])

    poset = read_poset(args.input)
    if args.max_d is None:
        raise FormatError(f"solve {args.problem} needs --max-d")
    d = args.max_d
    if args.problem == "dimension":
        result = decide_dimension(poset, d, settings=settings)
        witness, label = result.witness, "dim"
    elif args.problem == "bdim-small":
        result = decide_boolean_dimension_small(poset, d, settings=settings)
        witness, label = result.witness, "bdim"
    else:
        result = decide_local_dimension_low(poset, d, settings=settings)
        witness, label = result.witness, "ldim"
    ok = bool(result)
    record.update(max_d=d, feasible=ok)
    text = [f"{label} <= {d}: {'true' if ok else 'false'}"]
    if ok and args.witness is not None:
        write_certificate(witness, args.witness)
        record["witness"] = str(args.witness)
        text.append(f"witness written to {args.witness}")
    return Outcome(EXIT_OK if ok else EXIT_FALSE, record, text)


def _cmd_convert(args: argparse.Namespace, settings: Settings) -> Outcome:
    poset = read_poset(args.poset)
    if args.route == "boolean-to-realizer":
        out = boolean_to_realizer(poset, _load_certificate(args.certificate, BooleanRealizer))
    elif args.route == "local2-to-realizer":
        out = local2_to_realizer(poset, _load_certificate(args.certificate, LocalRealizer))
    else:
        out = local3_to_boolean(poset, _load_certificate(args.certificate, LocalRealizer))
    write_certificate(out, args.output)
    record = {"command": "convert", "route": args.route, "size": out.size, "output": str(args.output)}
    return Outcome(EXIT_OK, record, [f"{type(out).__name__} of size {out.size} written to {args.output}"])


def _cmd_refute(args: argparse.Namespace, settings: Settings) -> Outcome:
    record: Dict[str, Any] = {"command": "refute", "target": args.target, "size": args.size}
    if args.target == "ramsey":
        family = _load_certificate(args.candidate, LocalRealizer)
        witness = ramsey_cycle_witness(args.size, family)
        if witness is None:
            record["refuted"] = False
            return Outcome(EXIT_OK, record, ["no monochromatic quadruple"])
        record.update(
            refuted=True,
            quadruple=list(witness.quadruple),
            color=list(witness.color),
            member=witness.ple_index,
            cycle=list(witness.cycle),
            violated=list(witness.violated),
        )
        text = f"quadruple {witness.quadruple} closes the cycle {witness.cycle} in member {witness.ple_index}"
        return Outcome(EXIT_FALSE, record, [text])

    candidate = _load_certificate(args.candidate, BooleanRealizer)
    inst = build_gadget_poset(args.size, settings=settings)
    result = refute_boolean_realizer(inst, candidate, settings=settings)
    record.update(
        refuted=result.refuted,
        kind=result.kind,
        walk=list(result.walk),
        pair=None if result.pair is None else list(result.pair),
        chromatic_number=result.chromatic_number,
    )
    if not result.refuted:
        return Outcome(EXIT_OK, record, ["consistent"])
    if result.kind == "coloring":
        text = f"tuples give at most {2 ** candidate.size} colours but chi = {result.chromatic_number}"
    else:
        text = f"{result.kind} contradiction on walk {result.walk}, edges {result.pair}"
    return Outcome(EXIT_FALSE, record, [text])


def _cmd_stats(args: argparse.Namespace, settings: Settings) -> Outcome:
    poset = read_poset(args.poset)
    frame = reports.stats_frame(poset)
    record = {"command": "stats", **reports.poset_stats(poset)}
    return Outcome(EXIT_OK, record, [reports.render(frame)])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetdim", description="Realizers, boolean realizers and local realizers of finite posets.")
    parser.add_argument("--timeout-s", type=float, default=None, help="Wall-clock budget per solver decision.")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized fixtures.")
    parser.add_argument("--json", action="store_true", help="Print one JSON record instead of text.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Write a poset family and its certificates.")
    gen.add_argument("family", choices=["standard-example", "incidence", "gadget", "chain", "antichain", "random", *ALIASES])
    gen.add_argument("size", type=int)
    gen.add_argument("-o", "--output", type=str, default=None, help="Output path prefix.")
    gen.add_argument("--dry-run-sizes", action="store_true", help="Only print predicted construction sizes.")
    gen.add_argument("--density", type=float, default=0.3, help="Cover probability for random posets.")
    gen.set_defaults(handler=_cmd_generate)

    ver = sub.add_parser("verify", help="Check a certificate against a poset.")
    ver.add_argument("kind", choices=["realizer", "boolean", "local"])
    ver.add_argument("poset", type=Path)
    ver.add_argument("certificate", type=Path)
    ver.set_defaults(handler=_cmd_verify)

    sol = sub.add_parser("solve", help="Run an exact solver.")
    sol.add_argument("problem", choices=["dimension", "chromatic", "bdim-small", "ldim-low"])
    sol.add_argument("input", type=Path)
    sol.add_argument("--max-d", type=int, default=None)
    sol.add_argument("--witness", type=Path, default=None, help="Write the certificate of a true answer here.")
    sol.set_defaults(handler=_cmd_solve)

    conv = sub.add_parser("convert", help="Convert a certificate into another kind.")
    conv.add_argument("route", choices=sorted(ROUTES) + sorted(ROUTE_ALIASES))
    conv.add_argument("poset", type=Path)
    conv.add_argument("certificate", type=Path)
    conv.add_argument("-o", "--output", type=Path, required=True)
    conv.set_defaults(handler=_cmd_convert)

    ref = sub.add_parser("refute", help="Search a candidate for a contradiction.")
    ref.add_argument("target", choices=["gadget", "ramsey", *ALIASES])
    ref.add_argument("size", type=int)
    ref.add_argument("candidate", type=Path)
    ref.set_defaults(handler=_cmd_refute)

    st = sub.add_parser("stats", help="Summary statistics of a poset.")
    st.add_argument("poset", type=Path)
    st.set_defaults(handler=_cmd_stats)
    return parser


def _settings_from(args: argparse.Namespace) -> Settings:
    base = get_settings()
    values = {name: getattr(base, name) for name in SETTINGS_FIELDS}
    if args.timeout_s is not None:
        values["timeout_s"] = args.timeout_s
    if args.seed is not None:
        values["seed"] = args.seed
    return Settings(**values)


def _emit(outcome: Outcome, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"exit_code": outcome.code, **outcome.record}, sort_keys=True, default=str))
    else:
        for line in outcome.text:
            print(line)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    settings = _settings_from(args)
    level = logging.DEBUG if args.verbose else getattr(logging, str(settings.log_level).upper(), logging.INFO)
    logging.basicConfig(level=level)
    handler: Callable[[argparse.Namespace, Settings], Outcome] = args.handler
    if args.command == "generate":
        args.family = ALIASES.get(args.family, args.family)
    elif args.command == "refute":
        args.target = ALIASES.get(args.target, args.target)
    elif args.command == "convert":
        args.route = ROUTE_ALIASES.get(args.route, args.route)
    try:
        outcome = handler(args, settings)
    except SolverTimeout as exc:
        logger.error("Timed out: %s", exc)
        outcome = Outcome(EXIT_TIMEOUT, {"command": args.command, "timeout": str(exc)}, [f"timeout: {exc}"])
    except (NotARealizer, NotALocalRealizer, NotAnExtension) as exc:
        logger.error("Rejected: %s", exc)
        outcome = Outcome(EXIT_FALSE, {"command": args.command, "rejected": str(exc)}, [f"rejected: {exc}"])
    except (ValueError, OSError) as exc:
        logger.error("Error: %s", exc)
        outcome = Outcome(EXIT_USAGE, {"command": args.command, "error": str(exc)}, [f"error: {exc}"])
    except Exception as exc:  # noqa: BLE001
        logger.exception("Unexpected failure")
        outcome = Outcome(EXIT_USAGE, {"command": args.command, "error": repr(exc)}, [f"error: {exc}"])
    _emit(outcome, args.json)
    return outcome.code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
