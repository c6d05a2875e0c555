"""Command-line interface: ``qlogops {analyze,sgsop,entanglement,verify}``.

Exit status: 0 on success, 1 when a formula or oracle check fails, 2 for
usage errors, 3 for unparseable input and 4 for input that parses but
violates a code invariant.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

from . import codes, oracle
from .codefile import CodeFile, load_code_file, parse_code_file
from .errors import InvalidCodeError, ParseError, ReplayError, ShapeError
from .pauli import GeneratorSet, parse_pauli
from .sgsop import SgsopStep, SymplecticDecomposition, replay_inverse, sgsop

SCHEMA = 1

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _analyze_file(cf: CodeFile) -> codes.CodeReport:
    if cf.kind == "css":
        return codes.analyze_css(cf.css_code())
    if cf.kind == "crss":
        return codes.analyze_crss(cf.gf4_code())
    return codes.analyze_stabilizer(cf.generators(), cf.normalizer())


# -- analyze ------------------------------------------------------------------


def _format_report(report: codes.CodeReport) -> str:
    out = [
        f"{report.family} code ({report.kind})",
        f"n = {report.n}  k = {report.k}  c = {report.c}  l = {report.l}  i = {report.i}  m = {report.m}  p = {report.p}",
        "",
        f"logical pairs ({len(report.logical_pairs)}):",
    ]
    out += [f"  {a} | {b}" for a, b in report.logical_pairs]
    if report.entanglement_pairs:
        out.append(f"entanglement pairs ({len(report.entanglement_pairs)}):")
        out += [f"  {a} | {b}" for a, b in report.entanglement_pairs]
    out.append(f"isotropic generators ({len(report.isotropic_gens)}):")
    out += [f"  {g}" for g in report.isotropic_gens]
    out.append("formula checks:")
    for fc in report.formula_checks:
        mark = "ok  " if fc.agree else "FAIL"
        out.append(f"  [{mark}] {fc.name}: {fc.lhs} vs {fc.rhs}")
    out += [f"note: {s}" for s in report.notes]
    return "\n".join(out) + "\n"


def cmd_analyze(args, out) -> int:
    cf = load_code_file(args.path)
    report = _analyze_file(cf)
    if args.format == "json":
        _emit_json(
            {"schema": SCHEMA, "command": "analyze", "ok": report.all_checks_pass, "report": report.to_dict()},
            out,
        )
    else:
        out.write(_format_report(report))
    if not report.all_checks_pass:
        for fc in report.failed_checks():
            print(f"failed check: {fc.name}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- sgsop --------------------------------------------------------------------


def decomposition_to_dict(original: GeneratorSet, d: SymplecticDecomposition) -> dict:
    return {
        "n": d.n,
        "input": original.to_strings(),
        "pairs": [[str(a), str(b)] for a, b in d.pairs],
        "isotropic": [str(g) for g in d.isotropic],
        "log": [step.to_dict() for step in d.log],
    }


def decomposition_from_dict(obj: dict) -> tuple[GeneratorSet, SymplecticDecomposition]:
    try:
        n = int(obj["n"])
        original = GeneratorSet(n, [parse_pauli(s) for s in obj["input"]])
        pairs = tuple((parse_pauli(a), parse_pauli(b)) for a, b in obj["pairs"])
        isotropic = tuple(parse_pauli(s) for s in obj["isotropic"])
        log = tuple(SgsopStep.from_dict(s) for s in obj["log"])
        d = SymplecticDecomposition(n, pairs, isotropic, log)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed decomposition file: {exc}") from None
    return original, d


def cmd_sgsop(args, out) -> int:
    cf = load_code_file(args.path)
    if cf.kind != "pauli":
        raise InvalidCodeError(f"sgsop needs a pauli file, got a {cf.kind} file")
    gs = cf.generators()
    d = sgsop(gs)
    replayed = replay_inverse(d) if args.reverse else None
    if args.format == "json":
        obj = {"schema": SCHEMA, "command": "sgsop", **decomposition_to_dict(gs, d)}
        if replayed is not None:
            obj["reverse"] = replayed.to_strings()
            obj["round_trip"] = replayed == gs
        _emit_json(obj, out)
    else:
        out.write(f"{d.num_pairs} pairs, {len(d.isotropic)} isotropic\n")
        for t, (a, b) in enumerate(d.pairs, start=1):
            out.write(f"pair {t}: {a} | {b}\n")
        for t, g in enumerate(d.isotropic, start=1):
            out.write(f"isotropic {t}: {g}\n")
        out.write("log:\n")
        for step in d.log:
            exps = f" exponents={step.exponents}" if step.exponents else ""
            out.write(f"  {step.kind} {step.indices}{exps}\n")
        if replayed is not None:
            out.write("reverse replay:\n")
            out.writelines(f"  {s}\n" for s in replayed.to_strings())
            out.write(f"round trip: {'ok' if replayed == gs else 'MISMATCH'}\n")
    if replayed is not None and replayed != gs:
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- entanglement -------------------------------------------------------------


def _timed(fn, repeats: int) -> tuple[int, float]:
    samples = []
    value = None
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter_ns()
        value = fn()
        samples.append((time.perf_counter_ns() - t0) / 1000.0)
    return value, statistics.median(samples)


def cmd_entanglement(args, out) -> int:
    cf = load_code_file(args.path)
    notes = []
    if cf.kind == "css":
        code = cf.css_code()
        g_fn = lambda: codes.css_entanglement_G(code)  # noqa: E731
        h_fn = lambda: codes.css_entanglement_H(code)  # noqa: E731
        if not (cf.has("H1") and cf.has("H2")):
            notes.append("H1/H2 derived from G1/G2")
        sizes = {"n": code.n, "k1": code.k1, "k2": code.k2}
    elif cf.kind == "crss":
        code = cf.gf4_code()
        g_fn = lambda: codes.crss_entanglement_G(code)  # noqa: E731
        h_fn = lambda: codes.crss_entanglement_H(code)  # noqa: E731
        if not cf.has("H"):
            notes.append("H derived from G")
        sizes = {"n": code.n, "k": code.k}
    else:
        raise InvalidCodeError("entanglement needs a css or crss file")

    methods = ["G", "H"] if args.method == "both" else [args.method]
    results = {}
    for name in methods:
        value, micros = _timed(g_fn if name == "G" else h_fn, args.repeats)
        results[name] = {"c": value, "median_us": round(micros, 3)}
    values = {r["c"] for r in results.values()}
    agree = len(values) == 1
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "entanglement",
                "family": cf.kind,
                **sizes,
                "repeats": args.repeats,
                "methods": results,
                "agree": agree,
                "notes": notes,
            },
            out,
        )
    else:
        for name, r in results.items():
            out.write(f"c ({name} method) = {r['c']}    median {r['median_us']:.1f} us over {args.repeats} runs\n")
        if len(results) > 1:
            out.write(f"agreement: {'yes' if agree else 'NO'}\n")
        out.writelines(f"note: {s}\n" for s in notes)
    return EXIT_OK if agree else EXIT_CHECK_FAILED


# -- verify -------------------------------------------------------------------


def _verify_file(path: str, seed: int) -> oracle.VerificationReport:
    text = Path(path).read_text()
    report = oracle.VerificationReport(seed=seed)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, position=exc.colno) from None
        original, d = decomposition_from_dict(obj)
        report.extend(oracle.verify_decomposition(original, d))
        return report

    cf = parse_code_file(text)
    if cf.kind == "pauli":
        gs = cf.generators()
        report.extend(oracle.verify_decomposition(gs, sgsop(gs)), "generators: ")
        norm = cf.normalizer()
        if norm is not None:
            report.extend(oracle.verify_decomposition(norm, sgsop(norm)), "normalizer: ")
            for fc in codes.analyze_stabilizer(gs, norm).formula_checks:
                report.add("code: " + fc.name, fc.rhs, fc.lhs)
        return report
    if cf.kind == "css":
        code = cf.css_code()
        checks, normalizer = codes.css_check_matrix(code), codes.css_normalizer(code)
        report.extend(oracle.css_oracle_report(code, "code: "))
    else:
        code = cf.gf4_code()
        checks, normalizer = codes.crss_check_matrix(code), codes.crss_normalizer(code)
        report.extend(oracle.crss_oracle_report(code, "code: "))
    report.extend(oracle.verify_decomposition(checks, sgsop(checks)), "checks: ")
    report.extend(oracle.verify_decomposition(normalizer, sgsop(normalizer)), "normalizer: ")
    return report


def cmd_verify(args, out) -> int:
    if args.random is not None:
        if len(args.random) not in (2, 3):
            raise argparse.ArgumentTypeError("--random takes N TRIALS [SEED]")
        n_max, trials = args.random[0], args.random[1]
        seed = args.random[2] if len(args.random) == 3 else args.seed
        report = oracle.run_random_suite(n_max, trials, seed)
        source = f"random n<={n_max} trials={trials}"
    elif args.path is not None:
        report = _verify_file(args.path, args.seed)
        source = args.path
    else:
        raise argparse.ArgumentTypeError("verify needs a PATH or --random")
    if args.format == "json":
        _emit_json({"schema": SCHEMA, "command": "verify", **report.to_dict()}, out)
    else:
        out.write(f"verify {source}  seed={report.seed}\n")
        out.write(f"{len(report.checks)} checks, {len(report.failures())} failed\n")
        for c in report.failures():
            out.write(f"FAILED {c.name}: expected {c.expected}, got {c.actual}\n")
        out.write("PASS\n" if report.passed else "FAIL\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlogops", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, path_required=True):
        if path_required:
            p.add_argument("path", help="code description file")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="logical operators, ebits and formula checks")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sgsop", help="symplectic Gram-Schmidt decomposition of a Pauli file")
    common(p)
    p.add_argument("--reverse", action="store_true", help="replay the log backwards and compare")
    p.set_defaults(func=cmd_sgsop)

    p = sub.add_parser("entanglement", help="ebit count from the G and/or H rank formulas, timed")
    common(p)
    p.add_argument("--method", choices=("G", "H", "both"), default="both")
    p.add_argument("--repeats", type=int, default=5, help="timing repeats (median reported)")
    p.set_defaults(func=cmd_entanglement)

    p = sub.add_parser("verify", help="run the brute-force oracle suite")
    p.add_argument("path", nargs="?", help="code file or sgsop JSON output")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--random", nargs="+", type=int, metavar="N", help="N TRIALS [SEED]")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidCodeError, ShapeError, ReplayError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except argparse.ArgumentTypeError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
