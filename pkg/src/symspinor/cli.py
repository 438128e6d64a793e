"""Command line front end.

Weights are read in fundamental coordinates as comma separated exact
fractions (``0,1,-3/2``); pass ``--epsilon`` to give epsilon coordinates
instead.  Exit status is 0 on success, 1 on a domain or usage error and 2
when a verification suite fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import derham, findim, spinor_decomp
from .charpoly import TruncationError, kw_character, spinor_character
from .findim import Decomposition, SuiteReport, VerificationError
from .weights import (
    DomainError,
    RankError,
    Weight,
    from_fundamental,
    is_dominant_integral,
    iter_dominant,
)
from .weyl import ResourceError

MIN_RANK, MAX_RANK = 2, 8
MAX_DEPTH = int(os.environ.get("SYMSPINOR_MAX_DEPTH", "24"))
FORMATS = ("json", "text", "dot")


def default_depth(rank: int) -> int:
    return 12 if rank <= 3 else 8


@dataclass
class RunConfig:
    command: str
    rank: int
    depth: int | None = None
    format: str = "text"
    args: dict = field(default_factory=dict)

    def __post_init__(self):
        if not MIN_RANK <= self.rank <= MAX_RANK:
            raise DomainError(f"rank must lie in {MIN_RANK}..{MAX_RANK}, got {self.rank}")
        if self.depth is None:
            self.depth = default_depth(self.rank)
        if not 0 <= self.depth <= MAX_DEPTH:
            raise DomainError(f"depth must lie in 0..{MAX_DEPTH} (SYMSPINOR_MAX_DEPTH), got {self.depth}")
        if self.format not in FORMATS:
            raise DomainError(f"unknown format {self.format!r}")


def parse_weight(text: str, l: int, eps: bool = False) -> Weight:
    try:
        parts = [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise DomainError(f"cannot parse weight {text!r}: {exc}") from None
    if eps:
        if len(parts) != l:
            raise RankError(f"expected {l} epsilon coordinates, got {len(parts)}")
        return Weight.from_epsilon(parts)
    return from_fundamental(parts, l)


# --- rendering ---------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _render_decomposition(dec: Decomposition, fmt: str, header: dict) -> str:
    if fmt == "json":
        return _dump(dict(header, decomposition=dec.to_json()))
    if fmt == "text":
        return "\n".join(f"{m} x {lab}" if m > 1 else str(lab) for lab, m in dec.summands) + "\n"
    raise DomainError(f"format {fmt!r} is not available for decompositions")


def _render_forms(l: int, i: int, dec: Decomposition, fmt: str) -> str:
    index = spinor_decomp.column_labels(l, i)
    if fmt == "json":
        items = [
            {"i": index[lab].i, "j": index[lab].j, "label": lab.short(), "weight": lab.highest_weight.to_json()}
            for lab in sorted(dec.labels(), key=lambda x: index[x])
        ]
        return _dump({"rank": l, "degree": i, "decomposition": dec.to_json(), "xi": items})
    if fmt == "text":
        rows = sorted(dec.labels(), key=lambda x: index[x])
        return "".join(f"{index[lab]}  {lab.short()}\n" for lab in rows)
    raise DomainError(f"format {fmt!r} is not available for forms")


def _render_table(l: int, fmt: str) -> str:
    if fmt == "text":
        return spinor_decomp.render_table(l)
    if fmt == "json":
        table = spinor_decomp.e_table(l)
        return _dump(
            {
                "rank": l,
                "labels": [
                    {"i": idx.i, "j": idx.j, "label": lab.short(), "weight": lab.highest_weight.to_json()}
                    for idx, lab in sorted(table.items())
                ],
            }
        )
    raise DomainError("ejtable supports json and text")


# --- verification suites -----------------------------------------------------


def suite_spinor(l: int, depth: int) -> SuiteReport:
    report = SuiteReport(f"spinor-character(l={l}, depth={depth})")
    for parity, lam in (("even", spinor_decomp.spinor_weight(l)), ("odd", spinor_decomp.minus_spinor_weight(l))):
        report.cases += 1
        bad = kw_character(lam, depth).mismatches(spinor_character(l, parity, depth), depth)
        if bad:
            w, x, y = bad[0]
            report.fail(f"(l={l}, {parity}): multiplicity {x} vs {y} at {w.epsilon}")
    return report


def suite_finite(l: int, depth: int, max_total: int = 3) -> SuiteReport:
    report = SuiteReport(f"finite-oracles(l={l}, depth={depth})")
    for lam in iter_dominant(l, max_total):
        report.cases += 1
        fr = findim.freudenthal_multiplicities(lam)
        kw = kw_character(lam, depth)
        bad = kw.mismatches(fr, depth)
        if bad:
            w, x, y = bad[0]
            report.fail(f"(l={l}, lam={lam.short()}): Kac-Wakimoto {x} vs Freudenthal {y} at {w.epsilon}")
    return report


def suite_cases(l: int) -> SuiteReport:
    from .proof_cases import run_cases

    report = SuiteReport(f"proof-cases(l={l})")
    if l < 3:
        report.notes.append("case patterns need rank >= 3; skipped")
        return report
    for res in run_cases(l):
        report.cases += 1
        if res.window_failures:
            report.fail(f"{res.key} (k={res.k}): {res.window_failures[0]}")
        if not res.decomposition_matches or res.intersection_diffs:
            report.notes.append(json.dumps(res.to_json(), sort_keys=True))
    return report


def suite_names(l: int) -> list[str]:
    return ["wedge", "finite", "spinor", "tensor-spinor", "forms", "tensor-defining", "diagram", "cases"]


def run_suite(name: str, l: int, depth: int) -> SuiteReport:
    if name == "wedge":
        return findim.verify_wedge(l)
    if name == "finite":
        return suite_finite(l, depth)
    if name == "spinor":
        return suite_spinor(l, depth)
    if name == "tensor-spinor":
        return spinor_decomp.verify_tensor_spinor(l, depth)
    if name == "forms":
        return spinor_decomp.verify_forms(l, depth)
    if name == "tensor-defining":
        return spinor_decomp.verify_tensor_defining(l, depth)
    if name == "diagram":
        return derham.verify_diagram(l)
    if name == "cases":
        return suite_cases(l)
    raise DomainError(f"unknown suite {name!r}")


def _run_suite_json(args: tuple[str, int, int]) -> dict:
    return run_suite(*args).to_json()


def verify(l: int, depth: int, jobs: int = 1, only: list[str] | None = None) -> dict:
    names = only or suite_names(l)
    tasks = [(n, l, depth) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_suite_json, tasks))
    else:
        results = [_run_suite_json(t) for t in tasks]
    return {"rank": l, "depth": depth, "passed": all(r["passed"] for r in results), "suites": results}


def _render_verify(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(doc)
    lines = []
    for r in doc["suites"]:
        status = "PASS" if r["passed"] else "FAIL"
        line = f"{status}  {r['name']}  cases={r['cases']}"
        if r["first_failure"]:
            line += f"  first failure: {r['first_failure']}"
        lines.append(line)
        lines.extend(f"      note: {n}" for n in r["notes"])
    lines.append("ALL PASS" if doc["passed"] else "FAILED")
    return "\n".join(lines) + "\n"


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symspinor", description="Decompositions of symplectic spinor valued forms for sp(2l).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, weight=False, degree=False):
        sp.add_argument("rank", type=int)
        if degree:
            sp.add_argument("degree", type=int)
        if weight:
            sp.add_argument("weight", help="fundamental coordinates, e.g. 0,1,-3/2")
            sp.add_argument("--epsilon", action="store_true", help="read the weight in epsilon coordinates")
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--depth", type=int, default=None)

    common(sub.add_parser("wedge", help="exterior power of V into irreducibles"), degree=True)
    common(sub.add_parser("tensor-spinor", help="F(nu) tensor S"), weight=True)
    common(sub.add_parser("tensor-defining", help="L(lam) tensor V for lam in A"), weight=True)
    common(sub.add_parser("forms", help="degree-i spinor valued forms"), degree=True)
    common(sub.add_parser("ejtable", help="table of all E_{i,j} labels"))
    common(sub.add_parser("diagram", help="target diagram of the twisted de Rham sequence"))
    v = sub.add_parser("verify", help="run every verification suite")
    common(v)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--suite", action="append", choices=suite_names(0), help="restrict to a suite (repeatable)")
    return p


def _execute(ns: argparse.Namespace) -> tuple[str, int]:
    cfg = RunConfig(ns.command, ns.rank, ns.depth, ns.format)
    l, fmt = cfg.rank, cfg.format
    if ns.command == "wedge":
        dec = findim.wedge_decomposition(l, ns.degree)
        return _render_decomposition(dec, fmt, {"rank": l, "degree": ns.degree}), 0
    if ns.command == "tensor-spinor":
        nu = parse_weight(ns.weight, l, ns.epsilon)
        if not is_dominant_integral(nu):
            raise DomainError(f"{nu.short()} is not dominant integral")
        dec = spinor_decomp.tensor_with_spinor(nu)
        return _render_decomposition(dec, fmt, {"rank": l, "nu": nu.to_json()}), 0
    if ns.command == "tensor-defining":
        lam = parse_weight(ns.weight, l, ns.epsilon)
        dec = spinor_decomp.tensor_with_defining(lam)
        return _render_decomposition(dec, fmt, {"rank": l, "lambda": lam.to_json()}), 0
    if ns.command == "forms":
        dec = spinor_decomp.forms_spinor_decomposition(l, ns.degree)
        return _render_forms(l, ns.degree, dec, fmt), 0
    if ns.command == "ejtable":
        return _render_table(l, fmt), 0
    if ns.command == "diagram":
        return derham.emit(derham.diagram(l), fmt), 0
    if ns.command == "verify":
        if fmt == "dot":
            raise DomainError("verify supports json and text")
        doc = verify(l, cfg.depth, ns.jobs, ns.suite)
        return _render_verify(doc, fmt), 0 if doc["passed"] else 2
    raise DomainError(f"unknown command {ns.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        out, code = _execute(ns)
    except (DomainError, RankError, ResourceError, TruncationError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 1
    except VerificationError as exc:
        sys.stdout.write(_dump({"passed": False, "error": "VerificationError", "message": str(exc)}))
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
