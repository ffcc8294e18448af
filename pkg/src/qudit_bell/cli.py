"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 internal error. All reports are JSON; every JSON object carries a
``timestamp`` that is the only field allowed to differ between runs.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import bell_basis, dense_coding, io, lelm, symmetry
from .linalg import InvalidDimensionError, default_tolerance, gram

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

EXACT_SEARCH_MAX_D = 8
FIXTURE_DIMS = (2, 4, 6)


class UsageError(Exception):
    pass


def _timestamp() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat()


def _check_d(d: int) -> None:
    if d < 2 or d % 2:
        raise UsageError(f"no symmetrized basis exists for odd d (got d={d})")


def verify_states(states: Sequence[bell_basis.BellState], tol: float, symmetric: bool = True) -> dict:
    """Orthonormality, normalisation, entanglement and SWAP checks for a basis.

    With ``symmetric=False`` the SWAP classification is reported but does not
    count as a failure (the canonical basis is not expected to pass it).
    """
    d = states[0].d
    vecs = np.array([s.amplitudes for s in states])
    g = gram(vecs)
    ortho = float(np.max(np.abs(g - np.eye(len(states)))))
    norms = np.linalg.norm(vecs, axis=1)
    bad_norm = [list(s.label) for s, n in zip(states, norms) if abs(n - 1) > tol]
    ent = [symmetry.entanglement_residual(s) for s in states]
    classes = [symmetry.classify_symmetry(s, tol) for s in states]
    n_sym = sum(c.label == symmetry.SYMMETRIC for c in classes)
    n_anti = sum(c.label == symmetry.ANTISYMMETRIC for c in classes)
    non_eigen = [list(s.label) for s, c in zip(states, classes) if c.label == symmetry.NEITHER]

    checks = {
        "complete": len(states) == d * d,
        "normalized": not bad_norm,
        "orthonormal": ortho < tol,
        "fully_entangled": max(ent) < tol,
    }
    if symmetric:
        checks["swap_eigenstates"] = not non_eigen
        if d % 2 == 0:
            checks["symmetry_counts"] = (n_sym, n_anti) == symmetry.symmetry_counts(d)
    return {
        "d": d,
        "tolerance": tol,
        "orthonormality_residual": ortho,
        "normalization_failures": bad_norm,
        "entanglement_residual": max(ent),
        "symmetry_counts": {"symmetric": n_sym, "antisymmetric": n_anti},
        "non_eigenstates": non_eigen,
        "states": [
            {"c": s.c, "p": s.p, "swap_eigenvalue": c.eigenvalue, "swap_residual": c.residual}
            for s, c in zip(states, classes)
        ],
        "checks": checks,
        "passed": all(checks.values()),
    }


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_build(args: argparse.Namespace) -> int:
    _check_d(args.d)
    states = bell_basis.full_basis(args.d, args.phase_mode)
    payload = io.basis_to_dict(states, args.d, args.phase_mode)
    payload["timestamp"] = _timestamp()
    _emit(args, _dump(payload))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.input:
        d, mode, states = io.read_basis(args.input)
        symmetric = mode != "canonical"
    elif args.d is None:
        raise UsageError("verify needs --d or --input")
    elif args.canonical:
        d, mode, symmetric = args.d, "canonical", False
        states = bell_basis.canonical_basis(d)
    else:
        _check_d(args.d)
        d, mode, symmetric = args.d, args.phase_mode, True
        states = bell_basis.full_basis(d, mode)
    if not states:
        raise io.BasisFormatError("basis file has no states")
    report = verify_states(states, args.tolerance, symmetric)
    report["mode"] = mode
    report["timestamp"] = _timestamp()
    _emit(args, _dump(report))
    return EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_distinguish(args: argparse.Namespace) -> int:
    _check_d(args.d)
    if args.d > EXACT_SEARCH_MAX_D and args.budget is None:
        raise UsageError(f"exact search above d={EXACT_SEARCH_MAX_D} needs an explicit --budget")
    device = lelm.device_unitary(args.d)
    if args.canonical:
        basis, codewords_ok, codeword_labels = bell_basis.canonical_basis(args.d), None, None
    else:
        basis = bell_basis.full_basis(args.d, args.phase_mode)
        codewords = lelm.codeword_set(args.d, args.phase_mode)
        codewords_ok, _ = lelm.distinguishable(codewords, device, args.statistics)
        codeword_labels = [list(s.label) for s in codewords]
    result = lelm.max_distinguishable_set(
        args.d, device, args.statistics, args.budget, args.phase_mode, basis=basis
    )
    report = {
        "d": args.d,
        "statistics": args.statistics,
        "mode": "canonical" if args.canonical else args.phase_mode,
        "device": "fig1",
        "codewords": codeword_labels,
        "codewords_distinguishable": codewords_ok,
        "max_set_size": result.size,
        "max_set": [list(lbl) for lbl in result.states],
        "optimal": result.optimal,
        "conflict_graph_edges": result.conflict_graph_edges,
        "certificate": [[n1, n2, list(lbl)] for (n1, n2), lbl in result.certificate.items()],
        "expected_size": 2 * args.d - 1,
        "timestamp": _timestamp(),
    }
    _emit(args, _dump(report))
    failed = codewords_ok is False or (not args.canonical and result.size != 2 * args.d - 1)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_signatures(args: argparse.Namespace) -> int:
    _check_d(args.d)
    if args.canonical:
        states = bell_basis.canonical_basis(args.d)
    else:
        states = bell_basis.full_basis(args.d, args.phase_mode)
    report = io.signature_report(states, lelm.device_unitary(args.d), args.statistics)
    if args.csv:
        _emit(args, io.signature_report_csv(report))
    else:
        report["timestamp"] = _timestamp()
        _emit(args, _dump(report))
    return EXIT_OK


def cmd_densecode(args: argparse.Namespace) -> int:
    _check_d(args.d)
    n_msg = 2 * args.d - 1
    messages = args.messages if args.messages else list(range(n_msg))
    bad = [m for m in messages if not 0 <= m < n_msg]
    if bad:
        raise UsageError(f"messages out of range 0..{n_msg - 1}: {bad}")
    messages = [m for m in messages for _ in range(args.shots)]
    seed = 0 if args.seed is None else args.seed
    entries = dense_coding.roundtrip(args.d, messages, args.statistics, seed, args.phase_mode)
    _emit(args, io.transcript_lines(entries))
    errors = sum(e.message_sent != e.message_decoded for e in entries)
    return EXIT_FAILED if errors else EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    out_dir = Path(args.output or "tests/fixtures")
    targets = [out_dir / f"basis_d{d}.json" for d in FIXTURE_DIMS]
    existing = [t for t in targets if t.exists()]
    if existing and not args.overwrite:
        raise UsageError(f"refusing to overwrite {len(existing)} fixture(s) without --overwrite")
    out_dir.mkdir(parents=True, exist_ok=True)
    for d, target in zip(FIXTURE_DIMS, targets):
        payload = io.basis_to_dict(bell_basis.full_basis(d), d, "dft")
        target.write_text(_dump(payload))
    return EXIT_OK


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--phase-mode", choices=bell_basis.PHASE_MODES, default="dft")
    common.add_argument("--statistics", choices=lelm.STATISTICS, default="boson")
    common.add_argument("--tolerance", type=_positive_float, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--output", default=None)

    parser = argparse.ArgumentParser(
        prog="qudit-bell", description="Exchange-symmetrized qudit Bell bases."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="export the basis as JSON")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="check basis properties")
    p.add_argument("--d", type=int)
    p.add_argument("--input", help="basis JSON file to check instead of regenerating")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distinguish", parents=[common], help="maximal distinguishable set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="node limit for the exact search")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("signatures", parents=[common], help="detection-signature distributions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_signatures)

    p = sub.add_parser("densecode", parents=[common], help="dense-coding transcript (JSON lines)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--messages", type=int, nargs="*")
    p.add_argument("--shots", type=int, default=100, help="samples per message")
    p.set_defaults(func=cmd_densecode)

    p = sub.add_parser("fixtures", parents=[common], help="regenerate golden basis fixtures")
    p.add_argument("--overwrite", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.tolerance is None:
            args.tolerance = default_tolerance()
        return args.func(args)
    except (UsageError, InvalidDimensionError, bell_basis.UnsupportedModeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (io.BasisFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
