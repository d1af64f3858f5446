"""Command-line interface: ``gaussian-partners <command> ...``.

Exit codes: 0 success, 1 usage error or malformed input, 2 unphysical state
(or a mixed state given to ``partner --pure``), 3 internal-consistency failure
(including a failed ``--verify`` report or a failed example row).

Tolerances: defaults < ``GAUSSIAN_PARTNERS_TOL`` environment variable <
``--tol`` flag, each as ``name=value,name=value``.
"""

from __future__ import annotations

import argparse
import contextvars
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import tolerances
from .catalog import format_table, run_examples
from .entanglement import entanglement_partner, log_negativity, partial_transpose, pt_spectrum
from .errors import (
    DegenerateSubspaceError,
    DimensionMismatchError,
    InternalConsistencyError,
    InvalidDimensionError,
    NonOrthonormalBasisError,
    NumericalDegeneracyError,
    SingularCovarianceError,
    UnphysicalStateError,
    WrongPurityError,
)
from .gaussian_state import complex_structure, symplectic_spectrum, validate_state
from .io import DocumentError, StateDocument, SubspaceDocument, complex_to_pairs, dumps, read_json
from .oracle import dense_pt_eigensolve, verify_partner
from .partners import correlation_partner, pure_partner
from .subsystems import projector_distance

EXIT_OK, EXIT_USAGE, EXIT_UNPHYSICAL, EXIT_CONSISTENCY = 0, 1, 2, 3

_USAGE_ERRORS = (DocumentError, DimensionMismatchError, InvalidDimensionError, DegenerateSubspaceError,
                 NonOrthonormalBasisError)
_UNPHYSICAL_ERRORS = (UnphysicalStateError, WrongPurityError, SingularCovarianceError)
_CONSISTENCY_ERRORS = (InternalConsistencyError, NumericalDegeneracyError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, _USAGE_ERRORS + (UsageError,)):
        return EXIT_USAGE
    if isinstance(exc, _UNPHYSICAL_ERRORS):
        return EXIT_UNPHYSICAL
    if isinstance(exc, _CONSISTENCY_ERRORS):
        return EXIT_CONSISTENCY
    raise exc


def _jsonable(value):
    if isinstance(value, np.ndarray):
        return complex_to_pairs(value) if np.iscomplexobj(value) else value.tolist()
    if isinstance(value, (np.floating, np.integer)):
        value = value.item()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def _load_job(state_doc: dict, sub_doc: dict):
    sdoc = StateDocument.from_dict(state_doc)
    state = sdoc.to_state()
    report = validate_state(state)
    if not report.is_physical:
        raise UnphysicalStateError(f"state is unphysical (smallest symplectic eigenvalue "
                                   f"{report.min_symplectic_eigenvalue:.12g})")
    subd = SubspaceDocument.from_dict(sub_doc, sdoc.n_modes)
    eigen = sdoc.eigenbasis() if subd.coordinates == "eigenbasis" else None
    return sdoc, state, subd.to_subspace(eigen)


_PARTNER_FUNCS = {"pure": pure_partner, "correlation": correlation_partner, "entanglement": entanglement_partner}


def _partner_job(kind: str, verify: bool, job: dict) -> tuple[int, dict]:
    sdoc, state, sub = _load_job(job.get("state"), job.get("subsystem"))
    res = _PARTNER_FUNCS[kind](sub, complex_structure(state))
    out = {
        "kind": res.kind,
        "mode_count": res.mode_count,
        "empty": res.is_empty,
        "diagnostics": res.diagnostics,
        "subsystem": SubspaceDocument.from_subspace(sub).to_dict(),
        "partner": SubspaceDocument.from_subspace(res.partner).to_dict(),
        "details": {k: _jsonable(v) for k, v in sorted(res.details.items())},
    }
    if job.get("compare") is not None:
        cmp = SubspaceDocument.from_dict(job["compare"], sdoc.n_modes, "compare")
        eigen = sdoc.eigenbasis() if cmp.coordinates == "eigenbasis" else None
        out["projector_distance"] = projector_distance(res.partner, cmp.to_subspace(eigen))
    code = EXIT_OK
    if verify:
        report = verify_partner(state, sub, res.partner, kind)
        out["verification"] = report.as_dict()
        code = EXIT_OK if report.passed else EXIT_CONSISTENCY
    return code, out


def _negativity_job(verify: bool, job: dict) -> tuple[int, dict]:
    _, state, sub = _load_job(job.get("state"), job.get("subsystem"))
    J = complex_structure(state)
    spec = pt_spectrum(partial_transpose(J, sub))
    out = {
        "log_negativity": log_negativity(J, sub),
        "non_ppt": bool(spec.subunity.size),
        "pt_spectrum": spec.nu.tolist(),
        "subunity": spec.subunity_values.tolist(),
    }
    code = EXIT_OK
    if verify:
        dense = dense_pt_eigensolve(state, sub, spec.threshold).nu
        residual = float(np.abs(np.sort(dense) - spec.nu).max()) if len(dense) == len(spec.nu) else float("inf")
        passed = residual <= 1e-8
        out["verification"] = {"passed": passed, "checks": [
            {"name": "dense_pt_spectrum", "passed": passed, "residual": residual, "tolerance": 1e-8}]}
        code = EXIT_OK if passed else EXIT_CONSISTENCY
    return code, out


def _guarded(func, *args) -> tuple[int, dict]:
    try:
        return func(*args)
    except Exception as exc:  # mapped to exit codes, re-raised if unknown
        return _exit_code_for(exc), {"error": str(exc)}


def _job_from_files(args) -> dict:
    if args.state is None or args.subsystem is None:
        raise UsageError("STATE and SUBSYSTEM files are required unless --batch is given")
    job = {"state": read_json(args.state), "subsystem": read_json(args.subsystem)}
    if getattr(args, "compare", None):
        job["compare"] = read_json(args.compare)
    return job


def _run_batch(directory: str, worker) -> tuple[int, dict]:
    if not Path(directory).is_dir():
        raise UsageError(f"--batch: {directory} is not a directory")
    files = sorted(Path(directory).glob("*.json"))

    def one(path: Path):
        try:
            job = read_json(path)
        except DocumentError as exc:
            return EXIT_USAGE, {"error": str(exc)}
        return _guarded(worker, job)

    # tolerance overrides live in a context variable; give each task a copy
    contexts = [contextvars.copy_context() for _ in files]
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(lambda pair: pair[0].run(one, pair[1]), zip(contexts, files)))
    code = max((c for c, _ in results), default=EXIT_OK)
    return code, {"results": [{"file": f.name, "exit_code": c, **out} for f, (c, out) in zip(files, results)]}


def cmd_validate(args) -> tuple[int, dict]:
    state = StateDocument.from_dict(read_json(args.state)).to_state()
    report = validate_state(state)
    out = {k: _jsonable(v) for k, v in vars(report).items()}
    return (EXIT_OK if report.is_physical else EXIT_UNPHYSICAL), out


def cmd_spectrum(args) -> tuple[int, dict]:
    state = StateDocument.from_dict(read_json(args.state)).to_state()
    report = validate_state(state)
    if not report.is_physical:
        raise UnphysicalStateError(f"state is unphysical (smallest symplectic eigenvalue "
                                   f"{report.min_symplectic_eigenvalue:.12g})")
    spec = symplectic_spectrum(complex_structure(state))
    return EXIT_OK, {"nu": spec.nu.tolist(), "modes": complex_to_pairs(spec.modes.T)}


def cmd_partner(args) -> tuple[int, dict]:
    kind = args.kind
    if args.batch:
        return _run_batch(args.batch, lambda job: _partner_job(kind, args.verify, job))
    return _partner_job(kind, args.verify, _job_from_files(args))


def cmd_negativity(args) -> tuple[int, dict]:
    if args.batch:
        return _run_batch(args.batch, lambda job: _negativity_job(args.verify, job))
    return _negativity_job(args.verify, _job_from_files(args))


def cmd_paper_examples(args) -> tuple[int, dict | str]:
    rows = run_examples()
    code = EXIT_OK if all(r.passed for r in rows) else EXIT_CONSISTENCY
    if args.json:
        return code, {"rows": [vars(r) for r in rows]}
    return code, format_table(rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", default=argparse.SUPPRESS, metavar="NAME=VALUE,...",
                        help="override numerical tolerances (beats the environment variable)")
    parser = _Parser(prog="gaussian-partners", parents=[common],
                     description="Partners of modes in bosonic Gaussian states.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check physicality and purity of a state")
    p.add_argument("state")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("spectrum", parents=[common], help="symplectic eigenvalues and eigenvectors")
    p.add_argument("state")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("partner", parents=[common], help="partner of a subsystem")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--pure", dest="kind", action="store_const", const="pure")
    kind.add_argument("--correlation", dest="kind", action="store_const", const="correlation")
    kind.add_argument("--entanglement", dest="kind", action="store_const", const="entanglement")
    p.add_argument("state", nargs="?")
    p.add_argument("subsystem", nargs="?")
    p.add_argument("--compare", metavar="SUBSYSTEM", help="report the projector distance to this span")
    p.add_argument("--batch", metavar="DIR", help="process every job document in DIR")
    p.add_argument("--verify", action="store_true", help="append the oracle verification report")
    p.set_defaults(func=cmd_partner)

    p = sub.add_parser("negativity", parents=[common], help="logarithmic negativity and PT spectrum")
    p.add_argument("state", nargs="?")
    p.add_argument("subsystem", nargs="?")
    p.add_argument("--batch", metavar="DIR")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_negativity)

    p = sub.add_parser("paper-examples", parents=[common], help="replay the worked reference examples")
    p.add_argument("--json", action="store_true", help="emit rows as JSON instead of a table")
    p.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        overrides = tolerances.from_environment()
        if getattr(args, "tol", None):
            overrides.update(tolerances.parse_overrides(args.tol))
    except ValueError as exc:
        print(f"gaussian-partners: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with tolerances.using(**overrides):
        try:
            code, out = args.func(args)
        except Exception as exc:
            code = _exit_code_for(exc)
            print(f"gaussian-partners: error: {exc}", file=sys.stderr)
            return code
    print(out if isinstance(out, str) else dumps(out))
    if isinstance(out, dict) and "error" in out:
        print(f"gaussian-partners: error: {out['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
