"""Batch driver: case specifications, check pipelines and reports.

A case names a family, a multi-index, the degree N of the polynomial whose
zeros are used, a working precision and the checks to run.  Checks run in
dependency order (exact construction, zeros, matrices, spectral checks);
a failed dependency marks its dependents as skipped and the rest continue.
Reports are deterministic: same case and version give the same bytes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
import warnings
from dataclasses import asdict, dataclass, field, fields
from importlib import resources
from typing import Any, Callable, Sequence

import mpmath

from . import __version__
from .classical import Family
from .deform import (
    ParameterCase,
    check_basic_identity,
    check_eigen_identity,
    check_formal_reduction,
    coprime_check,
    deformed_family,
    identity_in_parameters,
)
from .errors import DiscOrthoError, InvalidSpec
from .mindex import KA, MI, MultiIndexSpec, check_parameter_bounds, denominator_degree, ell, enumerate_extras
from .numroots import analyze_zeros, find_roots, vieta_check
from .spectral import (
    BOTH,
    basis_determinant,
    build_matrices,
    christoffel_numbers,
    eigen_spectrum,
    integrality_defect,
    match_spectrum,
    orthogonality_sums,
    participants,
    predicted_eigenpairs_check,
    quadrature_moment_check,
)

SCHEMA_VERSION = 1
PRECISION_ENV = "DISCORTHO_PRECISION"
CHECKS = (
    "degrees",
    "eigenIdentity",
    "basicIdentity",
    "identityInParameters",
    "zeros",
    "matrices",
    "orthogonality",
    "eigenpairs",
    "spectrum",
    "basis",
    "quadrature",
    "diophantine",
)
NUMERIC_CHECKS = ("matrices", "orthogonality", "eigenpairs", "spectrum", "quadrature", "diophantine")


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return 256
    try:
        bits = int(raw)
    except ValueError as exc:
        raise InvalidSpec(f"{PRECISION_ENV} must be an integer, got {raw!r}") from exc
    if bits < 64:
        raise InvalidSpec(f"{PRECISION_ENV} must be at least 64")
    return bits


@dataclass(frozen=True)
class CaseSpec:
    family: str
    N: int
    mode: str = MI
    dI: tuple[int, ...] = ()
    dII: tuple[int, ...] = ()
    dKA: tuple[int, ...] = ()
    g: str | None = None
    h: str | None = None
    name: str = ""
    precisionBits: int = field(default_factory=default_precision)
    orthogonalityTol: str = "1e-50"
    eigenResidualBits: int = 100
    pathToleranceBits: int = 128
    buildPath: str = BOTH
    flipBranch: bool = False
    samples: int = 8
    checks: tuple[str, ...] = CHECKS

    def __post_init__(self) -> None:
        for name in ("dI", "dII", "dKA", "checks"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise InvalidSpec(f"unknown checks: {unknown}")
        if self.N < 1:
            raise InvalidSpec("N must be a positive integer")
        if self.precisionBits < 64:
            raise InvalidSpec("precisionBits must be at least 64")

    def multi_index(self) -> MultiIndexSpec:
        fam = Family.from_dict({k: v for k, v in (("kind", self.family), ("g", self.g), ("h", self.h)) if v is not None})
        return MultiIndexSpec(self.mode, fam, self.dI, self.dII, self.dKA)

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for name in ("dI", "dII", "dKA", "checks"):
            out[name] = list(out[name])
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CaseSpec":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise InvalidSpec(f"unknown case fields: {sorted(extra)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise InvalidSpec(str(exc)) from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def parse(cls, text: str) -> "CaseSpec":
        return cls.from_dict(json.loads(text))


def _num(x: Any, digits: int = 6) -> str:
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(x, digits)
    return str(x)


class _Pipeline:
    """Lazily computed shared state of one case."""

    def __init__(self, case: CaseSpec) -> None:
        self.case = case
        self.spec = case.multi_index()
        self.bits = case.precisionBits
        self.N = case.N
        self._deformed = None
        self._zeros = None
        self._xi_zeros = None
        self._matrix = None
        self._christoffel = None
        self._participants = None

    @property
    def deformed(self):
        if self._deformed is None:
            self._deformed = deformed_family(self.spec)
        return self._deformed

    @property
    def zero_set(self):
        if self._zeros is None:
            p = self.deformed.poly(self.N)
            roots = find_roots(p, self.bits)
            self._zeros = analyze_zeros(roots, self.spec.family, self.spec.family.parameters_real, self.bits)
        return self._zeros

    @property
    def xi_zeros(self):
        if self._xi_zeros is None:
            xi = self.deformed.xi
            self._xi_zeros = find_roots(xi, self.bits) if xi.degree >= 1 else []
        return self._xi_zeros

    @property
    def matrix(self):
        if self._matrix is None:
            self._matrix = build_matrices(
                self.deformed, self.N, self.zero_set, self.xi_zeros, self.bits, self.case.buildPath, self.case.flipBranch
            )
        return self._matrix

    @property
    def christoffel(self):
        if self._christoffel is None:
            self._christoffel = christoffel_numbers(self.deformed, self.zero_set, self.N)
        return self._christoffel

    @property
    def participants(self):
        if self._participants is None:
            self._participants = participants(self.deformed, self.N)
        return self._participants


# -- individual checks ---------------------------------------------------
# each returns (passed or None for "not applicable", details)

def _check_degrees(pl: _Pipeline) -> tuple[bool | None, dict]:
    spec, d = pl.spec, pl.deformed
    offset = ell(spec)
    rows = []
    ok = d.xi.degree == denominator_degree(spec)
    for n in range(pl.N + 1):
        if spec.mode == KA and n in spec.d_KA:
            continue
        deg = d.poly(n).degree
        rows.append({"n": n, "degree": deg, "expected": offset + n})
        ok = ok and deg == offset + n
    details: dict[str, Any] = {"ell": offset, "xiDegree": d.xi.degree, "xiExpected": denominator_degree(spec), "polys": rows}
    if not spec.is_empty:
        extras = enumerate_extras(spec, pl.N)
        expected = offset if spec.mode == MI else sum(dj - j for j, dj in enumerate(spec.d_KA))
        details["extraCount"] = len(extras)
        details["extraExpected"] = expected
        details["extras"] = [e.label for e in extras]
        ok = ok and len(extras) == expected
    details["coprime"] = coprime_check(d, pl.N)
    return ok and details["coprime"], details


def _check_eigen(pl: _Pipeline) -> tuple[bool | None, dict]:
    reports = [
        check_eigen_identity(pl.deformed, n)
        for n in range(pl.N + 1)
        if not (pl.spec.mode == KA and n in pl.spec.d_KA)
    ]
    return all(r.passed for r in reports), {"identities": [r.to_dict() for r in reports]}


def _check_basic(pl: _Pipeline) -> tuple[bool | None, dict]:
    if pl.spec.is_empty:
        return None, {"reason": "no extras for a classical family"}
    reports = []
    for extra in enumerate_extras(pl.spec, pl.N):
        for direction in ("forward", "exchanged"):
            reports.append(check_basic_identity(pl.deformed, extra, pl.N, direction))
    reports.append(check_formal_reduction(pl.deformed, pl.N))
    return all(r.passed for r in reports), {"identities": [r.to_dict() for r in reports]}


def _check_parameters(pl: _Pipeline) -> tuple[bool | None, dict]:
    spec = pl.spec
    if spec.family.kind == "H":
        return None, {"reason": "Hermite has no free parameters"}
    identity = "eigen" if spec.is_empty else "basic"
    case = ParameterCase(spec.family.kind, spec.mode, spec.d_I, spec.d_II, spec.d_KA, pl.N, identity)
    result = identity_in_parameters(case, pl.case.samples)
    return result["passed"], result


def _check_zeros(pl: _Pipeline) -> tuple[bool | None, dict]:
    zs = pl.zero_set
    s_err, p_err = vieta_check(pl.deformed.poly(pl.N), zs.zeros, pl.bits)
    bound = mpmath.ldexp(1, -pl.bits // 2)
    details = {
        "count": len(zs),
        "ordinaryCount": zs.ordinary_count,
        "classification": zs.classification,
        "pairing": zs.pairing,
        "vietaSum": _num(s_err),
        "vietaProduct": _num(p_err),
        "warnings": zs.warnings,
        "xiZeroCount": len(pl.xi_zeros),
    }
    ok = s_err < bound and p_err < bound and len(zs) == pl.deformed.poly(pl.N).degree
    if pl.spec.family.parameters_real:
        # Krein-Adler deletes M levels below N, and with them M nodes
        expected = pl.N - pl.spec.M if pl.spec.mode == KA else pl.N
        details["ordinaryExpected"] = expected
        ok = ok and zs.ordinary_count == expected
    else:
        details["note"] = "complex parameters: pairing and ordinary count not asserted"
    return ok, details


def _check_matrices(pl: _Pipeline) -> tuple[bool | None, dict]:
    sm = pl.matrix
    tol = mpmath.ldexp(1, -pl.bits // 2)
    sym = sm.symmetry_defect()
    sim = sm.similarity_defect()
    conj = sm.conjugation_defect()
    details: dict[str, Any] = {"size": sm.size, "symmetry": _num(sym), "similarity": _num(sim)}
    ok = sym <= tol and sim <= tol
    if conj is not None:
        details["conjugation"] = _num(conj)
        ok = ok and conj <= tol
    if sm.path_discrepancy is not None:
        details["pathDiscrepancy"] = _num(sm.path_discrepancy)
        # a path tolerance finer than half the working precision is unreachable
        bits = min(pl.case.pathToleranceBits, pl.bits // 2)
        details["pathToleranceBits"] = bits
        ok = ok and sm.path_discrepancy <= mpmath.ldexp(1, -bits)
    return ok, details


def _check_orthogonality(pl: _Pipeline) -> tuple[bool | None, dict]:
    with mpmath.workprec(pl.bits):
        tol = mpmath.mpf(pl.case.orthogonalityTol)
    rep = orthogonality_sums(pl.zero_set, pl.christoffel, pl.participants, tol)
    details = {
        "participants": rep.labels,
        "maxOffDiagonal": _num(rep.max_off_diagonal),
        "tolerance": pl.case.orthogonalityTol,
        "christoffelSpread": _num(pl.christoffel.relative_spread()),
    }
    conj = pl.christoffel.conjugation_defect(pl.zero_set.pairing)
    if conj is not None:
        details["christoffelConjugation"] = _num(conj)
    return rep.passed, details


def _check_eigenpairs(pl: _Pipeline) -> tuple[bool | None, dict]:
    rows = predicted_eigenpairs_check(pl.matrix, pl.deformed, pl.N, pl.participants)
    bound = mpmath.ldexp(1, -pl.case.eigenResidualBits)
    ok = all(r["residual"] < bound for r in rows)
    return ok, {"pairs": [{**r, "residual": _num(r["residual"])} for r in rows]}


def _check_spectrum(pl: _Pipeline) -> tuple[bool | None, dict]:
    values = eigen_spectrum(pl.matrix)
    predicted = [p.alpha for p in pl.participants]
    dev = match_spectrum(values, predicted, pl.bits)
    details: dict[str, Any] = {
        "predicted": sorted(str(a) for a in predicted),
        "computed": [_num(v, 12) for v in values],
        "maxDeviation": _num(dev),
    }
    if len(set(predicted)) < len(predicted):
        details["degenerate"] = True
    return dev < mpmath.ldexp(1, -pl.case.eigenResidualBits), details


def _check_basis(pl: _Pipeline) -> tuple[bool | None, dict]:
    polys = [p.poly for p in pl.participants] + [pl.deformed.poly(pl.N)]
    det = basis_determinant(polys)
    control = basis_determinant(polys[:-1] + [polys[0]])
    return bool(det) and not control, {"size": len(polys), "nonzero": bool(det), "duplicateControlZero": not control}


def _check_quadrature(pl: _Pipeline) -> tuple[bool | None, dict]:
    if not pl.spec.is_empty:
        return None, {"reason": "Gaussian quadrature applies to classical families only"}
    with mpmath.workprec(pl.bits):
        tol = mpmath.mpf(pl.case.orthogonalityTol)
    rep = quadrature_moment_check(pl.deformed, pl.N, pl.zero_set, pl.christoffel, tol)
    rows = [{"k": r["k"], "error": _num(r["error"]), "expected": r["expected"]} for r in rep["moments"]]
    return rep["passed"], {"moments": rows, "exact": rep["exact"], "controlMismatch": rep["controlMismatch"]}


def _check_diophantine(pl: _Pipeline) -> tuple[bool | None, dict]:
    predicted = [p.alpha for p in pl.participants]
    if not all(a.is_integer for a in predicted):
        return None, {"reason": "predicted eigenvalues are not all integers"}
    values = eigen_spectrum(pl.matrix)
    defect = integrality_defect(values, pl.bits)
    return defect < mpmath.ldexp(1, -pl.case.eigenResidualBits), {"integralityDefect": _num(defect)}


CHECK_FUNCTIONS: dict[str, Callable[[_Pipeline], tuple[bool | None, dict]]] = {
    "degrees": _check_degrees,
    "eigenIdentity": _check_eigen,
    "basicIdentity": _check_basic,
    "identityInParameters": _check_parameters,
    "zeros": _check_zeros,
    "matrices": _check_matrices,
    "orthogonality": _check_orthogonality,
    "eigenpairs": _check_eigenpairs,
    "spectrum": _check_spectrum,
    "basis": _check_basis,
    "quadrature": _check_quadrature,
    "diophantine": _check_diophantine,
}

# a failure of the key marks the listed checks as skipped
DEPENDENTS = {
    "zeros": NUMERIC_CHECKS,
    "matrices": ("eigenpairs", "spectrum", "diophantine"),
}


def run_case(case: CaseSpec, timings: bool = False) -> dict[str, Any]:
    """Execute the requested checks and return the report dictionary."""
    report: dict[str, Any] = {
        "schemaVersion": SCHEMA_VERSION,
        "version": __version__,
        "case": case.to_dict(),
    }
    checks: list[dict[str, Any]] = []
    blocked: dict[str, str] = {}
    pl = _Pipeline(case)  # an invalid multi-index raises InvalidSpec here
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        check_parameter_bounds(pl.spec)
    report["warnings"] = [str(w.message) for w in caught]
    # zeros gate the numeric checks even when not requested explicitly
    order = [c for c in CHECKS if c in case.checks]
    needs_zeros = any(c in NUMERIC_CHECKS for c in order)
    if needs_zeros and "zeros" not in order:
        order.insert(0, "zeros")
    for name in order:
        entry: dict[str, Any] = {"name": name}
        if name in blocked:
            entry.update(status="skipped", reason=blocked[name])
            checks.append(entry)
            continue
        start = time.perf_counter()
        try:
            passed, details = CHECK_FUNCTIONS[name](pl)
            entry["status"] = "skipped" if passed is None else ("pass" if passed else "fail")
            entry["details"] = details
        except DiscOrthoError as exc:
            passed = False
            entry.update(status="error", reason=f"{type(exc).__name__}: {exc}")
        if timings:
            entry["seconds"] = round(time.perf_counter() - start, 3)
        if passed is False:
            for dep in DEPENDENTS.get(name, ()):
                blocked.setdefault(dep, f"dependency {name} failed")
        checks.append(entry)
    failures = [c["name"] for c in checks if c["status"] in ("fail", "error")]
    report["checks"] = checks
    report["failures"] = failures
    report["passed"] = not failures
    return report


def emit_report(report: dict[str, Any], fmt: str = "json") -> str:
    """Serialize a case report or a suite report."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt != "csv-summary":
        raise ValueError(f"unknown format {fmt!r}")
    cases = report["cases"] if "cases" in report else [report]
    rows = []
    for rep in cases:
        label = rep["case"].get("name") or _case_label(rep["case"])
        if "error" in rep:
            rows.append((label, "case", "error", rep["error"]))
        for c in rep.get("checks", []):
            rows.append((label, c["name"], c["status"], c.get("reason", "")))
    rank = {"fail": 0, "error": 0, "pass": 1, "skipped": 2}
    rows.sort(key=lambda r: rank[r[2]])  # stable: failures first, then original order
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("case", "check", "status", "reason"))
    writer.writerows(rows)
    return buf.getvalue()


def _case_label(case: dict[str, Any]) -> str:
    parts = [case["family"], case["mode"]]
    for key in ("dI", "dII", "dKA"):
        if case.get(key):
            parts.append(f"{key}={','.join(map(str, case[key]))}")
    for key in ("g", "h"):
        if case.get(key) is not None:
            parts.append(f"{key}={case[key]}")
    parts.append(f"N={case['N']}")
    return " ".join(parts)


def load_suite(path: str | None = None) -> list[CaseSpec]:
    if path is None:
        text = resources.files("discortho").joinpath("data/suite.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    return [CaseSpec.from_dict(c) for c in data["cases"]]


def run_suite(cases: Sequence[CaseSpec], timings: bool = False) -> dict[str, Any]:
    reports = [run_case(c, timings) for c in cases]
    failing = [r["case"].get("name") or _case_label(r["case"]) for r in reports if not r["passed"]]
    return {
        "schemaVersion": SCHEMA_VERSION,
        "version": __version__,
        "failures": failing,
        "passed": not failing,
        "cases": reports,
    }


# -- command line -------------------------------------------------------

def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _add_case_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--case", help="JSON file holding one case specification")
    p.add_argument("--family", choices=("H", "L", "J"))
    p.add_argument("--mode", choices=(MI, KA), default=None)
    p.add_argument("--dI", type=_int_list, default=None)
    p.add_argument("--dII", type=_int_list, default=None)
    p.add_argument("--dKA", type=_int_list, default=None)
    p.add_argument("--g", help='exact value such as "7/2" or "7/2+1i"')
    p.add_argument("--h")
    p.add_argument("--N", type=int)
    p.add_argument("--precision", type=int, help=f"working precision in bits (default ${PRECISION_ENV} or 256)")
    p.add_argument("--path", choices=("direct", "closedForm", "both"))
    p.add_argument("--checks", help="comma-separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--flip-branch", action="store_true", help="use the opposite square-root branch at odd zeros")


def _case_from_args(args: argparse.Namespace) -> CaseSpec:
    if args.case:
        with open(args.case) as fh:
            data = json.load(fh)
    else:
        data = {}
    overrides = {
        "family": args.family,
        "mode": args.mode,
        "dI": args.dI,
        "dII": args.dII,
        "dKA": args.dKA,
        "g": args.g,
        "h": args.h,
        "N": args.N,
        "precisionBits": args.precision,
        "buildPath": args.path,
        "checks": tuple(c.strip() for c in args.checks.split(",")) if args.checks else None,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    if args.flip_branch:
        data["flipBranch"] = True
    if "family" not in data or "N" not in data:
        raise InvalidSpec("a case needs --family and --N (or --case FILE)")
    if data["family"] == "H" and "mode" not in data:
        data["mode"] = KA
    return CaseSpec.from_dict(data)


def _cmd_construct(args: argparse.Namespace) -> int:
    case = _case_from_args(args)
    spec = case.multi_index()
    d = deformed_family(spec)
    polys = {}
    for n in range(case.N + 1):
        if spec.mode == KA and n in spec.d_KA:
            continue
        polys[str(n)] = d.poly(n).to_strings()
    out = {
        "case": case.to_dict(),
        "ell": ell(spec),
        "xi": d.xi.to_strings(),
        "polys": polys,
    }
    if not spec.is_empty:
        out["extras"] = [
            {**e.to_dict(), "poly": deformed_family(e.derived).poly(case.N).to_strings()}
            for e in enumerate_extras(spec, case.N)
        ]
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_zeros(args: argparse.Namespace) -> int:
    case = _case_from_args(args)
    pl = _Pipeline(case)
    out = {"case": case.to_dict(), "zeros": pl.zero_set.to_dict()}
    with mpmath.workprec(case.precisionBits):
        digits = max(15, int(case.precisionBits * 0.30103) - 5)
        out["xiZeros"] = [{"re": mpmath.nstr(z.real, digits), "im": mpmath.nstr(z.imag, digits)} for z in pl.xi_zeros]
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_case(_case_from_args(args), args.timings)
    sys.stdout.write(emit_report(report, args.format))
    return 0 if report["passed"] else 1


def _cmd_report(args: argparse.Namespace) -> int:
    cases = []
    for path in args.cases:
        with open(path) as fh:
            data = json.load(fh)
        items = data["cases"] if isinstance(data, dict) and "cases" in data else [data]
        cases.extend(CaseSpec.from_dict(c) for c in items)
    report = run_suite(cases, args.timings)
    _write(emit_report(report, args.format), args.output)
    return 0 if report["passed"] else 1


def _cmd_suite(args: argparse.Namespace) -> int:
    cases = load_suite(args.manifest)
    if args.only:
        cases = [c for c in cases if c.name in args.only]
    report = run_suite(cases, args.timings)
    _write(emit_report(report, args.format), args.output)
    return 0 if report["passed"] else 1


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discortho", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print Xi_D, P_{D,n} (n <= N) and the extra polynomials")
    _add_case_arguments(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("zeros", help="print the zeros of P_{D,N} and Xi_D")
    _add_case_arguments(p)
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("verify", help="run checks on one case")
    _add_case_arguments(p)
    p.add_argument("--format", choices=("json", "csv-summary"), default="json")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identity)")
    p.set_defaults(func=_cmd_verify)

    for name, helptext, func in (
        ("report", "run one or more case files and emit a combined report", _cmd_report),
        ("suite", "run the bundled acceptance manifest", _cmd_suite),
    ):
        p = sub.add_parser(name, help=helptext)
        if name == "report":
            p.add_argument("cases", nargs="+", help="case JSON files (a single case or {\"cases\": [...]})")
        else:
            p.add_argument("--manifest", help="alternative manifest file")
            p.add_argument("--only", nargs="*", help="run only the named cases")
        p.add_argument("--format", choices=("json", "csv-summary"), default="json")
        p.add_argument("--output", "-o", help="write to a file instead of stdout")
        p.add_argument("--timings", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiscOrthoError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
