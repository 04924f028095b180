"""Matrices at the zeros of P_{D,N} and the numerical orthogonality checks.

The deformed operator restricted to polynomials of degree below the
number of zeros acts, in the Lagrange basis at those zeros, as the matrix
``M~``.  Rescaling by ``eta_dot(x_n)`` gives the complex symmetric ``M``
whose eigenvectors are the participant polynomials sampled at the zeros.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Sequence

import mpmath

from .classical import Family, energy
from .deform import DeformedFamily, deformed_family, operator_numerator
from .errors import ConvergenceFailure, SimpleZeroViolation, UnsupportedFamily, ZeroCollision
from .exactalg import GaussianRational, Polynomial, to_mpc
from .mindex import KA, enumerate_extras, predicted_matrix_eigenvalue
from .numroots import ZeroSet

DEFAULT_PRECISION = 256
ORTHOGONALITY_TOL = mpmath.mpf("1e-50")
EIGEN_RESIDUAL_BITS = 100

DIRECT = "direct"
CLOSED_FORM = "closedForm"
BOTH = "both"


def _matrix_max(a: mpmath.matrix) -> mpmath.mpf:
    return max((abs(a[i, j]) for i in range(a.rows) for j in range(a.cols)), default=mpmath.mpf(0))


def eta_dot_values(deformed: DeformedFamily, zeros: Sequence[mpmath.mpc], flip_branch: bool = False) -> list[mpmath.mpc]:
    """eta_dot(x_n) from eta_dot^2 = 4 c2(eta_n) on the principal branch.

    ``flip_branch`` negates the root at every odd index; all checks must be
    insensitive to this choice.
    """
    c2 = deformed.structure.c2
    out = []
    for k, z in enumerate(zeros):
        r = mpmath.sqrt(4 * c2(z))
        if r.real < 0 or (r.real == 0 and r.imag < 0):
            r = -r
        out.append(-r if flip_branch and k % 2 else r)
    return out


def _at_own_precision(method):
    def wrapper(self, *args, **kwargs):
        with mpmath.workprec(self.precision_bits):
            return method(self, *args, **kwargs)

    wrapper.__name__ = method.__name__
    wrapper.__doc__ = method.__doc__
    return wrapper


@dataclass
class SpectralMatrix:
    m_tilde: mpmath.matrix
    m: mpmath.matrix
    zero_set: ZeroSet
    xi_zeros: list[mpmath.mpc]
    build_path: str
    eta_dot: list[mpmath.mpc]
    precision_bits: int
    path_discrepancy: mpmath.mpf | None = None
    closed_form: mpmath.matrix | None = None

    @property
    def size(self) -> int:
        return self.m.rows

    @_at_own_precision
    def symmetry_defect(self) -> mpmath.mpf:
        """max |M_nm - M_mn| relative to the largest entry."""
        n = self.size
        worst = max((abs(self.m[i, j] - self.m[j, i]) for i in range(n) for j in range(i)), default=mpmath.mpf(0))
        scale = _matrix_max(self.m)
        return worst / scale if scale else worst

    @_at_own_precision
    def conjugation_defect(self) -> mpmath.mpf | None:
        """max |conj(M~_nm) - M~_{nbar mbar}| relative; None without pairing."""
        bar = self.zero_set.pairing
        if bar is None:
            return None
        n = self.size
        worst = max(
            (abs(mpmath.conj(self.m_tilde[i, j]) - self.m_tilde[bar[i], bar[j]]) for i in range(n) for j in range(n)),
            default=mpmath.mpf(0),
        )
        scale = _matrix_max(self.m_tilde)
        return worst / scale if scale else worst

    @_at_own_precision
    def similarity_defect(self) -> mpmath.mpf:
        """max |M + D^-1 M~ D| relative, D = diag(eta_dot)."""
        n = self.size
        d = self.eta_dot
        worst = max(
            (abs(self.m[i, j] + self.m_tilde[i, j] * d[j] / d[i]) for i in range(n) for j in range(n)),
            default=mpmath.mpf(0),
        )
        scale = _matrix_max(self.m)
        return worst / scale if scale else worst

    def to_dict(self, digits: int = 30) -> dict[str, Any]:
        def dump(a: mpmath.matrix) -> list[list[dict[str, str]]]:
            return [
                [{"re": mpmath.nstr(a[i, j].real, digits), "im": mpmath.nstr(mpmath.mpc(a[i, j]).imag, digits)} for j in range(a.cols)]
                for i in range(a.rows)
            ]

        return {"buildPath": self.build_path, "mTilde": dump(self.m_tilde), "m": dump(self.m)}


def _check_collisions(zeros: Sequence[mpmath.mpc], xi_zeros: Sequence[mpmath.mpc], precision_bits: int) -> None:
    tol = mpmath.ldexp(1, -precision_bits // 4)
    for i, a in enumerate(zeros):
        for b in zeros[:i]:
            if abs(a - b) <= tol:
                raise ZeroCollision("two zeros of P_{D,N} coincide numerically")
        for b in xi_zeros:
            if abs(a - b) <= tol:
                raise ZeroCollision("a zero of P_{D,N} coincides with a zero of Xi_D")


def _direct_m_tilde(deformed: DeformedFamily, N: int, zeros: Sequence[mpmath.mpc], precision_bits: int) -> mpmath.matrix:
    n = len(zeros)
    EN = to_mpc(energy(deformed.family, N))
    _, _, _, xi, _ = deformed.numeric_structure(precision_bits)
    out = mpmath.matrix(n, n)
    denom = [mpmath.fprod(zeros[k] - zeros[j] for j in range(n) if j != k) for k in range(n)]
    xi_at = [xi(z) for z in zeros]
    for m in range(n):
        basis = Polynomial.from_roots([zeros[j] for j in range(n) if j != m]) if n > 1 else Polynomial.constant(mpmath.mpc(1))
        num = operator_numerator(deformed, basis, precision_bits)
        for k in range(n):
            out[k, m] = (num(zeros[k]) / xi_at[k] - EN * basis(zeros[k])) / denom[k]
    return out


def _closed_form_m_tilde(
    deformed: DeformedFamily, N: int, zeros: Sequence[mpmath.mpc], xi_zeros: Sequence[mpmath.mpc], precision_bits: int
) -> mpmath.matrix:
    n = len(zeros)
    c1, c1s, c2, _, const = deformed.numeric_structure(precision_bits)
    EN = to_mpc(energy(deformed.family, N))
    out = mpmath.matrix(n, n)
    for k in range(n):
        z = zeros[k]
        c2z, c1z, c1sz = c2(z), c1(z), c1s(z)
        inv_zeta = [1 / (z - w) for w in xi_zeros]
        inv_eta = [1 / (z - zeros[j]) for j in range(n) if j != k]
        quarter = (
            -c2z * (mpmath.fsum(t * t for t in inv_zeta) + mpmath.fsum(t * t for t in inv_eta))
            + (c1z / 2 - c1sz) * mpmath.fsum(inv_zeta)
            + (c1z / 2) * mpmath.fsum(inv_eta)
            + EN / 4
            + const
        )
        out[k, k] = -4 * quarter
        for m in range(n):
            if m != k:
                out[k, m] = 8 * c2z / (z - zeros[m]) ** 2
    return out


def build_matrices(
    deformed: DeformedFamily,
    N: int,
    zero_set: ZeroSet,
    xi_zeros: Sequence[mpmath.mpc] = (),
    precision_bits: int = DEFAULT_PRECISION,
    path: str = DIRECT,
    flip_branch: bool = False,
) -> SpectralMatrix:
    """Build M~ (direct Lagrange evaluation, closed form, or both) and M."""
    if path not in (DIRECT, CLOSED_FORM, BOTH):
        raise ValueError(f"unknown build path {path!r}")
    with mpmath.workprec(precision_bits):
        zeros = [mpmath.mpc(z) for z in zero_set.zeros]
        xi_z = [mpmath.mpc(z) for z in xi_zeros]
        _check_collisions(zeros, xi_z, precision_bits)
        direct = closed = None
        if path in (DIRECT, BOTH):
            direct = _direct_m_tilde(deformed, N, zeros, precision_bits)
        if path in (CLOSED_FORM, BOTH):
            closed = _closed_form_m_tilde(deformed, N, zeros, xi_z, precision_bits)
        m_tilde = direct if direct is not None else closed
        discrepancy = None
        if direct is not None and closed is not None:
            scale = _matrix_max(direct)
            discrepancy = _matrix_max(direct - closed) / (scale if scale else 1)
        dots = eta_dot_values(deformed, zeros, flip_branch)
        n = len(zeros)
        m = mpmath.matrix(n, n)
        for i in range(n):
            for j in range(n):
                m[i, j] = -(dots[j] / dots[i]) * m_tilde[i, j]
        return SpectralMatrix(
            m_tilde=m_tilde,
            m=m,
            zero_set=zero_set,
            xi_zeros=xi_z,
            build_path=path,
            eta_dot=dots,
            precision_bits=precision_bits,
            path_discrepancy=discrepancy,
            closed_form=closed if path == BOTH else None,
        )


# -- Christoffel numbers --------------------------------------------------

@dataclass
class ChristoffelSet:
    lambdas: list[mpmath.mpc]
    precision_bits: int

    @_at_own_precision
    def conjugation_defect(self, pairing: Sequence[int] | None) -> mpmath.mpf | None:
        if pairing is None:
            return None
        scale = max(abs(x) for x in self.lambdas)
        return max(abs(mpmath.conj(self.lambdas[k]) - self.lambdas[m]) for k, m in enumerate(pairing)) / scale

    @_at_own_precision
    def relative_spread(self) -> mpmath.mpf:
        mean = mpmath.fsum(self.lambdas) / len(self.lambdas)
        return max(abs(x - mean) for x in self.lambdas) / abs(mean)


def christoffel_numbers(deformed: DeformedFamily, zero_set: ZeroSet, N: int) -> ChristoffelSet:
    """lambda_n = 1 / (eta_dot(x_n)^2 P'_{D,N}(eta_n)^2), up to a common factor."""
    p = deformed.poly(N)
    bits = zero_set.precision_bits
    with mpmath.workprec(bits):
        dp = p.derivative().to_mpc()
        c2 = deformed.structure.c2
        scale = mpmath.fsum(abs(to_mpc(c)) for c in p.coeffs)
        tiny = mpmath.ldexp(1, -bits // 2) * scale
        out = []
        for z in zero_set.zeros:
            d = dp(z)
            if abs(d) <= tiny:
                raise SimpleZeroViolation(f"P' nearly vanishes at zero {mpmath.nstr(z, 10)}")
            out.append(1 / (4 * c2(z) * d * d))
        return ChristoffelSet(out, bits)


# -- participants and checks ---------------------------------------------

@dataclass
class Participant:
    label: str
    poly: Polynomial
    alpha: GaussianRational


def participants(deformed: DeformedFamily, N: int) -> list[Participant]:
    """Ordinary P_{D,m} (m < N, Krein-Adler degrees excluded) and the extras P_{D',N}."""
    spec = deformed.spec
    EN = energy(spec.family, N)
    out = []
    for m in range(N):
        if spec.mode == KA and m in spec.d_KA:
            continue
        out.append(Participant(f"P{m}", deformed.poly(m), EN - energy(spec.family, m)))
    if not spec.is_empty:
        for extra in enumerate_extras(spec, N):
            other = deformed_family(extra.derived)
            out.append(Participant(extra.label, other.poly(N), predicted_matrix_eigenvalue(spec, extra, N)))
    return out


def _values(poly: Polynomial, zeros: Sequence[mpmath.mpc]) -> list[mpmath.mpc]:
    cs = poly.to_mpc()
    return [cs(z) for z in zeros]


@dataclass
class OrthogonalityReport:
    labels: list[str]
    normalized: mpmath.matrix
    max_off_diagonal: mpmath.mpf
    tolerance: mpmath.mpf
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        self.passed = self.max_off_diagonal < self.tolerance


def orthogonality_sums(
    zero_set: ZeroSet,
    christoffel: ChristoffelSet,
    polys: Sequence[Participant | Polynomial],
    tolerance: Any = ORTHOGONALITY_TOL,
) -> OrthogonalityReport:
    """S_ab = sum_l lambda_l Q_a(eta_l) Q_b(eta_l), normalized by the sum of moduli.

    The product is bilinear; no conjugation is applied.
    """
    with mpmath.workprec(zero_set.precision_bits):
        items = [p if isinstance(p, Participant) else Participant(f"Q{k}", p, GaussianRational(0)) for k, p in enumerate(polys)]
        vals = [_values(q.poly, zero_set.zeros) for q in items]
        lam = christoffel.lambdas
        k = len(items)
        out = mpmath.matrix(k, k)
        worst = mpmath.mpf(0)
        for a in range(k):
            for b in range(k):
                terms = [lam[l] * vals[a][l] * vals[b][l] for l in range(len(lam))]
                denom = mpmath.fsum(abs(t) for t in terms)
                out[a, b] = abs(mpmath.fsum(terms)) / denom if denom else mpmath.mpf(0)
                if a != b:
                    worst = max(worst, out[a, b])
        return OrthogonalityReport([q.label for q in items], out, worst, mpmath.mpf(tolerance))


def eigenvector(sm: SpectralMatrix, deformed: DeformedFamily, N: int, poly: Polynomial) -> list[mpmath.mpc]:
    """v_n = Q(eta_n) / (eta_dot(x_n) P'_{D,N}(eta_n))."""
    dp = deformed.poly(N).derivative().to_mpc()
    zs = sm.zero_set.zeros
    q = poly.to_mpc()
    return [q(z) / (sm.eta_dot[n] * dp(z)) for n, z in enumerate(zs)]


def predicted_eigenpairs_check(
    sm: SpectralMatrix, deformed: DeformedFamily, N: int, parts: Sequence[Participant] | None = None
) -> list[dict[str, Any]]:
    """Residual ||M v - alpha v||_inf / ||v||_inf for every participant."""
    if parts is None:
        parts = participants(deformed, N)
    rows = []
    with mpmath.workprec(sm.precision_bits):
        for part in parts:
            v = eigenvector(sm, deformed, N, part.poly)
            alpha = to_mpc(part.alpha)
            mv = sm.m * mpmath.matrix(v)
            res = max(abs(mv[i] - alpha * v[i]) for i in range(len(v)))
            norm = max(abs(x) for x in v)
            rows.append({
                "label": part.label,
                "alpha": str(part.alpha),
                "alphaInteger": part.alpha.is_integer,
                "residual": res / norm if norm else mpmath.inf,
            })
    return rows


def eigen_spectrum(sm: SpectralMatrix) -> list[mpmath.mpc]:
    """All eigenvalues of M, sorted by real then imaginary part."""
    with mpmath.workprec(sm.precision_bits):
        try:
            vals = mpmath.eig(sm.m, left=False, right=False)
        except Exception as exc:  # mpmath signals non-convergence with bare exceptions
            raise ConvergenceFailure(str(exc)) from exc
        vals = [mpmath.mpc(v) for v in vals]
        return sorted(vals, key=lambda z: (z.real, z.imag))


def match_spectrum(
    computed: Sequence[mpmath.mpc], predicted: Sequence[GaussianRational], precision_bits: int = DEFAULT_PRECISION
) -> mpmath.mpf:
    """Greedy multiset matching; largest deviation relative to max(1, |alpha|)."""
    if len(computed) != len(predicted):
        return mpmath.inf
    with mpmath.workprec(precision_bits):
        return _match(computed, predicted)


def _match(computed: Sequence[mpmath.mpc], predicted: Sequence[GaussianRational]) -> mpmath.mpf:
    remaining = list(computed)
    worst = mpmath.mpf(0)
    for alpha in sorted(predicted, key=lambda g: (g.re, g.im)):
        a = to_mpc(alpha)
        k = min(range(len(remaining)), key=lambda i: abs(remaining[i] - a))
        worst = max(worst, abs(remaining.pop(k) - a) / max(1, abs(a)))
    return worst


def integrality_defect(values: Sequence[mpmath.mpc], precision_bits: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Largest distance of any value from the nearest real integer."""
    with mpmath.workprec(precision_bits):
        return max(abs(v - mpmath.nint(mpmath.re(v))) for v in values)


def basis_determinant(polys: Sequence[Polynomial]) -> GaussianRational:
    """Exact determinant of the coefficient matrix of k polynomials of degree < k."""
    k = len(polys)
    rows = []
    for p in polys:
        if p.degree >= k:
            raise ValueError(f"polynomial of degree {p.degree} does not fit a {k}-dimensional space")
        cs = list(p.coeffs) + [GaussianRational(0)] * (k - len(p.coeffs))
        rows.append([GaussianRational(0) + c for c in cs])
    det = GaussianRational(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col]), None)
        if pivot is None:
            return GaussianRational(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        piv = rows[col][col]
        det = det * piv
        inv = piv.inverse()
        for r in range(col + 1, k):
            f = rows[r][col] * inv
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


# -- Gaussian quadrature for the classical families -----------------------

def _rising(x: Fraction | GaussianRational, k: int) -> Any:
    out: Any = GaussianRational(1)
    for i in range(k):
        out = out * (x + i)
    return out


def moment_ratio(family: Family, k: int) -> GaussianRational:
    """Normalized moment mu_k / mu_0 of the classical weight."""
    if family.kind == "H":
        if k % 2:
            return GaussianRational(0)
        out = Fraction(1)
        for j in range(1, k, 2):
            out *= j
        return GaussianRational(out / 2 ** (k // 2))
    if family.kind == "L":
        return _rising(family.alpha + 1, k)
    a, b = family.alpha, family.beta
    total = GaussianRational(0)
    for j in range(k + 1):
        ratio = _rising(b + 1, j) / _rising(a + b + 2, j)
        total = total + ratio * (comb(k, j) * 2 ** j * (-1) ** (k - j))
    return total


def quadrature_moment_check(
    deformed: DeformedFamily, N: int, zero_set: ZeroSet, christoffel: ChristoffelSet, tolerance: Any = ORTHOGONALITY_TOL
) -> dict[str, Any]:
    """Moment ratios sum lambda eta^k / sum lambda against the exact weight moments.

    k = 0..2N-1 must match; k = 2N is reported as a negative control that
    must fail.
    """
    if not deformed.spec.is_empty:
        raise UnsupportedFamily("Gaussian quadrature applies to the classical families only")
    family = deformed.family
    tol = mpmath.mpf(tolerance)
    with mpmath.workprec(zero_set.precision_bits):
        lam, zs = christoffel.lambdas, zero_set.zeros
        total = mpmath.fsum(lam)
        rows = []
        for k in range(2 * N + 1):
            got = mpmath.fsum(l * z ** k for l, z in zip(lam, zs)) / total
            exact = to_mpc(moment_ratio(family, k))
            err = abs(got - exact) / max(1, abs(exact))
            rows.append({"k": k, "error": err, "expected": str(moment_ratio(family, k))})
        exact_ok = all(r["error"] < tol for r in rows[:-1])
        control_fails = rows[-1]["error"] >= tol
        return {"moments": rows, "exact": exact_ok, "controlMismatch": control_fails, "passed": exact_ok and control_fails}


__all__ = [
    "BOTH",
    "CLOSED_FORM",
    "ChristoffelSet",
    "DIRECT",
    "OrthogonalityReport",
    "Participant",
    "SpectralMatrix",
    "basis_determinant",
    "build_matrices",
    "christoffel_numbers",
    "eigen_spectrum",
    "eigenvector",
    "eta_dot_values",
    "integrality_defect",
    "match_spectrum",
    "moment_ratio",
    "orthogonality_sums",
    "participants",
    "predicted_eigenpairs_check",
    "quadrature_moment_check",
]
