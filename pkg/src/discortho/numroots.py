"""Arbitrary-precision zeros of exact polynomials and their classification.

Roots are found by simultaneous Aberth-Ehrlich iteration on the monic
polynomial, polished by Newton steps at doubled precision.  The zero set of
a deformed polynomial is then split into ordinary zeros (real, inside the
orthogonality domain) and extra zeros, and the conjugation involution
``n -> nbar`` is built for real parameters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import mpmath

from .classical import Family
from .errors import DegenerateInput, DegenerateParameters, PairingFailure, PrecisionExhausted
from .exactalg import Polynomial, to_mpc

# numeric carrier for zeros; the precision travels with the ZeroSet
BigComplex = mpmath.mpc

MAX_ITERATIONS = 500
MAX_PRECISION_FACTOR = 4
ORDINARY = "ordinary"
EXTRA_REAL = "extraReal"
EXTRA_PAIR = "extraComplexPair"
EXTRA_COMPLEX = "extraComplex"


def _coefficients(p: Polynomial) -> list[mpmath.mpc]:
    return [to_mpc(c) for c in p.coeffs]


def _horner_with_derivative(cs: Sequence[mpmath.mpc], z: mpmath.mpc) -> tuple[mpmath.mpc, mpmath.mpc]:
    val = cs[-1]
    der = mpmath.mpc(0)
    for c in reversed(cs[:-1]):
        der = der * z + val
        val = val * z + c
    return val, der


def _relative_residual(cs: Sequence[mpmath.mpc], z: mpmath.mpc) -> mpmath.mpf:
    val, _ = _horner_with_derivative(cs, z)
    r = abs(z)
    scale = mpmath.mpf(0)
    for c in reversed(cs):
        scale = scale * r + abs(c)
    return abs(val) / scale if scale else mpmath.mpf(0)


def _aberth(cs: list[mpmath.mpc], wp: int) -> list[mpmath.mpc]:
    n = len(cs) - 1
    lead = cs[-1]
    monic = [c / lead for c in cs]
    radius = 1 + max(abs(c) for c in monic[:-1])
    # the angular offset avoids starting symmetric about the real axis
    offset = mpmath.mpf("0.4")
    zs = [radius * mpmath.expj(2 * mpmath.pi * k / n + offset) for k in range(n)]
    eps = mpmath.ldexp(1, -wp + 8)
    for _ in range(MAX_ITERATIONS):
        largest = mpmath.mpf(0)
        for k in range(n):
            val, der = _horner_with_derivative(monic, zs[k])
            if val == 0:
                continue
            ratio = val / der if der != 0 else mpmath.mpc(radius)
            off = mpmath.fsum(1 / (zs[k] - zs[j]) for j in range(n) if j != k and zs[k] != zs[j])
            step = ratio / (1 - ratio * off)
            zs[k] -= step
            largest = max(largest, abs(step) / max(1, abs(zs[k])))
        if largest < eps:
            break
    return zs


def _newton_polish(cs: list[mpmath.mpc], z: mpmath.mpc, steps: int = 8) -> mpmath.mpc:
    for _ in range(steps):
        val, der = _horner_with_derivative(cs, z)
        if der == 0 or val == 0:
            break
        step = val / der
        z -= step
        if abs(step) <= abs(z) * mpmath.eps:
            break
    return z


def _sort_key(z: mpmath.mpc, bits: int) -> tuple:
    # rounding keeps conjugate partners adjacent and the order stable
    q = mpmath.ldexp(1, bits)
    return (int(mpmath.nint(z.real * q)), int(mpmath.nint(z.imag * q)))


def find_roots(p: Polynomial, precision_bits: int = 256) -> list[mpmath.mpc]:
    """All deg(p) complex roots, each with relative residual below 2^(-p/2).

    Coefficients are rounded at twice the requested precision.  On failure
    the working precision is doubled, up to four times the request.
    """
    if p.is_zero:
        raise DegenerateInput("the zero polynomial has no well-defined roots")
    if p.degree < 1:
        raise DegenerateInput("a constant polynomial has no roots")
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    bound = mpmath.ldexp(1, -precision_bits // 2)
    wp = 2 * precision_bits
    while wp <= 2 * MAX_PRECISION_FACTOR * precision_bits:
        with mpmath.workprec(wp):
            cs = _coefficients(p)
            zs = _aberth(cs, wp)
            with mpmath.workprec(2 * wp):
                cs2 = _coefficients(p)
                zs = [_newton_polish(cs2, +z) for z in zs]
                worst = max(_relative_residual(cs2, z) for z in zs)
            if worst < bound and _distinct(zs):
                with mpmath.workprec(precision_bits):
                    out = [+z for z in zs]
                return sorted(out, key=lambda z: _sort_key(z, precision_bits // 4))
        wp *= 2
    raise PrecisionExhausted(f"root polishing stalled for degree {p.degree} at {wp // 2} bits")


def _distinct(zs: Sequence[mpmath.mpc]) -> bool:
    # two iterates collapsing onto one root leave another root unfound
    return all(zs[i] != zs[j] for i in range(len(zs)) for j in range(i))


def domain_of(family: Family) -> tuple[Any, Any]:
    if family.kind == "H":
        return (-mpmath.inf, mpmath.inf)
    if family.kind == "L":
        return (mpmath.mpf(0), mpmath.inf)
    return (mpmath.mpf(-1), mpmath.mpf(1))


@dataclass
class ZeroSet:
    zeros: list[mpmath.mpc]
    pairing: list[int] | None
    classification: list[str]
    source_degree: int
    residual_bound: mpmath.mpf
    precision_bits: int
    warnings: list[str] = field(default_factory=list)

    @property
    def ordinary_count(self) -> int:
        return self.classification.count(ORDINARY)

    @property
    def ordinary_indices(self) -> list[int]:
        return [k for k, tag in enumerate(self.classification) if tag == ORDINARY]

    def __len__(self) -> int:
        return len(self.zeros)

    def to_dict(self, digits: int | None = None) -> dict[str, Any]:
        if digits is None:
            digits = max(15, int(self.precision_bits * 0.30103) - 5)
        return {
            "precisionBits": self.precision_bits,
            "digits": digits,
            "zeros": [{"re": mpmath.nstr(z.real, digits), "im": mpmath.nstr(z.imag, digits)} for z in self.zeros],
            "pairing": self.pairing,
            "classification": self.classification,
            "ordinaryCount": self.ordinary_count,
            "sourceDegree": self.source_degree,
            "warnings": self.warnings,
        }


def _pair_conjugates(zs: list[mpmath.mpc], tol: mpmath.mpf) -> list[int]:
    n = len(zs)
    pairing: list[int | None] = [None] * n
    for k in range(n):
        if pairing[k] is not None:
            continue
        if abs(zs[k].imag) <= tol:
            pairing[k] = k
            continue
        target = mpmath.conj(zs[k])
        best, best_dist = None, None
        for m in range(n):
            if m == k or pairing[m] is not None:
                continue
            d = abs(zs[m] - target)
            if best_dist is None or d < best_dist:
                best, best_dist = m, d
        if best is None or best_dist > tol:
            raise PairingFailure(f"zero {mpmath.nstr(zs[k], 10)} has no conjugate partner within {mpmath.nstr(tol, 5)}")
        pairing[k], pairing[best] = best, k
    return [int(m) for m in pairing]  # type: ignore[arg-type]


def analyze_zeros(
    roots: Sequence[mpmath.mpc],
    family: Family,
    parameters_real: bool = True,
    precision_bits: int = 256,
    coefficient_scale: Any = None,
) -> ZeroSet:
    """Pair, clean and classify zeros.

    For real parameters the conjugation involution is built greedily and the
    roots are symmetrised so that paired zeros are exact conjugates and real
    zeros have zero imaginary part.  For complex parameters no pairing is
    attempted and only numerically real zeros can be ordinary.
    """
    with mpmath.workprec(precision_bits):
        zs = [mpmath.mpc(r) for r in roots]
        scale = max([mpmath.mpf(1)] + [abs(z) for z in zs])
        if coefficient_scale is not None:
            scale = max(scale, mpmath.mpf(coefficient_scale))
        pair_tol = mpmath.ldexp(1, -precision_bits // 4) * scale
        boundary_tol = mpmath.ldexp(1, -precision_bits // 2)
        pairing = None
        if parameters_real:
            pairing = _pair_conjugates(zs, pair_tol)
            for k, m in enumerate(pairing):
                if m == k:
                    zs[k] = mpmath.mpc(zs[k].real, 0)
                elif k < m:
                    z = (zs[k] + mpmath.conj(zs[m])) / 2
                    zs[k], zs[m] = z, mpmath.conj(z)
        lo, hi = domain_of(family)
        tags, warnings = [], []
        for k, z in enumerate(zs):
            real = (pairing[k] == k) if pairing is not None else abs(z.imag) <= pair_tol
            if real:
                x = z.real
                for edge in (lo, hi):
                    if mpmath.isfinite(edge) and abs(x - edge) <= boundary_tol:
                        warnings.append(f"zero {k} lies within {mpmath.nstr(boundary_tol, 3)} of the boundary {edge}")
                inside = lo + boundary_tol < x < hi - boundary_tol if mpmath.isfinite(hi) else x > lo + boundary_tol
                if family.kind == "H":
                    inside = True
                tags.append(ORDINARY if inside else EXTRA_REAL)
            else:
                tags.append(EXTRA_PAIR if pairing is not None else EXTRA_COMPLEX)
        sep_tol = mpmath.ldexp(1, -precision_bits // 4) * scale
        for i in range(len(zs)):
            for j in range(i):
                if abs(zs[i] - zs[j]) <= sep_tol:
                    raise DegenerateParameters(f"zeros {j} and {i} are not separated (multiple root?)")
        return ZeroSet(
            zeros=zs,
            pairing=pairing,
            classification=tags,
            source_degree=len(zs),
            residual_bound=mpmath.ldexp(1, -precision_bits // 2),
            precision_bits=precision_bits,
            warnings=warnings,
        )


def vieta_check(p: Polynomial, roots: Sequence[mpmath.mpc], precision_bits: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Relative errors of the root sum and product against the coefficients."""
    with mpmath.workprec(2 * precision_bits):
        cs = _coefficients(p)
        n = len(cs) - 1
        s_exact = -cs[n - 1] / cs[n]
        prod_exact = (-1) ** n * cs[0] / cs[n]
        s = mpmath.fsum(roots)
        prod = mpmath.fprod(roots)
        scale_s = max(1, mpmath.fsum(abs(r) for r in roots))
        scale_p = max(1, mpmath.fprod(abs(r) for r in roots))
        return abs(s - s_exact) / scale_s, abs(prod - prod_exact) / scale_p


__all__ = [
    "BigComplex",
    "ZeroSet",
    "analyze_zeros",
    "domain_of",
    "find_roots",
    "vieta_check",
]
