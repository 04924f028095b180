"""Classical Hermite, Laguerre and Jacobi data.

Polynomials, energies, virtual-state seed functions and the coefficient
functions ``c1``, ``c2`` of the second-order operators.  Parameters are
Gaussian rationals ``g`` (Laguerre, Jacobi) and ``h`` (Jacobi); the
polynomial parameters are always derived as ``alpha = g - 1/2`` and
``beta = h - 1/2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .errors import InvalidSpec, UnsupportedFamily
from .exactalg import ETA, ZERO, GaussianRational, Polynomial, QuasiRationalFunction, as_gaussian

HALF = Fraction(1, 2)
KINDS = ("H", "L", "J")


@dataclass(frozen=True)
class Family:
    kind: str
    g: GaussianRational | None = None
    h: GaussianRational | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown family {self.kind!r}")
        if self.g is not None:
            object.__setattr__(self, "g", as_gaussian(self.g))
        if self.h is not None:
            object.__setattr__(self, "h", as_gaussian(self.h))
        need_g = self.kind in ("L", "J")
        need_h = self.kind == "J"
        if need_g != (self.g is not None) or need_h != (self.h is not None):
            raise InvalidSpec(f"family {self.kind} takes g={need_g}, h={need_h}")

    @classmethod
    def hermite(cls) -> "Family":
        return cls("H")

    @classmethod
    def laguerre(cls, g: Any) -> "Family":
        return cls("L", as_gaussian(g))

    @classmethod
    def jacobi(cls, g: Any, h: Any) -> "Family":
        return cls("J", as_gaussian(g), as_gaussian(h))

    @property
    def alpha(self) -> GaussianRational:
        return self.g - HALF

    @property
    def beta(self) -> GaussianRational:
        return self.h - HALF

    @property
    def parameters_real(self) -> bool:
        return all(p is None or p.is_real for p in (self.g, self.h))

    def with_parameters(self, g: Any = None, h: Any = None) -> "Family":
        return Family(self.kind, None if g is None else as_gaussian(g), None if h is None else as_gaussian(h))

    def to_dict(self) -> dict[str, str]:
        out = {"kind": self.kind}
        if self.g is not None:
            out["g"] = str(self.g)
        if self.h is not None:
            out["h"] = str(self.h)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, str]) -> "Family":
        g, h = data.get("g"), data.get("h")
        return cls(
            data["kind"],
            None if g is None else GaussianRational.parse(str(g)),
            None if h is None else GaussianRational.parse(str(h)),
        )


# -- raw families at arbitrary parameters ----------------------------------

@lru_cache(maxsize=None)
def hermite_poly(n: int) -> Polynomial:
    """Physicists' Hermite polynomial, H_{k+1} = 2x H_k - 2k H_{k-1}."""
    prev, cur = Polynomial(), Polynomial.constant(1)
    for k in range(n):
        prev, cur = cur, ETA * cur * 2 - prev * (2 * k)
    return cur


@lru_cache(maxsize=None)
def laguerre_poly(alpha: GaussianRational, n: int) -> Polynomial:
    """Generalised Laguerre polynomial via (k+1)L_{k+1} = (2k+1+a-x)L_k - (k+a)L_{k-1}."""
    prev, cur = Polynomial(), Polynomial.constant(1)
    for k in range(n):
        nxt = cur * Polynomial([alpha + (2 * k + 1), -1]) - prev * (alpha + k)
        prev, cur = cur, nxt * Fraction(1, k + 1)
    return cur


@lru_cache(maxsize=None)
def jacobi_poly(alpha: GaussianRational, beta: GaussianRational, n: int) -> Polynomial:
    """Jacobi polynomial by the three-term recurrence.

    Falls back to the explicit binomial sum when a recurrence denominator
    vanishes, which happens only for exceptional parameter values.
    """
    if n == 0:
        return Polynomial.constant(1)
    ab = alpha + beta
    p1 = Polynomial([(alpha + 1) - (ab + 2) * HALF, (ab + 2) * HALF])
    prev, cur = Polynomial.constant(1), p1
    for k in range(1, n):
        s = ab + 2 * k
        denom = (ab + (k + 1)) * s * (2 * (k + 1))
        if not denom:
            return jacobi_poly_explicit(alpha, beta, n)
        a = (s + 1) * (s + 2) * s
        b = (s + 1) * (alpha * alpha - beta * beta)
        c = (alpha + k) * (beta + k) * (s + 2) * 2
        nxt = cur * Polynomial([b, a]) - prev * c
        prev, cur = cur, nxt * denom.inverse()
    return cur


def generalized_binomial(top: GaussianRational, k: int) -> GaussianRational:
    out = GaussianRational(1)
    for i in range(k):
        out = out * (top - i) / (i + 1)
    return out


def jacobi_poly_explicit(alpha: GaussianRational, beta: GaussianRational, n: int) -> Polynomial:
    """P_n = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k)."""
    xm = Polynomial([-HALF, HALF])
    xp = Polynomial([HALF, HALF])
    total = Polynomial()
    for k in range(n + 1):
        coef = generalized_binomial(alpha + n, n - k) * generalized_binomial(beta + n, k)
        total = total + xm ** k * xp ** (n - k) * coef
    return total


# -- family-level operations ----------------------------------------------

def classical_poly(family: Family, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if family.kind == "H":
        return hermite_poly(n)
    if family.kind == "L":
        return laguerre_poly(family.alpha, n)
    return jacobi_poly(family.alpha, family.beta, n)


def energy(family: Family, n: int, ka_mode: bool = False) -> GaussianRational:
    """Eigenvalue E(n) with vanishing ground-state energy.

    ``ka_mode`` is accepted for interface symmetry; the spectrum is the same.
    """
    if family.kind == "H":
        return GaussianRational(2 * n)
    if family.kind == "L":
        return GaussianRational(4 * n)
    return (family.g + family.h + n) * (4 * n)


def virtual_energy(family: Family, seed_type: str, v: int) -> GaussianRational:
    """Energy of the type I/II virtual state of degree ``v`` (``v = 0`` allowed)."""
    if family.kind == "H":
        raise UnsupportedFamily("Hermite has no virtual-state seeds")
    g = family.g
    if family.kind == "L":
        if seed_type == "I":
            return (g + v + HALF) * -4
        if seed_type == "II":
            return (g - v - HALF) * -4
    else:
        h = family.h
        if seed_type == "I":
            return (g + v + HALF) * (h - v - HALF) * -4
        if seed_type == "II":
            return (g - v - HALF) * (h + v + HALF) * -4
    raise ValueError(f"seed type must be 'I' or 'II', got {seed_type!r}")


def seed_function(family: Family, seed_type: str, v: int) -> QuasiRationalFunction:
    """Virtual-state polynomial part mu_v with its elementary prefactor."""
    if family.kind == "H":
        raise UnsupportedFamily("Hermite has no virtual-state seeds")
    if seed_type not in ("I", "II"):
        raise ValueError(f"seed type must be 'I' or 'II', got {seed_type!r}")
    g = family.g
    if family.kind == "L":
        if seed_type == "I":
            poly = laguerre_poly(g - HALF, v).compose(Polynomial([0, -1]))
            return QuasiRationalFunction(poly, exp_coeff=1)
        poly = laguerre_poly(HALF - g, v)
        return QuasiRationalFunction(poly, pow_eta=HALF - g)
    h = family.h
    if seed_type == "I":
        poly = jacobi_poly(g - HALF, HALF - h, v)
        return QuasiRationalFunction(poly, pow_one_plus=HALF - h)
    poly = jacobi_poly(HALF - g, h - HALF, v)
    return QuasiRationalFunction(poly, pow_one_minus=HALF - g)


@dataclass(frozen=True)
class StructureData:
    """Coefficient functions of the operator -4(c2 d^2 + f1 d + f2).

    ``c1`` is taken at the shifted parameters, ``c1_shifted`` one unit below
    them, and ``ka_constant`` is the extra constant term of ``f2`` for
    Krein-Adler systems (zero otherwise).
    """

    c1: Polynomial
    c1_shifted: Polynomial
    c2: Polynomial
    eta_dot_sq: Polynomial
    ka_constant: GaussianRational
    shifted_parameters: tuple[GaussianRational, ...]


def _c1(kind: str, g: GaussianRational, h: GaussianRational | None) -> Polynomial:
    if kind == "L":
        return Polynomial([g + HALF, -1])
    return Polynomial([h - g, -(g + h + 1)])


def structure_functions(family: Family, M: int, N: int, ka_mode: bool = False) -> StructureData:
    if ka_mode and N:
        raise ValueError("Krein-Adler systems have no type II seeds (N must be 0)")
    if family.kind == "H":
        if not ka_mode:
            raise UnsupportedFamily("Hermite participates only in Krein-Adler mode")
        c1 = Polynomial([0, Fraction(-1, 2)])
        c2 = Polynomial.constant(Fraction(1, 4))
        return StructureData(c1, c1, c2, c2 * 4, GaussianRational(Fraction(-M, 2)), ())
    c2 = ETA if family.kind == "L" else Polynomial([1, 0, -1])
    g = family.g + (M - N)
    if family.kind == "L":
        h = None
    elif ka_mode:
        # psi carries eta'(x)^M ~ ((1-eta)(1+eta))^(M/2), so both parameters rise
        h = family.h + M
    else:
        h = family.h - (M - N)
    c1 = _c1(family.kind, g, h)
    c1_shifted = _c1(family.kind, g - 1, None if h is None else h - 1)
    if not ka_mode:
        const = ZERO
    elif family.kind == "L":
        const = GaussianRational(-M)
    else:
        const = (family.g + family.h + M) * -M
    shifted = (g,) if h is None else (g, h)
    return StructureData(c1, c1_shifted, c2, c2 * 4, const, shifted)
