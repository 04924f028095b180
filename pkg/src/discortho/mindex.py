"""Multi-indices, degree offsets and the extra lower-degree polynomials.

A multi-indexed spec carries two ordered seed-degree lists (type I and type
II virtual states); a Krein-Adler spec carries one list of eigenstate
degrees.  Derived specs (the "extras") are obtained by replacing one entry
with a lower unused degree, or, for type III, by deleting one entry of each
list; they keep the positional order of the original list and may contain 0.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any

from .classical import Family, energy, virtual_energy
from .errors import InvalidSpec, MismatchedExtra, UnsupportedRange
from .exactalg import GaussianRational

MI = "MI"
KA = "KA"


class ParameterBoundWarning(UserWarning):
    """Parameters lie outside the range where the deformed potential is regular."""


@dataclass(frozen=True)
class MultiIndexSpec:
    mode: str
    family: Family
    d_I: tuple[int, ...] = ()
    d_II: tuple[int, ...] = ()
    d_KA: tuple[int, ...] = ()
    derived: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        for name in ("d_I", "d_II", "d_KA"):
            object.__setattr__(self, name, tuple(int(d) for d in getattr(self, name)))
        if self.mode not in (MI, KA):
            raise InvalidSpec(f"mode must be {MI!r} or {KA!r}")
        if self.mode == MI:
            if self.d_KA:
                raise InvalidSpec("multi-indexed spec cannot carry a Krein-Adler list")
            if self.family.kind == "H":
                raise InvalidSpec("Hermite has no virtual-state seeds; use Krein-Adler mode")
        elif self.d_I or self.d_II:
            raise InvalidSpec("Krein-Adler spec carries only d_KA")
        for lst in self.lists:
            if len(set(lst)) != len(lst) or any(d < 0 for d in lst):
                raise InvalidSpec(f"degrees must be distinct and nonnegative: {lst}")
            if not self.derived:
                if any(d < 1 for d in lst):
                    raise InvalidSpec(f"degrees must be positive: {lst}")
                if any(a >= b for a, b in zip(lst, lst[1:])):
                    raise InvalidSpec(f"degrees must be strictly increasing: {lst}")
        if self.mode == KA and not self.derived and not krein_adler_condition(self.d_KA):
            raise InvalidSpec(f"{self.d_KA} violates the Krein-Adler conditions")

    @classmethod
    def multi_indexed(cls, family: Family, d_I: Any = (), d_II: Any = ()) -> "MultiIndexSpec":
        return cls(MI, family, tuple(d_I), tuple(d_II))

    @classmethod
    def krein_adler(cls, family: Family, d_KA: Any = ()) -> "MultiIndexSpec":
        return cls(KA, family, d_KA=tuple(d_KA))

    @property
    def lists(self) -> tuple[tuple[int, ...], ...]:
        return (self.d_I, self.d_II) if self.mode == MI else (self.d_KA,)

    @property
    def M(self) -> int:
        return len(self.d_I) if self.mode == MI else len(self.d_KA)

    @property
    def N(self) -> int:
        return len(self.d_II) if self.mode == MI else 0

    @property
    def is_empty(self) -> bool:
        return not any(self.lists)

    @property
    def ka_mode(self) -> bool:
        return self.mode == KA

    def with_family(self, family: Family) -> "MultiIndexSpec":
        return MultiIndexSpec(self.mode, family, self.d_I, self.d_II, self.d_KA, self.derived)

    def to_dict(self) -> dict[str, Any]:
        if self.mode == MI:
            return {"mode": MI, "dI": list(self.d_I), "dII": list(self.d_II)}
        return {"mode": KA, "dKA": list(self.d_KA)}

    def key(self) -> tuple:
        return (self.mode, self.family, self.d_I, self.d_II, self.d_KA)


def krein_adler_condition(degrees: tuple[int, ...]) -> bool:
    """prod_j (m - d_j) >= 0 for every m >= 0; checking m <= max(d) suffices."""
    top = max(degrees, default=0)
    for m in range(top + 1):
        prod = 1
        for d in degrees:
            prod *= m - d
        if prod < 0:
            return False
    return True


def check_parameter_bounds(spec: MultiIndexSpec, strict: bool = False) -> list[str]:
    """Regularity bounds on g, h for multi-indexed specs.

    Violations only warn unless ``strict``; the orthogonality identities do not
    depend on them.  Complex parameters are not compared.
    """
    fam = spec.family
    problems: list[str] = []
    if spec.mode != MI or fam.kind == "H" or not fam.parameters_real:
        return problems
    M, N = spec.M, spec.N
    g = fam.g.re
    if fam.kind == "L":
        bound = max([N + 1.5] + [d + 0.5 for d in spec.d_II])
        if not g > bound:
            problems.append(f"g={fam.g} does not exceed {bound}")
    else:
        h = fam.h.re
        gb = max([N + 2] + [d + 0.5 for d in spec.d_II])
        hb = max([M + 2] + [d + 0.5 for d in spec.d_I])
        if not g > gb:
            problems.append(f"g={fam.g} does not exceed {gb}")
        if not h > hb:
            problems.append(f"h={fam.h} does not exceed {hb}")
    for msg in problems:
        if strict:
            raise InvalidSpec(msg)
        warnings.warn(msg, ParameterBoundWarning, stacklevel=2)
    return problems


def wronskian_degree(degrees: tuple[int, ...]) -> int:
    """Generic degree of the Wronskian of polynomials with distinct degrees."""
    k = len(degrees)
    return sum(degrees) - k * (k - 1) // 2


def ell(spec: MultiIndexSpec) -> int:
    """Degree offset: deg P_{D,n} = ell + n."""
    if spec.mode == MI:
        M, N = spec.M, spec.N
        return wronskian_degree(spec.d_I) + wronskian_degree(spec.d_II) + M * N
    M = spec.M
    return sum(spec.d_KA) - M * (M + 1) // 2


def denominator_degree(spec: MultiIndexSpec) -> int:
    """Generic degree of the denominator polynomial."""
    if spec.mode == MI:
        return ell(spec)
    return wronskian_degree(spec.d_KA)


@dataclass(frozen=True)
class ExtraIndex:
    derived: MultiIndexSpec
    extra_type: str
    removed: tuple[int, ...]
    added: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "extraType": self.extra_type,
            "derived": self.derived.to_dict(),
            "removed": list(self.removed),
            "added": list(self.added),
        }

    @property
    def label(self) -> str:
        if self.extra_type == "III":
            return f"III(-{self.removed[0]},-{self.removed[1]})"
        return f"{self.extra_type}({self.removed[0]}->{self.added[0]})"


def _replacements(degrees: tuple[int, ...]):
    top = max(degrees)
    empty = [e for e in range(top + 1) if e not in degrees]
    for j, d in enumerate(degrees):
        for eps in (e for e in empty if e < d):
            yield j, d, eps


def _derive(spec: MultiIndexSpec, **lists: tuple[int, ...]) -> MultiIndexSpec:
    base = {"d_I": spec.d_I, "d_II": spec.d_II, "d_KA": spec.d_KA}
    base.update(lists)
    return MultiIndexSpec(spec.mode, spec.family, derived=True, **base)


def enumerate_extras(spec: MultiIndexSpec, N: int) -> list[ExtraIndex]:
    """All extra multi-indices in canonical order: I by (j,k), II by (j,k), III by (j,k)."""
    if N < 1:
        raise UnsupportedRange("N must be a positive integer")
    out: list[ExtraIndex] = []
    if spec.mode == KA:
        if spec.d_KA and N <= max(spec.d_KA):
            raise UnsupportedRange(f"Krein-Adler extras need N > max(D) = {max(spec.d_KA)}")
        if spec.d_KA:
            for j, d, eps in _replacements(spec.d_KA):
                new = spec.d_KA[:j] + (eps,) + spec.d_KA[j + 1:]
                out.append(ExtraIndex(_derive(spec, d_KA=new), "KA", (d,), (eps,)))
        return out
    for name, tag in (("d_I", "I"), ("d_II", "II")):
        lst = getattr(spec, name)
        if not lst:
            continue
        for j, d, eps in _replacements(lst):
            new = lst[:j] + (eps,) + lst[j + 1:]
            out.append(ExtraIndex(_derive(spec, **{name: new}), tag, (d,), (eps,)))
    for j, dI in enumerate(spec.d_I):
        for k, dII in enumerate(spec.d_II):
            derived = _derive(
                spec,
                d_I=spec.d_I[:j] + spec.d_I[j + 1:],
                d_II=spec.d_II[:k] + spec.d_II[k + 1:],
            )
            out.append(ExtraIndex(derived, "III", (dI, dII), ()))
    return out


def _require_member(spec: MultiIndexSpec, extra: ExtraIndex, N: int) -> None:
    if extra not in enumerate_extras(spec, N):
        raise MismatchedExtra(f"{extra.label} is not an extra of {spec.to_dict()} at N={N}")


def predicted_eigenvalue(spec: MultiIndexSpec, extra: ExtraIndex, N: int) -> GaussianRational:
    """Value E~(D') with Xi_D (H_D P_{D',N} - E~ P_{D',N}) proportional to P_{D,N} Xi_{D'}."""
    _require_member(spec, extra, N)
    fam = spec.family
    EN = energy(fam, N)
    t = extra.extra_type
    if t == "KA":
        return energy(fam, extra.removed[0]) + energy(fam, extra.added[0]) - EN
    if t in ("I", "II"):
        return virtual_energy(fam, t, extra.removed[0]) + virtual_energy(fam, t, extra.added[0]) - EN
    return virtual_energy(fam, "I", extra.removed[0]) + virtual_energy(fam, "II", extra.removed[1]) - EN


def predicted_matrix_eigenvalue(spec: MultiIndexSpec, extra: ExtraIndex, N: int) -> GaussianRational:
    """Eigenvalue of the symmetric matrix M belonging to the extra: E(N) - E~(D')."""
    return energy(spec.family, N) - predicted_eigenvalue(spec, extra, N)


def predicted_coefficient(spec: MultiIndexSpec, extra: ExtraIndex, N: int, direction: str = "forward") -> GaussianRational:
    """Right-hand-side coefficient of the basic equation in either direction."""
    if direction not in ("forward", "exchanged"):
        raise ValueError("direction must be 'forward' or 'exchanged'")
    _require_member(spec, extra, N)
    fam = spec.family
    EN = energy(fam, N)
    t = extra.extra_type
    forward = direction == "forward"
    if t == "KA":
        v = extra.added[0] if forward else extra.removed[0]
        return (EN - energy(fam, v)) * 2
    if t in ("I", "II"):
        v = extra.added[0] if forward else extra.removed[0]
        return (EN - virtual_energy(fam, t, v)) * 2
    if forward:
        return GaussianRational(-8 if fam.kind == "L" else -32)
    gamma = 2 if fam.kind == "L" else 8
    a = EN - virtual_energy(fam, "I", extra.removed[0])
    b = EN - virtual_energy(fam, "II", extra.removed[1])
    return -(a * b) / gamma
