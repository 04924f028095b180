"""Exact arithmetic over the Gaussian rationals Q(i).

Dense univariate polynomials, reduced rational functions, quasi-rational
functions (an elementary prefactor times a rational function) and Wronskian
determinants.  Polynomials are generic in their coefficient kind: exact
``GaussianRational`` coefficients give exact results, mpmath ``mpc``
coefficients give big-float results.  Division, gcd and reduction are only
meaningful for exact coefficients.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import mpmath

from .errors import NonExactDivision, NonPolynomialResult, SizeCapExceeded

WRONSKIAN_SIZE_CAP = 8


def _gr(re_: Fraction, im_: Fraction) -> "GaussianRational":
    obj = object.__new__(GaussianRational)
    obj.re = re_
    obj.im = im_
    return obj


class GaussianRational:
    """Number ``re + im*i`` with both parts exact rationals.

    Instances are treated as immutable.  Mixed arithmetic with ``int`` and
    ``Fraction`` stays exact; with mpmath numbers the result is an mpmath
    number at the current precision.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0) -> None:
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine a GaussianRational real part with im")
            self.re, self.im = re.re, re.im
            return
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- construction -------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"p/q"``, ``"p/q+r/s*i"``, ``"7/2+1i"``, ``"-i"`` and similar."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty number")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
        # split at the last sign that is not an exponent/leading sign
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            real, imag = "0", body
        else:
            real, imag = body[:cut], body[cut:]
        if imag in ("", "+"):
            imag = "1"
        elif imag == "-":
            imag = "-1"
        return cls(Fraction(real), Fraction(imag))

    # -- predicates ---------------------------------------------------
    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Any) -> "GaussianRational":
        if type(other) is GaussianRational:
            return _gr(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return _gr(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return _gr(-self.re, -self.im)

    def __sub__(self, other: Any) -> "GaussianRational":
        if type(other) is GaussianRational:
            return _gr(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return _gr(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other: Any) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return _gr(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other: Any) -> "GaussianRational":
        if type(other) is GaussianRational:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return _gr(a * c, b)
            return _gr(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return _gr(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if not self.im:
            return _gr(1 / self.re, self.im)
        n = self.re * self.re + self.im * self.im
        return _gr(self.re / n, -self.im / n)

    def __truediv__(self, other: Any) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return _gr(self.re / other, self.im / other)
        if type(other) is GaussianRational:
            if not other.im:
                return _gr(self.re / other.re, self.im / other.re)
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int) -> "GaussianRational":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return _gr(self.re, -self.im)

    # -- comparison / hashing ------------------------------------------
    def __eq__(self, other: Any) -> bool:
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- conversion -----------------------------------------------------
    def to_mpc(self) -> mpmath.mpc:
        """Round to an mpmath complex at the current mpmath precision."""
        return mpmath.mpc(_fraction_to_mpf(self.re), _fraction_to_mpf(self.im))

    def _mpmath_(self, prec: int, rounding: str) -> mpmath.mpc:
        # lets mpmath operands absorb exact coefficients in mixed arithmetic
        return self.to_mpc()

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        real = "" if self.re == 0 else str(self.re)
        return f"{real}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"


def _fraction_to_mpf(q: Fraction) -> mpmath.mpf:
    if q.denominator == 1:
        return mpmath.mpf(q.numerator)
    return mpmath.mpf(q.numerator) / q.denominator


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def as_gaussian(x: Any) -> GaussianRational:
    if type(x) is GaussianRational:
        return x
    if isinstance(x, str):
        return GaussianRational.parse(x)
    return GaussianRational(x)


def _as_coeff(c: Any) -> Any:
    if type(c) is GaussianRational:
        return c
    if isinstance(c, (int, Fraction)):
        return GaussianRational(c)
    return c


def to_mpc(c: Any) -> mpmath.mpc:
    if type(c) is GaussianRational:
        return c.to_mpc()
    if isinstance(c, Fraction):
        return mpmath.mpc(_fraction_to_mpf(c))
    return mpmath.mpc(c)


class Polynomial:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``eta**k``.

    The coefficient tuple is trimmed so the leading coefficient is nonzero;
    the zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()) -> None:
        cs = [_as_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> "Polynomial":
        while cs and cs[-1] == 0:
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def constant(cls, c: Any) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Any]) -> "Polynomial":
        """Monic product of ``(eta - r)``; works for exact and big-float roots."""
        roots = list(roots)
        if not roots:
            return cls.constant(1)
        one = roots[0] * 0 + 1
        cs: list = [one]
        for r in roots:
            new = [one * 0] * (len(cs) + 1)
            for k, c in enumerate(cs):
                new[k + 1] = new[k + 1] + c
                new[k] = new[k] - r * c
            cs = new
        return cls._raw(cs)

    # -- structure ------------------------------------------------------
    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Any:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_exact(self) -> bool:
        return all(type(c) is GaussianRational for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] = cs[k] + c
        return Polynomial._raw(cs)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = GaussianRational(other)
            return Polynomial._raw([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        cs: list = [a[-1] * 0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                cs[i + j] = cs[i + j] + x * y
        return Polynomial._raw(cs)

    def __rmul__(self, other: Any) -> "Polynomial":
        return self * other

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: Any) -> "Polynomial":
        return self * c

    def __call__(self, z: Any) -> Any:
        """Horner evaluation in the numeric kind of ``z`` and the coefficients."""
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        p = self
        for _ in range(order):
            p = Polynomial._raw([c * k for k, c in enumerate(p.coeffs) if k])
        return p

    def compose(self, q: "Polynomial") -> "Polynomial":
        """Return ``self(q(eta))``."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * q + Polynomial.constant(c)
        return acc

    def map(self, fn: Callable[[Any], Any]) -> "Polynomial":
        return Polynomial._raw([fn(c) for c in self.coeffs])

    def to_mpc(self) -> "Polynomial":
        """Coefficients rounded to mpmath complex at the current precision."""
        return self.map(to_mpc)

    def conjugate(self) -> "Polynomial":
        return self.map(lambda c: c.conjugate())

    # -- exact division ----------------------------------------------
    def divmod(self, q: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if q.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(q.coeffs) - 1
        lead_inv = q.coeffs[-1].inverse() if type(q.coeffs[-1]) is GaussianRational else 1 / q.coeffs[-1]
        if len(rem) <= dq:
            return Polynomial(), self
        quot: list = [q.coeffs[-1] * 0] * (len(rem) - dq)
        qc = q.coeffs
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c * lead_inv
            quot[k - dq] = f
            for j in range(dq + 1):
                rem[k - dq + j] = rem[k - dq + j] - f * qc[j]
        return Polynomial._raw(quot), Polynomial._raw(rem[:dq])

    def __floordiv__(self, q: "Polynomial") -> "Polynomial":
        return exact_divide(self, q)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        inv = self.leading.inverse()
        return Polynomial._raw([c * inv for c in self.coeffs])

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"({c})" + ("" if k == 0 else "*x" if k == 1 else f"*x^{k}"))
        return " + ".join(terms)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls(GaussianRational.parse(s) for s in items)


ETA = Polynomial([0, 1])


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return ``r`` with ``p == q*r``; raise NonExactDivision otherwise."""
    quot, rem = p.divmod(q)
    if not rem.is_zero:
        raise NonExactDivision(f"remainder of degree {rem.degree} in exact division")
    return quot


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q(i); the gcd of two zero polynomials is 0."""
    a, b = a.monic(), b.monic()
    while not b.is_zero:
        a, b = b, a.divmod(b)[1].monic()
    return a


# Operation-level names used across the package.
def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def poly_exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    return exact_divide(p, q)


def poly_eval(p: Polynomial, z: Any, precision_bits: int | None = None) -> Any:
    """Evaluate ``p`` at ``z``.

    Exact ``z`` (int, Fraction, GaussianRational) with exact coefficients gives
    an exact value.  Big-float ``z`` requires ``precision_bits``; the
    coefficients are rounded and Horner runs at that precision.
    """
    if isinstance(z, (int, Fraction, GaussianRational)) and p.is_exact:
        return p(as_gaussian(z))
    if precision_bits is None:
        raise ValueError("big-float evaluation needs precision_bits")
    with mpmath.workprec(precision_bits):
        zz = to_mpc(z)
        acc = mpmath.mpc(0)
        for c in reversed(p.coeffs):
            acc = acc * zz + to_mpc(c)
        return +acc


class RationalFunction:
    """Quotient ``num/den`` of exact polynomials, kept in lowest terms with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, reduce: bool = True) -> None:
        if den is None:
            den = Polynomial.constant(1)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero:
                den = Polynomial.constant(1)
            else:
                if den.degree > 0:
                    g = poly_gcd(num, den)
                    if g.degree > 0:
                        num, den = exact_divide(num, g), exact_divide(den, g)
                lead = den.leading
                if lead != 1:
                    inv = lead.inverse()
                    num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def lift(cls, x: Any) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return cls(x, reduce=False)
        return cls(Polynomial.constant(x), reduce=False)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: Any) -> "RationalFunction":
        o = RationalFunction.lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other: Any) -> "RationalFunction":
        return self + (-RationalFunction.lift(other))

    def __rsub__(self, other: Any) -> "RationalFunction":
        return RationalFunction.lift(other) - self

    def __mul__(self, other: Any) -> "RationalFunction":
        o = RationalFunction.lift(other)
        if o.den.degree == 0 and self.den.degree == 0:
            return RationalFunction(self.num * o.num, self.den * o.den, reduce=False)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RationalFunction":
        o = RationalFunction.lift(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def derivative(self) -> "RationalFunction":
        if self.den.degree == 0:
            return RationalFunction(self.num.derivative(), self.den, reduce=False)
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, z: Any) -> Any:
        return self.num(z) / self.den(z)

    def __eq__(self, other: Any) -> bool:
        o = RationalFunction.lift(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


class QuasiRationalFunction:
    """``exp(a*eta) * eta**b * ((1-eta)/2)**c * ((1+eta)/2)**d * rat(eta)``.

    The exponents are Gaussian rationals.  Halved bases keep the Jacobi seed
    functions free of irrational constants; they do not change the
    logarithmic derivative.
    """

    __slots__ = ("exp_coeff", "pow_eta", "pow_one_minus", "pow_one_plus", "rat")

    def __init__(
        self,
        rat: RationalFunction | Polynomial | Any,
        exp_coeff: Any = 0,
        pow_eta: Any = 0,
        pow_one_minus: Any = 0,
        pow_one_plus: Any = 0,
    ) -> None:
        self.rat = RationalFunction.lift(rat)
        self.exp_coeff = as_gaussian(exp_coeff)
        self.pow_eta = as_gaussian(pow_eta)
        self.pow_one_minus = as_gaussian(pow_one_minus)
        self.pow_one_plus = as_gaussian(pow_one_plus)

    @property
    def prefactor(self) -> tuple[GaussianRational, ...]:
        return (self.exp_coeff, self.pow_eta, self.pow_one_minus, self.pow_one_plus)

    def with_rat(self, rat: RationalFunction) -> "QuasiRationalFunction":
        return QuasiRationalFunction(rat, *self.prefactor)

    def log_derivative(self) -> RationalFunction:
        """Logarithmic derivative of the prefactor."""
        a, b, c, d = self.prefactor
        num = Polynomial()
        den = Polynomial.constant(1)
        # a + b/eta + c/(eta-1) + d/(eta+1) over the common denominator
        factors = []
        if b:
            factors.append((b, ETA))
        if c:
            factors.append((c, Polynomial([-1, 1])))
        if d:
            factors.append((d, Polynomial([1, 1])))
        for _, f in factors:
            den = den * f
        if a:
            num = num + den * a
        for coef, f in factors:
            num = num + exact_divide(den, f) * coef
        return RationalFunction(num, den)

    def derivative(self) -> "QuasiRationalFunction":
        return self.with_rat(self.rat.derivative() + self.log_derivative() * self.rat)

    def __mul__(self, other: Any) -> "QuasiRationalFunction":
        if isinstance(other, QuasiRationalFunction):
            return QuasiRationalFunction(
                self.rat * other.rat,
                *(x + y for x, y in zip(self.prefactor, other.prefactor)),
            )
        return self.with_rat(self.rat * RationalFunction.lift(other))

    __rmul__ = __mul__

    def __neg__(self) -> "QuasiRationalFunction":
        return self.with_rat(-self.rat)

    @property
    def is_zero(self) -> bool:
        return self.rat.is_zero

    def to_polynomial(self) -> Polynomial:
        """Expand into a polynomial; NonPolynomialResult if that is impossible."""
        a, b, c, d = self.prefactor
        if self.rat.is_zero:
            return Polynomial()
        if a:
            raise NonPolynomialResult(f"exponential factor exp({a}*eta) does not cancel")
        for name, e in (("eta", b), ("(1-eta)/2", c), ("(1+eta)/2", d)):
            if not e.is_integer or e.re < 0:
                raise NonPolynomialResult(f"power of {name} is {e}, not a nonnegative integer")
        poly = self.rat.num
        poly = poly * ETA ** int(b.re)
        poly = poly * Polynomial([Fraction(1, 2), Fraction(-1, 2)]) ** int(c.re)
        poly = poly * Polynomial([Fraction(1, 2), Fraction(1, 2)]) ** int(d.re)
        try:
            return exact_divide(poly, self.rat.den)
        except NonExactDivision as exc:
            raise NonPolynomialResult(str(exc)) from exc

    def __repr__(self) -> str:
        a, b, c, d = self.prefactor
        return f"QRF(exp({a}η)·η^({b})·((1-η)/2)^({c})·((1+η)/2)^({d}) × {self.rat!r})"


def qrf_derivative(f: QuasiRationalFunction) -> QuasiRationalFunction:
    return f.derivative()


def determinant(matrix: Sequence[Sequence[Any]], zero: Any) -> Any:
    """Cofactor expansion along rows, memoising minors by (row, column set)."""
    k = len(matrix)
    memo: dict[tuple[int, tuple[int, ...]], Any] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Any:
        if row == k:
            return None  # empty product marker
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = zero
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if _is_zero(entry):
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub is not None and _is_zero(sub):
                continue
            term = entry if sub is None else entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    if k == 0:
        raise ValueError("empty matrix")
    return minor(0, tuple(range(k)))


def _is_zero(x: Any) -> bool:
    if isinstance(x, (Polynomial, RationalFunction)):
        return x.is_zero
    return x == 0


def wronskian(fs: Sequence[QuasiRationalFunction], size_cap: int = WRONSKIAN_SIZE_CAP) -> QuasiRationalFunction:
    """Wronskian in ``eta`` of quasi-rational functions.

    The prefactors multiply out; the rational part is the determinant whose
    entry ``(r, i)`` is ``(d/deta + L_i)**r`` applied to ``rat_i``, with
    ``L_i`` the logarithmic derivative of prefactor ``i``.  The empty
    Wronskian is the constant 1.
    """
    k = len(fs)
    if k > size_cap:
        raise SizeCapExceeded(f"Wronskian of {k} functions exceeds the cap {size_cap}")
    if k == 0:
        return QuasiRationalFunction(Polynomial.constant(1))
    columns = []
    for f in fs:
        ld = f.log_derivative()
        col = [f.rat]
        for _ in range(1, k):
            prev = col[-1]
            col.append(prev.derivative() + ld * prev)
        columns.append(col)
    matrix = [[columns[i][r] for i in range(k)] for r in range(k)]
    det = determinant(matrix, RationalFunction(Polynomial()))
    prefactor = [sum((f.prefactor[t] for f in fs), ZERO) for t in range(4)]
    return QuasiRationalFunction(det, *prefactor)


def poly_wronskian(ps: Sequence[Polynomial], size_cap: int = WRONSKIAN_SIZE_CAP) -> Polynomial:
    """Wronskian of plain polynomials, computed in polynomial arithmetic."""
    k = len(ps)
    if k > size_cap:
        raise SizeCapExceeded(f"Wronskian of {k} functions exceeds the cap {size_cap}")
    if k == 0:
        return Polynomial.constant(1)
    matrix = [[p.derivative(r) for p in ps] for r in range(k)]
    return determinant(matrix, Polynomial())


_NUMBER_RE = re.compile(r"^[-+0-9/*i .]+$")


def format_number(x: GaussianRational) -> str:
    return str(x)


def parse_number(text: str) -> GaussianRational:
    if not _NUMBER_RE.match(text):
        raise ValueError(f"not an exact number: {text!r}")
    return GaussianRational.parse(text)
