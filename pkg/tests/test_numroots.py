from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discortho.classical import Family, classical_poly
from discortho.deform import deformed_poly
from discortho.errors import DegenerateInput, DegenerateParameters, PairingFailure
from discortho.exactalg import Polynomial
from discortho.mindex import MultiIndexSpec
from discortho.numroots import (
    EXTRA_PAIR,
    EXTRA_REAL,
    ORDINARY,
    analyze_zeros,
    find_roots,
    vieta_check,
)

BITS = 256
FLAGSHIP = MultiIndexSpec.multi_indexed(Family.laguerre("7/2"), [1], [2])


def _close(a, b, bits=BITS // 2):
    return abs(a - b) < mpmath.ldexp(1, -bits)


def test_imaginary_unit_roots():
    roots = find_roots(Polynomial([1, 0, 1]), BITS)
    assert len(roots) == 2
    with mpmath.workprec(BITS):
        assert _close(roots[0], mpmath.mpc(0, -1))
        assert _close(roots[1], mpmath.mpc(0, 1))


def test_hermite_two():
    roots = find_roots(classical_poly(Family.hermite(), 2), BITS)
    with mpmath.workprec(BITS):
        r = 1 / mpmath.sqrt(2)
        assert _close(roots[0], -r) and _close(roots[1], r)
        zs = analyze_zeros(roots, Family.hermite(), precision_bits=BITS)
    assert zs.classification == [ORDINARY, ORDINARY]
    assert zs.pairing == [0, 1]


def test_close_cluster_resolved():
    third = Fraction(1, 3)
    gap = Fraction(1, 2**40)
    p = Polynomial([-third, 1]) * Polynomial([-third + gap, 1])
    roots = find_roots(p, BITS)
    with mpmath.workprec(BITS):
        a, b = mpmath.mpf(1) / 3 - mpmath.ldexp(1, -40), mpmath.mpf(1) / 3
        assert abs(roots[0] - a) < mpmath.ldexp(1, -100)
        assert abs(roots[1] - b) < mpmath.ldexp(1, -100)


def test_deterministic():
    p = deformed_poly(FLAGSHIP, 5)
    assert find_roots(p, BITS) == find_roots(p, BITS)


def test_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        find_roots(Polynomial([]), BITS)
    with pytest.raises(DegenerateInput):
        find_roots(Polynomial.constant(3), BITS)
    with pytest.raises(ValueError):
        find_roots(Polynomial([1, 1]), 32)


def test_flagship_classification():
    p = deformed_poly(FLAGSHIP, 5)
    roots = find_roots(p, BITS)
    zs = analyze_zeros(roots, FLAGSHIP.family, precision_bits=BITS)
    assert zs.source_degree == 9
    assert zs.ordinary_count == 5
    extras = [t for t in zs.classification if t != ORDINARY]
    assert len(extras) == 4 and set(extras) <= {EXTRA_REAL, EXTRA_PAIR}
    for k, m in enumerate(zs.pairing):
        assert zs.pairing[m] == k
        z, w = zs.zeros[k], zs.zeros[m]
        with mpmath.workprec(BITS):
            assert w.real == z.real and w.imag == -z.imag
    for k in zs.ordinary_indices:
        assert zs.zeros[k].imag == 0 and zs.zeros[k].real > 0


def test_flagship_residuals_and_vieta():
    p = deformed_poly(FLAGSHIP, 5)
    roots = find_roots(p, BITS)
    with mpmath.workprec(2 * BITS):
        cs = [c.to_mpc() for c in p.coeffs]
        for r in roots:
            val = mpmath.polyval(cs[::-1], r)
            scale = mpmath.polyval([abs(c) for c in cs[::-1]], abs(r))
            assert abs(val) / scale < mpmath.ldexp(1, -BITS // 2)
    s_err, p_err = vieta_check(p, roots, BITS)
    assert s_err < mpmath.ldexp(1, -BITS // 2)
    assert p_err < mpmath.ldexp(1, -BITS // 2)


def test_real_entry_fixed_by_pairing():
    with mpmath.workprec(BITS):
        roots = [mpmath.mpc(1, 2), mpmath.mpc(3, 0), mpmath.mpc(1, -2)]
        zs = analyze_zeros(roots, Family.jacobi(2, 3), precision_bits=BITS)
    assert zs.pairing == [2, 1, 0]
    assert zs.classification == [EXTRA_PAIR, EXTRA_REAL, EXTRA_PAIR]


def test_missing_partner_rejected():
    with mpmath.workprec(BITS):
        roots = [mpmath.mpc(1, 2), mpmath.mpc(1, -2.5)]
    with pytest.raises(PairingFailure):
        analyze_zeros(roots, Family.hermite(), precision_bits=BITS)


def test_complex_parameters_skip_pairing():
    spec = MultiIndexSpec.multi_indexed(Family.laguerre("7/2+1*i"), [1], [2])
    roots = find_roots(deformed_poly(spec, 5), BITS)
    zs = analyze_zeros(roots, spec.family, parameters_real=False, precision_bits=BITS)
    assert zs.pairing is None
    assert "pairing" in zs.to_dict()


def test_coincident_roots_abort():
    with mpmath.workprec(BITS):
        roots = [mpmath.mpc(1, 0), mpmath.mpc(1, 0)]
    with pytest.raises(DegenerateParameters):
        analyze_zeros(roots, Family.hermite(), precision_bits=BITS)


def test_boundary_warning():
    with mpmath.workprec(BITS):
        roots = [mpmath.mpc(1, 0), mpmath.mpc("0.5", 0)]
    zs = analyze_zeros(roots, Family.jacobi(2, 3), precision_bits=BITS)
    assert zs.classification == [EXTRA_REAL, ORDINARY]
    assert len(zs.warnings) == 1


def test_serialization_carries_precision():
    roots = find_roots(classical_poly(Family.hermite(), 3), BITS)
    d = analyze_zeros(roots, Family.hermite(), precision_bits=BITS).to_dict()
    assert d["precisionBits"] == BITS
    assert all(isinstance(z["re"], str) for z in d["zeros"])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7, unique=True))
def test_integer_roots_recovered(ints):
    p = Polynomial.constant(1)
    for r in ints:
        p = p * Polynomial([-r, 1])
    roots = find_roots(p, 128)
    with mpmath.workprec(128):
        got = sorted(int(mpmath.nint(z.real)) for z in roots)
        assert got == sorted(ints)
        for z in roots:
            assert abs(z - mpmath.nint(z.real)) < mpmath.ldexp(1, -60)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(1, 9)), min_size=1, max_size=4, unique=True))
def test_conjugate_closure(pairs):
    p = Polynomial.constant(1)
    for a, b in pairs:
        p = p * Polynomial([a * a + b * b, -2 * a, 1])
    roots = find_roots(p, 128)
    zs = analyze_zeros(roots, Family.hermite(), precision_bits=128)
    assert all(zs.pairing[m] == k and m != k for k, m in enumerate(zs.pairing))
