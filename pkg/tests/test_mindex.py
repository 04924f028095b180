from __future__ import annotations

import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discortho.classical import Family
from discortho.errors import InvalidSpec, MismatchedExtra, UnsupportedRange
from discortho.exactalg import GaussianRational
from discortho.mindex import (
    ExtraIndex,
    MultiIndexSpec,
    ParameterBoundWarning,
    check_parameter_bounds,
    ell,
    enumerate_extras,
    krein_adler_condition,
    predicted_coefficient,
    predicted_eigenvalue,
    predicted_matrix_eigenvalue,
)

G = GaussianRational
LAG = Family.laguerre("7/2")
FLAGSHIP = MultiIndexSpec.multi_indexed(LAG, [1], [2])

increasing = st.sets(st.integers(1, 7), max_size=3).map(lambda s: tuple(sorted(s)))


def test_validation():
    with pytest.raises(InvalidSpec):
        MultiIndexSpec.multi_indexed(LAG, [2, 1], [])
    with pytest.raises(InvalidSpec):
        MultiIndexSpec.multi_indexed(LAG, [0], [])
    with pytest.raises(InvalidSpec):
        MultiIndexSpec.multi_indexed(Family.hermite(), [1], [])
    with pytest.raises(InvalidSpec):
        MultiIndexSpec.krein_adler(Family.hermite(), [2])
    with pytest.raises(InvalidSpec):
        MultiIndexSpec("XX", LAG)


def test_serialization():
    assert FLAGSHIP.to_dict() == {"mode": "MI", "dI": [1], "dII": [2]}
    assert MultiIndexSpec.krein_adler(Family.hermite(), [1, 2]).to_dict() == {"mode": "KA", "dKA": [1, 2]}


def brute_force_ka(ds, top=20):
    for m in range(top):
        prod = 1
        for d in ds:
            prod *= m - d
        if prod < 0:
            return False
    return True


@given(st.sets(st.integers(1, 9), max_size=4))
def test_krein_adler_condition_brute_force(ds):
    ds = tuple(sorted(ds))
    assert krein_adler_condition(ds) == brute_force_ka(ds)


def test_krein_adler_condition_examples():
    assert krein_adler_condition((1, 2))
    assert krein_adler_condition((2, 3, 5, 6))
    assert not krein_adler_condition((2,))
    assert not krein_adler_condition((1, 2, 4))


def test_ell_examples():
    assert ell(FLAGSHIP) == 4
    assert ell(MultiIndexSpec.multi_indexed(LAG)) == 0
    assert ell(MultiIndexSpec.krein_adler(Family.hermite(), [1, 2])) == 0


def test_extras_flagship():
    extras = enumerate_extras(FLAGSHIP, 5)
    assert [e.label for e in extras] == ["I(1->0)", "II(2->0)", "II(2->1)", "III(-1,-2)"]
    assert len(extras) == ell(FLAGSHIP)
    iii = extras[-1]
    assert iii.derived.is_empty and iii.added == ()


def test_extras_single_list():
    spec = MultiIndexSpec.multi_indexed(LAG, [2], [])
    assert [e.derived.d_I for e in enumerate_extras(spec, 3)] == [(0,), (1,)]


def test_extras_krein_adler():
    spec = MultiIndexSpec.krein_adler(Family.hermite(), [1, 2])
    assert [e.label for e in enumerate_extras(spec, 5)] == ["KA(1->0)", "KA(2->0)"]
    with pytest.raises(UnsupportedRange):
        enumerate_extras(spec, 2)
    with pytest.raises(UnsupportedRange):
        enumerate_extras(FLAGSHIP, 0)


@given(increasing, increasing, st.integers(1, 6))
@settings(max_examples=60)
def test_extra_count_equals_ell(dI, dII, N):
    spec = MultiIndexSpec.multi_indexed(LAG, dI, dII)
    extras = enumerate_extras(spec, N)
    assert len(extras) == ell(spec)
    for e in extras:
        # every extra has lower degree and reconstructs D from its complements
        assert ell(e.derived) < ell(spec)
        lists = {"I": "d_I", "II": "d_II"}
        if e.extra_type in lists:
            old = getattr(spec, lists[e.extra_type])
            new = getattr(e.derived, lists[e.extra_type])
            assert set(old) - set(new) == set(e.removed)
            assert set(new) - set(old) == set(e.added)
        else:
            assert set(spec.d_I) - set(e.derived.d_I) == {e.removed[0]}
            assert set(spec.d_II) - set(e.derived.d_II) == {e.removed[1]}


def _adjacent_pairs(gaps):
    # unions of adjacent pairs {s, s+1} always satisfy the Krein-Adler condition
    out, pos = [], 0
    for gap in gaps:
        pos += gap + 1
        out += [pos, pos + 1]
        pos += 1
    return tuple(out)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).map(_adjacent_pairs))
def test_krein_adler_extra_count(ds):
    assert krein_adler_condition(ds)
    spec = MultiIndexSpec.krein_adler(Family.hermite(), ds)
    extras = enumerate_extras(spec, max(ds) + 1)
    assert len(extras) == sum(d - j for j, d in enumerate(ds))
    # each extra replaces one degree by a strictly lower unused one
    for e in extras:
        assert e.added[0] < e.removed[0] and e.added[0] not in ds


def test_predicted_eigenvalues():
    extras = enumerate_extras(FLAGSHIP, 5)
    assert predicted_eigenvalue(FLAGSHIP, extras[0], 5) == G(-56)
    assert predicted_matrix_eigenvalue(FLAGSHIP, extras[0], 5) == G(76)
    # type III: E~I(1) + E~II(2) - E(5) = -20 - 4 - 20
    assert predicted_eigenvalue(FLAGSHIP, extras[3], 5) == G(-44)
    ka = MultiIndexSpec.krein_adler(Family.hermite(), [1, 2])
    e20 = enumerate_extras(ka, 5)[1]
    assert predicted_eigenvalue(ka, e20, 5) == G(-6)
    assert predicted_matrix_eigenvalue(ka, e20, 5) == G(16)


def test_predicted_coefficients():
    extras = enumerate_extras(FLAGSHIP, 5)
    assert predicted_coefficient(FLAGSHIP, extras[3], 5, "forward") == G(-8)
    # -(1/2)(20 + 20)(20 + 4)
    assert predicted_coefficient(FLAGSHIP, extras[3], 5, "exchanged") == G(-480)
    assert predicted_coefficient(FLAGSHIP, extras[0], 5, "forward") == G(72)
    assert predicted_coefficient(FLAGSHIP, extras[0], 5, "exchanged") == G(80)
    jac = MultiIndexSpec.multi_indexed(Family.jacobi(3, 4), [1], [1])
    iii = enumerate_extras(jac, 3)[-1]
    assert predicted_coefficient(jac, iii, 3, "forward") == G(-32)
    ka = MultiIndexSpec.krein_adler(Family.hermite(), [1, 2])
    assert predicted_coefficient(ka, enumerate_extras(ka, 5)[1], 5, "forward") == G(20)
    with pytest.raises(ValueError):
        predicted_coefficient(FLAGSHIP, extras[0], 5, "sideways")


def test_mismatched_extra():
    other = MultiIndexSpec.multi_indexed(LAG, [2], [])
    foreign = enumerate_extras(other, 5)[0]
    with pytest.raises(MismatchedExtra):
        predicted_eigenvalue(FLAGSHIP, foreign, 5)
    fake = ExtraIndex(FLAGSHIP, "I", (1,), (0,))
    with pytest.raises(MismatchedExtra):
        predicted_coefficient(FLAGSHIP, fake, 5)


@given(st.fractions(min_value=-10, max_value=10, max_denominator=9))
def test_krein_adler_predictions_are_integers(g):
    ka = MultiIndexSpec.krein_adler(Family.laguerre(G(g)), [1, 2])
    for e in enumerate_extras(ka, 5):
        assert predicted_matrix_eigenvalue(ka, e, 5).is_integer


def test_parameter_bounds_warn_or_raise():
    low = MultiIndexSpec.multi_indexed(Family.laguerre("3/2"), [1], [2])
    with pytest.warns(ParameterBoundWarning):
        assert check_parameter_bounds(low)
    with pytest.raises(InvalidSpec):
        check_parameter_bounds(low, strict=True)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert check_parameter_bounds(FLAGSHIP) == []
