from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from discortho.classical import Family
from discortho.deform import deformed_family
from discortho.errors import UnsupportedFamily, ZeroCollision
from discortho.exactalg import GaussianRational, Polynomial
from discortho.mindex import MultiIndexSpec
from discortho.numroots import analyze_zeros, find_roots
from discortho.spectral import (
    BOTH,
    CLOSED_FORM,
    DIRECT,
    Participant,
    basis_determinant,
    build_matrices,
    christoffel_numbers,
    eigen_spectrum,
    integrality_defect,
    match_spectrum,
    moment_ratio,
    orthogonality_sums,
    participants,
    predicted_eigenpairs_check,
    quadrature_moment_check,
)

BITS = 256
G = GaussianRational
LAG = Family.laguerre("7/2")
FLAGSHIP = MultiIndexSpec.multi_indexed(LAG, [1], [2])


def classical(family):
    if family.kind == "H":
        return MultiIndexSpec.krein_adler(family)
    return MultiIndexSpec.multi_indexed(family)


def setup(spec, N, bits=BITS, path=DIRECT, flip=False):
    d = deformed_family(spec)
    real = spec.family.parameters_real
    zs = analyze_zeros(find_roots(d.poly(N), bits), spec.family, parameters_real=real, precision_bits=bits)
    xi = find_roots(d.xi, bits) if d.xi.degree > 0 else []
    sm = build_matrices(d, N, zs, xi, precision_bits=bits, path=path, flip_branch=flip)
    return d, zs, sm


def tol(bits):
    return mpmath.ldexp(1, -bits)


def test_hermite_two_matrix():
    _, _, sm = setup(classical(Family.hermite()), 2, path=BOTH)
    expected = [[3, -1], [-1, 3]]
    with mpmath.workprec(BITS):
        for i in range(2):
            for j in range(2):
                assert abs(sm.m[i, j] - expected[i][j]) < tol(200)
    assert sm.path_discrepancy < tol(200)
    spec = eigen_spectrum(sm)
    assert match_spectrum(spec, [G(2), G(4)], BITS) < tol(200)


@pytest.mark.parametrize("family", [Family.hermite(), LAG, Family.jacobi(2, 3)])
def test_one_by_one(family):
    d, _, sm = setup(classical(family), 1, path=BOTH)
    alpha = d.energy(1) - d.energy(0)
    with mpmath.workprec(BITS):
        assert abs(sm.m[0, 0] - alpha.to_mpc()) < tol(200)


def test_flagship_dual_path_and_structure():
    _, zs, sm = setup(FLAGSHIP, 5, path=BOTH)
    assert sm.size == 9
    assert sm.path_discrepancy < tol(BITS // 2)
    assert sm.symmetry_defect() < tol(BITS // 2)
    assert sm.conjugation_defect() < tol(BITS // 2)
    assert sm.similarity_defect() < tol(BITS // 2)
    assert "mTilde" in sm.to_dict(digits=10)


def test_branch_flip_invariance():
    d, zs, sm = setup(FLAGSHIP, 5)
    _, _, flipped = setup(FLAGSHIP, 5, flip=True)
    assert flipped.symmetry_defect() < tol(BITS // 2)
    for a, b in zip(predicted_eigenpairs_check(sm, d, 5), predicted_eigenpairs_check(flipped, d, 5)):
        assert a["label"] == b["label"]
        assert a["residual"] < tol(100) and b["residual"] < tol(100)
    predicted = [p.alpha for p in participants(d, 5)]
    assert match_spectrum(eigen_spectrum(flipped), predicted, BITS) < tol(100)


def test_closed_form_only():
    _, _, sm = setup(FLAGSHIP, 5, path=CLOSED_FORM)
    assert sm.path_discrepancy is None
    assert sm.symmetry_defect() < tol(BITS // 2)


def test_unknown_path():
    d, zs, _ = setup(FLAGSHIP, 2)
    with pytest.raises(ValueError):
        build_matrices(d, 2, zs, path="sideways")


def test_zero_collision():
    d, zs, _ = setup(FLAGSHIP, 3)
    with pytest.raises(ZeroCollision):
        build_matrices(d, 3, zs, [zs.zeros[0]], precision_bits=BITS)


def test_christoffel_hermite_symmetric():
    d, zs, _ = setup(classical(Family.hermite()), 2)
    lam = christoffel_numbers(d, zs, 2)
    assert lam.relative_spread() < tol(200)


def test_christoffel_chebyshev_constant():
    d, zs, _ = setup(MultiIndexSpec.multi_indexed(Family.jacobi(0, 0)), 4)
    assert christoffel_numbers(d, zs, 4).relative_spread() < tol(100)


def test_christoffel_conjugate_pairs():
    d, zs, _ = setup(FLAGSHIP, 5)
    assert any(m != k for k, m in enumerate(zs.pairing))
    lam = christoffel_numbers(d, zs, 5)
    assert lam.conjugation_defect(zs.pairing) < tol(BITS // 2)
    assert lam.conjugation_defect(None) is None


def test_hermite_orthogonality():
    spec = classical(Family.hermite())
    d, zs, _ = setup(spec, 6)
    rep = orthogonality_sums(zs, christoffel_numbers(d, zs, 6), participants(d, 6))
    assert rep.max_off_diagonal < mpmath.mpf("1e-60")
    with mpmath.workprec(BITS):
        for a in range(6):
            assert abs(rep.normalized[a, a] - 1) < tol(200)


def test_flagship_orthogonality():
    d, zs, _ = setup(FLAGSHIP, 5)
    parts = participants(d, 5)
    assert [p.label for p in parts][:5] == ["P0", "P1", "P2", "P3", "P4"]
    assert len(parts) == 9
    rep = orthogonality_sums(zs, christoffel_numbers(d, zs, 5), parts)
    assert rep.passed


def test_non_orthogonal_pair_detected():
    d, zs, _ = setup(FLAGSHIP, 5)
    # P0 and P0 + P1 share a component, so their sum cannot vanish
    rep = orthogonality_sums(zs, christoffel_numbers(d, zs, 5), [d.poly(0), d.poly(0) + d.poly(1)])
    assert not rep.passed


def test_hermite_eigenpair_alpha_four():
    spec = classical(Family.hermite())
    d, _, sm = setup(spec, 2)
    rows = predicted_eigenpairs_check(sm, d, 2)
    row = next(r for r in rows if r["label"] == "P0")
    assert row["alpha"] == "4" and row["residual"] < tol(200)


def test_flagship_eigenpairs():
    d, _, sm = setup(FLAGSHIP, 5)
    rows = {r["label"]: r for r in predicted_eigenpairs_check(sm, d, 5)}
    assert rows["I(1->0)"]["alpha"] == "76"
    assert all(r["residual"] < tol(100) for r in rows.values())


def test_wrong_alpha_gives_residual():
    d, _, sm = setup(FLAGSHIP, 5)
    fake = Participant("fake", d.poly(0), G(41))
    assert predicted_eigenpairs_check(sm, d, 5, [fake])[0]["residual"] > mpmath.mpf("0.1")


def test_spectrum_and_trace():
    d, _, sm = setup(FLAGSHIP, 5)
    spec = eigen_spectrum(sm)
    predicted = [p.alpha for p in participants(d, 5)]
    assert match_spectrum(spec, predicted, BITS) < tol(100)
    with mpmath.workprec(BITS):
        trace = mpmath.fsum(sm.m[i, i] for i in range(sm.size))
        assert abs(mpmath.fsum(spec) - trace) < tol(150) * abs(trace)
    assert match_spectrum(spec[:-1], predicted, BITS) == mpmath.inf


def test_krein_adler_integer_spectrum():
    spec = MultiIndexSpec.krein_adler(Family.hermite(), [1, 2])
    d, _, sm = setup(spec, 5)
    rows = predicted_eigenpairs_check(sm, d, 5)
    assert all(r["alphaInteger"] and r["residual"] < tol(100) for r in rows)
    assert integrality_defect(eigen_spectrum(sm), BITS) < tol(100)


def test_integrality_defect_detects_fraction():
    with mpmath.workprec(BITS):
        assert integrality_defect([mpmath.mpc(3), mpmath.mpc("2.5")], BITS) == mpmath.mpf("0.5")


def test_basis_determinant():
    H = [deformed_family(classical(Family.hermite())).poly(n) for n in range(4)]
    assert basis_determinant(H) == G(1 * 2 * 4 * 8)
    d = deformed_family(FLAGSHIP)
    polys = [p.poly for p in participants(d, 5)] + [d.poly(5)]
    assert len(polys) == 10 and basis_determinant(polys) != 0
    dup = polys[:-1] + [polys[0]]
    assert basis_determinant(dup) == 0
    with pytest.raises(ValueError):
        basis_determinant(polys[:3])


def _moment_oracle(family, k):
    # direct numerical integration of the weight, independent of moment_ratio
    with mpmath.workdps(60):
        a = mpmath.mpf(family.alpha.re.numerator) / family.alpha.re.denominator
        if family.kind == "L":
            return mpmath.gamma(a + k + 1) / mpmath.gamma(a + 1)
        b = mpmath.mpf(family.beta.re.numerator) / family.beta.re.denominator
        w = lambda x: (1 - x) ** a * (1 + x) ** b
        return mpmath.quad(lambda x: w(x) * x**k, [-1, 1]) / mpmath.quad(w, [-1, 1])


@pytest.mark.parametrize("family", [LAG, Family.jacobi(2, 3), Family.jacobi("7/3", "11/5")])
def test_moment_ratio_oracle(family):
    for k in range(7):
        got = moment_ratio(family, k)
        assert got.im == 0
        with mpmath.workdps(60):
            assert abs(mpmath.mpf(got.re.numerator) / got.re.denominator - _moment_oracle(family, k)) < mpmath.mpf("1e-40")


def test_hermite_moments():
    H = Family.hermite()
    assert [moment_ratio(H, k) for k in range(7)] == [G(1), G(0), G(Fraction(1, 2)), G(0), G(Fraction(3, 4)), G(0), G(Fraction(15, 8))]


@pytest.mark.parametrize("family", [Family.hermite(), LAG, Family.jacobi(2, 3)])
def test_quadrature(family):
    d, zs, _ = setup(classical(family), 4)
    rep = quadrature_moment_check(d, 4, zs, christoffel_numbers(d, zs, 4))
    assert rep["exact"] and rep["controlMismatch"] and rep["passed"]
    assert len(rep["moments"]) == 9


def test_quadrature_hermite_two():
    d, zs, _ = setup(classical(Family.hermite()), 2)
    rep = quadrature_moment_check(d, 2, zs, christoffel_numbers(d, zs, 2))
    assert rep["moments"][2]["expected"] == "1/2"
    assert rep["moments"][2]["error"] < tol(200)


def test_quadrature_rejects_deformed():
    d, zs, _ = setup(FLAGSHIP, 3)
    with pytest.raises(UnsupportedFamily):
        quadrature_moment_check(d, 3, zs, christoffel_numbers(d, zs, 3))


def test_complex_parameters_symmetry():
    spec = MultiIndexSpec.multi_indexed(Family.laguerre("7/2+1*i"), [1], [2])
    _, zs, sm = setup(spec, 5, path=BOTH)
    assert zs.pairing is None
    assert sm.conjugation_defect() is None
    assert sm.symmetry_defect() < tol(BITS // 2)
    assert sm.path_discrepancy < tol(BITS // 2)
