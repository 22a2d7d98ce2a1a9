from fractions import Fraction

import pytest

from conftest import field_for, random_gl3, random_normalized
from cubicdet import catalog
from cubicdet.curve import NormalizedCubic, ProjectivePoint, SmoothCubic, normalize, parse_point, rational_points
from cubicdet.detrep import (WeierstrassCurve, detrep_algorithm, detrep_all, detrep_formula,
                             detrep_galinat, detrep_transport, detrep_verify)
from cubicdet.equiv import recover_point
from cubicdet.errors import (BadCharacteristic, NotARepresentation, PointAtInfinity, PointEqualsBase,
                             PointNotOnCurve, Singular)
from cubicdet.field import GF, QQ
from cubicdet.forms import LinearMatrix, ProjectiveTransform, TernaryForm, parse_form, substitute


def printed(pm, K):
    return LinearMatrix(K, [[parse_form(s, K, degree=1) for s in r] for r in pm.rows])


@pytest.mark.parametrize("pm", catalog.PRINTED_MATRICES, ids=lambda pm: pm.name)
def test_formula_reproduces_printed_matrices(pm):
    K = field_for(int(pm.field_spec[2:]))
    C = NormalizedCubic(parse_form(pm.cubic, K))
    rep = detrep_formula(C, parse_point(pm.point, K))
    assert rep.M.rows_as_strings() == [list(r) for r in pm.rows]
    assert rep.verify()


def test_f2_first_matrix_has_lambda_one():
    K = GF(2)
    C = NormalizedCubic(parse_form("X^2*Z+X*Y^2+Y*Z^2", K))
    assert detrep_formula(C, parse_point("[0:1:0]", K)).lam == 1


@pytest.mark.parametrize("pm", catalog.RATIONAL_MATRICES, ids=lambda pm: pm.name)
def test_rational_matrices_and_transposes(pm):
    F = parse_form(pm.cubic, QQ)
    M = printed(pm, QQ)
    for N in (M, M.transpose()):
        lam = detrep_verify(F, N)
        assert lam.value != 0 and isinstance(lam.value, Fraction)


def test_verify_rejects_zero_and_wrong_curves():
    F = parse_form("X^3 + Y^3 + Z^3", QQ)
    zero = LinearMatrix(QQ, [[TernaryForm(QQ, 1)] * 3] * 3)
    with pytest.raises(NotARepresentation):
        detrep_verify(F, zero)
    M = printed(catalog.RATIONAL_MATRICES[0], QQ)
    with pytest.raises(NotARepresentation) as err:
        detrep_verify(parse_form("X^3 + 2*Y^3 + Z^3", QQ), M)
    assert err.value.monomial is not None


def test_case_two_point_is_forced():
    K = GF(5)
    C = NormalizedCubic(parse_form("X^2*Z+X*Y^2+Y*Z^2-2*X*Y*Z", K))
    u0 = [P for P in rational_points(C) if P.coords[2] == 0 and P != C.P0]
    assert u0 == [ProjectivePoint(K, (K.neg(C.coefficient("a111")), C.coefficient("a011"), 0))]


def test_formula_errors():
    K = GF(5)
    C = NormalizedCubic(parse_form("X^2*Z+Y^3+2*Y*Z^2", K))
    with pytest.raises(PointEqualsBase):
        detrep_formula(C, C.P0)
    with pytest.raises(PointNotOnCurve):
        detrep_formula(C, parse_point("[1:1:1]", K))


def test_all_points_all_fields(rng):
    for q in (2, 3, 4, 5, 7, 8, 9):
        K = field_for(q)
        for _ in range(3):
            C = random_normalized(K, rng)
            for P in rational_points(C):
                if P == C.P0:
                    continue
                for build in (detrep_formula, detrep_algorithm):
                    rep = build(C, P)
                    assert rep.verify() and rep.lam != 0


def test_detrep_all_counts():
    cases = [("X^2*Z+X*Z^2+Y^3+Y^2*Z+Z^3", 2, 0), ("X^2*Z+Y^3+2*Y*Z^2", 5, 1),
             ("X^2*Z+X*Y^2+3*Y*Z^2", 7, 2)]
    for text, q, n in cases:
        K = field_for(q)
        C = SmoothCubic(parse_form(text, K))
        for method in ("formula", "algorithm"):
            reps = detrep_all(C, method=method)
            assert len(reps) == n
            assert len({recover_point(C, r.M) for r in reps}) == n


def test_detrep_all_on_moved_curve(rng):
    # curves not in normal form: representations come back in the original coordinates
    K = GF(5)
    for _ in range(5):
        C0 = random_normalized(K, rng)
        T = ProjectiveTransform(K, random_gl3(K, rng))
        C = SmoothCubic(substitute(C0.F, T))
        reps = detrep_all(C)
        assert len(reps) == len(rational_points(C)) - 1
        for r in reps:
            assert r.F == C.F and r.verify()
            assert C.contains(r.point)


def test_transport_identity_and_round_trip(rng):
    K = GF(5)
    C = random_normalized(K, rng)
    P = next(P for P in rational_points(C) if P != C.P0)
    rep = detrep_formula(C, P)
    same = detrep_transport(rep, ProjectiveTransform.identity(K))
    assert same.M == rep.M and same.lam == rep.lam
    T = ProjectiveTransform(K, random_gl3(K, rng))
    there = detrep_transport(rep, T)
    back = detrep_transport(there, T.inverse(), C.F)
    assert back.M == rep.M and back.point == P


def test_transport_end_to_end(rng):
    K = GF(5)
    for _ in range(10):
        F = substitute(random_normalized(K, rng).F, ProjectiveTransform(K, random_gl3(K, rng)))
        C = SmoothCubic(F)
        pts = rational_points(C)
        P0, P = pts[0], pts[-1]
        G, T = normalize(C, P0)
        rep = detrep_formula(G, ProjectivePoint(K, T.inverse().apply(P.coords)))
        moved = detrep_transport(rep, T, F)
        assert detrep_verify(F, moved.M).value == moved.lam
        assert moved.point == P


def test_galinat_f7():
    K = GF(7)
    E = WeierstrassCurve(K, 1, 1)
    pts = E.affine_points()
    assert pts
    for P in pts:
        rep = detrep_galinat(E, P)
        assert detrep_verify(E.F, rep.M).value == rep.lam


def test_galinat_two_torsion():
    # y^2 = x^3 + x over F_5 has the 2-torsion point (0, 0)
    K = GF(5)
    E = WeierstrassCurve(K, 1, 0)
    P = parse_point("[0:0:1]", K)
    assert E.contains(P)
    assert detrep_galinat(E, P).verify()


def test_galinat_errors():
    with pytest.raises(BadCharacteristic):
        WeierstrassCurve(GF(3), 1, 1)
    with pytest.raises(Singular):
        WeierstrassCurve(GF(11), 2, 3)
    E = WeierstrassCurve(GF(7), 1, 1)
    with pytest.raises(PointAtInfinity):
        detrep_galinat(E, parse_point("[0:1:0]", GF(7)))


def test_transport_is_functorial(rng):
    K = GF(7)
    C = random_normalized(K, rng)
    P = next(P for P in rational_points(C) if P != C.P0)
    rep = detrep_formula(C, P)
    T = ProjectiveTransform(K, random_gl3(K, rng))
    S = ProjectiveTransform(K, random_gl3(K, rng))
    once = detrep_transport(rep, T @ S)
    twice = detrep_transport(detrep_transport(rep, S), T)
    assert once.M == twice.M and once.F == twice.F and once.point == twice.point
