import pytest

from conftest import field_for, random_gl3, random_normalized
from cubicdet import catalog
from cubicdet.curve import Divisor, NormalizedCubic, SmoothCubic, parse_point, rational_points
from cubicdet.detrep import detrep_algorithm, detrep_formula
from cubicdet.equiv import ROUTES, brute_force_equivalent, equivalent, recover_point
from cubicdet.errors import FieldTooLarge, NotARepresentation
from cubicdet.field import GF
from cubicdet.forms import LinearMatrix, parse_form
from cubicdet.linsys import effective_representative


def normalized_reps(min_classes=1):
    for rep in catalog.REPRESENTATIVES:
        if rep.classes >= min_classes:
            K = field_for(rep.q)
            yield NormalizedCubic(parse_form(rep.cubic, K))


@pytest.mark.parametrize("route", sorted(ROUTES))
def test_round_trip_on_representatives(route):
    for C in normalized_reps():
        for P in rational_points(C):
            if P != C.P0:
                assert recover_point(C, detrep_formula(C, P).M, route) == P


def test_invariance_under_constant_transforms(rng):
    for q in (2, 3, 4, 5, 7):
        K = field_for(q)
        C = random_normalized(K, rng)
        for P in rational_points(C)[:4]:
            if P == C.P0:
                continue
            M = detrep_formula(C, P).M
            for _ in range(3):
                N = M.transform(random_gl3(K, rng), random_gl3(K, rng))
                assert recover_point(C, N) == P
                assert recover_point(C, N, "section") == P


def test_transpose_recovers_inverse_point(rng):
    # coker of the transpose has the dual class: P goes to R with P + R ~ 2 P0
    for q in (3, 5, 7, 9):
        K = field_for(q)
        for _ in range(3):
            C = random_normalized(K, rng)
            for P in rational_points(C):
                if P == C.P0:
                    continue
                R = effective_representative(C, Divisor.point(C.P0, 2) - Divisor.point(P))
                assert Divisor.point(recover_point(C, detrep_formula(C, P).M.transpose())) == R


def test_transpose_changes_the_point_on_f7():
    K = GF(7)
    C = NormalizedCubic(parse_form("X^2*Z+X*Y^2+3*Y*Z^2", K))
    pts = [P for P in rational_points(C) if P != C.P0]
    seen = set()
    for P in pts:
        M = detrep_formula(C, P).M
        Q = recover_point(C, M.transpose())
        assert Q != P and Q in pts
        seen.add(Q)
    assert len(seen) == 2


def test_equivalence_examples():
    K = GF(2)
    C = NormalizedCubic(parse_form("X^2*Z+X*Y^2+Y*Z^2", K))
    M1, M2 = (LinearMatrix(K, [[parse_form(s, K, degree=1) for s in r] for r in pm.rows])
              for pm in catalog.PRINTED_MATRICES[:2])
    assert equivalent(C, M1, M1)
    assert not equivalent(C, M1, M2)
    assert brute_force_equivalent(C, M1, M2) is None
    for P in (parse_point("[0:1:0]", K), parse_point("[0:0:1]", K)):
        assert equivalent(C, detrep_formula(C, P).M, detrep_algorithm(C, P).M)


def test_brute_force_permutation_witness():
    K = GF(3)
    C = NormalizedCubic(parse_form("X^2*Z + X*Y^2 + Y*Z^2 + 2*X*Y*Z", K))
    M1 = detrep_formula(C, parse_point("[0:0:1]", K)).M
    perm = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    M2 = M1.transform(perm, None)
    A, B = brute_force_equivalent(C, M1, M2)
    assert M1.transform(A, B) == M2


def test_brute_force_limited_to_small_fields():
    K = GF(5)
    C = NormalizedCubic(parse_form("X^2*Z+Y^3+2*Y*Z^2", K))
    M = detrep_formula(C, parse_point("[0:0:1]", K)).M
    with pytest.raises(FieldTooLarge):
        brute_force_equivalent(C, M, M)


def test_recover_on_curve_not_in_normal_form():
    K = GF(7)
    C = SmoothCubic(parse_form("X^3 + Y^3 + Z^3", K))
    from cubicdet.detrep import detrep_all
    for rep in detrep_all(C):
        assert recover_point(C, rep.M) == rep.point


def test_recover_rejects_non_representation():
    K = GF(5)
    C = NormalizedCubic(parse_form("X^2*Z+Y^3+2*Y*Z^2", K))
    other = NormalizedCubic(parse_form("X^2*Z+X*Y^2+Y*Z^2-2*X*Y*Z", K))
    M = detrep_formula(other, parse_point("[0:0:1]", K)).M
    with pytest.raises(NotARepresentation):
        recover_point(C, M)


def test_recover_is_equivariant_under_transport(rng):
    from cubicdet.curve import ProjectivePoint
    from cubicdet.detrep import detrep_transport
    from cubicdet.forms import ProjectiveTransform
    for q in (3, 5, 7):
        K = field_for(q)
        C = random_normalized(K, rng)
        T = ProjectiveTransform(K, random_gl3(K, rng))
        for P in rational_points(C):
            if P == C.P0:
                continue
            moved = detrep_transport(detrep_formula(C, P), T)
            C2 = SmoothCubic(moved.F)
            base = ProjectivePoint(K, T.apply(C.P0.coords))
            assert recover_point(C2, moved.M, P0=base) == ProjectivePoint(K, T.apply(P.coords))


def test_equivalence_relation_on_families(rng):
    K = GF(5)
    C = NormalizedCubic(parse_form("X^2*Z+X*Y^2+Y*Z^2-2*X*Y*Z", K))
    family = []
    for P in rational_points(C):
        if P != C.P0:
            for build in (detrep_formula, detrep_algorithm):
                M = build(C, P).M
                family += [M, M.transform(random_gl3(K, rng), random_gl3(K, rng))]
    rel = [[equivalent(C, a, b) for b in family] for a in family]
    n = len(family)
    for i in range(n):
        assert rel[i][i]
        for j in range(n):
            assert rel[i][j] == rel[j][i]
            for k in range(n):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]


def test_class_count_is_points_minus_one(rng):
    from cubicdet.detrep import detrep_all
    for q in (2, 3, 4, 5, 7):
        C = random_normalized(field_for(q), rng)
        reps = detrep_all(C, C.P0)
        assert len({recover_point(C, r.M) for r in reps}) == len(rational_points(C)) - 1
