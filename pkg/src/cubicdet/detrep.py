"""Linear determinantal representations F = lambda * det(M) of plane cubics.

Constructors: the closed formula for normalized cubics, Galinat's matrix for
Weierstrass curves, and the syzygy algorithm built on
:func:`cubicdet.linsys.multiplication_kernel`.  Every constructor checks
det(M) = lambda * F coefficient by coefficient before returning.
"""

from .curve import NormalizedCubic, ProjectivePoint, normalize, rational_points
from .errors import (BadCharacteristic, IdentityFailure, LambdaZero, NotARepresentation,
                     PointAtInfinity, PointEqualsBase, PointNotOnCurve, Singular)
from .field import FieldElement
from .forms import LinearMatrix, TernaryForm, cubic_label, monomials
from .linsys import multiplication_kernel


class DetRep:
    """A matrix of linear forms M together with lambda != 0, det M = lambda F."""

    def __init__(self, M, lam, F, point=None, method=None):
        self.M = M
        self.lam = lam
        self.F = F
        self.point = point
        self.method = method

    @property
    def field(self):
        return self.F.field

    @property
    def lambda_(self):
        return FieldElement(self.field, self.lam)

    def verify(self):
        return detrep_verify(self.F, self.M) == self.lambda_

    def to_json(self):
        K = self.field
        out = {"schema": 1, "field": K.spec(), "curve": str(self.F),
               "matrix": self.M.to_json(), "lambda": K.fmt(self.lam, signed=True)}
        if self.point is not None:
            out["point"] = str(self.point)
        if self.method is not None:
            out["method"] = self.method
        return out

    def __str__(self):
        return f"{self.M}\nlambda = {self.field.fmt(self.lam, signed=True)}"

    def __repr__(self):
        return f"DetRep({self.M.rows_as_strings()}, lambda={self.field.fmt(self.lam, signed=True)})"


def _lambda(F, M):
    """lambda with det M = lambda F, or (None, reason, monomial)."""
    K = F.field
    D = M.det()
    if F.is_zero():
        return None, "the cubic is zero", None
    pivot = next(m for m in monomials(3) if F.coefficient(m) != 0)
    lam = K.div(D.coefficient(pivot), F.coefficient(pivot))
    if lam == 0:
        return None, "det(M) does not involve the leading monomial of F", pivot
    for m in monomials(3):
        if D.coefficient(m) != K.mul(lam, F.coefficient(m)):
            return None, "det(M) is not proportional to F", m
    return lam, None, None


def detrep_verify(F, M):
    """Return lambda (a FieldElement) with det M = lambda F.

    Raises NotARepresentation naming the first monomial where the
    proportionality fails.
    """
    lam, reason, mono = _lambda(F, M)
    if lam is None:
        where = f" at monomial {cubic_label(mono)}" if mono is not None else ""
        raise NotARepresentation(f"{reason}{where}", mono)
    return FieldElement(F.field, lam)


def _checked(F, M, point, method):
    lam, reason, mono = _lambda(F, M)
    if lam is None:
        raise LambdaZero(f"{method} matrix failed the determinant identity: {reason}")
    return DetRep(M, lam, F, point, method)


def _check_point(C, P):
    if P == C.P0:
        raise PointEqualsBase("P must differ from the base point P0 = [1:0:0]")
    if not C.contains(P):
        raise PointNotOnCurve(f"{P} is not on {C}")


def formula_matrix(C, P):
    """The closed-form matrix for a normalized cubic with a002 = 1.

    For general a002 the coefficients of F / a002 are used, which keeps
    det M proportional to F.
    """
    K = C.field
    a = C.monic_coefficients()
    s, t, u = P.coords
    add, mul, neg = K.add, K.mul, K.neg

    def lin(x, y, z):
        return TernaryForm.linear(K, x, y, z)

    def poly(*terms):
        acc = 0
        for term in terms:
            v = K.one
            for f in term:
                v = mul(v, f)
            acc = add(acc, v)
        return acc

    zero = lin(0, 0, 0)
    Y, Z = lin(0, 1, 0), lin(0, 0, 1)
    if u != 0:
        L0 = lin(neg(mul(u, u)), 0,
                 neg(poly((a["a011"], t, t), (a["a012"], t, u), (a["a022"], u, u), (s, u))))
        L1 = lin(poly((u, u, a["a011"])), poly((u, u, a["a111"])),
                 mul(u, poly((a["a111"], t), (a["a112"], u))))
        L2 = lin(mul(u, poly((a["a011"], t), (a["a012"], u))), 0,
                 poly((a["a111"], t, t), (a["a112"], t, u), (a["a122"], u, u)))
        rows = [[zero, Z, -Y],
                [lin(0, u, neg(t)), zero, L0],
                [lin(u, 0, neg(s)), L1, L2]]
    else:
        a011, a111 = a["a011"], a["a111"]
        Lt0 = lin(K.one, a["a012"], a["a022"])
        Lt1 = lin(a011, a111, 0)
        Lt2 = lin(a111, K.sub(mul(a["a012"], a111), mul(a011, a["a112"])), 0)
        Lt3 = lin(0, K.sub(mul(a["a022"], a111), mul(a011, a["a122"])), neg(mul(a011, a["a222"])))
        rows = [[zero, Z, -Y],
                [Z, lin(0, a011, 0), Lt0],
                [Lt1, Lt2, Lt3]]
    return LinearMatrix(K, rows)


def detrep_formula(C, P):
    """Closed-form representation attached to P on a normalized cubic."""
    if not isinstance(C, NormalizedCubic):
        raise TypeError("detrep_formula needs a NormalizedCubic (see curve.normalize)")
    _check_point(C, P)
    if P.coords[2] == 0:
        K = C.field
        expected = ProjectivePoint(K, (K.neg(C.coefficient("a111")), C.coefficient("a011"), 0))
        if C.coefficient("a011") == 0 or P != expected:
            raise AssertionError(f"point {P} with u = 0 should be {expected}")
    return _checked(C.F, formula_matrix(C, P), P, "formula")


def detrep_algorithm(C, P):
    """Representation from the kernel of the multiplication map."""
    if not isinstance(C, NormalizedCubic):
        raise TypeError("detrep_algorithm needs a NormalizedCubic (see curve.normalize)")
    _check_point(C, P)
    syz = multiplication_kernel(C, P)
    M = LinearMatrix(C.field, syz.linear_forms())
    return _checked(C.F, M, P, "algorithm")


class WeierstrassCurve:
    """E: Y^2 Z - X^3 - a X Z^2 - b Z^3 = 0 with origin [0:1:0]."""

    def __init__(self, field, a, b):
        K = field
        if K.p in (2, 3):
            raise BadCharacteristic("Weierstrass form needs characteristic other than 2 and 3")
        self.field = K
        self.a = K.coerce(a)
        self.b = K.coerce(b)
        disc = K.add(K.mul(K.from_int(4), K.pow(self.a, 3)),
                     K.mul(K.from_int(27), K.mul(self.b, self.b)))
        if disc == 0:
            raise Singular(f"4a^3 + 27b^2 = 0 for a = {K.fmt(self.a)}, b = {K.fmt(self.b)}")
        self.origin = ProjectivePoint(K, (0, 1, 0))
        self.F = TernaryForm(K, 3, {(0, 2, 1): K.one, (3, 0, 0): K.neg(K.one),
                                    (1, 0, 2): K.neg(self.a), (0, 0, 3): K.neg(self.b)})

    def contains(self, P):
        return self.F.evaluate(P.coords) == 0

    def affine_points(self):
        K = self.field
        out = []
        for x in K.elements():
            for y in K.elements():
                P = ProjectivePoint(K, (x, y, 1))
                if self.contains(P):
                    out.append(P)
        return out

    def __repr__(self):
        K = self.field
        return f"WeierstrassCurve(a={K.fmt(self.a)}, b={K.fmt(self.b)} over {K.name})"


def galinat_matrix(E, P):
    K = E.field
    s, t, u = P.coords
    x, y = K.div(s, u), K.div(t, u)

    def lin(a, b, c):
        return TernaryForm.linear(K, a, b, c)

    zero = lin(0, 0, 0)
    neg = K.neg
    rows = [[lin(1, 0, neg(x)), zero, lin(0, neg(K.one), neg(y))],
            [lin(0, neg(K.one), y), lin(1, 0, x), lin(0, 0, K.add(E.a, K.mul(x, x)))],
            [zero, lin(0, 0, 1), lin(neg(K.one), 0, 0)]]
    return LinearMatrix(K, rows)


def detrep_galinat(E, P):
    """Galinat's representation of a Weierstrass curve at an affine point."""
    if P.coords[2] == 0:
        raise PointAtInfinity("P must be an affine point [x:y:1]")
    if not E.contains(P):
        raise PointNotOnCurve(f"{P} is not on {E}")
    return _checked(E.F, galinat_matrix(E, P), P, "galinat")


def detrep_transport(rep, T, F=None):
    """Move a representation of G = F o T back to F: M'(v) = M(T^-1 v)."""
    M = rep.M.substitute(T.inverse())
    if F is None:
        F = rep.F.substitute(T.inverse())
    lam, reason, _ = _lambda(F, M)
    if lam is None or lam != rep.lam:
        raise IdentityFailure(f"transported matrix fails det = lambda F: {reason or 'lambda changed'}")
    point = None
    if rep.point is not None:
        K = rep.field
        point = ProjectivePoint(K, T.apply(rep.point.coords))
    return DetRep(M, lam, F, point, rep.method)


METHODS = {"formula": detrep_formula, "algorithm": detrep_algorithm}


def default_base_point(C):
    """[1:0:0] when it lies on C, otherwise the first rational point."""
    K = C.field
    origin = ProjectivePoint(K, (1, 0, 0))
    if C.contains(origin):
        return origin
    pts = rational_points(C)
    if not pts:
        raise AssertionError(f"{C} has no rational point")
    return pts[0]


def detrep_all(C, P0=None, method="formula"):
    """One representation per rational point P != P0, in C's coordinates."""
    if P0 is None:
        P0 = default_base_point(C)
    G, T = normalize(C, P0)
    build = METHODS[method]
    out = []
    Tinv = T.inverse()
    K = C.field
    at_infinity = []
    for P in rational_points(C):
        if P == P0:
            continue
        Q = ProjectivePoint(K, Tinv.apply(P.coords))
        if Q.coords[2] == 0:
            at_infinity.append(Q)
        rep = build(G, Q)
        out.append(detrep_transport(rep, T, C.F))
    if at_infinity:
        expected = ProjectivePoint(K, (K.neg(G.coefficient("a111")), G.coefficient("a011"), 0))
        if len(at_infinity) != 1 or at_infinity[0] != expected:
            raise AssertionError("second point on the tangent line at P0 is misplaced")
    elif G.coefficient("a011") != 0:
        raise AssertionError("a011 != 0 but no rational point besides P0 on Z = 0")
    return out
