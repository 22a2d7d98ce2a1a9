"""Deciding equivalence M' = A M B of determinantal representations.

The cokernel of a representation is a line bundle on C; its class is read
off from the adjugate, whose rows span the left kernel of M at each point
of C.  Two independent routes compute the associated point:

* ``section``: pick the section of the cokernel vanishing on P0 + R, where
  div(Z) = 2 P0 + R on a normalized cubic; its third zero is the point.
* ``adjugate``: the divisor of the first coordinate section, taken from
  column 0 of adj(M) with a pointwise min-subtraction, then reduced to its
  unique effective degree-1 representative through a Riemann-Roch space.

A brute-force search over GL3 x GL3 serves as an oracle on F_2 and F_3.
"""

import itertools

import numpy as np

from . import linalg
from .curve import (Divisor, NormalizedCubic, ProjectivePoint, divisor_of_form, local_branch,
                    normalize, ord_at, rational_points, series_eval, valuation)
from .detrep import default_base_point, detrep_verify
from .errors import EffectiveClass, FieldTooLarge, RankAnomaly
from .forms import TernaryForm, form_adjugate
from .linsys import effective_representative

ADJ_PRECISION = 16


def _adjugate(M, side):
    """adj(M) arranged so that rows give the functional on coker.

    ``side="left"`` reads the cokernel of M acting on column vectors (rows
    of adj(M)); ``side="right"`` reads the cokernel of the transpose.
    """
    adj = form_adjugate(M)
    if side == "right":
        adj = [[adj[j][i] for j in range(3)] for i in range(3)]
    return adj


def _row_series(C, adj, P):
    """Series of adj entries along the branch at P, and the best row."""
    branch = local_branch(C, P, ADJ_PRECISION)
    K = branch.field
    rows = [[series_eval(e, branch.coords, K, ADJ_PRECISION, branch.embed) for e in row]
            for row in adj]
    orders = [min(valuation(s) for s in row) for row in rows]
    i = min(range(3), key=lambda r: orders[r])
    if orders[i] >= ADJ_PRECISION:
        raise RankAnomaly(f"adj(M) vanishes to high order at {P}: rank of M drops below 2 on C")
    return rows[i], orders[i]


def _section_order(K, row, shift, a):
    comb = [0] * ADJ_PRECISION
    for j in range(3):
        if a[j] == 0:
            continue
        for n, c in enumerate(row[j]):
            if c != 0:
                comb[n] = K.add(comb[n], K.mul(a[j], c))
    v = valuation(comb)
    if v >= ADJ_PRECISION:
        raise RankAnomaly("section of the cokernel vanishes identically")
    return v - shift


def section_point(C, M, side="left"):
    """Class point of coker M via the section vanishing on P0 + R."""
    K = C.field
    adj = _adjugate(M, side)
    R = C.third_point()
    base = Divisor.point(C.P0) + Divisor.point(R)
    conditions = []
    for pt, mult in base.terms.items():
        P = pt.point
        row, shift = _row_series(C, adj, P)
        for n in range(shift, shift + mult):
            conditions.append([row[j][n] for j in range(3)])
    sols = linalg.nullspace(K, conditions, 3)
    if len(sols) != 1:
        raise RankAnomaly(f"expected a unique section through P0 + R, found {len(sols)}")
    a = sols[0]
    zeros = {}
    for P in rational_points(C):
        row, shift = _row_series(C, adj, P)
        v = _section_order(K, row, shift, a)
        if v:
            zeros[P] = v
    div = sum((Divisor.point(P, v) for P, v in zeros.items()), Divisor())
    rest = div - base
    if div.degree() != 3 or not rest.is_effective() or rest.degree() != 1:
        raise RankAnomaly(f"section divisor {div} is not P0 + R + (rational point)")
    (pt,) = rest.terms
    P = pt.point
    if P == C.P0:
        raise EffectiveClass("the cokernel class is trivial: the matrix corresponds to P0")
    return P


def class_divisor(C, M, side="left"):
    """Divisor of the first coordinate section of coker M (degree 3).

    ord_p = min_i ord_p(adj_{i,0}) - min_{i,j} ord_p(adj_{i,j}), with adj
    arranged so that its rows give the cokernel functional.
    """
    adj = _adjugate(M, side)
    # adj_{i,j} = w_i u_j: column 0 carries the first coordinate u_0
    col = [adj[i][0] for i in range(3)]
    seed = next((e for e in col if not e.is_zero()), None)
    if seed is None:
        raise RankAnomaly("first column of adj(M) is identically zero")
    terms = {}
    for pt in divisor_of_form(C, seed).terms:
        num = min(ord_at(C, pt, e) if not e.is_zero() else 99 for e in col)
        den = min(ord_at(C, pt, e) for row in adj for e in row if not e.is_zero())
        if num - den:
            terms[pt] = num - den
    D = Divisor(terms)
    if D.degree() != 3 or not D.is_effective():
        raise RankAnomaly(f"class divisor {D} should be effective of degree 3")
    return D


def adjugate_point(C, M, side="left"):
    """Class point via the column-0 divisor and Riemann-Roch reduction."""
    D = class_divisor(C, M, side)
    Z = TernaryForm.variable(C.field, 2)
    E = effective_representative(C, D - divisor_of_form(C, Z) + Divisor.point(C.P0))
    if E.degree() != 1 or len(E.terms) != 1:
        raise RankAnomaly(f"reduced class {E} is not a single point")
    (pt,) = E.terms
    if pt.degree != 1:
        raise RankAnomaly(f"reduced class {E} is not rational")
    P = pt.point
    if P == C.P0:
        raise EffectiveClass("the cokernel class is trivial: the matrix corresponds to P0")
    return P


ROUTES = {"section": section_point, "adjugate": adjugate_point}
# cokernel side matching the correspondence used by the constructors
SIDE = "right"


def recover_point(C, M, method="adjugate", P0=None):
    """The point P in C(k) minus P0 whose class the representation M realizes.

    A cubic that is not normalized is first moved to normal form at P0
    (default: see detrep.default_base_point) and the answer mapped back.
    """
    detrep_verify(C.F, M)
    if isinstance(C, NormalizedCubic) and (P0 is None or P0 == C.P0):
        return ROUTES[method](C, M, SIDE)
    if P0 is None:
        P0 = default_base_point(C)
    G, T = normalize(C, P0)
    Q = ROUTES[method](G, M.substitute(T), SIDE)
    return ProjectivePoint(C.field, T.apply(Q.coords))


def equivalent(C, M1, M2, method="adjugate", P0=None):
    return recover_point(C, M1, method, P0) == recover_point(C, M2, method, P0)


# --- brute force ------------------------------------------------------------

def _gl3(p):
    """All invertible 3x3 matrices over F_p as an (n, 3, 3) integer array."""
    mats = np.array(list(itertools.product(range(p), repeat=9)), dtype=np.int64).reshape(-1, 3, 3)
    det = (mats[:, 0, 0] * (mats[:, 1, 1] * mats[:, 2, 2] - mats[:, 1, 2] * mats[:, 2, 1])
           - mats[:, 0, 1] * (mats[:, 1, 0] * mats[:, 2, 2] - mats[:, 1, 2] * mats[:, 2, 0])
           + mats[:, 0, 2] * (mats[:, 1, 0] * mats[:, 2, 1] - mats[:, 1, 1] * mats[:, 2, 0])) % p
    return mats[det != 0]


def brute_force_equivalent(C, M1, M2):
    """Search (A, B) in GL3 x GL3 with A M1 B = M2; returns (A, B) or None.

    For a point p off C, N1 = M1(p) and N2 = M2(p) are invertible and any
    witness has B = (A N1)^-1 N2, so only A is enumerated.
    """
    K = C.field
    if K.m != 1 or K.p > 3:
        raise FieldTooLarge("brute-force search is limited to F_2 and F_3")
    p = K.p
    off = next(P for P in itertools.product(range(p), repeat=3)
               if any(P) and C.F.evaluate(P) != 0)
    N1 = np.array(M1.evaluate(off), dtype=np.int64)
    N2 = np.array(M2.evaluate(off), dtype=np.int64)
    A = _gl3(p)
    M1s = [np.array(m, dtype=np.int64) for m in M1.coefficient_matrices()]
    M2s = [np.array(m, dtype=np.int64) for m in M2.coefficient_matrices()]
    AN1 = np.einsum("nij,jk->nik", A, N1) % p
    inv = _batch_inverse(AN1, p)
    B = np.einsum("nij,jk->nik", inv, N2) % p
    ok = np.ones(len(A), dtype=bool)
    for X, Y in zip(M1s, M2s):
        prod = np.einsum("nij,jk,nkl->nil", A, X, B) % p
        ok &= (prod == Y).all(axis=(1, 2))
    hits = np.nonzero(ok)[0]
    if not len(hits):
        return None
    n = hits[0]
    return A[n].tolist(), B[n].tolist()


def _batch_inverse(mats, p):
    """Inverse mod p of each invertible 3x3 matrix via the adjugate."""
    m = mats
    cof = np.empty_like(m)
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [x for x in range(3) if x != j]
            minor = m[:, r[0], c[0]] * m[:, r[1], c[1]] - m[:, r[0], c[1]] * m[:, r[1], c[0]]
            cof[:, i, j] = minor if (i + j) % 2 == 0 else -minor
    det = (m[:, 0, 0] * cof[:, 0, 0] + m[:, 0, 1] * cof[:, 0, 1] + m[:, 0, 2] * cof[:, 0, 2]) % p
    det_inv = np.array([pow(int(d), p - 2, p) for d in range(p)], dtype=np.int64)[det]
    return (np.transpose(cof, (0, 2, 1)) * det_inv[:, None, None]) % p
