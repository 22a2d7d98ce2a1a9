"""Linear systems of plane curves cut out on a smooth cubic.

Everything reduces to spaces of ternary forms with prescribed orders of
vanishing along an effective divisor, solved by exact elimination over
GF(q).  A condition at a closed point of degree e lives in GF(q^e); it is
brought down to GF(q) through the trace pairing Tr(theta^k * c), k < e,
with theta the generator of GF(q^e).
"""

from . import linalg
from .curve import Divisor, divisor_of_form, local_branch, ord_at, plane_points, series_eval
from .errors import (DimensionAnomaly, DivisorNotOnCurve, PointEqualsBase, PointNotOnCurve,
                     UnsupportedDegree)
from .field import embedding
from .forms import TernaryForm, monomials


class ConstrainedFormSpace:
    """Forms G of a fixed degree with div_C(G) >= D (modulo F when mod_f)."""

    def __init__(self, curve, degree, divisor, basis, mod_f=False):
        self.curve = curve
        self.degree = degree
        self.divisor = divisor
        self.basis = list(basis)
        self.mod_f = mod_f

    @property
    def dimension(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    def contains(self, G):
        K = self.curve.field
        rows = [b.vector() for b in self.basis]
        if self.mod_f:
            rows.append(self.curve.F.vector())
        return linalg.rank(K, rows + [G.vector()]) == linalg.rank(K, rows)

    def __repr__(self):
        return f"ConstrainedFormSpace(degree={self.degree}, dim={self.dimension}, D={self.divisor})"


class SyzygyBasis:
    """Kernel of W0 (x) V -> cubics mod F; ``coeffs[i][j][k]`` is the
    coefficient of v_j (x) x_k in the i-th kernel vector."""

    def __init__(self, curve, point, aux_line, sections, coeffs):
        self.curve = curve
        self.point = point
        self.aux_line = aux_line
        self.sections = sections
        self.coeffs = coeffs

    def linear_forms(self):
        """l_{ij} = sum_k coeffs[i][j][k] x_k."""
        K = self.curve.field
        return [[TernaryForm.from_vector(K, 1, row) for row in e] for e in self.coeffs]

    @property
    def dimension(self):
        return len(self.coeffs)


def _point_conditions(C, pt, mult, d, monos):
    """GF(q)-linear conditions on coefficient vectors for ord_pt >= mult."""
    K = C.field
    branch = local_branch(C, pt, max(mult, 2))
    L = branch.field
    columns = []
    for mono in monos:
        f = TernaryForm(K, d, {mono: K.one})
        columns.append(series_eval(f, branch.coords, L, mult, branch.embed))
    e = pt.degree
    if e == 1:
        return [[col[n] for col in columns] for n in range(mult)]
    emb = embedding(K, L)
    theta = L.generator()
    scalars = [L.one]
    for _ in range(e - 1):
        scalars.append(L.mul(scalars[-1], theta))
    rows = []
    for n in range(mult):
        for s in scalars:
            rows.append([emb.trace(L.mul(s, col[n])) for col in columns])
    return rows


def _check_support(C, D):
    for pt in D.terms:
        if not C.contains(pt):
            raise DivisorNotOnCurve(f"{pt} is not on {C}")


def forms_vanishing(C, d, D, mod_f=False):
    """Basis of {G of degree d : div_C(G) >= D}, deterministic."""
    if d not in (1, 2, 3):
        raise UnsupportedDegree(f"degree {d} is not supported (use 1, 2 or 3)")
    if not D.is_effective() and D.terms:
        raise ValueError("constraint divisor must be effective")
    _check_support(C, D)
    K = C.field
    monos = list(monomials(d))
    if mod_f and d == 3:
        pivot = next(m for m in monos if C.F.coefficient(m) != 0)
        monos = [m for m in monos if m != pivot]
    rows = []
    for pt, mult in sorted(D.terms.items()):
        rows += _point_conditions(C, pt, mult, d, monos)
    basis = []
    for v in linalg.nullspace(K, rows, len(monos)):
        basis.append(TernaryForm(K, d, {m: c for m, c in zip(monos, v) if c != 0}))
    for G in basis:
        for pt, mult in D.terms.items():
            if ord_at(C, pt, G) < mult:
                raise DimensionAnomaly(f"basis form {G} fails the order check at {pt}")
    return ConstrainedFormSpace(C, d, D, basis, mod_f and d == 3)


def rr_space(C, D):
    """Basis of L(D) as (numerator, denominator) form pairs G/H.

    H is the first form of the lowest degree h with div_C(H) >= D+, and the
    numerators run over forms of degree h with div_C(G) >= div_C(H) - D.
    """
    K = C.field
    if not D.terms:
        one = TernaryForm.constant(K, K.one)
        return [(one, one)]
    if D.degree() < 0:
        return []
    pos = D.positive()
    _check_support(C, D)
    for h in (1, 2, 3):
        if pos.degree() > 3 * h:
            continue
        space = forms_vanishing(C, h, pos)
        if not space.basis:
            continue
        H = space.basis[0]
        E = divisor_of_form(C, H) - D
        if not (E.is_effective() or not E.terms):
            raise AssertionError("auxiliary form does not dominate the divisor")
        nums = forms_vanishing(C, h, E, mod_f=(h == 3))
        return [(G, H) for G in nums.basis]
    raise UnsupportedDegree(f"divisor {D} needs forms of degree > 3")


def effective_representative(C, D):
    """The unique effective divisor linearly equivalent to D (deg D = 1)."""
    if D.degree() != 1:
        raise UnsupportedDegree("only degree-1 classes have a unique effective member")
    basis = rr_space(C, D)
    if len(basis) != 1:
        raise DimensionAnomaly(f"L(D) has dimension {len(basis)}, expected 1")
    G, H = basis[0]
    return divisor_of_form(C, G) - divisor_of_form(C, H) + D


def auxiliary_line(C, P):
    """Lowest-ordered line through P that is not tangent to C at P."""
    K = C.field
    for ell in plane_points(K):
        if K.dot(ell.coords, P.coords) != 0:
            continue
        line = TernaryForm.from_vector(K, 1, ell.coords)
        if ord_at(C, P, line) == 1:
            return line
    raise AssertionError("no non-tangent line through the point")


def multiplication_kernel(C, P, aux_line=None):
    """Kernel of H0(L(1)) (x) H0(O(1)) -> H0(L(2)) for L = O(P - P0).

    H0(L(1)) is modelled by the conics through (div L1 - P) + P0 and
    H0(L(2)) by cubics modulo F through the same divisor.
    """
    K = C.field
    P0 = C.P0
    if P == P0:
        raise PointEqualsBase("P must differ from the base point P0")
    if not C.contains(P):
        raise PointNotOnCurve(f"{P} is not on {C}")
    L1 = aux_line if aux_line is not None else auxiliary_line(C, P)
    E = divisor_of_form(C, L1) - Divisor.point(P) + Divisor.point(P0)
    W0 = forms_vanishing(C, 2, E)
    if W0.dimension != 3:
        raise DimensionAnomaly(f"h0(L(1)) came out as {W0.dimension}, expected 3")
    X = [TernaryForm.variable(K, i) for i in range(3)]
    products = [Q * x for Q in W0.basis for x in X]
    columns = [p.vector() for p in products] + [C.F.vector()]
    rows = [list(r) for r in zip(*columns)]
    image_rank = linalg.rank(K, rows, 10) - 1
    kernel = [v[:9] for v in linalg.nullspace(K, rows, 10)]
    if len(kernel) != 3 or image_rank != 6:
        raise DimensionAnomaly(f"multiplication kernel has dimension {len(kernel)}, expected 3")
    coeffs = [[v[3 * j:3 * j + 3] for j in range(3)] for v in kernel]
    return SyzygyBasis(C, P, L1, W0.basis, coeffs)

