"""Smooth plane cubics over finite fields: points, tangents, branches, divisors.

Points over extensions GF(q^e) carry the extension field and use the
canonical embedding GF(q) -> GF(q^e) from :mod:`cubicdet.field` to read the
curve's coefficients.  A closed point of degree e is stored as its explicit
Frobenius orbit over GF(q^e).
"""

from . import poly
from .errors import (CapExceeded, FormVanishesOnCurve, NotNormalized, PointNotOnCurve,
                     RationalCtx, Singular, UsageError, WrongDegree)
from .field import ENUMERATION_CAP, embedding, extension, tower_embedding
from .forms import ProjectiveTransform, TernaryForm, cubic_label, monomials, parse_form

# A singular plane cubic always has a singular point of degree <= 3 over
# GF(q): a unique singular point is Galois-fixed, a line+conic meets in a
# point of degree <= 2, and a triangle of conjugate lines in degree <= 3.
SMOOTHNESS_MAX_DEGREE = 3
BRANCH_PRECISION = 8


# --- points -------------------------------------------------------------------

def canonical(K, coords):
    """Scale so that the first nonzero coordinate is 1."""
    for c in coords:
        if c != 0:
            inv = K.inv(c)
            return tuple(K.mul(x, inv) for x in coords)
    raise ValueError("the zero vector is not a projective point")


class ProjectivePoint:
    """A point of P^2 over the field K, canonically scaled."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = canonical(field, tuple(coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def key(self):
        K = self.field
        return tuple(K.key(c) for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.field == other.field \
            and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        K = self.field
        return "[" + ":".join(K.fmt(c, signed=True) for c in self.coords) + "]"

    __repr__ = __str__


def parse_point(text, field):
    """Parse ``[s:t:u]`` with field-element literals."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise UsageError(f"point must look like [s:t:u], got {text!r}")
    parts = body[1:-1].split(":")
    if len(parts) != 3:
        raise UsageError(f"point must have three coordinates, got {text!r}")
    coords = [field.parse(p.strip()) for p in parts]
    if all(c == 0 for c in coords):
        raise UsageError("[0:0:0] is not a projective point")
    return ProjectivePoint(field, coords)


def plane_points(K):
    """All points of P^2(K) in canonical form, sorted lexicographically."""
    pts = [(0, 0, 1)]
    els = list(K.elements())
    pts += [(0, 1, b) for b in els]
    pts += [(1, a, b) for a in els for b in els]
    return sorted((ProjectivePoint(K, p) for p in pts), key=ProjectivePoint.key)


def points_on_line(K, line):
    """Points of P^2(K) on the line with coefficient vector ``line``."""
    return [P for P in plane_points(K) if K.dot(line, P.coords) == 0]


class ClosedPoint:
    """A Galois orbit of conjugate points: degree e, orbit over GF(q^e)."""

    __slots__ = ("degree", "field", "orbit", "base")

    def __init__(self, base, field, orbit):
        self.base = base
        self.field = field
        self.orbit = tuple(orbit)
        self.degree = len(self.orbit)

    @property
    def point(self):
        return ProjectivePoint(self.field, self.orbit[0])

    def embed(self):
        return embedding(self.base, self.field)

    def key(self):
        return (self.degree, tuple(self.field.key(c) for c in self.orbit[0]))

    def __eq__(self, other):
        return isinstance(other, ClosedPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        if self.degree == 1:
            return str(self.point)
        return f"{self.point}^(deg {self.degree} over {self.base.name}, in {self.field.name})"

    __repr__ = __str__

    def to_json(self):
        K = self.field
        return {"degree": self.degree, "field": K.spec(),
                "orbit": ["[" + ":".join(K.fmt(c, signed=True) for c in p) + "]"
                          for p in self.orbit]}


def closed_point(base, K, coords):
    """The closed point (over ``base``) of a point with coordinates in K."""
    coords = canonical(K, coords)
    q = base.q
    orbit = [coords]
    cur = coords
    while True:
        cur = tuple(K.pow(c, q) for c in cur)
        if cur == coords:
            break
        orbit.append(cur)
    e = len(orbit)
    if K.m == base.m * e:
        small, down = K, None
    else:
        small, _ = extension(base, e)
        down = tower_embedding(base, small, K)
    if down is not None:
        orbit = [tuple(down.preimage(c) for c in p) for p in orbit]
    start = min(range(e), key=lambda i: tuple(small.key(c) for c in orbit[i]))
    orbit = orbit[start:] + orbit[:start]
    return ClosedPoint(base, small, orbit)


def rational_closed_point(P):
    return ClosedPoint(P.field, P.field, [P.coords])


# --- divisors -----------------------------------------------------------------

class Divisor:
    """Finite formal sum of closed points with nonzero integer multiplicities."""

    def __init__(self, terms=None):
        clean = {}
        for pt, m in (terms or {}).items():
            if m:
                clean[pt] = clean.get(pt, 0) + m
        self.terms = {pt: m for pt, m in clean.items() if m}

    @classmethod
    def point(cls, P, mult=1):
        if isinstance(P, ProjectivePoint):
            P = rational_closed_point(P)
        return cls({P: mult})

    def degree(self):
        return sum(m * pt.degree for pt, m in self.terms.items())

    def __add__(self, other):
        out = dict(self.terms)
        for pt, m in other.terms.items():
            out[pt] = out.get(pt, 0) + m
        return Divisor(out)

    def __neg__(self):
        return Divisor({pt: -m for pt, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return Divisor({pt: n * m for pt, m in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_effective(self):
        return all(m > 0 for m in self.terms.values())

    def positive(self):
        return Divisor({pt: m for pt, m in self.terms.items() if m > 0})

    def negative(self):
        return Divisor({pt: -m for pt, m in self.terms.items() if m < 0})

    def __ge__(self, other):
        return (self - other).is_effective() or not (self - other).terms

    def support(self):
        return sorted(self.terms)

    def multiplicity(self, pt):
        if isinstance(pt, ProjectivePoint):
            pt = rational_closed_point(pt)
        return self.terms.get(pt, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{pt}" if m != 1 else str(pt) for pt, m in sorted(self.terms.items()))

    __repr__ = __str__

    def to_json(self):
        return [{"point": pt.to_json(), "multiplicity": m} for pt, m in sorted(self.terms.items())]


# --- smoothness ---------------------------------------------------------------

def _y_coefficients(f):
    """f(x, y, 1) as a list over powers of y of polynomials in x (raw lists)."""
    K = f.field
    out = [[0] * (f.degree + 1) for _ in range(f.degree + 1)]
    for (i, j, k), c in f.coeffs.items():
        out[j][i] = K.add(out[j][i], c)
    return [poly.trim(c) for c in out]


def _binary(f, fixed, var):
    """Restriction of f to a line chart: f with coordinate ``fixed`` = 1 and
    the remaining non-variable coordinate = 0, as a polynomial in ``var``."""
    K = f.field
    out = [0] * (f.degree + 1)
    other = 3 - fixed - var
    for mono, c in f.coeffs.items():
        if mono[other] == 0:
            out[mono[var]] = K.add(out[mono[var]], c)
    return poly.trim(out)


def singular_point(F, max_degree=SMOOTHNESS_MAX_DEGREE):
    """Return (witness, field) for a singular point of F, or None.

    The witness is a ProjectivePoint over F's field or a ClosedPoint whose
    orbit lives in ``field``.

    Points with Z != 0 are scanned by their x-coordinate over GF(q^d),
    d <= max_degree, taking a gcd in y over the algebraic closure; the
    line Z = 0 is handled by a gcd in one variable.
    """
    K = F.field
    if not K.is_finite:
        raise RationalCtx("smoothness is only certified over finite fields")
    polys = [F] + F.gradient()
    if all(p.evaluate((1, 0, 0)) == 0 for p in polys):
        return ProjectivePoint(K, (1, 0, 0)), K
    line = [_binary(p, 1, 0) for p in polys]  # [x:1:0]
    if poly.has_root_in_closure(K, line):
        return _witness_on_line(K, line)
    ycoeffs = [_y_coefficients(p) for p in polys]
    for d in range(1, max_degree + 1):
        if any(d2 % d == 0 and d2 > d for d2 in range(d + 1, max_degree + 1)):
            continue  # covered by the larger field
        L, emb = extension(K, d)
        lifted = [[[emb(c) for c in cx] for cx in yc] for yc in ycoeffs]
        for x0 in L.elements():
            ys = [poly.trim([poly.evaluate(L, cx, x0) for cx in yc]) for yc in lifted]
            if poly.has_root_in_closure(L, ys):
                g = ys[0]
                for other in ys[1:]:
                    g = poly.gcd(L, g, other) if other else g
                if not g:
                    return _smallest_witness(K, L, (x0, 0, 1))
                big, t, y0 = _closure_root(K, L, g)
                return _smallest_witness(K, big, (t(x0), y0, 1))
    return None


def _witness_on_line(K, line):
    g = None
    for p in line:
        if p:
            g = p if g is None else poly.gcd(K, g, p)
    if g is None:
        return ProjectivePoint(K, (0, 1, 0)), K
    big, t, x0 = _closure_root(K, K, g)
    return _smallest_witness(K, big, (x0, 1, 0))


def _smallest_witness(K, L, coords):
    """Express a point over L in its field of definition GF(q^deg)."""
    cp = closed_point(K, L, coords)
    if cp.degree == 1:
        return ProjectivePoint(K, cp.orbit[0]), K
    return cp, cp.field


def _closure_root(K, L, g):
    """A root of g (coefficients in L, an extension of K) in the smallest
    extension that has one; returns (field, embedding L -> field, root)."""
    d = L.m // K.m
    for e in range(1, len(g)):
        big = extension(K, d * e)[0]
        t = tower_embedding(K, L, big)
        rts = poly.roots(big, [t(c) for c in g])
        if rts:
            return big, t, rts[0][0]
    raise AssertionError(f"no root found for {g}")


def is_smooth(F):
    return singular_point(F) is None


# --- curves -------------------------------------------------------------------

class SmoothCubic:
    """A plane cubic certified smooth at construction."""

    def __init__(self, F, check=True):
        if F.is_zero():
            raise WrongDegree("the zero form does not define a curve")
        if F.degree != 3:
            raise WrongDegree(f"expected a cubic, got degree {F.degree}")
        self.F = F
        self.field = F.field
        if check:
            bad = singular_point(F)
            if bad is not None:
                witness, L = bad
                raise Singular(f"{F} is singular at {witness} over {L.name}", witness, L)
        self._points = {}
        self._branches = {}

    def coefficient(self, label):
        """Coefficient a_{ijk} by label ('a012') or exponent triple."""
        if isinstance(label, str):
            for mono in monomials(3):
                if cubic_label(mono) == label:
                    return self.F.coefficient(mono)
            raise KeyError(label)
        return self.F.coefficient(label)

    def contains(self, P):
        if isinstance(P, ClosedPoint):
            return self.F.evaluate(P.orbit[0], P.field, P.embed()) == 0
        K = P.field
        emb = None if K == self.field else embedding(self.field, K)
        return self.F.evaluate(P.coords, K, emb) == 0

    def points(self, e=1):
        if e not in self._points:
            self._points[e] = _enumerate_points(self.F, e)
        return self._points[e]

    def __eq__(self, other):
        return isinstance(other, SmoothCubic) and self.F == other.F

    def __hash__(self):
        return hash(self.F)

    def __str__(self):
        return str(self.F)

    def __repr__(self):
        return f"{type(self).__name__}({self.F} over {self.field})"


class NormalizedCubic(SmoothCubic):
    """Cubic with base point P0 = [1:0:0] and tangent Z = 0 there."""

    def __init__(self, F, check=True):
        super().__init__(F, check)
        c = self.coefficient
        if c("a000") != 0 or c("a001") != 0 or c("a002") == 0:
            raise NotNormalized(f"{F} is not normalized (need a000 = a001 = 0 != a002)")
        self.P0 = ProjectivePoint(self.field, (1, 0, 0))

    def monic_coefficients(self):
        """Coefficients of F / a002, keyed by label."""
        K = self.field
        inv = K.inv(self.coefficient("a002"))
        return {cubic_label(m): K.mul(self.F.coefficient(m), inv) for m in monomials(3)}

    def third_point(self):
        """R with div(Z) = 2 P0 + R: the zero of a011 X + a111 Y on Z = 0."""
        K = self.field
        return ProjectivePoint(K, (self.coefficient("a111"), K.neg(self.coefficient("a011")), 0))

    def is_flex_base(self):
        return self.coefficient("a011") == 0


def cubic_make(F):
    """Certify ``F`` as a smooth cubic (raises ``Singular``/``WrongDegree``)."""
    return SmoothCubic(F)


def make_cubic(text, field):
    return SmoothCubic(parse_form(text, field, degree=3))


def _enumerate_points(F, e):
    K0 = F.field
    if not K0.is_finite:
        raise RationalCtx("point enumeration needs a finite field")
    K, emb = extension(K0, e)
    if K.q**2 > ENUMERATION_CAP * 10:
        raise CapExceeded(f"enumerating P^2(GF({K.q})) exceeds the cap")
    Fe = F if e == 1 else F.map_coefficients(K, emb)
    out = []
    if K.q <= 32:
        for P in plane_points(K):
            if Fe.evaluate(P.coords) == 0:
                out.append(P)
        return out
    if Fe.evaluate((1, 0, 0)) == 0:
        out.append(ProjectivePoint(K, (1, 0, 0)))
    inf = _binary(Fe, 1, 0)
    if inf:
        out += [ProjectivePoint(K, (x, 1, 0)) for x, _ in poly.roots(K, inf)]
    else:
        # F(x, 1, 0) vanishes identically: the whole line Z = 0 lies on the curve
        out += [ProjectivePoint(K, (x, 1, 0)) for x in K.elements()]
    yc = _y_coefficients(Fe)
    for x0 in K.elements():
        fy = poly.trim([poly.evaluate(K, cx, x0) for cx in yc])
        if not fy:
            out += [ProjectivePoint(K, (x0, y, 1)) for y in K.elements()]
            continue
        out += [ProjectivePoint(K, (x0, y, 1)) for y, _ in poly.roots(K, fy)]
    return sorted(out, key=ProjectivePoint.key)


def rational_points(C, e=1):
    """All points of C over GF(q^e), canonically scaled and sorted."""
    return list(C.points(e))


def tangent_line(C, P):
    """Tangent line at P, first nonzero coefficient scaled to 1."""
    K = P.field
    emb = None if K == C.field else embedding(C.field, K)
    if C.F.evaluate(P.coords, K, emb) != 0:
        raise PointNotOnCurve(f"{P} is not on {C}")
    grad = [g.evaluate(P.coords, K, emb) for g in C.F.gradient()]
    grad = canonical(K, grad)
    return TernaryForm.from_vector(K, 1, grad)


def normalize(C, P0):
    """Move P0 to [1:0:0] and its tangent to Z = 0.

    Returns ``(G, T)`` where G = F o T is a :class:`NormalizedCubic` and T
    maps new coordinates to old ones (T [1:0:0] = P0).
    """
    K = C.field
    if not C.contains(P0):
        raise PointNotOnCurve(f"{P0} is not on {C}")
    ell = tangent_line(C, P0).vector()
    second = next(P for P in points_on_line(K, ell) if P != P0)
    third = next(i for i in range(3) if ell[i] != 0)
    e3 = [1 if i == third else 0 for i in range(3)]
    cols = [P0.coords, second.coords, e3]
    T = ProjectiveTransform(K, [[cols[c][r] for c in range(3)] for r in range(3)])
    G = C.F.substitute(T)
    return NormalizedCubic(G, check=False), T


# --- local branches -----------------------------------------------------------

def _series_mul(K, a, b, N):
    out = [0] * N
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), N - i)):
            y = b[j]
            if y != 0:
                out[i + j] = K.add(out[i + j], K.mul(x, y))
    return out


def series_eval(form, coords, K, N, embed=None):
    """Evaluate ``form`` at power-series coordinates, truncated mod t^N."""
    d = form.degree
    powers = []
    for s in coords:
        row = [[K.one] + [0] * (N - 1)]
        for _ in range(d):
            row.append(_series_mul(K, row[-1], s, N))
        powers.append(row)
    acc = [0] * N
    for (i, j, k), c in form.coeffs.items():
        if embed is not None:
            c = embed(c)
        term = _series_mul(K, _series_mul(K, powers[0][i], powers[1][j], N), powers[2][k], N)
        for n in range(N):
            if term[n] != 0:
                acc[n] = K.add(acc[n], K.mul(c, term[n]))
    return acc


def valuation(series):
    for i, c in enumerate(series):
        if c != 0:
            return i
    return len(series)


class LocalBranch:
    """Truncated parametrization t -> (X(t), Y(t), Z(t)) of C near a point.

    One coordinate is fixed to 1 (the chart), another is the point's value
    plus t, and the third is solved for term by term.
    """

    def __init__(self, curve, point, field, embed, chart, param, coords, precision):
        self.curve = curve
        self.point = point
        self.field = field
        self.embed = embed
        self.chart = chart
        self.param = param
        self.coords = coords
        self.precision = precision

    def evaluate(self, form):
        return series_eval(form, self.coords, self.field, self.precision, self.embed)

    def residual(self):
        return self.evaluate(self.curve.F)


def _point_args(C, P):
    if isinstance(P, ClosedPoint):
        return P.orbit[0], P.field, P.embed()
    K = P.field
    return P.coords, K, embedding(C.field, K)


def local_branch(C, P, precision=BRANCH_PRECISION):
    coords, K, emb = _point_args(C, P)
    cache_key = (K, coords)
    cached = C._branches.get(cache_key)
    if cached is not None and cached.precision >= precision:
        return cached
    F = C.F
    if F.evaluate(coords, K, emb) != 0:
        raise PointNotOnCurve(f"{P} is not on {C}")
    chart = next(i for i in range(3) if coords[i] != 0)
    others = [i for i in range(3) if i != chart]
    grad = [g.evaluate(coords, K, emb) for g in F.gradient()]
    # solve for the coordinate whose partial is nonzero; the other one is t
    solve = others[1] if grad[others[1]] != 0 else others[0]
    param = others[0] if solve == others[1] else others[1]
    slope = grad[solve]
    if slope == 0:
        raise Singular(f"{C} is singular at {P}")
    N = precision
    series = [None, None, None]
    series[chart] = [K.one] + [0] * (N - 1)
    series[param] = [coords[param], K.one] + [0] * (N - 2)
    solved = [coords[solve]] + [0] * (N - 1)
    series[solve] = solved
    inv_slope = K.inv(slope)
    for k in range(1, N):
        r = series_eval(F, series, K, k + 1, emb)[k]
        if r != 0:
            solved[k] = K.neg(K.mul(r, inv_slope))
    branch = LocalBranch(C, P, K, emb, chart, param, series, N)
    C._branches[cache_key] = branch
    return branch


def ord_at(C, P, G):
    """Intersection multiplicity of G with C at P (rational or closed point)."""
    coords, K, emb = _point_args(C, P)
    if G.evaluate(coords, K, emb) != 0:
        return 0
    bound = 3 * max(G.degree, 1)
    N = BRANCH_PRECISION
    while True:
        branch = local_branch(C, P, N)
        v = valuation(branch.evaluate(G))
        if v < N:
            return v
        if N > bound:
            raise FormVanishesOnCurve(f"{G} vanishes on {C}")
        N *= 2


# --- divisors of forms --------------------------------------------------------

def _reduce_mod_monic(K, ys, f):
    """Reduce a polynomial in y (coefficients: polys in x) modulo the monic
    y^n + f[n-1] y^(n-1) + ... + f[0]."""
    ys = [list(c) for c in ys]
    n = len(f)
    for top in range(len(ys) - 1, n - 1, -1):
        c = ys[top]
        if not c:
            continue
        for j in range(n):
            ys[top - n + j] = poly.sub(K, ys[top - n + j], poly.mul(K, c, f[j]))
        ys[top] = []
    ys = ys[:n] + [[] for _ in range(n - len(ys))]
    return ys


def _det3_poly(K, M):
    def m(a, b):
        return poly.mul(K, a, b)
    out = []
    for j in range(3):
        cols = [c for c in range(3) if c != j]
        minor = poly.sub(K, m(M[1][cols[0]], M[2][cols[1]]), m(M[1][cols[1]], M[2][cols[0]]))
        term = m(M[0][j], minor)
        out = poly.add(K, out, term) if j % 2 == 0 else poly.sub(K, out, term)
    return out


def _norm_resultant(F, G):
    """Res_y(F(x,y,1), G(x,y,1)) up to a unit, for F with a111 != 0."""
    K = F.field
    fy = _y_coefficients(F)
    lead = fy[3][0] if fy[3] else 0
    inv = K.inv(lead)
    monic = [poly.scale(K, c, inv) for c in fy[:3]]
    gy = _y_coefficients(G)
    rows = []
    cur = gy
    for _ in range(3):
        rows.append(_reduce_mod_monic(K, cur, monic))
        cur = [[]] + rows[-1]
    # rows[i] = coefficients of G*y^i mod F in basis 1, y, y^2
    M = [[rows[i][j] for i in range(3)] for j in range(3)]
    return _det3_poly(K, M)


def _roots_over_extensions(base, coeffs_base, max_total, cap):
    """Roots of a polynomial over base in extensions, one per Galois orbit.

    Yields (e, field, root, multiplicity) with root of exact degree e.
    """
    found = 0
    e = 0
    while found < max_total:
        e += 1
        if e > max_total:
            break
        L, emb = extension(base, e, cap)
        f = [emb(c) for c in coeffs_base]
        seen = set()
        for r, m in poly.roots(L, f):
            if r in seen:
                continue
            orbit = [r]
            x = L.pow(r, base.q)
            while x != r:
                orbit.append(x)
                x = L.pow(x, base.q)
            seen.update(orbit)
            if len(orbit) == e:
                found += e * m
                yield e, L, r, m


def divisor_of_form(C, G, cap=ENUMERATION_CAP):
    """div_C(G): the effective divisor of degree 3 deg G cut out by G on C."""
    K = C.field
    if G.is_zero():
        raise FormVanishesOnCurve("the zero form vanishes on every curve")
    if G.degree == 0:
        return Divisor()
    F = C.F
    O = next(P for P in plane_points(K) if F.evaluate(P.coords) != 0)
    r = next(i for i in range(3) if O.coords[i] != 0)
    a, b = [i for i in range(3) if i != r]
    cols = [[1 if i == a else 0 for i in range(3)], list(O.coords), [1 if i == b else 0 for i in range(3)]]
    T = ProjectiveTransform(K, [[cols[c][row] for c in range(3)] for row in range(3)])
    Ft, Gt = F.substitute(T), G.substitute(T)
    total = 3 * G.degree
    candidates = []  # (field, coords in transformed system)
    res = poly.trim(_norm_resultant(Ft, Gt))
    if not res:
        raise FormVanishesOnCurve(f"{G} shares a component with {C}")
    affine_total = poly.deg(res)
    for e, L, x0, _ in _roots_over_extensions(K, res, affine_total, cap):
        emb = embedding(K, L)
        fy = poly.trim([poly.evaluate(L, [emb(c) for c in cx], x0) for cx in _y_coefficients(Ft)])
        gy = poly.trim([poly.evaluate(L, [emb(c) for c in cx], x0) for cx in _y_coefficients(Gt)])
        h = poly.gcd(L, fy, gy) if gy else poly.monic(L, fy)
        for M, y0 in _roots_in_towers(K, L, h, cap):
            xM = tower_embedding(K, L, M)(x0)
            candidates.append((M, (xM, y0, M.one)))
    hinf = poly.trim(_binary(Gt, 0, 1))
    finf = _binary(Ft, 0, 1)
    h = poly.gcd(K, finf, hinf) if hinf else poly.monic(K, finf)
    for M, y0 in _roots_in_towers(K, K, h, cap):
        candidates.append((M, (M.one, y0, 0)))
    points = {}
    for M, coords in candidates:
        emb = embedding(K, M)
        orig = T.apply(coords, M, emb)
        cp = closed_point(K, M, orig)
        points[cp] = True
    div = Divisor({cp: ord_at(C, cp, G) for cp in points})
    if div.degree() != total:
        raise AssertionError(f"Bezout failed: degree {div.degree()} != {total}")
    return div


def _roots_in_towers(base, L, h, cap):
    """Distinct roots of h (over L = GF(q^e)) in L, GF(q^2e), GF(q^3e)."""
    if poly.deg(h) < 1:
        return []
    out = []
    e = L.m // base.m
    need = poly.deg(h)
    for k in (1, 2, 3):
        if k > 1 and base.q ** (e * k) > cap:
            raise CapExceeded(f"GF({base.q}^{e * k}) exceeds the cap")
        M, _ = extension(base, e * k, cap)
        up = tower_embedding(base, L, M)
        rts = poly.roots(M, [up(c) for c in h])
        if sum(m for _, m in rts) == need or k == 3:
            out = [(M, y) for y, _ in rts]
            break
    return out
