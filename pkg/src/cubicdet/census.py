"""Projective classification of smooth plane cubics with few rational points.

The scan walks every coefficient vector of P^9(F_q) (first nonzero entry
1), counts rational points with one matrix product against the table of
monomial values at the points of P^2(F_q), and keeps the cubics with at
most ``max_points`` points.  PGL3(F_q) orbits inside that set are the
connected components of the graph whose edges are given by a generating
set of GL3(F_q); smoothness is decided once per orbit.
"""

import json
import math
import os
import time
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .catalog import REPRESENTATIVES
from .curve import (ProjectivePoint, SmoothCubic, parse_point, plane_points, rational_points,
                    singular_point)
from .errors import CubicDetError, UnsupportedField
from .field import GF, prime_power
from .forms import ProjectiveTransform, TernaryForm, monomials, parse_form

CENSUS_FIELDS = (2, 3, 4, 5, 7)
LONG_FIELDS = (7,)
CODE_VERSION = 1
CHUNK = 1 << 18


def pgl3_order(q):
    return q**3 * (q**3 - 1) * (q**2 - 1)


def hasse_ok(q, n):
    return (n - q - 1) ** 2 <= 4 * q


class VectorOps:
    """Row-wise arithmetic on arrays of raw field codes (numpy int64)."""

    def __init__(self, K):
        if K.m > 1 and K.p != 2:
            raise UnsupportedField(f"vectorized arithmetic supports prime fields and GF(2^m), not {K.name}")
        self.K = K
        self.q = q = K.q
        self.prime = K.m == 1
        self.mul_t = np.array([[K.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        self.inv_t = np.array([0] + [K.inv(a) for a in range(1, q)], dtype=np.int64)
        self.powers = np.array([q ** (9 - k) for k in range(10)], dtype=np.int64)

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.q
        return self.mul_t[a, b]

    def matmul(self, V, W):
        """(N, k) @ (k, m) over the field."""
        if self.prime:
            out = np.asarray(V, dtype=np.float64) @ np.asarray(W, dtype=np.float64)
            return np.mod(out, self.q).astype(np.int64)
        out = np.zeros((V.shape[0], W.shape[1]), dtype=np.int64)
        for j in range(V.shape[1]):
            out ^= self.mul_t[V[:, j, None], W[None, j, :]]
        return out

    def normalize(self, V):
        lead_idx = np.argmax(V != 0, axis=1)
        lead = V[np.arange(len(V)), lead_idx]
        return self.mul(V, self.inv_t[lead][:, None])

    def encode(self, V):
        return V @ self.powers

    def decode(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[:, None] // self.powers[None, :]) % self.q


def monomial_values(K):
    """(#P^2(K), 10) table of cubic monomials evaluated at every point."""
    pts = plane_points(K)
    rows = []
    for P in pts:
        rows.append([TernaryForm(K, 3, {m: K.one}).evaluate(P.coords) for m in monomials(3)])
    return np.array(rows, dtype=np.int64), pts


def action_matrix(K, g):
    """S with vec(F o g) = vec(F) @ S for cubic coefficient vectors."""
    T = ProjectiveTransform(K, g)
    return np.array([TernaryForm(K, 3, {m: K.one}).substitute(T).vector() for m in monomials(3)],
                    dtype=np.int64)


def generators(K):
    """Transvections E_ij(alpha), alpha over an F_p-basis of K, and diag(g, 1, 1)."""
    basis = [K.pow(K.generator(), i) if K.m > 1 else 1 for i in range(K.m)]
    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for a in basis:
                g = [[K.one if r == c else 0 for c in range(3)] for r in range(3)]
                g[i][j] = a
                gens.append(g)
    prim = next(x for x in range(1, K.q) if _order(K, x) == K.q - 1)
    if prim != K.one:
        gens.append([[prim, 0, 0], [0, 1, 0], [0, 0, 1]])
    return gens


def _order(K, x):
    n, y = 1, x
    while y != K.one:
        y = K.mul(y, x)
        n += 1
    return n


def enumerate_vectors(q, chunk=CHUNK):
    """All normalized coefficient vectors in increasing code order."""
    powers = np.array([q ** (9 - k) for k in range(10)], dtype=np.int64)
    for lead in range(10):
        width = 9 - lead
        total = q**width
        for start in range(0, total, chunk):
            r = np.arange(start, min(start + chunk, total), dtype=np.int64)
            V = np.zeros((len(r), 10), dtype=np.int64)
            V[:, lead] = 1
            for k in range(lead + 1, 10):
                V[:, k] = (r // powers[k]) % q
            yield V


def point_counts(ops, V, values):
    return (ops.matmul(V, values.T) == 0).sum(axis=1)


@dataclass
class OrbitInfo:
    code: int
    cubic: str
    points: int
    size: int
    smooth: bool
    stabilizer: int = None

    @property
    def classes(self):
        return self.points - 1


@dataclass
class CensusReport:
    q: int
    counts: dict
    orbits: list = field(default_factory=list)
    scanned: int = 0
    kept: int = 0
    smooth_kept: int = 0
    tallies_agree: bool = True
    hasse_ok: bool = True
    orbit_stabilizer_ok: bool = None
    runtime: float = 0.0
    note: str = ""

    @property
    def representatives(self):
        return [o for o in self.orbits if o.smooth]

    def counts_tuple(self):
        return tuple(self.counts[n] for n in range(3))

    def to_json(self):
        out = asdict(self)
        out["counts"] = {str(k): v for k, v in self.counts.items()}
        out["schema"] = 1
        return out


def census_run(q, max_points=3, full=False, stabilizers=None, cache_dir=None):
    """Classify smooth cubics over F_q with at most ``max_points`` points."""
    try:
        p, m = prime_power(q)
    except CubicDetError as exc:
        raise UnsupportedField(f"q = {q} is not a prime power") from exc
    if q >= 8:
        # Hasse: #C(F_q) >= q + 1 - 2 sqrt(q) > 3
        if q + 1 - 2 * math.sqrt(q) <= max_points:
            raise UnsupportedField(f"q = {q} is not covered by the emptiness bound")
        return CensusReport(q, {n: 0 for n in range(max_points)},
                            note="empty by the Hasse bound: every smooth cubic has more points")
    if q not in CENSUS_FIELDS:
        raise UnsupportedField(f"census supports q in {CENSUS_FIELDS} (and q >= 8 trivially)")
    if q in LONG_FIELDS and not full:
        raise UnsupportedField(f"the q = {q} census is a long job; pass full=True (--full)")
    cached = _cache_load(cache_dir, q, max_points)
    if cached is not None:
        return cached
    t0 = time.perf_counter()
    K = GF(p, m)
    ops = VectorOps(K)
    values, _ = monomial_values(K)
    kept_codes, kept_counts, scanned = [], [], 0
    for V in enumerate_vectors(q):
        scanned += len(V)
        n = point_counts(ops, V, values)
        mask = n <= max_points
        if mask.any():
            kept_codes.append(ops.encode(V[mask]))
            kept_counts.append(n[mask])
    codes = np.concatenate(kept_codes)
    npts = np.concatenate(kept_counts)
    order = np.argsort(codes)
    codes, npts = codes[order], npts[order]
    labels, ncomp = _orbits(K, ops, codes)
    # tally 1: point counts seen during the scan; tally 2: per orbit sizes
    scan_tally = np.bincount(npts, minlength=max_points + 1)
    first = np.full(ncomp, -1, dtype=np.int64)
    for idx in range(len(codes) - 1, -1, -1):
        first[labels[idx]] = idx
    sizes = np.bincount(labels, minlength=ncomp)
    comp_pts = npts[first]
    if not (npts == comp_pts[labels]).all():
        raise AssertionError("point count is not constant along an orbit")
    orbit_tally = np.bincount(comp_pts, weights=sizes, minlength=max_points + 1).astype(np.int64)
    report = CensusReport(q, {n: 0 for n in range(max_points)}, scanned=scanned, kept=len(codes))
    report.tallies_agree = bool((scan_tally == orbit_tally).all())
    for c in np.argsort(codes[first]):
        vec = ops.decode([codes[first[c]]])[0].tolist()
        F = TernaryForm.from_vector(K, 3, vec)
        smooth = not F.is_zero() and singular_point(F) is None
        info = OrbitInfo(int(codes[first[c]]), str(F), int(comp_pts[c]), int(sizes[c]), smooth)
        report.orbits.append(info)
        if smooth:
            if info.points == 0:
                raise AssertionError(f"smooth cubic {F} without rational points")
            report.hasse_ok &= hasse_ok(q, info.points)
            report.counts[info.points - 1] += 1
            report.smooth_kept += info.size
    if stabilizers is None:
        stabilizers = q <= 5
    if stabilizers:
        ok = True
        for info in report.representatives:
            F = TernaryForm.from_vector(K, 3, ops.decode([info.code])[0].tolist())
            info.stabilizer = stabilizer_order(F)
            ok &= info.stabilizer * info.size == pgl3_order(q)
        report.orbit_stabilizer_ok = ok
    report.runtime = time.perf_counter() - t0
    _cache_store(cache_dir, q, max_points, report)
    return report


def _orbits(K, ops, codes):
    """Connected components of the generator graph on a sorted code array."""
    V = ops.decode(codes)
    rows, cols = [], []
    for g in generators(K):
        S = action_matrix(K, g)
        img = ops.encode(ops.normalize(ops.matmul(V, S)))
        idx = np.searchsorted(codes, img)
        idx = np.minimum(idx, len(codes) - 1)
        if not (codes[idx] == img).all():
            raise AssertionError("kept set is not closed under the group action")
        rows.append(np.arange(len(codes)))
        cols.append(idx)
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(len(codes), len(codes)))
    ncomp, labels = connected_components(graph, directed=True, connection="weak")
    return labels, ncomp


# --- single orbits ------------------------------------------------------------

def vector_code(K, F):
    """Code of the normalized coefficient vector of F."""
    ops = VectorOps(K)
    V = ops.normalize(np.array([F.vector()], dtype=np.int64))
    return int(ops.encode(V)[0])


def orbit_codes(F):
    """Sorted codes of the PGL3 orbit of F, by breadth-first search."""
    K = F.field
    ops = VectorOps(K)
    Ss = [action_matrix(K, g) for g in generators(K)]
    start = ops.normalize(np.array([F.vector()], dtype=np.int64))
    seen = ops.encode(start)
    frontier = start
    while len(frontier):
        imgs = np.concatenate([ops.normalize(ops.matmul(frontier, S)) for S in Ss])
        img_codes, first = np.unique(ops.encode(imgs), return_index=True)
        fresh = ~np.isin(img_codes, seen, assume_unique=True)
        frontier = imgs[first[fresh]]
        seen = np.union1d(seen, img_codes[fresh])
    return seen


def canonical_code(F):
    """Least code in the orbit: a complete projective-equivalence invariant."""
    return int(orbit_codes(F)[0])


def stabilizer_order(F):
    """Order of the stabilizer of [F] in PGL3(F_q), by enumerating GL3."""
    K = F.field
    ops = VectorOps(K)
    q = K.q
    monos = list(monomials(3))
    index = {m: i for i, m in enumerate(monos)}
    # exponent triple -> variable sequence, e.g. (1, 2, 0) -> (0, 1, 1)
    seqs = {m: [v for v in range(3) for _ in range(m[v])] for m in monos}
    target = ops.normalize(np.array([F.vector()], dtype=np.int64))[0]
    count = 0
    for G in _chunks_gl(q, ops):
        N = len(G)
        out = np.zeros((N, 10), dtype=np.int64)
        for m, c in F.coeffs.items():
            r1, r2, r3 = seqs[m]
            for i in range(3):
                for j in range(3):
                    a = ops.mul(G[:, r1, i], G[:, r2, j])
                    for k in range(3):
                        e = [0, 0, 0]
                        e[i] += 1
                        e[j] += 1
                        e[k] += 1
                        term = ops.mul(ops.mul(a, G[:, r3, k]), c)
                        col = index[tuple(e)]
                        out[:, col] = (out[:, col] + term) % q if ops.prime else out[:, col] ^ term
        nz = (out != 0).any(axis=1)
        normed = ops.normalize(out[nz])
        count += int((normed == target).all(axis=1).sum())
    return count // (q - 1)


def _chunks_gl(q, ops, chunk=1 << 16):
    total = q**9
    powers = np.array([q ** (8 - k) for k in range(9)], dtype=np.int64)
    for start in range(0, total, chunk):
        r = np.arange(start, min(start + chunk, total), dtype=np.int64)
        G = ((r[:, None] // powers[None, :]) % q).reshape(-1, 3, 3)
        d = _det_batch(ops, G)
        yield G[d != 0]


def _det_batch(ops, G):
    m = ops.mul
    t1 = m(G[:, 0, 0], _sub(ops, m(G[:, 1, 1], G[:, 2, 2]), m(G[:, 1, 2], G[:, 2, 1])))
    t2 = m(G[:, 0, 1], _sub(ops, m(G[:, 1, 0], G[:, 2, 2]), m(G[:, 1, 2], G[:, 2, 0])))
    t3 = m(G[:, 0, 2], _sub(ops, m(G[:, 1, 0], G[:, 2, 1]), m(G[:, 1, 1], G[:, 2, 0])))
    return _add(ops, _sub(ops, t1, t2), t3)


def _add(ops, a, b):
    return (a + b) % ops.q if ops.prime else a ^ b


def _sub(ops, a, b):
    return (a - b) % ops.q if ops.prime else a ^ b


# --- cache --------------------------------------------------------------------

def _cache_path(cache_dir, q, max_points):
    return os.path.join(cache_dir, f"census-q{q}-n{max_points}-v{CODE_VERSION}.json")


def _cache_load(cache_dir, q, max_points):
    if not cache_dir:
        return None
    path = _cache_path(cache_dir, q, max_points)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    data.pop("schema", None)
    data["counts"] = {int(k): v for k, v in data["counts"].items()}
    data["orbits"] = [OrbitInfo(**o) for o in data["orbits"]]
    return CensusReport(**data)


def _cache_store(cache_dir, q, max_points, report):
    if not cache_dir:
        return
    os.makedirs(cache_dir, exist_ok=True)
    with open(_cache_path(cache_dir, q, max_points), "w") as fh:
        json.dump(report.to_json(), fh, indent=1)


# --- published representatives -------------------------------------------------

@dataclass
class RepresentativeCheck:
    q: int
    cubic: str
    smooth: bool = False
    points_ok: bool = False
    points: list = field(default_factory=list)
    classes: int = None
    classes_ok: bool = False
    canonical: int = None
    orbit_ok: bool = None
    errors: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.smooth and self.points_ok and self.classes_ok and self.orbit_ok is not False
                and not self.errors)


def check_representative(rep, reports=None):
    """Verify one published cubic: smoothness, points, class count, orbit."""
    from .curve import normalize
    from .detrep import detrep_all
    from .equiv import recover_point
    p, m = prime_power(rep.q)
    K = GF(p, m)
    out = RepresentativeCheck(rep.q, rep.cubic)
    try:
        C = SmoothCubic(parse_form(rep.cubic, K, degree=3))
        out.smooth = True
        pts = rational_points(C)
        out.points = [str(P) for P in pts]
        out.points_ok = set(pts) == {parse_point(s, K) for s in rep.points}
        P0 = ProjectivePoint(K, (1, 0, 0))
        reps = detrep_all(C, P0)
        G, T = normalize(C, P0)
        recovered = set()
        for r in reps:
            Q = ProjectivePoint(K, T.apply(recover_point(G, r.M.substitute(T)).coords))
            recovered.add(Q)
            if Q != r.point:
                out.errors.append(f"representation at {r.point} recovers {Q}")
        out.classes = len(recovered)
        out.classes_ok = out.classes == rep.classes == len(reps)
        if reports and rep.q in reports:
            out.canonical = canonical_code(C.F)
            out.orbit_ok = any(o.code == out.canonical and o.smooth and o.points == len(pts)
                               for o in reports[rep.q].orbits)
    except CubicDetError as exc:
        out.errors.append(f"{type(exc).__name__}: {exc}")
    return out


def verify_representatives(reports=None, representatives=REPRESENTATIVES):
    """Check every published representative; failures become report entries.

    ``reports`` maps q to a CensusReport; orbit membership is checked for
    those fields, together with distinctness of listed representatives.
    """
    checks = [check_representative(rep, reports) for rep in representatives]
    by_field = {}
    for chk in checks:
        if chk.canonical is not None:
            by_field.setdefault(chk.q, []).append(chk)
    for q, group in by_field.items():
        seen = {}
        for chk in group:
            if chk.canonical in seen:
                chk.orbit_ok = False
                chk.errors.append(f"same orbit as {seen[chk.canonical]}")
            seen[chk.canonical] = chk.cubic
    return checks
