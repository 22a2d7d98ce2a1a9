"""Ternary forms, 3x3 matrices of linear forms, and coordinate changes.

Monomials are exponent triples ``(i, j, k)`` for ``X^i Y^j Z^k`` and are
ordered graded-lexicographically with X > Y > Z.  For cubics this is the
order ``a000, a001, a002, a011, a012, a022, a111, a112, a122, a222`` where
``a_{ijk}`` is indexed by the variables it multiplies (0 = X, 1 = Y, 2 = Z).
"""

from functools import lru_cache

from . import linalg, syntax
from .errors import NotHomogeneous, SingularTransform, UsageError


@lru_cache(maxsize=None)
def monomials(d):
    """Exponent triples of degree d in grlex order (X > Y > Z)."""
    return tuple((i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1))


CUBIC_MONOMIALS = monomials(3)
VARIABLE_NAMES = ("X", "Y", "Z")


def cubic_label(mono):
    """'a012'-style label of a cubic monomial."""
    return "a" + "".join(str(v) * e for v, e in enumerate(mono))


class TernaryForm:
    """Homogeneous polynomial in X, Y, Z with sparse nonzero coefficients."""

    __slots__ = ("field", "degree", "coeffs", "_hash")

    def __init__(self, field, degree, coeffs=None):
        self.field = field
        self.degree = degree
        clean = {}
        for mono, c in (coeffs or {}).items():
            if c != 0:
                if sum(mono) != degree:
                    raise NotHomogeneous(f"monomial {mono} is not of degree {degree}")
                clean[tuple(mono)] = c
        self.coeffs = clean
        self._hash = None

    @classmethod
    def zero(cls, field, degree):
        return cls(field, degree)

    @classmethod
    def variable(cls, field, index):
        mono = [0, 0, 0]
        mono[index] = 1
        return cls(field, 1, {tuple(mono): field.one})

    @classmethod
    def constant(cls, field, c):
        return cls(field, 0, {(0, 0, 0): c})

    @classmethod
    def from_vector(cls, field, degree, vector):
        monos = monomials(degree)
        if len(vector) != len(monos):
            raise ValueError(f"expected {len(monos)} coefficients")
        return cls(field, degree, dict(zip(monos, vector)))

    @classmethod
    def linear(cls, field, a, b, c):
        return cls.from_vector(field, 1, [a, b, c])

    def vector(self):
        return [self.coeffs.get(m, 0) for m in monomials(self.degree)]

    def coefficient(self, mono):
        return self.coeffs.get(tuple(mono), 0)

    def is_zero(self):
        return not self.coeffs

    # arithmetic
    def _check(self, other):
        if other.field != self.field:
            raise ValueError("forms over different fields")
        if other.degree != self.degree and self.coeffs and other.coeffs:
            raise NotHomogeneous(f"adding degree {self.degree} and {other.degree}")

    def __add__(self, other):
        self._check(other)
        K = self.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = K.add(out.get(m, 0), c)
        d = self.degree if self.coeffs else other.degree
        return TernaryForm(K, d, out)

    def __neg__(self):
        K = self.field
        return TernaryForm(K, self.degree, {m: K.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        K = self.field
        if c == 0:
            return TernaryForm(K, self.degree)
        return TernaryForm(K, self.degree, {m: K.mul(v, c) for m, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return self.scale(self.field.coerce(other))
        K = self.field
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = K.add(out.get(m, 0), K.mul(c1, c2))
        return TernaryForm(K, self.degree + other.degree, out)

    def __pow__(self, n):
        out = TernaryForm.constant(self.field, self.field.one)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if self.field != other.field:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self.coeffs.items())))
        return self._hash

    def partial(self, var):
        K = self.field
        out = {}
        for m, c in self.coeffs.items():
            e = m[var]
            if e:
                n = list(m)
                n[var] -= 1
                out[tuple(n)] = K.add(out.get(tuple(n), 0), K.mul(K.from_int(e), c))
        return TernaryForm(K, max(self.degree - 1, 0), out)

    def gradient(self):
        return [self.partial(v) for v in range(3)]

    def evaluate(self, point, K=None, embed=None):
        """Value at ``point``; coordinates may live in an extension K."""
        if K is None:
            K = self.field
        d = self.degree
        pw = []
        for x in point:
            row = [K.one]
            for _ in range(d):
                row.append(K.mul(row[-1], x))
            pw.append(row)
        acc = 0
        for (i, j, k), c in self.coeffs.items():
            if embed is not None:
                c = embed(c)
            t = K.mul(K.mul(pw[0][i], pw[1][j]), K.mul(pw[2][k], c))
            acc = K.add(acc, t)
        return acc

    def map_coefficients(self, K, fn):
        """Same form with coefficients pushed through ``fn`` into field K."""
        return TernaryForm(K, self.degree, {m: fn(c) for m, c in self.coeffs.items()})

    def substitute(self, T):
        """The form v -> f(T v)."""
        return substitute(self, T)

    def __str__(self):
        return print_form(self)

    def __repr__(self):
        return f"TernaryForm({print_form(self)!r} over {self.field})"


# --- coordinate changes -------------------------------------------------------

class ProjectiveTransform:
    """Invertible 3x3 matrix acting on coordinate column vectors."""

    def __init__(self, field, matrix, inverse=None):
        self.field = field
        self.matrix = [list(r) for r in matrix]
        inv = inverse if inverse is not None else linalg.inverse(field, self.matrix)
        if inv is None:
            raise SingularTransform("transform matrix is singular")
        self.inverse_matrix = [list(r) for r in inv]
        if linalg.matmul(field, self.matrix, self.inverse_matrix) != linalg.identity(3):
            raise SingularTransform("inverse check failed")

    @classmethod
    def identity(cls, field):
        return cls(field, linalg.identity(3), linalg.identity(3))

    def inverse(self):
        return ProjectiveTransform(self.field, self.inverse_matrix, self.matrix)

    def __matmul__(self, other):
        K = self.field
        return ProjectiveTransform(K, linalg.matmul(K, self.matrix, other.matrix),
                                   linalg.matmul(K, other.inverse_matrix, self.inverse_matrix))

    def apply(self, point, K=None, embed=None):
        """T . point, with point coordinates possibly in an extension K."""
        if K is None:
            K = self.field
        M = self.matrix
        if embed is not None:
            M = [[embed(c) for c in row] for row in M]
        return tuple(K.dot(row, point) for row in M)

    def is_identity(self):
        return self.matrix == linalg.identity(3)

    def __eq__(self, other):
        return isinstance(other, ProjectiveTransform) and self.matrix == other.matrix

    def __repr__(self):
        K = self.field
        return "ProjectiveTransform(" + str([[K.fmt(c) for c in r] for r in self.matrix]) + ")"


def substitute(f, T):
    """f o T: the form obtained by replacing (X, Y, Z) with T.(X, Y, Z)."""
    K = f.field
    lines = [TernaryForm(K, 1, {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]})
             for r in T.matrix]
    powers = []
    for ell in lines:
        row = [TernaryForm.constant(K, K.one)]
        for _ in range(f.degree):
            row.append(row[-1] * ell)
        powers.append(row)
    out = TernaryForm(K, f.degree)
    for (i, j, k), c in f.coeffs.items():
        out = out + (powers[0][i] * powers[1][j] * powers[2][k]).scale(c)
    return TernaryForm(K, f.degree, out.coeffs)


# --- matrices of linear forms -------------------------------------------------

class LinearMatrix:
    """M = X*M0 + Y*M1 + Z*M2, stored entrywise as degree-1 forms."""

    def __init__(self, field, entries):
        self.field = field
        rows = []
        for row in entries:
            if len(row) != 3:
                raise ValueError("LinearMatrix must be 3x3")
            out = []
            for e in row:
                if not e.is_zero() and e.degree != 1:
                    raise NotHomogeneous("matrix entries must be linear forms")
                out.append(TernaryForm(field, 1, e.coeffs))
            rows.append(tuple(out))
        if len(rows) != 3:
            raise ValueError("LinearMatrix must be 3x3")
        self.entries = tuple(rows)

    @classmethod
    def from_coefficient_matrices(cls, field, M0, M1, M2):
        entries = [[TernaryForm.linear(field, M0[i][j], M1[i][j], M2[i][j]) for j in range(3)]
                   for i in range(3)]
        return cls(field, entries)

    def coefficient_matrices(self):
        """(M0, M1, M2): the X, Y and Z coefficient matrices."""
        out = []
        for v, mono in enumerate(((1, 0, 0), (0, 1, 0), (0, 0, 1))):
            out.append([[e.coefficient(mono) for e in row] for row in self.entries])
        return tuple(out)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self):
        return form_det(self)

    def adjugate(self):
        return form_adjugate(self)

    def transpose(self):
        return LinearMatrix(self.field, [[self.entries[j][i] for j in range(3)] for i in range(3)])

    def evaluate(self, point, K=None, embed=None):
        return [[e.evaluate(point, K, embed) for e in row] for row in self.entries]

    def substitute(self, T):
        return LinearMatrix(self.field, [[substitute(e, T) for e in row] for row in self.entries])

    def transform(self, A=None, B=None):
        """A . M . B for constant 3x3 matrices (None means identity)."""
        K = self.field
        Ms = self.coefficient_matrices()
        if A is not None:
            Ms = [linalg.matmul(K, A, M) for M in Ms]
        if B is not None:
            Ms = [linalg.matmul(K, M, B) for M in Ms]
        return LinearMatrix.from_coefficient_matrices(K, *Ms)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        return isinstance(other, LinearMatrix) and self.field == other.field \
            and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def rows_as_strings(self):
        return [[print_form(e) for e in row] for row in self.entries]

    def to_json(self):
        return {"entries": self.rows_as_strings()}

    @classmethod
    def from_json(cls, obj, field):
        rows = obj["entries"] if isinstance(obj, dict) else obj
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise UsageError("matrix JSON must hold a 3x3 array of form strings")
        return cls(field, [[parse_form(str(s), field, allow_zero=True) for s in r] for r in rows])

    def __str__(self):
        rows = self.rows_as_strings()
        width = max(len(s) for r in rows for s in r)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in r) + " ]" for r in rows)

    def __repr__(self):
        return f"LinearMatrix({self.rows_as_strings()})"


def _minor(M, rows, cols):
    (a, b), (c, d) = rows, cols
    return M[a][c] * M[b][d] - M[a][d] * M[b][c]


def form_det(M):
    """Symbolic determinant by cofactor expansion along the first row."""
    E = M.entries
    out = TernaryForm(M.field, 3)
    for j in range(3):
        cols = [c for c in range(3) if c != j]
        term = E[0][j] * _minor(E, (1, 2), cols)
        out = out + term if j % 2 == 0 else out - term
    return TernaryForm(M.field, 3, out.coeffs)


def form_adjugate(M):
    """adj(M) as a 3x3 list of quadratic forms: adj(M) M = M adj(M) = det(M) I."""
    E = M.entries
    adj = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            minor = _minor(E, rows, cols)
            minor = TernaryForm(M.field, 2, minor.coeffs)
            adj[i][j] = minor if (i + j) % 2 == 0 else -minor
    return adj


def form_matmul(A, B):
    """Product of two 3x3 arrays of forms."""
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = A[i][0] * B[0][j]
            for k in (1, 2):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


# --- parsing and printing -----------------------------------------------------

class _FormAlgebra:
    """Non-homogeneous polynomials as dicts mono -> raw coefficient."""

    def __init__(self, field):
        self.K = field

    def _clean(self, d):
        return {m: c for m, c in d.items() if c != 0}

    def const(self, n):
        return self._clean({(0, 0, 0): self.K.from_int(n)})

    def gen(self):
        return {(0, 0, 0): self.K.generator()}

    def var(self, name):
        mono = [0, 0, 0]
        mono[VARIABLE_NAMES.index(name)] = 1
        return {tuple(mono): self.K.one}

    def add(self, a, b):
        out = dict(a)
        for m, c in b.items():
            out[m] = self.K.add(out.get(m, 0), c)
        return self._clean(out)

    def neg(self, a):
        return {m: self.K.neg(c) for m, c in a.items()}

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = self.K.add(out.get(m, 0), self.K.mul(c1, c2))
        return self._clean(out)

    def div(self, a, b):
        if set(b) - {(0, 0, 0)}:
            raise UsageError("division by a non-constant")
        c = b.get((0, 0, 0), 0)
        if c == 0:
            raise UsageError("division by zero")
        inv = self.K.inv(c)
        return self._clean({m: self.K.mul(v, inv) for m, v in a.items()})

    def pow(self, a, n):
        out = {(0, 0, 0): self.K.one}
        for _ in range(n):
            out = self.mul(out, a)
        return out


def parse_polynomial(text, field):
    """Parse to a dict mono -> coefficient without a homogeneity check."""
    return syntax.evaluate(syntax.parse(text), _FormAlgebra(field))


def parse_form(text, field, degree=None, allow_zero=False):
    """Parse a homogeneous form such as ``X^2*Z + X*Y^2 + w*Y*Z^2``."""
    coeffs = parse_polynomial(text, field)
    degrees = {sum(m) for m in coeffs}
    if not coeffs:
        if allow_zero or degree is not None:
            return TernaryForm(field, degree if degree is not None else 1)
        raise NotHomogeneous(f"{text!r} is the zero polynomial")
    if len(degrees) > 1:
        raise NotHomogeneous(f"{text!r} mixes degrees {sorted(degrees)}")
    d = degrees.pop()
    if degree is not None and d != degree:
        raise NotHomogeneous(f"{text!r} has degree {d}, expected {degree}")
    return TernaryForm(field, d, coeffs)


def _monomial_str(mono):
    parts = []
    for name, e in zip(VARIABLE_NAMES, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_coefficient(field, c):
    """Signed text of a coefficient, e.g. ``-2``, ``w+1``, ``1/17``."""
    return field.fmt(c, signed=True)


def print_form(f):
    if f.is_zero():
        return "0"
    K = f.field
    pieces = []
    for mono in monomials(f.degree):
        c = f.coeffs.get(mono)
        if c is None:
            continue
        text = format_coefficient(K, c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        mstr = _monomial_str(mono)
        if not mstr:
            body = text
        elif text == "1":
            body = mstr
        else:
            if "+" in text or "-" in text:
                text = f"({text})"
            body = f"{text}*{mstr}"
        pieces.append((negative, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out
