"""Exact arithmetic in F_p, GF(p^m) and Q.

Field objects do the arithmetic on *raw* values: ``int`` codes for finite
fields and ``Fraction`` for Q.  For GF(p^m) the code of an element
``c_0 + c_1 w + ... + c_{m-1} w^{m-1}`` is ``c_0 + c_1 p + ... ``, so the
prime subfield occupies codes ``0..p-1`` and ``0``/``1`` are always the
zero and one of the field.  Ordering elements by code is ordering by
coefficient vector (highest power most significant).

:class:`FieldElement` wraps a raw value together with its field for
user-facing arithmetic; the geometric modules work on raw values directly.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import syntax
from .errors import (BadFieldLiteral, CapExceeded, CtxMismatch, DivisionByZero,
                     FormSyntaxError, NotPrime, RationalCtx, ReducibleModulus,
                     UsageError)

ENUMERATION_CAP = 10**6


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p as int lists (low degree first) -------------------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        coef = a[i] * inv_lead % p
        if coef:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - coef * b[j]) % p
    return _trim(a[:db])


def is_irreducible_fp(modulus, p):
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _fp_mod(modulus, divisor, p):
                return False
    return True


def first_irreducible(p, m):
    """Lexicographically first monic irreducible of degree m over F_p.

    Coefficient vectors are compared from the x^(m-1) coefficient down to the
    constant term, so GF(8) gets x^3+x+1 and GF(9) gets x^2+1.
    """
    if m == 1:
        return (0, 1)
    for top in itertools.product(range(p), repeat=m):
        if top[-1] == 0:
            continue
        modulus = tuple(reversed(top)) + (1,)
        if is_irreducible_fp(modulus, p):
            return modulus
    raise AssertionError("no irreducible polynomial found")


# --- fields ------------------------------------------------------------------

class _ConstAlgebra:
    """Folds a parsed expression into a field constant."""

    def __init__(self, field, text):
        self.field = field
        self.text = text

    def const(self, n):
        return self.field.from_int(n)

    def gen(self):
        return self.field.generator()

    def var(self, name):
        raise BadFieldLiteral(f"variable {name} in field literal {self.text!r}")

    def add(self, a, b):
        return self.field.add(a, b)

    def sub(self, a, b):
        return self.field.sub(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def div(self, a, b):
        if b == 0:
            raise BadFieldLiteral(f"division by zero in {self.text!r}")
        return self.field.div(a, b)

    def pow(self, a, n):
        return self.field.pow(a, n)


class Field:
    is_finite = True
    zero = 0
    one = 1

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys):
        acc = self.zero
        for x, y in zip(xs, ys):
            if x != 0 and y != 0:
                acc = self.add(acc, self.mul(x, y))
        return acc

    def parse(self, text):
        """Parse a field literal such as ``3``, ``w+1`` or ``-1/17``."""
        try:
            tree = syntax.parse(str(text))
        except FormSyntaxError as exc:
            raise BadFieldLiteral(str(exc)) from None
        return syntax.evaluate(tree, _ConstAlgebra(self, text))

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise CtxMismatch(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        return self._coerce_other(value)

    def _coerce_other(self, value):
        raise CtxMismatch(f"cannot interpret {value!r} in {self}")

    def __call__(self, value):
        return FieldElement(self, self.coerce(value))

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class PrimeField(Field):
    """F_p with plain modular arithmetic."""

    def __init__(self, p):
        self.p = p
        self.m = 1
        self.q = p
        self.modulus = (0, 1)
        self.name = f"F_{p}"
        self.kind = "finite"

    def _key(self):
        return ("finite", self.p, self.modulus)

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a):
        return self.p - a if a else 0

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def from_int(self, n):
        return n % self.p

    def generator(self):
        raise BadFieldLiteral(f"'w' is not defined in the prime field {self.name}")

    def frobenius(self, a, times=1):
        return a

    def elements(self):
        return range(self.p)

    def key(self, a):
        return a

    def fmt(self, a, signed=False):
        if signed and self.p > 2 and a > self.p // 2:
            return str(a - self.p)
        return str(a)

    def digits(self, a):
        return [a]

    def spec(self):
        return f"q={self.p}"


class ExtensionField(Field):
    """GF(p^m), m >= 2, with log/antilog tables.

    Multiplication uses the antilog table; for odd p addition goes through a
    Zech logarithm table, for p = 2 it is XOR on codes.
    """

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self.kind = "finite"
        self.name = f"GF({self.q})"
        self._top = p ** (m - 1)
        self._build_tables()

    def _key(self):
        return ("finite", self.p, self.modulus)

    # digit-level helpers, only used while building tables
    def digits(self, a):
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds):
        code = 0
        for d in reversed(ds):
            code = code * self.p + d % self.p
        return code

    def _mul_by_w(self, a):
        p = self.p
        top = a // self._top
        shifted = (a % self._top) * p
        if top == 0:
            return shifted
        ds = self.digits(shifted)
        for i in range(self.m):
            ds[i] = (ds[i] - top * self.modulus[i]) % p
        return self.from_digits(ds)

    def _slow_mul(self, a, b):
        # schoolbook multiply on digits, then reduce by the modulus
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        prod = [c % p for c in prod]
        return self.from_digits(_fp_mod(prod, list(self.modulus), p) + [0] * self.m)

    def _slow_pow(self, a, n):
        result = 1
        while n:
            if n & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return result

    def _is_primitive(self, g):
        n = self.q - 1
        return all(self._slow_pow(g, n // r) != 1 for r in prime_factors(n))

    def _mul_matrix(self, c):
        # F_p-matrix of x -> c*x acting on digit row vectors
        rows = []
        x = c
        for _ in range(self.m):
            rows.append(self.digits(x))
            x = self._mul_by_w(x)
        return np.array(rows, dtype=np.int64)

    def _build_tables(self):
        n = self.q - 1
        p = self.p
        g = next(x for x in range(2, self.q) if self._is_primitive(x))
        weights = np.array([p**i for i in range(self.m)], dtype=np.int64)
        # block doubling: exp[2^j : 2^(j+1)] = exp[0 : 2^j] * g^(2^j)
        digits = np.zeros((n, self.m), dtype=np.int64)
        digits[0, 0] = 1
        filled = 1
        power = g
        while filled < n:
            take = min(filled, n - filled)
            block = digits[:take] @ self._mul_matrix(power) % p
            digits[filled:filled + take] = block
            filled += take
            power = self._slow_mul(power, power)
        codes = digits @ weights
        log = np.zeros(self.q, dtype=np.int64)
        log[codes] = np.arange(n)
        if len(set(codes.tolist())) != n:
            raise AssertionError("generator order mismatch")
        self._exp = codes.tolist() * 2
        self._log = log.tolist()
        self._n = n
        if p != 2:
            # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
            d0 = codes % p
            one_plus = codes - d0 + (d0 + 1) % p
            zech = np.where(one_plus == 0, -1, log[one_plus])
            self._zech = zech.tolist()
            self._half = n // 2

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._n]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        return self._exp[(self._log[a] + self._half) % self._n]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return self._exp[(self._n - self._log[a]) % self._n]

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self._n]

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise DivisionByZero("division by zero")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % self._n]

    def from_int(self, n):
        return n % self.p

    def generator(self):
        return self.p

    def frobenius(self, a, times=1):
        return self.pow(a, self.p ** (times % self.m))

    def elements(self):
        return range(self.q)

    def key(self, a):
        return a

    def fmt(self, a, signed=False):
        if a == 0:
            return "0"
        terms = []
        for i, d in reversed(list(enumerate(self.digits(a)))):
            if not d:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                mono = "w" if i == 1 else f"w^{i}"
                terms.append(mono if d == 1 else f"{d}*{mono}")
        return "+".join(terms)

    def spec(self):
        text = f"q={self.q}"
        if self.modulus != first_irreducible(self.p, self.m):
            text += ",mod=" + format_fp_poly(self.modulus)
        return text


class RationalField(Field):
    """Q with ``fractions.Fraction`` values."""

    is_finite = False
    p = None
    m = None
    q = None
    modulus = None
    kind = "rational"
    name = "Q"

    def _key(self):
        return ("rational",)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) / b

    def pow(self, a, n):
        if n < 0 and a == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) ** n

    def from_int(self, n):
        return Fraction(n)

    def generator(self):
        raise BadFieldLiteral("'w' is not defined over Q")

    def _coerce_other(self, value):
        if isinstance(value, Fraction):
            return value
        raise CtxMismatch(f"cannot interpret {value!r} in Q")

    def frobenius(self, a, times=1):
        raise RationalCtx("Frobenius is only defined over finite fields")

    def elements(self):
        raise RationalCtx("Q cannot be enumerated")

    def key(self, a):
        return a

    def fmt(self, a, signed=True):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def spec(self):
        return "Q"


QQ = RationalField()


def format_fp_poly(coeffs, var="w"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def _make_field(p, m, modulus):
    if m == 1:
        return PrimeField(p)
    return ExtensionField(p, m, modulus)


def GF(p, m=1, modulus=None):
    """Return the (cached) field GF(p^m).

    ``modulus`` is a monic coefficient list, lowest degree first.  When it
    is omitted the lexicographically first irreducible polynomial is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise UsageError("extension degree must be >= 1")
    if modulus is None:
        modulus = first_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {m}")
        if m > 1 and not is_irreducible_fp(modulus, p):
            raise ReducibleModulus(f"{format_fp_poly(modulus)} is reducible over F_{p}")
    if p**m > ENUMERATION_CAP * 10:
        raise CapExceeded(f"GF({p}^{m}) is too large for table arithmetic")
    return _make_field(p, m, tuple(modulus))


def field_make(p, m=1, modulus=None):
    return GF(p, m, modulus)


def prime_power(q):
    """Split q = p^m; raises UsageError if q is not a prime power."""
    if q < 2:
        raise UsageError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = round(math.log(q, p))
    if p**m != q:
        raise UsageError(f"{q} is not a prime power")
    return p, m


def parse_field_spec(text):
    """Parse ``Q``, ``q=4``, ``q=3^2`` or ``q=9,mod=w^2+1``."""
    text = text.strip()
    if text in ("Q", "QQ", "q=Q"):
        return QQ
    parts = [s.strip() for s in text.split(",")]
    head = parts[0]
    if head.startswith("q="):
        head = head[2:]
    try:
        if "^" in head:
            base, exp = head.split("^")
            p, m = int(base), int(exp)
            if not is_prime(p):
                raise NotPrime(f"{p} is not prime")
        else:
            p, m = prime_power(int(head))
    except ValueError:
        raise UsageError(f"bad field spec {text!r}") from None
    modulus = None
    for extra in parts[1:]:
        if not extra.startswith("mod="):
            raise UsageError(f"bad field spec option {extra!r}")
        modulus = _parse_fp_poly(extra[4:], p)
        if len(modulus) - 1 != m:
            raise ReducibleModulus(f"modulus {extra[4:]!r} has wrong degree for q={p}^{m}")
    return GF(p, m, modulus)


class _PolyAlgebra:
    """Expressions in w with integer coefficients, reduced mod p."""

    def __init__(self, p):
        self.p = p

    def _norm(self, c):
        return _trim([x % self.p for x in c])

    def const(self, n):
        return self._norm([n])

    def gen(self):
        return [0, 1]

    def var(self, name):
        raise UsageError(f"unexpected variable {name} in modulus")

    def add(self, a, b):
        n = max(len(a), len(b))
        return self._norm([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def neg(self, a):
        return self._norm([-x for x in a])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        out = [0] * (len(a) + len(b))
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self._norm(out)

    def div(self, a, b):
        raise UsageError("division not allowed in a modulus")

    def pow(self, a, n):
        out = [1]
        for _ in range(n):
            out = self.mul(out, a)
        return out


def _parse_fp_poly(text, p):
    try:
        return syntax.evaluate(syntax.parse(text), _PolyAlgebra(p))
    except FormSyntaxError as exc:
        raise UsageError(str(exc)) from None


class FieldElement:
    """An element of a field, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise CtxMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def _wrap(self, value):
        return FieldElement(self.field, value)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.field.div(self._other(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n):
        return self._wrap(self.field.pow(self.value, n))

    def inverse(self):
        return self._wrap(self.field.inv(self.value))

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, str, Fraction)):
            try:
                return self.value == self.field.coerce(other)
            except Exception:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other):
        return self.field.key(self.value) < self.field.key(self._other(other))

    def __repr__(self):
        return self.field.fmt(self.value)


def arithmetic(a, b, op):
    """Apply ``op`` (``add``/``sub``/``mul``/``div``) to two elements of one field."""
    if a.field != b.field:
        raise CtxMismatch(f"{a.field} vs {b.field}")
    if op not in ("add", "sub", "mul", "div"):
        raise ValueError(f"unknown op {op!r}")
    return FieldElement(a.field, getattr(a.field, op)(a.value, b.value))


def frobenius(a, times=1):
    """a^(p^times) for an element of a finite field."""
    field = a.field
    if not field.is_finite:
        raise RationalCtx("Frobenius is only defined over finite fields")
    return FieldElement(field, field.pow(a.value, field.p**times))


# --- towers ------------------------------------------------------------------

class Embedding:
    """Ring embedding GF(q) -> GF(q^e), fixed by the image of the generator."""

    def __init__(self, source, target, over=None):
        if source.p != target.p or target.m % source.m:
            raise CtxMismatch(f"{source} does not embed in {target}")
        self.source = source
        self.target = target
        self.degree = target.m // source.m
        if source.m == 1:
            self.image = 1
            self.table = list(range(source.p))
        elif source == target:
            self.image = source.generator()
            self.table = list(range(source.q))
        else:
            mod = source.modulus
            roots = [x for x in target.elements() if _eval_raw(target, mod, x) == 0]
            if over is not None:
                # over = (base, base->source, base->target): keep the tower commutative
                base, to_source, to_target = over
                g = base.generator() if base.m > 1 else 1
                roots = [r for r in roots
                         if _eval_digits(target, source.digits(to_source(g)), r) == to_target(g)]
            image = roots[0]
            self.image = image
            powers = [1]
            for _ in range(source.m - 1):
                powers.append(target.mul(powers[-1], image))
            table = []
            for code in source.elements():
                acc = 0
                for d, pw in zip(source.digits(code), powers):
                    if d:
                        acc = target.add(acc, target.mul(target.from_int(d), pw))
                table.append(acc)
            self.table = table
            if _eval_raw(target, mod, image) != 0:
                raise AssertionError("embedding image is not a root of the modulus")
        self._back = {v: i for i, v in enumerate(self.table)}

    def __call__(self, a):
        return self.table[a]

    def preimage(self, b):
        """Inverse on the embedded subfield; raises KeyError outside it."""
        return self._back[b]

    def contains(self, b):
        return b in self._back

    def trace(self, b):
        """Relative trace GF(q^e) -> GF(q), as a source value."""
        t = self.target
        acc = 0
        x = b
        for _ in range(self.degree):
            acc = t.add(acc, x)
            x = t.pow(x, self.source.q)
        return self.preimage(acc)


def _eval_digits(field, digits, x):
    acc = 0
    for d in reversed(digits):
        acc = field.add(field.mul(acc, x), field.from_int(d))
    return acc


def _eval_raw(field, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), field.from_int(c) if isinstance(c, int) else c)
    return acc


@lru_cache(maxsize=None)
def embedding(source, target):
    """Canonical embedding: the generator goes to the first root (by code)."""
    return Embedding(source, target)


@lru_cache(maxsize=None)
def tower_embedding(base, middle, top):
    """Embedding middle -> top that commutes with the canonical ones from base."""
    if middle == top or middle == base:
        return embedding(middle, top)
    return Embedding(middle, top, over=(base, embedding(base, middle), embedding(base, top)))


def extension(field, e, cap=ENUMERATION_CAP):
    """GF(q^e) for ``field`` = GF(q), plus the embedding of GF(q) into it."""
    if not field.is_finite:
        raise RationalCtx("extensions are only supported for finite fields")
    if e == 1:
        return field, embedding(field, field)
    if field.q**e > cap:
        raise CapExceeded(f"GF({field.q}^{e}) exceeds the enumeration cap {cap}")
    big = GF(field.p, field.m * e)
    return big, embedding(field, big)


def univariate_roots(coeffs, e=1, cap=ENUMERATION_CAP):
    """All roots in GF(q^e) of a polynomial over GF(q), by exhaustive evaluation.

    ``coeffs`` are field elements or raw values, lowest degree first.
    Returns ``(root, multiplicity)`` pairs of ``FieldElement`` in GF(q^e),
    sorted by code.
    """
    if not coeffs:
        raise ValueError("zero polynomial")
    field = coeffs[0].field if isinstance(coeffs[0], FieldElement) else None
    if field is None:
        raise ValueError("pass FieldElement coefficients")
    raw = [field.coerce(c) for c in coeffs]
    while raw and raw[-1] == 0:
        raw.pop()
    if not raw:
        raise ValueError("zero polynomial")
    big, emb = extension(field, e, cap)
    poly = [emb(c) for c in raw]
    out = []
    for x in big.elements():
        if _eval_raw(big, poly, x) != 0:
            continue
        mult = 0
        cur = poly
        while len(cur) > 1 and _eval_raw(big, cur, x) == 0:
            cur = _synthetic_div(big, cur, x)
            mult += 1
        out.append((FieldElement(big, x), mult))
    return out


def _synthetic_div(field, coeffs, x):
    n = len(coeffs) - 1
    out = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = field.add(field.mul(acc, x), coeffs[i])
        out[i - 1] = acc
    return out
