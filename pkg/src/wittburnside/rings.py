"""Exact scalar arithmetic: rings of coefficients and triangular linear algebra.

Every computation in this package is exact.  Supported coefficient rings:

    Z           integers
    Q           rationals
    Z/<m>       integers mod m (canonical representatives 0..m-1)
    Q[q]        univariate rational polynomials in q (dense)
    ZPoly(...)  multivariate integer polynomials (sparse)
    QPoly(...)  multivariate rational polynomials (sparse)

Payloads are plain data (int / Fraction / QPolynomial / MultiPoly); a RingSpec
knows how to combine them and a RingValue pairs a payload with its spec for
use at API boundaries.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import (
    NonExactDivision,
    NonInvertibleDiagonal,
    SchemaError,
)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    if n <= 0:
        raise ValueError("divisors expects a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def mobius(n: int) -> int:
    """Number-theoretic Mobius function."""
    if n <= 0:
        raise ValueError("mobius expects a positive integer")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class QPolynomial:
    """Dense univariate polynomial over Q, used for the q-weighted lattice scalars."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((_as_fraction(c),))

    @classmethod
    def variable(cls):
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, c, e: int):
        c = _as_fraction(c)
        if c == 0:
            return cls()
        return cls((Fraction(0),) * e + (c,))

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPolynomial", self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPolynomial.constant(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other) -> "QPolynomial":
        """Exact polynomial division; raises NonExactDivision on a remainder."""
        if isinstance(other, (int, Fraction)):
            other = QPolynomial.constant(other)
        if other.is_zero():
            raise NonExactDivision("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        out = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            out[i - d] = f
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= f * b
        if any(c != 0 for c in rem):
            raise NonExactDivision("polynomial division left a remainder")
        return QPolynomial(out)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_numerical(self) -> bool:
        """True when the polynomial takes integer values on all integers.

        Integer values at degree+1 consecutive integers force integrality
        everywhere (finite differences), so only those points are tested.
        """
        return all(self(k).denominator == 1 for k in range(self.degree + 2))

    def format(self, var: str = "q") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(_format_coeff(c))
            else:
                parts.append(f"{_format_coeff(c)}*{var}^{e}")
        return "+".join(parts)

    def __repr__(self):
        return f"QPolynomial({self.format()})"


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _parse_coeff(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad coefficient {text!r}") from exc


class MultiPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    terms maps exponent tuples (aligned with `vars`) to nonzero coefficients.
    All operands of an arithmetic operation must share the same variable tuple.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def constant(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): _as_fraction(c)})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(("MultiPoly", self.vars, tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("mixed variable sets in polynomial arithmetic")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.vars, out)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if other == 0:
                return MultiPoly(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def substitute_scalar(self, name: str, value) -> "MultiPoly":
        """Plug a rational constant in for one variable, dropping it."""
        value = _as_fraction(value)
        i = self.vars.index(name)
        new_vars = self.vars[:i] + self.vars[i + 1:]
        out = {}
        for e, c in self.terms.items():
            scaled = c * value ** e[i]
            ne = e[:i] + e[i + 1:]
            s = out.get(ne, Fraction(0)) + scaled
            if s == 0:
                out.pop(ne, None)
            else:
                out[ne] = s
        return MultiPoly(new_vars, out)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def compiled(self):
        """Term list [(coeff, ((var_index, exp), ...)), ...] for fast evaluation."""
        out = []
        for e, c in self.sorted_terms():
            out.append((c, tuple((i, k) for i, k in enumerate(e) if k)))
        return tuple(out)

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [_format_coeff(c)]
            for name, k in zip(self.vars, e):
                if k:
                    factors.append(f"{name}^{k}")
            parts.append("*".join(factors))
        return "+".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.format()})"


def _parse_poly_terms(text: str, vars: tuple[str, ...]):
    """Parse '+'-joined monomials 'coef*v^e*...' into an exponent->coeff dict."""
    text = text.strip()
    if text in ("0", ""):
        return {}
    index = {v: i for i, v in enumerate(vars)}
    terms = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise SchemaError("empty monomial in polynomial value")
        factors = chunk.split("*")
        coeff = Fraction(1)
        exps = [0] * len(vars)
        seen_coeff = False
        for f in factors:
            f = f.strip()
            m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?", f)
            if m and m.group(1) in index:
                exps[index[m.group(1)]] += int(m.group(2) or 1)
            elif not seen_coeff:
                coeff = _parse_coeff(f)
                seen_coeff = True
            else:
                raise SchemaError(f"unknown factor {f!r} in polynomial value")
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return terms


# ---------------------------------------------------------------------------
# ring specs


class RingSpec:
    """Interface for exact coefficient rings.  Instances are value-like."""

    name = "?"
    is_qalgebra = False

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<ring {self.name}>"

    # -- payload algebra -----------------------------------------------------
    def zero(self):
        raise NotImplementedError

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, fr: Fraction):
        """Image of a rational scalar, when it exists in this ring."""
        fr = _as_fraction(fr)
        if fr.denominator == 1:
            return self.from_int(fr.numerator)
        raise NonExactDivision(f"{fr} has no image in {self.name}")

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def pow(self, a, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def try_div(self, a, b):
        """Unique x with b*x == a, or None when absent/ambiguous."""
        raise NotImplementedError

    # -- textual form ----------------------------------------------------------
    def parse_value(self, text: str):
        raise NotImplementedError

    def format_value(self, a) -> str:
        raise NotImplementedError

    # -- relation to the rationalisation ----------------------------------------
    def rationalized(self) -> "RingSpec":
        return self

    def to_rationalized(self, a):
        return a

    def from_rationalized(self, a):
        """Pull a rationalised payload back, or None when it is not in the ring."""
        return a


class IntegerRing(RingSpec):
    name = "Z"

    def zero(self):
        return 0

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def try_div(self, a, b):
        if b == 0:
            return None
        q, r = divmod(a, b)
        return q if r == 0 else None

    def parse_value(self, text):
        try:
            return int(text.strip())
        except ValueError as exc:
            raise SchemaError(f"bad integer {text!r}") from exc

    def format_value(self, a):
        return str(a)

    def rationalized(self):
        return QQ

    def to_rationalized(self, a):
        return Fraction(a)

    def from_rationalized(self, a):
        a = _as_fraction(a)
        return a.numerator if a.denominator == 1 else None


class RationalRing(RingSpec):
    name = "Q"
    is_qalgebra = True

    def zero(self):
        return Fraction(0)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, fr):
        return _as_fraction(fr)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def try_div(self, a, b):
        if b == 0:
            return None
        return a / b

    def parse_value(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {text!r}") from exc

    def format_value(self, a):
        return _format_coeff(a)


class ResidueRing(RingSpec):
    def __init__(self, modulus: int):
        if modulus < 2:
            raise SchemaError("residue modulus must be at least 2")
        self.modulus = modulus
        self.name = f"Z/{modulus}"

    def zero(self):
        return 0

    def from_int(self, n):
        return n % self.modulus

    def from_fraction(self, fr):
        fr = _as_fraction(fr)
        den = fr.denominator % self.modulus
        if math.gcd(den, self.modulus) != 1:
            raise NonExactDivision(f"{fr} has no image in {self.name}")
        return fr.numerator * pow(den, -1, self.modulus) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def try_div(self, a, b):
        # unique solutions only: b must be a unit mod m
        if math.gcd(b, self.modulus) != 1:
            return None
        return a * pow(b, -1, self.modulus) % self.modulus

    def parse_value(self, text):
        try:
            return int(text.strip()) % self.modulus
        except ValueError as exc:
            raise SchemaError(f"bad residue {text!r}") from exc

    def format_value(self, a):
        return str(a % self.modulus)


class QPolyRing(RingSpec):
    """Univariate Q[q]."""

    name = "Q[q]"
    is_qalgebra = True

    def zero(self):
        return QPolynomial()

    def from_int(self, n):
        return QPolynomial.constant(n)

    def from_fraction(self, fr):
        return QPolynomial.constant(fr)

    def q(self):
        return QPolynomial.variable()

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def try_div(self, a, b):
        if b.is_zero():
            return None
        try:
            return a.divexact(b)
        except NonExactDivision:
            return None

    def parse_value(self, text):
        terms = _parse_poly_terms(text, ("q",))
        coeffs = {}
        for (e,), c in terms.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        out = [Fraction(0)] * (max(coeffs, default=0) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return QPolynomial(out)

    def format_value(self, a):
        return a.format("q")


class PolyRing(RingSpec):
    """Multivariate polynomials, with integer or rational coefficients."""

    def __init__(self, vars: tuple[str, ...], rational: bool):
        vars = tuple(vars)
        if not vars or len(set(vars)) != len(vars):
            raise SchemaError("polynomial ring needs distinct variable names")
        for v in vars:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise SchemaError(f"bad variable name {v!r}")
        self.vars = vars
        self.rational = rational
        base = "QPoly" if rational else "ZPoly"
        self.name = f"{base}({','.join(vars)})"
        self.is_qalgebra = rational

    def zero(self):
        return MultiPoly(self.vars)

    def from_int(self, n):
        if n == 0:
            return MultiPoly(self.vars)
        return MultiPoly.constant(self.vars, n)

    def from_fraction(self, fr):
        fr = _as_fraction(fr)
        if not self.rational and fr.denominator != 1:
            raise NonExactDivision(f"{fr} has no image in {self.name}")
        if fr == 0:
            return MultiPoly(self.vars)
        return MultiPoly.constant(self.vars, fr)

    def variable(self, name):
        return MultiPoly.variable(self.vars, name)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def try_div(self, a, b):
        # supports only the scalar divisions the solvers need
        if b.is_zero():
            return None
        if list(b.terms.keys()) == [(0,) * len(self.vars)]:
            c = b.terms[(0,) * len(self.vars)]
            out = MultiPoly(self.vars, {e: k / c for e, k in a.terms.items()})
            if not self.rational and not out.is_integral():
                return None
            return out
        return None

    def parse_value(self, text):
        terms = _parse_poly_terms(text, self.vars)
        poly = MultiPoly(self.vars, terms)
        if not self.rational and not poly.is_integral():
            raise SchemaError(f"non-integer coefficients for {self.name}")
        return poly

    def format_value(self, a):
        return a.format()

    def rationalized(self):
        if self.rational:
            return self
        return PolyRing(self.vars, rational=True)

    def from_rationalized(self, a):
        if self.rational:
            return a
        return a if a.is_integral() else None


ZZ = IntegerRing()
QQ = RationalRing()
QQ_Q = QPolyRing()


def parse_ring(text: str) -> RingSpec:
    """Parse the textual ring grammar: Z, Q, Z/<m>, Q[q], ZPoly(...), QPoly(...)."""
    text = text.strip()
    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    if text == "Q[q]":
        return QQ_Q
    m = re.fullmatch(r"Z/(\d+)", text)
    if m:
        return ResidueRing(int(m.group(1)))
    m = re.fullmatch(r"(ZPoly|QPoly)\(([^)]*)\)", text)
    if m:
        vars = tuple(v.strip() for v in m.group(2).split(",") if v.strip())
        return PolyRing(vars, rational=(m.group(1) == "QPoly"))
    raise SchemaError(f"unknown ring spec {text!r}")


class RingValue:
    """A payload tagged with its ring; arithmetic checks the specs match."""

    __slots__ = ("spec", "payload")

    def __init__(self, spec: RingSpec, payload):
        self.spec = spec
        self.payload = payload

    @classmethod
    def parse(cls, spec: RingSpec, text: str):
        return cls(spec, spec.parse_value(text))

    @classmethod
    def from_int(cls, spec: RingSpec, n: int):
        return cls(spec, spec.from_int(n))

    def format(self) -> str:
        return self.spec.format_value(self.payload)

    def _coerce(self, other):
        if isinstance(other, RingValue):
            if other.spec != self.spec:
                raise ValueError(f"mixed rings {self.spec.name} and {other.spec.name}")
            return other.payload
        if isinstance(other, int):
            return self.spec.from_int(other)
        raise TypeError(f"cannot combine RingValue with {type(other).__name__}")

    def __add__(self, other):
        return RingValue(self.spec, self.spec.add(self.payload, self._coerce(other)))

    __radd__ = __add__

    def __neg__(self):
        return RingValue(self.spec, self.spec.neg(self.payload))

    def __sub__(self, other):
        return RingValue(self.spec, self.spec.sub(self.payload, self._coerce(other)))

    def __rsub__(self, other):
        return RingValue(self.spec, self.spec.sub(self._coerce(other), self.payload))

    def __mul__(self, other):
        return RingValue(self.spec, self.spec.mul(self.payload, self._coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return RingValue(self.spec, self.spec.pow(self.payload, n))

    def is_zero(self) -> bool:
        return self.spec.is_zero(self.payload)

    def __eq__(self, other):
        return (
            isinstance(other, RingValue)
            and self.spec == other.spec
            and self.payload == other.payload
        )

    def __hash__(self):
        p = self.payload
        if isinstance(p, MultiPoly):
            p = tuple(sorted(p.terms.items()))
        return hash((self.spec, p))

    def __repr__(self):
        return f"RingValue({self.spec.name}, {self.format()})"


def is_integral(x) -> bool:
    """Whether a scalar has integer content (all coefficients in Z)."""
    if isinstance(x, RingValue):
        x = x.payload
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, (QPolynomial, MultiPoly)):
        return x.is_integral()
    raise TypeError(f"is_integral: unsupported {type(x).__name__}")


def is_numerical(p) -> bool:
    """Whether a univariate rational polynomial is integer-valued on Z."""
    if isinstance(p, RingValue):
        p = p.payload
    if isinstance(p, QPolynomial):
        return p.is_numerical()
    raise TypeError("is_numerical expects a QPolynomial")


class UniTriMatrix:
    """Square upper-triangular matrix over a RingSpec, indexed by labels.

    Row/column order is the label order; entries strictly below the diagonal
    must be zero.  Inversion is exact back-substitution and demands each
    diagonal entry be invertible in the ring.
    """

    __slots__ = ("labels", "ring", "rows")

    def __init__(self, labels, ring: RingSpec, rows):
        self.labels = tuple(labels)
        self.ring = ring
        n = len(self.labels)
        rs = tuple(tuple(row) for row in rows)
        if len(rs) != n or any(len(r) != n for r in rs):
            raise ValueError("matrix shape does not match labels")
        for i in range(n):
            for j in range(i):
                if not ring.is_zero(rs[i][j]):
                    raise ValueError("matrix is not upper triangular")
        self.rows = rs

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def size(self) -> int:
        return len(self.labels)

    @classmethod
    def identity(cls, labels, ring):
        n = len(labels)
        return cls(
            labels,
            ring,
            [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)],
        )

    def mul(self, other: "UniTriMatrix") -> "UniTriMatrix":
        if self.labels != other.labels or self.ring != other.ring:
            raise ValueError("matrix shapes/rings differ")
        R = self.ring
        n = self.size()
        out = [[R.zero()] * n for _ in range(n)]
        for i in range(n):
            for k in range(i, n):
                a = self.rows[i][k]
                if R.is_zero(a):
                    continue
                for j in range(k, n):
                    b = other.rows[k][j]
                    if R.is_zero(b):
                        continue
                    out[i][j] = R.add(out[i][j], R.mul(a, b))
        return UniTriMatrix(self.labels, R, out)

    def invert(self) -> "UniTriMatrix":
        R = self.ring
        n = self.size()
        inv = [[R.zero()] * n for _ in range(n)]
        diag_inv = []
        for i in range(n):
            d = R.try_div(R.one(), self.rows[i][i])
            if d is None:
                raise NonInvertibleDiagonal(self.labels[i])
            diag_inv.append(d)
            inv[i][i] = d
        for j in range(n):
            for i in range(j - 1, -1, -1):
                s = R.zero()
                for k in range(i + 1, j + 1):
                    s = R.add(s, R.mul(self.rows[i][k], inv[k][j]))
                inv[i][j] = R.neg(R.mul(diag_inv[i], s))
        return UniTriMatrix(self.labels, R, inv)

    def apply(self, xs):
        """Matrix-vector product (M x)_i = sum_j M[i][j] x_j."""
        R = self.ring
        n = self.size()
        out = []
        for i in range(n):
            s = R.zero()
            for j in range(i, n):
                if not R.is_zero(self.rows[i][j]):
                    s = R.add(s, R.mul(self.rows[i][j], xs[j]))
            out.append(s)
        return tuple(out)

    def apply_transpose(self, xs):
        """(M^t x)_j = sum_i M[i][j] x_i."""
        R = self.ring
        n = self.size()
        out = []
        for j in range(n):
            s = R.zero()
            for i in range(j + 1):
                if not R.is_zero(self.rows[i][j]):
                    s = R.add(s, R.mul(self.rows[i][j], xs[i]))
            out.append(s)
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, UniTriMatrix)
            and self.labels == other.labels
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"UniTriMatrix(labels={self.labels}, ring={self.ring.name})"
