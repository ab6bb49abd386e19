"""q-deformed cyclic Witt/necklace/aperiodic rings and Artin-Hasse curves.

Everything rests on the one-parameter formal group law
F_q(X, Y) = X + Y - q X Y.  The divisor-lattice scalars zeta^q/mu^q produce
the numerical polynomials P_{n,i,j}(q) deforming the necklace structure
constants, and the Witt-side operations come from universal polynomials
with coefficients in Z[q], derived once per truncation set by solving the
q-ghost system symbolically.  q is carried as an extra polynomial variable,
so one compiled form serves both concrete integers and the indeterminate.

A QContext fixes q: a concrete integer works over every coefficient ring
(structure constants are integers by numericality), while the indeterminate
requires vectors over the Q[q] ring.  Quotient-ring images of the
q-Teichmuller transport are kept in Witt coordinates (coord_form), exactly
as the group-indexed module does, because componentwise reduction of the
transport is not well defined mod m.
"""
from __future__ import annotations

import json
import math
import os
from fractions import Fraction
from functools import lru_cache

from .burnside import APERIODIC, GHOST, NECKLACE, WITT, _is_binomial, _strategy
from .cyclic import (
    CyclicVector,
    TruncationSet,
    _cyc_cache_path,
    necklace_poly,
)
from .errors import (
    DomainError,
    NonExactDivision,
    NotInImage,
    NotInvertibleIndex,
    NumericalityViolation,
    SchemaError,
    TruncationTooSmall,
)
from .rings import (
    QQ_Q,
    MultiPoly,
    QPolynomial,
    RingSpec,
    RingValue,
    UniTriMatrix,
    divisors,
    mobius,
)


class QContext:
    """Chosen q (an integer, or None for the indeterminate) plus size hints.

    truncation/degree are optional conveniences carried for the CLI; the
    vector/curve operations read sizes off their operands.
    """

    __slots__ = ("q", "truncation", "degree")

    def __init__(self, q, truncation=None, degree=None):
        if isinstance(q, str):
            if q.strip() != "q":
                raise SchemaError(f"q must be an integer or the letter q, not {q!r}")
            q = None
        if q is not None and not isinstance(q, int):
            raise SchemaError("q must be an integer or the indeterminate")
        if degree is not None and degree < 1:
            raise SchemaError("curve degree bound must be at least 1")
        self.q = q
        self.truncation = truncation
        self.degree = degree

    @property
    def symbolic(self) -> bool:
        return self.q is None

    def q_payload(self, R: RingSpec):
        """The element q of R; the indeterminate only lives in Q[q]."""
        if self.q is None:
            if R is not QQ_Q:
                raise SchemaError(f"indeterminate q requires the Q[q] ring, not {R.name}")
            return QPolynomial.variable()
        return R.from_int(self.q)

    def __repr__(self):
        return f"QContext(q={'q' if self.q is None else self.q})"


def _int_scalar(ctx: QContext, R: RingSpec, p: QPolynomial, what: str):
    """Payload of a numerical Q[q]-scalar: an integer once q is an integer."""
    if ctx.q is None:
        if R is not QQ_Q:
            raise SchemaError(f"indeterminate q requires the Q[q] ring, not {R.name}")
        return p
    v = p(ctx.q)
    if v.denominator != 1:
        raise NumericalityViolation(f"{what} evaluates to {v} at q={ctx.q}")
    return R.from_int(v.numerator)


def _exact_scalar(ctx: QContext, R: RingSpec, p: QPolynomial):
    """Payload of an arbitrary Q[q]-scalar; fractions go through from_fraction."""
    if ctx.q is None:
        if R is not QQ_Q:
            raise SchemaError(f"indeterminate q requires the Q[q] ring, not {R.name}")
        return p
    v = p(ctx.q)
    if v.denominator == 1:
        return R.from_int(v.numerator)
    return R.from_fraction(v)


# ---------------------------------------------------------------------------
# divisor-lattice scalars: zeta^q, mu^q, tau^q, P_{n,i,j}


class QMatrixData:
    """zeta^q and its exact inverse mu^q on the divisor lattice D(n)."""

    __slots__ = ("n", "labels", "zeta", "mu")

    def __init__(self, n, labels, zeta, mu):
        self.n = n
        self.labels = labels
        self.zeta = zeta
        self.mu = mu

    def zeta_entry(self, d1: int, d2: int) -> QPolynomial:
        return self.zeta.entry(self.labels.index(d1), self.labels.index(d2))

    def mu_entry(self, d1: int, d2: int) -> QPolynomial:
        return self.mu.entry(self.labels.index(d1), self.labels.index(d2))


@lru_cache(maxsize=None)
def zeta_mu_q(n: int) -> QMatrixData:
    """zeta^q(d1,d2) = (d1/d2) q^(d2/d1 - 1) on D(n), inverted exactly."""
    if n < 1:
        raise ValueError("lattice index must be positive")
    labels = divisors(n)
    rows = []
    for d1 in labels:
        row = []
        for d2 in labels:
            if d2 % d1 == 0:
                row.append(QPolynomial.monomial(Fraction(d1, d2), d2 // d1 - 1))
            else:
                row.append(QPolynomial())
        rows.append(row)
    zeta = UniTriMatrix(labels, QQ_Q, rows)
    return QMatrixData(n, labels, zeta, zeta.invert())


@lru_cache(maxsize=None)
def tau_q(i: int, n: int) -> QPolynomial:
    """tau^q(i, n) = sum_{d|i} mu^q(1, d) zeta^q(d, n), for i | n."""
    if n % i != 0:
        raise ValueError(f"tau^q({i}, {n}) needs {i} | {n}")
    data = zeta_mu_q(n)
    acc = QPolynomial()
    for d in divisors(i):
        acc = acc + data.mu_entry(1, d) * data.zeta_entry(d, n)
    return acc


def _classical_s(x: QPolynomial, d: int) -> QPolynomial:
    """S(x, d) = sum_{e|d} mu(e) x^(d/e) with x a monomial in q."""
    acc = QPolynomial()
    for e in divisors(d):
        m = mobius(e)
        if m:
            acc = acc + x ** (d // e) * m
    return acc


@lru_cache(maxsize=None)
def p_poly(n: int, i: int, j: int) -> QPolynomial:
    """The numerical structure polynomial P_{n,i,j}(q), for [i,j] | n."""
    l = math.lcm(i, j)
    if n % l != 0:
        raise ValueError(f"P_({n},{i},{j}) needs lcm({i},{j}) | {n}")
    g = math.gcd(i, j)
    x = QPolynomial.monomial(1, l // j)
    acc = QPolynomial()
    for d in divisors(n // l):
        acc = acc + tau_q(n // (l * d), n // i) * _classical_s(x, d)
    # exact division by (i,j) q / j; a remainder would be a bug, not bad input
    p = (acc * Fraction(j, g)).divexact(QPolynomial.variable())
    if not p.is_numerical():
        raise NumericalityViolation(f"P_({n},{i},{j}) is not numerical: {p.format()}")
    return p


# ---------------------------------------------------------------------------
# q-ghost maps


def q_witt_ghost(ctx: QContext, a: CyclicVector) -> CyclicVector:
    """Phi^q_n(a) = sum_{d|n} d q^(n/d - 1) a_d^(n/d)."""
    if a.flavor != WITT:
        raise ValueError("q_witt_ghost expects a Witt vector")
    R = a.ring
    qv = ctx.q_payload(R)
    out = []
    for n in a.truncation:
        s = R.zero()
        for d in divisors(n):
            e = n // d
            term = R.mul(R.from_int(d), R.mul(R.pow(qv, e - 1), R.pow(a.component(d).payload, e)))
            s = R.add(s, term)
        out.append(s)
    return CyclicVector.from_payloads(a.truncation, GHOST, R, out)


def q_ghost(ctx: QContext, x: CyclicVector) -> CyclicVector:
    """Ghost of any non-ghost flavor; coordinate-backed vectors use Phi^q."""
    if x.flavor == WITT:
        return q_witt_ghost(ctx, x)
    if x.flavor == GHOST:
        raise ValueError("vector is already a Ghost vector")
    if x.coord_form:
        return q_witt_ghost(ctx, CyclicVector(x.truncation, WITT, x.ring, x.components))
    R = x.ring
    qv = ctx.q_payload(R)
    weighted = x.flavor == NECKLACE
    out = []
    for n in x.truncation:
        s = R.zero()
        for d in divisors(n):
            term = R.mul(R.pow(qv, n // d - 1), x.component(d).payload)
            if weighted:
                term = R.mul(R.from_int(d), term)
            s = R.add(s, term)
        out.append(s)
    return CyclicVector.from_payloads(x.truncation, GHOST, R, out)


def q_ghost_inv(ctx: QContext, b: CyclicVector, flavor: str) -> CyclicVector:
    """Invert the necklace/aperiodic q-ghost via mu^q on each divisor lattice."""
    if b.flavor != GHOST:
        raise ValueError("q_ghost_inv expects a Ghost vector")
    R = b.ring
    T = b.truncation
    if flavor == APERIODIC:
        # mu^q(d,n) n/d is numerical, so the inverse is defined over every ring
        out = []
        for n in T:
            data = zeta_mu_q(n)
            s = R.zero()
            for d in divisors(n):
                c = data.mu_entry(d, n) * Fraction(n, d)
                if c.is_zero():
                    continue
                if not c.is_numerical():
                    raise NumericalityViolation(
                        f"mu^q({d},{n})*{n}/{d} is not numerical: {c.format()}"
                    )
                s = R.add(s, R.mul(_int_scalar(ctx, R, c, "aperiodic ghost inverse"),
                                   b.component(d).payload))
            out.append(s)
        return CyclicVector.from_payloads(T, APERIODIC, R, out)
    if flavor != NECKLACE:
        raise ValueError("q_ghost_inv recovers Necklace or Aperiodic vectors")
    # necklace inverse has genuinely fractional scalars mu^q(d,n)/d
    if R.is_qalgebra:
        out = []
        for n in T:
            data = zeta_mu_q(n)
            s = R.zero()
            for d in divisors(n):
                c = data.mu_entry(d, n) * Fraction(1, d)
                if c.is_zero():
                    continue
                s = R.add(s, R.mul(_exact_scalar(ctx, R, c), b.component(d).payload))
            out.append(s)
        return CyclicVector.from_payloads(T, NECKLACE, R, out)
    RQ = R.rationalized()
    ys = [R.to_rationalized(c.payload) for c in b.components]
    out = []
    try:
        for n in T:
            data = zeta_mu_q(n)
            s = RQ.zero()
            for d in divisors(n):
                c = data.mu_entry(d, n) * Fraction(1, d)
                if c.is_zero():
                    continue
                s = RQ.add(s, RQ.mul(_exact_scalar(ctx, RQ, c), ys[T.position(d)]))
            back = R.from_rationalized(s)
            if back is None:
                raise NotInImage(f"ghost vector leaves {R.name} at index {n}")
            out.append(back)
    except NonExactDivision as exc:
        raise NotInImage(f"ghost vector has no necklace preimage over {R.name}") from exc
    return CyclicVector.from_payloads(T, NECKLACE, R, out)


# ---------------------------------------------------------------------------
# q-universal polynomials and the q-Witt operations
#
# The structure polynomials live in Q[q][a, b] with every grouped coefficient
# a numerical polynomial in q (the product already needs (q^2-q)/2), so the
# compiled form pairs each a/b-monomial with its Q[q] coefficient: concrete
# integer q turns those into plain integers, the indeterminate keeps them.


_OPS = ("sum", "prod", "neg")
_Q_CACHE: dict = {}
_QFROB_CACHE: dict = {}


def _q_compile(p: MultiPoly):
    """Group a poly in ("q", x_1, ...) by x-monomial; coefficients must be numerical."""
    groups: dict = {}
    for e, c in p.terms.items():
        mono = tuple((i - 1, ee) for i, ee in enumerate(e) if i > 0 and ee)
        poly = groups.get(mono, QPolynomial())
        groups[mono] = poly + QPolynomial.monomial(c, e[0])
    out = []
    for mono, poly in sorted(groups.items()):
        if poly.is_zero():
            continue
        if not poly.is_numerical():
            raise NumericalityViolation(
                f"structure coefficient {poly.format()} is not numerical"
            )
        out.append((poly, mono))
    return tuple(out)


class QUniversal:
    """Universal q-operation polynomials over one truncation set.

    polys are MultiPoly in ("q", a_..., b_...); compiled pairs each variable
    monomial with its numerical q-coefficient, ready for any coefficient ring.
    """

    __slots__ = ("truncation", "op", "vars", "polys", "compiled")

    def __init__(self, truncation, op, vars, polys):
        self.truncation = truncation
        self.op = op
        self.vars = tuple(vars)
        self.polys = tuple(polys)
        self.compiled = tuple(_q_compile(p) for p in self.polys)


def _eval_q_compiled(ctx: QContext, compiled, R: RingSpec, payloads):
    powcache = {}
    total = R.zero()
    for qpoly, factors in compiled:
        term = _int_scalar(ctx, R, qpoly, "structure constant")
        for vi, e in factors:
            p = powcache.get((vi, e))
            if p is None:
                p = R.pow(payloads[vi], e)
                powcache[(vi, e)] = p
            term = R.mul(term, p)
        total = R.add(total, term)
    return total


def _q_cache_read(T, tag, vars_expected):
    path = _cyc_cache_path(T, tag)
    if not path or not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        vars = tuple(data["vars"])
        if vars != vars_expected:
            return None
        polys = []
        for terms in data["polys"]:
            d = {}
            for num, den, exps in terms:
                d[tuple(exps)] = Fraction(num, den)
            polys.append(MultiPoly(vars, d))
        return polys
    except (OSError, KeyError, ValueError, TypeError):
        return None


def _q_cache_write(T, tag, vars, polys):
    path = _cyc_cache_path(T, tag)
    if not path:
        return
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        data = {
            "vars": list(vars),
            "polys": [
                [[c.numerator, c.denominator, list(e)] for e, c in p.sorted_terms()]
                for p in polys
            ],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True)
    except OSError:
        pass


def _q_symbolic_ghost(T, vars, offset, nvars):
    """Phi^q over the polynomial ring; vars[0] is q itself."""
    out = {}
    for n in T:
        p = MultiPoly(vars)
        for d in divisors(n):
            e = [0] * nvars
            e[0] = n // d - 1
            e[offset + T.position(d)] = n // d
            p = p + MultiPoly(vars, {tuple(e): Fraction(d)})
        out[n] = p
    return out


def _solve_q_ghost_system(Tout, T, targets, vars):
    # numericality of the grouped coefficients is asserted when compiling
    solved = {}
    out = []
    qmono = {n: MultiPoly(vars, {(n,) + (0,) * (len(vars) - 1): Fraction(1)})
             for n in range(max(T.members))}
    for n in Tout:
        acc = targets[n]
        for d in divisors(n):
            if d == n or d not in solved:
                continue
            acc = acc - Fraction(d) * qmono[n // d - 1] * solved[d] ** (n // d)
        p = acc * Fraction(1, n)
        solved[n] = p
        out.append(p)
    return out


def q_universal(T: TruncationSet, op: str) -> QUniversal:
    """Universal q-Witt operation polynomials with numerical coefficients."""
    if op not in _OPS:
        raise ValueError(f"op must be one of {_OPS}")
    key = (T, op)
    if key in _Q_CACHE:
        return _Q_CACHE[key]
    avars = tuple(f"a_{n}" for n in T)
    bvars = tuple(f"b_{n}" for n in T) if op != "neg" else ()
    vars = ("q",) + avars + bvars
    tag = f"q{op}"
    cached = _q_cache_read(T, tag, vars)
    if cached is not None:
        cu = QUniversal(T, op, vars, cached)
        _Q_CACHE[key] = cu
        return cu
    nv = len(vars)
    ga = _q_symbolic_ghost(T, vars, 1, nv)
    if op == "sum":
        gb = _q_symbolic_ghost(T, vars, 1 + len(T), nv)
        targets = {n: ga[n] + gb[n] for n in T}
    elif op == "prod":
        gb = _q_symbolic_ghost(T, vars, 1 + len(T), nv)
        targets = {n: ga[n] * gb[n] for n in T}
    else:
        targets = {n: -ga[n] for n in T}
    polys = _solve_q_ghost_system(T, T, targets, vars)
    cu = QUniversal(T, op, vars, polys)
    _Q_CACHE[key] = cu
    _q_cache_write(T, tag, vars, polys)
    return cu


def q_witt_op(ctx: QContext, op: str, a: CyclicVector, b: CyclicVector | None = None) -> CyclicVector:
    if a.flavor != WITT:
        raise ValueError("q_witt_op expects Witt vectors")
    if (b is None) != (op == "neg"):
        raise ValueError("binary ops need two operands, neg exactly one")
    if b is not None and (a.truncation != b.truncation or a.ring != b.ring
                          or b.flavor != WITT):
        raise ValueError("operands live in different truncations/rings/flavors")
    cu = q_universal(a.truncation, op)
    R = a.ring
    env = a.payloads() + (b.payloads() if b is not None else ())
    out = [_eval_q_compiled(ctx, c, R, env) for c in cu.compiled]
    return CyclicVector.from_payloads(a.truncation, WITT, R, out)


def try_one(ctx: QContext, T: TruncationSet, R: RingSpec) -> CyclicVector | None:
    """The multiplicative identity of the q-Witt ring, when it exists in R.

    Solves sum_{d|n} d q^(n/d-1) a_d^(n/d) = 1 triangularly; each step needs
    an exact division by n, so the identity may be absent (None).
    """
    qv = ctx.q_payload(R)
    comps = []
    for n in T:
        s = R.one()
        for d in divisors(n):
            if d == n:
                continue
            e = n // d
            t = R.mul(R.from_int(d), R.mul(R.pow(qv, e - 1), R.pow(comps[T.position(d)], e)))
            s = R.add(s, R.neg(t))
        v = R.try_div(s, R.from_int(n))
        if v is None:
            return None
        comps.append(v)
    return CyclicVector.from_payloads(T, WITT, R, comps)


# ---------------------------------------------------------------------------
# q-necklace / q-aperiodic multiplication


def _q_mul(ctx: QContext, x: CyclicVector, y: CyclicVector, aperiodic: bool) -> CyclicVector:
    R = x.ring
    T = x.truncation
    out = [R.zero() for _ in T]
    for i in T:
        xi = x.component(i).payload
        if R.is_zero(xi):
            continue
        for j in T:
            yj = y.component(j).payload
            if R.is_zero(yj):
                continue
            l = math.lcm(i, j)
            if l not in T:
                continue
            xy = R.mul(xi, yj)
            for n in T:
                if n % l != 0:
                    continue
                w = (n // l) if aperiodic else math.gcd(i, j)
                c = p_poly(n, i, j) * w
                if c.is_zero():
                    continue
                payload = _int_scalar(ctx, R, c, f"P weight at ({n},{i},{j})")
                if R.is_zero(payload):
                    continue
                k = T.position(n)
                out[k] = R.add(out[k], R.mul(payload, xy))
    return CyclicVector.from_payloads(T, x.flavor, R, out)


def _q_check_pair(x, y, flavor, name):
    if x.flavor != flavor:
        raise ValueError(f"{name} expects {flavor} vectors")
    if (x.truncation != y.truncation or x.ring != y.ring or x.flavor != y.flavor
            or x.coord_form != y.coord_form):
        raise ValueError("operands live in different truncations/rings/flavors")


def q_nr_mul(ctx: QContext, x: CyclicVector, y: CyclicVector) -> CyclicVector:
    """(x y)_n = sum over [i,j] | n of (i,j) P_{n,i,j}(q) x_i y_j."""
    _q_check_pair(x, y, NECKLACE, "q_nr_mul")
    if x.coord_form:
        return q_witt_op(ctx, "prod", x.retag(WITT, coord_form=False),
                         y.retag(WITT, coord_form=False)).retag(NECKLACE, coord_form=True)
    return _q_mul(ctx, x, y, aperiodic=False)


def q_ap_mul(ctx: QContext, x: CyclicVector, y: CyclicVector) -> CyclicVector:
    """(x y)_n = sum over [i,j] | n of (n/[i,j]) P_{n,i,j}(q) x_i y_j."""
    _q_check_pair(x, y, APERIODIC, "q_ap_mul")
    if x.coord_form:
        return q_witt_op(ctx, "prod", x.retag(WITT, coord_form=False),
                         y.retag(WITT, coord_form=False)).retag(APERIODIC, coord_form=True)
    return _q_mul(ctx, x, y, aperiodic=True)


def _q_componentwise(ctx, op, x, y, flavor, name):
    if op == "neg":
        if x.flavor != flavor:
            raise ValueError(f"{name} expects {flavor} vectors")
        if x.coord_form:
            return q_witt_op(ctx, "neg", x.retag(WITT, coord_form=False)
                             ).retag(flavor, coord_form=True)
        return x.with_components([-c for c in x.components])
    _q_check_pair(x, y, flavor, name)
    if x.coord_form:
        return q_witt_op(ctx, "sum", x.retag(WITT, coord_form=False),
                         y.retag(WITT, coord_form=False)).retag(flavor, coord_form=True)
    return x.with_components([c + d for c, d in zip(x.components, y.components)])


def q_nr_op(ctx: QContext, op: str, x: CyclicVector, y: CyclicVector | None = None) -> CyclicVector:
    if op in ("sum", "neg"):
        return _q_componentwise(ctx, op, x, y, NECKLACE, "q_nr_op")
    if op == "prod":
        return q_nr_mul(ctx, x, y)
    raise ValueError(f"unknown op {op!r}")


def q_ap_op(ctx: QContext, op: str, x: CyclicVector, y: CyclicVector | None = None) -> CyclicVector:
    if op in ("sum", "neg"):
        return _q_componentwise(ctx, op, x, y, APERIODIC, "q_ap_op")
    if op == "prod":
        return q_ap_mul(ctx, x, y)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# q-exponentials and the Teichmuller-type transports


def q_necklace_poly(ctx: QContext, r: RingValue, n: int) -> RingValue:
    """M^q(x, n) = sum_{d|n} mu^q(d, n) q^(d-1)/d x^d.

    Over a Q-algebra the defining sum applies directly; over a binomial ring
    the numerical rewriting M^q(x,n) = sum_d (d tau^q(n/d, n)) M(x, d) keeps
    every term in the ring.  Anything else inherits NotBinomial from the
    classical necklace scalar.
    """
    if n < 1:
        raise ValueError("necklace index must be positive")
    R = r.spec
    if R.is_qalgebra:
        data = zeta_mu_q(n)
        s = R.zero()
        for d in divisors(n):
            c = data.mu_entry(d, n) * QPolynomial.monomial(Fraction(1, d), d - 1)
            if c.is_zero():
                continue
            s = R.add(s, R.mul(_exact_scalar(ctx, R, c), R.pow(r.payload, d)))
        return RingValue(R, s)
    s = R.zero()
    for d in divisors(n):
        c = tau_q(n // d, n) * d
        if c.is_zero():
            continue
        if not c.is_numerical():
            raise NumericalityViolation(f"{d} tau^q({n // d},{n}) is not numerical")
        m = necklace_poly(r, d)
        s = R.add(s, R.mul(_int_scalar(ctx, R, c, "exponential weight"), m.payload))
    return RingValue(R, s)


def q_aperiodic_poly(ctx: QContext, r: RingValue, n: int) -> RingValue:
    """S^q(x, n) = n M^q(x, n)."""
    m = q_necklace_poly(ctx, r, n)
    return RingValue(r.spec, r.spec.mul(r.spec.from_int(n), m.payload))


def q_teichmuller(ctx: QContext, a: CyclicVector) -> CyclicVector:
    """T^q(a)_m = sum_{n|m} M^q(a_n, m/n); quotient rings keep coordinates."""
    if a.flavor != WITT:
        raise ValueError("q_teichmuller expects a Witt vector")
    R = a.ring
    if _strategy(R) == "quotient":
        return CyclicVector(a.truncation, NECKLACE, R, a.components, coord_form=True)
    if R.is_qalgebra or _is_binomial(R):
        work = a
    else:
        RQ = R.rationalized()
        work = a.map_ring(RQ, R.to_rationalized)
    Rw = work.ring
    T = work.truncation
    out = []
    for m in T:
        s = Rw.zero()
        for n in divisors(m):
            if n not in T:
                continue
            s = Rw.add(s, q_necklace_poly(ctx, work.component(n), m // n).payload)
        out.append(s)
    return CyclicVector.from_payloads(T, NECKLACE, Rw, out)


def q_teichmuller_inv(ctx: QContext, x: CyclicVector) -> CyclicVector:
    """Triangular inverse of T^q; subtract-only, so binomial rings are closed."""
    if x.flavor != NECKLACE:
        raise ValueError("q_teichmuller_inv expects a Necklace vector")
    R = x.ring
    if x.coord_form:
        return CyclicVector(x.truncation, WITT, R, x.components)
    if _strategy(R) == "quotient":
        raise DomainError(
            f"componentwise Necklace vectors over {R.name} have no canonical "
            "coordinate lift; only coordinate-backed images are invertible"
        )
    T = x.truncation
    if R.is_qalgebra or _is_binomial(R):
        Rw = R
        targets = [c.payload for c in x.components]
    else:
        Rw = R.rationalized()
        targets = [R.to_rationalized(c.payload) for c in x.components]
    solved = []
    for pos, m in enumerate(T):
        acc = targets[pos]
        for n in divisors(m):
            if n == m or n not in T:
                continue
            prior = RingValue(Rw, solved[T.position(n)])
            acc = Rw.add(acc, Rw.neg(q_necklace_poly(ctx, prior, m // n).payload))
        solved.append(acc)
    if Rw is R:
        return CyclicVector.from_payloads(T, WITT, R, solved)
    out = []
    for m, payload in zip(T, solved):
        back = R.from_rationalized(payload)
        if back is None:
            raise NotInImage(f"vector has no q-Witt preimage over {R.name} at index {m}")
        out.append(back)
    return CyclicVector.from_payloads(T, WITT, R, out)


def theta_q(x: CyclicVector) -> CyclicVector:
    """theta^q(x)_n = n x_n (q-independent); coordinates pass through."""
    if x.flavor != NECKLACE:
        raise ValueError("theta_q expects a Necklace vector")
    if x.coord_form:
        return x.retag(APERIODIC)
    R = x.ring
    out = [R.mul(R.from_int(n), x.component(n).payload) for n in x.truncation]
    return CyclicVector.from_payloads(x.truncation, APERIODIC, R, out)


def theta_q_inv(y: CyclicVector) -> CyclicVector:
    if y.flavor != APERIODIC:
        raise ValueError("theta_q_inv expects an Aperiodic vector")
    if y.coord_form:
        return y.retag(NECKLACE)
    R = y.ring
    out = []
    for n in y.truncation:
        v = R.try_div(y.component(n).payload, R.from_int(n))
        if v is None:
            raise NotInvertibleIndex(str(n))
        out.append(v)
    return CyclicVector.from_payloads(y.truncation, NECKLACE, R, out)


# ---------------------------------------------------------------------------
# q-Frobenius and Verschiebung


def q_verschiebung(r: int, x: CyclicVector) -> CyclicVector:
    """Index dilation, independent of q; aperiodic components pick up r."""
    if r < 1:
        raise ValueError("verschiebung index must be positive")
    if x.flavor == GHOST:
        raise ValueError("verschiebung acts on Witt/Necklace/Aperiodic vectors")
    T = x.truncation
    R = x.ring
    out = []
    for n in T:
        if n % r == 0:
            p = x.component(n // r).payload
            if x.flavor == APERIODIC and not x.coord_form:
                p = R.mul(R.from_int(r), p)
            out.append(p)
        else:
            out.append(R.zero())
    return CyclicVector(T, x.flavor, R, [RingValue(R, p) for p in out], x.coord_form)


def _q_frobenius_universal(T: TruncationSet, r: int):
    key = (T, r)
    if key in _QFROB_CACHE:
        return _QFROB_CACHE[key]
    Tout = TruncationSet([n for n in T if r * n in T])
    vars = ("q",) + tuple(f"a_{n}" for n in T)
    tag = f"qfrob{r}"
    cached = _q_cache_read(T, tag, vars)
    if cached is not None:
        result = (Tout, QUniversal(Tout, tag, vars, cached))
        _QFROB_CACHE[key] = result
        return result
    ghost = _q_symbolic_ghost(T, vars, 1, len(vars))
    targets = {n: ghost[r * n] for n in Tout}
    polys = _solve_q_ghost_system(Tout, T, targets, vars)
    cu = QUniversal(Tout, tag, vars, polys)
    _q_cache_write(T, tag, vars, polys)
    result = (Tout, cu)
    _QFROB_CACHE[key] = result
    return result


def _q_frob_coeff(r: int, n: int, d: int) -> QPolynomial:
    """r tau^q(rn/[r,d], rn/d): the integer-valued Frobenius weight."""
    l = math.lcm(r, d)
    c = tau_q(r * n // l, r * n // d) * r
    if not c.is_numerical():
        raise NumericalityViolation(
            f"{r} tau^q({r * n // l},{r * n // d}) is not numerical: {c.format()}"
        )
    return c


def q_frobenius(ctx: QContext, r: int, x: CyclicVector) -> CyclicVector:
    """The operator with q-ghost behaviour n -> rn, on truncation {n : rn in T}."""
    if r < 1:
        raise ValueError("frobenius index must be positive")
    T = x.truncation
    if r not in T:
        raise TruncationTooSmall(
            f"frobenius({r}) needs {r} in the truncation set {list(T.members)}"
        )
    R = x.ring
    Tout = TruncationSet([n for n in T if r * n in T])
    if x.flavor == GHOST:
        return CyclicVector(Tout, GHOST, R, [x.component(r * n) for n in Tout])
    if x.flavor == WITT or x.coord_form:
        Tout, cu = _q_frobenius_universal(T, r)
        out = [_eval_q_compiled(ctx, c, R, x.payloads()) for c in cu.compiled]
        return CyclicVector(Tout, x.flavor, R,
                            [RingValue(R, p) for p in out], x.coord_form)
    aperiodic = x.flavor == APERIODIC
    if not aperiodic and x.flavor != NECKLACE:
        raise ValueError(f"unknown flavor {x.flavor!r}")
    out = []
    for n in Tout:
        s = R.zero()
        for d in divisors(r * n):
            p = x.component(d).payload
            if R.is_zero(p):
                continue
            c = _q_frob_coeff(r, n, d)
            if aperiodic:
                c = c * Fraction(n, d)
                if not c.is_numerical():
                    raise NumericalityViolation(
                        f"aperiodic frobenius weight at ({r},{n},{d}) is not numerical"
                    )
            if c.is_zero():
                continue
            s = R.add(s, R.mul(_int_scalar(ctx, R, c, "frobenius weight"), p))
        out.append(s)
    return CyclicVector.from_payloads(Tout, x.flavor, R, out)


# ---------------------------------------------------------------------------
# curves in F_q and the Artin-Hasse isomorphism


class TruncatedCurve:
    """A curve x_1 t + x_2 t^2 + ... + x_N t^N in F_q (no constant term)."""

    __slots__ = ("ring", "components")

    def __init__(self, ring, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("curves need degree bound at least 1")
        for c in comps:
            if not isinstance(c, RingValue) or c.spec != ring:
                raise ValueError("coefficients must be RingValues over the declared ring")
        self.ring = ring
        self.components = comps

    @classmethod
    def from_payloads(cls, ring, payloads):
        return cls(ring, [RingValue(ring, p) for p in payloads])

    @classmethod
    def from_ints(cls, ring, ints):
        return cls(ring, [RingValue.from_int(ring, n) for n in ints])

    @property
    def degree(self) -> int:
        return len(self.components)

    def payloads(self):
        return tuple(c.payload for c in self.components)

    def coefficient(self, k: int) -> RingValue:
        # 1-based: the coefficient of t^k
        return self.components[k - 1]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedCurve)
            and self.ring == other.ring
            and self.components == other.components
        )

    def __repr__(self):
        vals = ", ".join(c.format() for c in self.components)
        return f"<curve over {self.ring.name} deg {self.degree} [{vals}]>"


def _series_mul(R, u, v):
    n = len(u)
    out = [R.zero()] * n
    for i in range(1, n):
        a = u[i - 1]
        if R.is_zero(a):
            continue
        for j in range(1, n - i + 1):
            b = v[j - 1]
            if R.is_zero(b):
                continue
            out[i + j - 1] = R.add(out[i + j - 1], R.mul(a, b))
    return out


def _f_add(R, qv, u, v):
    prod = _series_mul(R, u, v)
    return [R.add(R.add(a, b), R.neg(R.mul(qv, p))) for a, b, p in zip(u, v, prod)]


def curve_add(ctx: QContext, c1: TruncatedCurve, c2: TruncatedCurve) -> TruncatedCurve:
    """Group law of F_q on curves: c1 + c2 - q c1 c2, truncated."""
    if c1.ring != c2.ring or c1.degree != c2.degree:
        raise ValueError("curves live over different rings or degrees")
    R = c1.ring
    qv = ctx.q_payload(R)
    return TruncatedCurve.from_payloads(
        R, _f_add(R, qv, list(c1.payloads()), list(c2.payloads()))
    )


def curve_neg(ctx: QContext, c: TruncatedCurve) -> TruncatedCurve:
    """F_q-inverse of a curve, solved degree by degree."""
    R = c.ring
    qv = ctx.q_payload(R)
    g = c.payloads()
    n = len(g)
    iota = [R.zero()] * n
    for k in range(1, n + 1):
        s = R.zero()
        for i in range(1, k):
            if R.is_zero(g[i - 1]):
                continue
            s = R.add(s, R.mul(g[i - 1], iota[k - i - 1]))
        iota[k - 1] = R.add(R.neg(g[k - 1]), R.mul(qv, s))
    return TruncatedCurve.from_payloads(R, iota)


def artin_hasse(ctx: QContext, a: CyclicVector) -> TruncatedCurve:
    """H^q(a) = F_q-sum of the monomial curves a_n t^n, truncated at max(T)."""
    if a.flavor != WITT:
        raise ValueError("artin_hasse expects a Witt vector")
    R = a.ring
    qv = ctx.q_payload(R)
    N = max(a.truncation.members)
    acc = [R.zero()] * N
    for n in a.truncation:
        p = a.component(n).payload
        if R.is_zero(p):
            continue
        mono = [R.zero()] * N
        mono[n - 1] = p
        acc = _f_add(R, qv, acc, mono)
    return TruncatedCurve.from_payloads(R, acc)


def artin_hasse_inv(ctx: QContext, c: TruncatedCurve, T: TruncationSet) -> CyclicVector:
    """Peel Witt components off a curve; verifies the curve is in the image."""
    R = c.ring
    N = max(T.members)
    if c.degree != N:
        raise ValueError(f"curve degree {c.degree} does not match max(T) = {N}")
    payloads = []
    for pos, n in enumerate(T):
        partial = CyclicVector.from_payloads(
            T, WITT, R, payloads + [R.zero()] * (len(T) - pos)
        )
        h = artin_hasse(ctx, partial)
        payloads.append(R.add(c.coefficient(n).payload, R.neg(h.coefficient(n).payload)))
    result = CyclicVector.from_payloads(T, WITT, R, payloads)
    if artin_hasse(ctx, result) != c:
        raise NotInImage("curve is not an Artin-Hasse image on this truncation set")
    return result


def curve_mul(ctx: QContext, c1: TruncatedCurve, c2: TruncatedCurve) -> TruncatedCurve:
    """Ring product transported through H^q from the q-Witt product."""
    if c1.ring != c2.ring or c1.degree != c2.degree:
        raise ValueError("curves live over different rings or degrees")
    T = TruncationSet(range(1, c1.degree + 1))
    a = artin_hasse_inv(ctx, c1, T)
    b = artin_hasse_inv(ctx, c2, T)
    return artin_hasse(ctx, q_witt_op(ctx, "prod", a, b))
