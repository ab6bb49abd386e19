"""Classical (cyclic/profinite) Witt, necklace and aperiodic vectors.

Components are indexed by a finite divisor-closed truncation set T: the
index n stands for the open subgroup of index n of the profinite cyclic
group, so T = div(N) reproduces the finite cyclic group of order N
component-for-component.

The flavor dictionary matches the group-indexed module: Witt coordinates
with ghost w_n = sum_{d|n} d a_d^{n/d}, the necklace ring with
(x y)_n = sum_{[i,j]=n} (i,j) x_i y_j, and the aperiodic ring with the same
sum without the gcd weight.  Frobenius operators use integer closed
formulas (so they are defined over every coefficient ring) and are
characterised by the ghost shift n -> rn; Verschiebung reindexes by r.
"""
from __future__ import annotations

import hashlib
import json
import math
import os
from fractions import Fraction

from .burnside import APERIODIC, FLAVORS, GHOST, NECKLACE, WITT, _eval_compiled
from .errors import (
    IntegralityViolation,
    NotBinomial,
    NotInImage,
    NotInvertibleIndex,
    SchemaError,
    TruncationTooSmall,
)
from .rings import MultiPoly, RingSpec, RingValue, divisors, mobius


class TruncationSet:
    """Finite divisor-closed set of positive integers containing 1."""

    __slots__ = ("members", "_pos")

    def __init__(self, members):
        ms = sorted(set(int(n) for n in members))
        if not ms or ms[0] < 1:
            raise SchemaError("truncation set must contain positive integers")
        if 1 not in ms:
            raise SchemaError("truncation set must contain 1")
        have = set(ms)
        for n in ms:
            for d in divisors(n):
                if d not in have:
                    raise SchemaError(f"truncation set not divisor-closed: {d} | {n} missing")
        self.members = tuple(ms)
        self._pos = {n: i for i, n in enumerate(self.members)}

    @classmethod
    def div(cls, N: int):
        if N < 1:
            raise SchemaError("div(N) needs N >= 1")
        return cls(divisors(N))

    def __contains__(self, n):
        return n in self._pos

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def position(self, n: int) -> int:
        return self._pos[n]

    def __eq__(self, other):
        return isinstance(other, TruncationSet) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"TruncationSet({list(self.members)})"


class CyclicVector:
    """Ring values indexed by a truncation set, tagged with a flavor.

    coord_form marks a Necklace/Aperiodic vector stored through its Witt
    coordinates (the quotient-ring presentation used by the q-deformed
    transports); the componentwise operations below refuse such vectors.
    """

    __slots__ = ("truncation", "flavor", "ring", "components", "coord_form")

    def __init__(self, truncation, flavor, ring, components, coord_form=False):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        if coord_form and flavor not in (NECKLACE, APERIODIC):
            raise ValueError("coordinate form only tags Necklace/Aperiodic vectors")
        comps = tuple(components)
        if len(comps) != len(truncation):
            raise ValueError("one component per truncation member required")
        for c in comps:
            if not isinstance(c, RingValue) or c.spec != ring:
                raise ValueError("components must be RingValues over the declared ring")
        self.truncation = truncation
        self.flavor = flavor
        self.ring = ring
        self.components = comps
        self.coord_form = bool(coord_form)

    @classmethod
    def from_payloads(cls, truncation, flavor, ring, payloads):
        return cls(truncation, flavor, ring, [RingValue(ring, p) for p in payloads])

    @classmethod
    def from_ints(cls, truncation, flavor, ring, ints):
        return cls(truncation, flavor, ring,
                   [RingValue.from_int(ring, n) for n in ints])

    @classmethod
    def zero(cls, truncation, flavor, ring):
        return cls.from_ints(truncation, flavor, ring, [0] * len(truncation))

    @classmethod
    def one(cls, truncation, flavor, ring):
        return cls.from_ints(truncation, flavor, ring,
                             [1] + [0] * (len(truncation) - 1))

    def payloads(self):
        return tuple(c.payload for c in self.components)

    def component(self, n: int):
        return self.components[self.truncation.position(n)]

    def retag(self, flavor, coord_form=None):
        cf = self.coord_form if coord_form is None else coord_form
        return CyclicVector(self.truncation, flavor, self.ring, self.components, cf)

    def with_components(self, components):
        return CyclicVector(self.truncation, self.flavor, self.ring, components,
                            self.coord_form)

    def map_ring(self, target: RingSpec, fn):
        return CyclicVector(
            self.truncation, self.flavor, target,
            [RingValue(target, fn(c.payload)) for c in self.components],
            self.coord_form,
        )

    def __eq__(self, other):
        return (
            isinstance(other, CyclicVector)
            and self.truncation == other.truncation
            and self.flavor == other.flavor
            and self.ring == other.ring
            and self.coord_form == other.coord_form
            and self.components == other.components
        )

    def __repr__(self):
        vals = ", ".join(c.format() for c in self.components)
        tag = " coords" if self.coord_form else ""
        return (f"<cyclic {self.flavor}{tag} over {self.ring.name}"
                f" T={list(self.truncation)} [{vals}]>")


def _check_same(x: CyclicVector, y: CyclicVector):
    if (x.truncation != y.truncation or x.ring != y.ring or x.flavor != y.flavor
            or x.coord_form != y.coord_form):
        raise ValueError("operands live in different truncations/rings/flavors")


def _require_components(x: CyclicVector):
    if x.coord_form:
        raise ValueError(
            "vector is stored in Witt coordinates; use the q-deformed operations"
        )
    return x


# ---------------------------------------------------------------------------
# ghosts


def cyc_witt_ghost(a: CyclicVector) -> CyclicVector:
    if a.flavor != WITT:
        raise ValueError("cyc_witt_ghost expects a Witt vector")
    R = a.ring
    T = a.truncation
    out = []
    for n in T:
        s = R.zero()
        for d in divisors(n):
            s = R.add(s, R.mul(R.from_int(d), R.pow(a.component(d).payload, n // d)))
        out.append(s)
    return CyclicVector.from_payloads(T, GHOST, R, out)


def cyc_ghost(x: CyclicVector) -> CyclicVector:
    """Ghost of any non-ghost flavor over the truncation set."""
    _require_components(x)
    if x.flavor == WITT:
        return cyc_witt_ghost(x)
    R = x.ring
    T = x.truncation
    out = []
    if x.flavor == NECKLACE:
        for n in T:
            s = R.zero()
            for d in divisors(n):
                s = R.add(s, R.mul(R.from_int(d), x.component(d).payload))
            out.append(s)
    elif x.flavor == APERIODIC:
        for n in T:
            s = R.zero()
            for d in divisors(n):
                s = R.add(s, x.component(d).payload)
            out.append(s)
    else:
        raise ValueError("vector is already a Ghost vector")
    return CyclicVector.from_payloads(T, GHOST, R, out)


def cyc_ghost_inv(b: CyclicVector, flavor: str) -> CyclicVector:
    """Mobius inversion of the necklace/aperiodic ghost."""
    if b.flavor != GHOST:
        raise ValueError("cyc_ghost_inv expects a Ghost vector")
    R = b.ring
    T = b.truncation
    out = []
    if flavor == NECKLACE:
        for n in T:
            s = R.zero()
            for d in divisors(n):
                m = mobius(n // d)
                if m:
                    s = R.add(s, R.mul(R.from_int(m), b.component(d).payload))
            q = R.try_div(s, R.from_int(n))
            if q is None:
                raise NotInImage(
                    f"ghost vector is not a necklace ghost over {R.name} at index {n}"
                )
            out.append(q)
    elif flavor == APERIODIC:
        for n in T:
            s = R.zero()
            for d in divisors(n):
                m = mobius(n // d)
                if m:
                    s = R.add(s, R.mul(R.from_int(m), b.component(d).payload))
            out.append(s)
    else:
        raise ValueError("cyc_ghost_inv recovers Necklace or Aperiodic vectors")
    return CyclicVector.from_payloads(T, flavor, R, out)


# ---------------------------------------------------------------------------
# universal polynomials and the Witt operations


class CyclicUniversal:
    __slots__ = ("truncation", "op", "vars", "polys", "compiled")

    def __init__(self, truncation, op, vars, polys):
        self.truncation = truncation
        self.op = op
        self.vars = tuple(vars)
        self.polys = tuple(polys)
        self.compiled = tuple(
            tuple((int(c), f) for c, f in p.compiled()) for p in self.polys
        )


_OPS = ("sum", "prod", "neg")
_CYC_CACHE: dict = {}


def _trunc_key(T: TruncationSet) -> str:
    blob = repr(T.members).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _cyc_cache_path(T, tag):
    root = os.environ.get("WB_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"cyc-{_trunc_key(T)}-{tag}.json")


def _cyc_cache_read(T, tag, vars_expected):
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
            for coeff, exps in terms:
                d[tuple(exps)] = Fraction(coeff)
            polys.append(MultiPoly(vars, d))
        return polys
    except (OSError, KeyError, ValueError, TypeError):
        return None


def _cyc_cache_write(T, tag, vars, polys):
    path = _cyc_cache_path(T, tag)
    if not path:
        return
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        data = {
            "vars": list(vars),
            "polys": [
                [[int(c), list(e)] for e, c in p.sorted_terms()] for p in polys
            ],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True)
    except OSError:
        pass


def _symbolic_ghost(T, vars, offset, nvars):
    out = {}
    for n in T:
        p = MultiPoly(vars)
        for d in divisors(n):
            e = [0] * nvars
            e[offset + T.position(d)] = n // d
            p = p + MultiPoly(vars, {tuple(e): Fraction(d)})
        out[n] = p
    return out


def _solve_ghost_system(T, targets, vars, what):
    """Triangular solve of w_n(s) = target_n; integer coefficients asserted."""
    solved = {}
    out = []
    for n in T:
        acc = targets[n]
        for d in divisors(n):
            if d == n:
                continue
            acc = acc - Fraction(d) * solved[d] ** (n // d)
        p = acc * Fraction(1, n)
        if not p.is_integral():
            raise IntegralityViolation(
                f"{what} polynomial at index {n} has fractional coefficients"
            )
        solved[n] = p
        out.append(p)
    return out


def cyc_universal(T: TruncationSet, op: str) -> CyclicUniversal:
    """Integer universal polynomials for one truncated-Witt ring operation."""
    if op not in _OPS:
        raise ValueError(f"op must be one of {_OPS}")
    key = (T, op)
    if key in _CYC_CACHE:
        return _CYC_CACHE[key]
    avars = tuple(f"a_{n}" for n in T)
    bvars = tuple(f"b_{n}" for n in T) if op != "neg" else ()
    vars = avars + bvars
    cached = _cyc_cache_read(T, op, vars)
    if cached is not None:
        cu = CyclicUniversal(T, op, vars, cached)
        _CYC_CACHE[key] = cu
        return cu
    nv = len(vars)
    ga = _symbolic_ghost(T, vars, 0, nv)
    if op == "sum":
        gb = _symbolic_ghost(T, vars, len(T), nv)
        targets = {n: ga[n] + gb[n] for n in T}
    elif op == "prod":
        gb = _symbolic_ghost(T, vars, len(T), nv)
        targets = {n: ga[n] * gb[n] for n in T}
    else:
        targets = {n: -ga[n] for n in T}
    polys = _solve_ghost_system(T, targets, vars, f"universal {op}")
    cu = CyclicUniversal(T, op, vars, polys)
    _CYC_CACHE[key] = cu
    _cyc_cache_write(T, op, vars, polys)
    return cu


def cyc_witt_op(op: str, a: CyclicVector, b: CyclicVector | None = None) -> CyclicVector:
    if a.flavor != WITT:
        raise ValueError("cyc_witt_op expects Witt vectors")
    if (b is None) != (op == "neg"):
        raise ValueError("binary ops need two operands, neg exactly one")
    if b is not None:
        _check_same(a, b)
    cu = cyc_universal(a.truncation, op)
    env = a.payloads() + (b.payloads() if b is not None else ())
    R = a.ring
    out = [_eval_compiled(c, R, env) for c in cu.compiled]
    return CyclicVector.from_payloads(a.truncation, WITT, R, out)


# ---------------------------------------------------------------------------
# necklace / aperiodic operations


def cyc_nr_mul(x: CyclicVector, y: CyclicVector) -> CyclicVector:
    """(x y)_n = sum over lcm(i, j) = n of gcd(i, j) x_i y_j."""
    if x.flavor != NECKLACE:
        raise ValueError("cyc_nr_mul expects Necklace vectors")
    _require_components(x)
    _check_same(x, y)
    R = x.ring
    T = x.truncation
    out = [R.zero() for _ in T]
    for i in T:
        xi = x.component(i).payload
        if R.is_zero(xi):
            continue
        for j in T:
            n = math.lcm(i, j)
            if n not in T:
                continue
            yj = y.component(j).payload
            if R.is_zero(yj):
                continue
            term = R.mul(R.from_int(math.gcd(i, j)), R.mul(xi, yj))
            k = T.position(n)
            out[k] = R.add(out[k], term)
    return CyclicVector.from_payloads(T, NECKLACE, R, out)


def cyc_ap_mul(x: CyclicVector, y: CyclicVector) -> CyclicVector:
    """(x y)_n = sum over lcm(i, j) = n of x_i y_j, valid over every ring."""
    if x.flavor != APERIODIC:
        raise ValueError("cyc_ap_mul expects Aperiodic vectors")
    _require_components(x)
    _check_same(x, y)
    R = x.ring
    T = x.truncation
    out = [R.zero() for _ in T]
    for i in T:
        xi = x.component(i).payload
        if R.is_zero(xi):
            continue
        for j in T:
            n = math.lcm(i, j)
            if n not in T:
                continue
            yj = y.component(j).payload
            if R.is_zero(yj):
                continue
            k = T.position(n)
            out[k] = R.add(out[k], R.mul(xi, yj))
    return CyclicVector.from_payloads(T, APERIODIC, R, out)


def _cyc_componentwise(op, x, y):
    _require_components(x)
    if op == "neg":
        return x.with_components([-c for c in x.components])
    _check_same(x, y)
    return x.with_components([c + d for c, d in zip(x.components, y.components)])


def cyc_nr_op(op: str, x: CyclicVector, y: CyclicVector | None = None) -> CyclicVector:
    if x.flavor != NECKLACE:
        raise ValueError("cyc_nr_op expects Necklace vectors")
    if op in ("sum", "neg"):
        return _cyc_componentwise(op, x, y)
    if op == "prod":
        return cyc_nr_mul(x, y)
    raise ValueError(f"unknown op {op!r}")


def cyc_ap_op(op: str, x: CyclicVector, y: CyclicVector | None = None) -> CyclicVector:
    if x.flavor != APERIODIC:
        raise ValueError("cyc_ap_op expects Aperiodic vectors")
    if op in ("sum", "neg"):
        return _cyc_componentwise(op, x, y)
    if op == "prod":
        return cyc_ap_mul(x, y)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# necklace polynomials and the index scaling


def _necklace_fraction(r, n: int, Rq: RingSpec):
    s = Rq.zero()
    for d in divisors(n):
        m = mobius(d)
        if m:
            s = Rq.add(s, Rq.mul(Rq.from_fraction(Fraction(m, n)), Rq.pow(r, n // d)))
    return s


def necklace_poly(r: RingValue, n: int) -> RingValue:
    """M(r, n) = (1/n) sum_{d|n} mu(d) r^{n/d} (the necklace count for r >= 0)."""
    if n < 1:
        raise ValueError("necklace index must be positive")
    R = r.spec
    if R.is_qalgebra:
        return RingValue(R, _necklace_fraction(r.payload, n, R))
    Rq = R.rationalized()
    if Rq == R:
        raise NotBinomial(f"necklace scalars over {R.name} have no canonical value")
    val = _necklace_fraction(R.to_rationalized(r.payload), n, Rq)
    back = R.from_rationalized(val)
    if back is None:
        raise NotBinomial(f"M(r, {n}) escapes {R.name}; no binomial structure")
    return RingValue(R, back)


def aperiodic_poly(r: RingValue, n: int) -> RingValue:
    """S(r, n) = n M(r, n)."""
    m = necklace_poly(r, n)
    return RingValue(r.spec, r.spec.mul(r.spec.from_int(n), m.payload))


def cyc_theta(x: CyclicVector) -> CyclicVector:
    if x.flavor != NECKLACE:
        raise ValueError("cyc_theta expects a Necklace vector")
    _require_components(x)
    R = x.ring
    out = [R.mul(R.from_int(n), x.component(n).payload) for n in x.truncation]
    return CyclicVector.from_payloads(x.truncation, APERIODIC, R, out)


def cyc_theta_inv(y: CyclicVector) -> CyclicVector:
    if y.flavor != APERIODIC:
        raise ValueError("cyc_theta_inv expects an Aperiodic vector")
    _require_components(y)
    R = y.ring
    out = []
    for n in y.truncation:
        q = R.try_div(y.component(n).payload, R.from_int(n))
        if q is None:
            raise NotInvertibleIndex(str(n))
        out.append(q)
    return CyclicVector.from_payloads(y.truncation, NECKLACE, R, out)


# ---------------------------------------------------------------------------
# Frobenius and Verschiebung


def cyc_verschiebung(r: int, x: CyclicVector) -> CyclicVector:
    """Index dilation by r on the same truncation set (top components drop).

    (V_r x)_n = x_{n/r} when r | n, else 0; the aperiodic flavor scales the
    moved component by r.  Only positions {m : rm in T} of the input are
    read, matching the truncated-Witt convention.
    """
    if r < 1:
        raise ValueError("verschiebung index must be positive")
    if x.flavor == GHOST:
        raise ValueError("verschiebung acts on Witt/Necklace/Aperiodic vectors")
    _require_components(x)
    T = x.truncation
    R = x.ring
    out = []
    for n in T:
        if n % r == 0:
            p = x.component(n // r).payload
            if x.flavor == APERIODIC:
                p = R.mul(R.from_int(r), p)
            out.append(p)
        else:
            out.append(R.zero())
    return CyclicVector.from_payloads(T, x.flavor, R, out)


_FROB_CACHE: dict = {}


def _frobenius_universal(T: TruncationSet, r: int):
    """Integer polynomials for f_r on Witt coordinates, via the ghost shift."""
    key = (T, r)
    if key in _FROB_CACHE:
        return _FROB_CACHE[key]
    Tout = TruncationSet([n for n in T if r * n in T])
    vars = tuple(f"a_{n}" for n in T)
    tag = f"frob{r}"
    cached = _cyc_cache_read(T, tag, vars)
    if cached is not None:
        result = (Tout, CyclicUniversal(Tout, tag, vars, cached))
        _FROB_CACHE[key] = result
        return result
    nv = len(vars)
    ghost = _symbolic_ghost(T, vars, 0, nv)
    targets = {n: ghost[r * n] for n in Tout}
    polys = _solve_ghost_system(Tout, targets, vars, f"frobenius({r})")
    cu = CyclicUniversal(Tout, tag, vars, polys)
    _cyc_cache_write(T, tag, vars, polys)
    result = (Tout, cu)
    _FROB_CACHE[key] = result
    return result


def cyc_frobenius(r: int, x: CyclicVector) -> CyclicVector:
    """The operator with ghost behaviour n -> rn, on truncation {n : rn in T}."""
    if r < 1:
        raise ValueError("frobenius index must be positive")
    _require_components(x)
    T = x.truncation
    if r not in T:
        raise TruncationTooSmall(
            f"frobenius({r}) needs {r} in the truncation set {list(T.members)}"
        )
    R = x.ring
    if x.flavor == GHOST:
        Tout = TruncationSet([n for n in T if r * n in T])
        return CyclicVector(
            Tout, GHOST, R, [x.component(r * n) for n in Tout]
        )
    if x.flavor == WITT:
        Tout, cu = _frobenius_universal(T, r)
        env = x.payloads()
        out = [_eval_compiled(c, R, env) for c in cu.compiled]
        return CyclicVector.from_payloads(Tout, WITT, R, out)
    Tout = TruncationSet([n for n in T if r * n in T])
    out = []
    if x.flavor == NECKLACE:
        for n in Tout:
            s = R.zero()
            for d in divisors(r * n):
                if math.lcm(r, d) != r * n:
                    continue
                p = x.component(d).payload
                if R.is_zero(p):
                    continue
                s = R.add(s, R.mul(R.from_int(math.gcd(r, d)), p))
            out.append(s)
    else:
        for n in Tout:
            s = R.zero()
            for d in divisors(r * n):
                if math.lcm(r, d) != r * n:
                    continue
                s = R.add(s, x.component(d).payload)
            out.append(s)
    return CyclicVector.from_payloads(Tout, x.flavor, R, out)
