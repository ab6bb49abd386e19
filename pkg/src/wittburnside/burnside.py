"""Witt-Burnside, necklace and aperiodic rings of a finite group.

Vectors are indexed by the subgroup classes of a fixed group, with values in
one coefficient ring.  Four flavors share the container:

    Witt       ring operations through derived integer universal polynomials
    Necklace   componentwise addition, double-coset structure constants
    Aperiodic  componentwise addition, index-weighted structure constants
    Ghost      componentwise everything (the product target of ghost maps)

Transports between the flavors:

    wg_ghost   Witt      -> Ghost     exponent-weighted fixed-point sums
    nr_ghost   Necklace  -> Ghost     marks transpose (integer, invertible
                                      by a triangular solve)
    ap_ghost   Aperiodic -> Ghost     marks transpose scaled by 1/index
    teichmuller Witt     -> Necklace  exponential sums over subgroup lattices
    theta      Necklace  -> Aperiodic componentwise scaling by the index
    gamma      Witt      -> Aperiodic theta after teichmuller

Coefficient strategy: over a Q-algebra every map is computed directly; over
Z the rational computation is pulled back and integrality asserted (Z is a
binomial ring, so the pullback is a theorem, not a hope); over integer
polynomial rings results that need denominators are returned over the
rationalised ring; over Z/m the necklace/aperiodic images of Witt vectors
have no canonical component form at all, so they are carried as their Witt
coordinates (`coord_form=True`) and all ring operations delegate to the
Witt universal polynomials on those coordinates.
"""
from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction

from .errors import (
    DomainError,
    IntegralityViolation,
    NonIntegralConstant,
    NotBinomial,
    NotInImage,
    NotInvertibleIndex,
)
from .groups import (
    FiniteGroup,
    ind_class_map,
    marks_matrix,
    res_orbit_data,
    structure_constants,
    subgroup_classes,
    subgroup_group,
)
from .rings import MultiPoly, RingSpec, RingValue, ZZ, parse_ring

WITT = "Witt"
NECKLACE = "Necklace"
APERIODIC = "Aperiodic"
GHOST = "Ghost"

FLAVORS = (WITT, NECKLACE, APERIODIC, GHOST)


class IndexedVector:
    """A vector of ring values indexed by the subgroup classes of a group."""

    __slots__ = ("group", "flavor", "ring", "components", "coord_form")

    def __init__(self, group, flavor, ring, components, coord_form=False):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        comps = tuple(components)
        n = len(subgroup_classes(group))
        if len(comps) != n:
            raise ValueError(f"expected {n} components for {group.name}, got {len(comps)}")
        for c in comps:
            if not isinstance(c, RingValue) or c.spec != ring:
                raise ValueError("components must be RingValues over the declared ring")
        if coord_form and flavor not in (NECKLACE, APERIODIC):
            raise ValueError("coordinate form applies to Necklace/Aperiodic flavors only")
        self.group = group
        self.flavor = flavor
        self.ring = ring
        self.components = comps
        self.coord_form = coord_form

    @classmethod
    def from_payloads(cls, group, flavor, ring, payloads, coord_form=False):
        return cls(group, flavor, ring, [RingValue(ring, p) for p in payloads], coord_form)

    @classmethod
    def from_ints(cls, group, flavor, ring, ints, coord_form=False):
        return cls(
            group, flavor, ring, [RingValue.from_int(ring, n) for n in ints], coord_form
        )

    @classmethod
    def zero(cls, group, flavor, ring):
        n = len(subgroup_classes(group))
        return cls.from_ints(group, flavor, ring, [0] * n)

    @classmethod
    def one(cls, group, flavor, ring):
        # the class of the one-point G-set: 1 at the whole-group class
        n = len(subgroup_classes(group))
        return cls.from_ints(group, flavor, ring, [1] + [0] * (n - 1))

    def payloads(self):
        return tuple(c.payload for c in self.components)

    def labels(self):
        return subgroup_classes(self.group).labels()

    def retag(self, flavor, coord_form=None):
        cf = self.coord_form if coord_form is None else coord_form
        return IndexedVector(self.group, flavor, self.ring, self.components, cf)

    def with_components(self, components):
        return IndexedVector(self.group, self.flavor, self.ring, components, self.coord_form)

    def map_ring(self, target: RingSpec, fn):
        """Componentwise morphism into another ring (fn acts on payloads)."""
        return IndexedVector(
            self.group,
            self.flavor,
            target,
            [RingValue(target, fn(c.payload)) for c in self.components],
            self.coord_form,
        )

    def __eq__(self, other):
        return (
            isinstance(other, IndexedVector)
            and self.group == other.group
            and self.flavor == other.flavor
            and self.ring == other.ring
            and self.coord_form == other.coord_form
            and self.components == other.components
        )

    def __repr__(self):
        vals = ", ".join(c.format() for c in self.components)
        tag = "#coords" if self.coord_form else ""
        return f"<{self.flavor}{tag} over {self.ring.name} [{vals}]>"


def _strategy(ring: RingSpec) -> str:
    if ring.is_qalgebra:
        return "qalgebra"
    if ring.name.startswith("Z/"):
        return "quotient"
    return "torsionfree"


def _is_binomial(ring: RingSpec) -> bool:
    # rings where exponential sums of the lattice are guaranteed integral
    return ring == ZZ


def _check_same(x: IndexedVector, y: IndexedVector):
    if x.group != y.group or x.ring != y.ring or x.flavor != y.flavor:
        raise ValueError("operands live in different rings/groups/flavors")
    if x.coord_form != y.coord_form:
        raise ValueError("operands mix coordinate and component forms")


# ---------------------------------------------------------------------------
# ghost maps


def wg_ghost(alpha: IndexedVector) -> IndexedVector:
    """Fixed-point ghost of a Witt vector: sums of marks times power maps."""
    if alpha.flavor != WITT:
        raise ValueError("wg_ghost expects a Witt vector")
    G = alpha.group
    ct = subgroup_classes(G)
    mm = marks_matrix(G)
    R = alpha.ring
    xs = alpha.payloads()
    out = []
    for u in range(len(ct)):
        iu = ct.classes[u].index
        s = R.zero()
        for v in range(u + 1):
            m = mm.zeta.entry(v, u)
            if m == 0:
                continue
            e = iu // ct.classes[v].index
            s = R.add(s, R.mul(R.from_int(m), R.pow(xs[v], e)))
        out.append(s)
    return IndexedVector.from_payloads(G, GHOST, R, out)


def nr_ghost(x: IndexedVector) -> IndexedVector:
    """Necklace ghost: transpose of the marks matrix applied to the components."""
    if x.flavor != NECKLACE:
        raise ValueError("nr_ghost expects a Necklace vector")
    if x.coord_form:
        return wg_ghost(x.retag(WITT, coord_form=False))
    G = x.group
    mm = marks_matrix(G)
    R = x.ring
    xs = x.payloads()
    n = len(xs)
    out = []
    for u in range(n):
        s = R.zero()
        for v in range(u + 1):
            m = mm.zeta.entry(v, u)
            if m:
                s = R.add(s, R.mul(R.from_int(m), xs[v]))
        out.append(s)
    return IndexedVector.from_payloads(G, GHOST, R, out)


def nr_ghost_inv(b: IndexedVector, group=None) -> IndexedVector:
    """Invert the necklace ghost by a triangular solve staying inside the ring."""
    if b.flavor != GHOST:
        raise ValueError("nr_ghost_inv expects a Ghost vector")
    G = group or b.group
    mm = marks_matrix(G)
    R = b.ring
    bs = b.payloads()
    xs = []
    for u in range(len(bs)):
        acc = bs[u]
        for v in range(u):
            m = mm.zeta.entry(v, u)
            if m:
                acc = R.sub(acc, R.mul(R.from_int(m), xs[v]))
        q = R.try_div(acc, R.from_int(mm.zeta.entry(u, u)))
        if q is None:
            raise NotInImage(
                f"ghost vector is not a necklace ghost over {R.name} at class "
                f"{subgroup_classes(G).classes[u].label}"
            )
        xs.append(q)
    return IndexedVector.from_payloads(G, NECKLACE, R, xs)


def _ap_coeff(R: RingSpec, f: Fraction, context: str):
    if f.denominator == 1:
        return R.from_int(f.numerator)
    if R.is_qalgebra:
        return R.from_fraction(f)
    raise NonIntegralConstant(f"{context}: constant {f} needs rational coefficients in {R.name}")


def ap_ghost(x: IndexedVector) -> IndexedVector:
    """Aperiodic ghost: marks transpose with each column scaled by 1/(G:V)."""
    if x.flavor != APERIODIC:
        raise ValueError("ap_ghost expects an Aperiodic vector")
    if x.coord_form:
        return wg_ghost(x.retag(WITT, coord_form=False))
    G = x.group
    ct = subgroup_classes(G)
    mm = marks_matrix(G)
    R = x.ring
    xs = x.payloads()
    out = []
    for u in range(len(xs)):
        s = R.zero()
        for v in range(u + 1):
            m = mm.zeta.entry(v, u)
            if m == 0 or R.is_zero(xs[v]):
                continue
            c = _ap_coeff(R, Fraction(m, ct.classes[v].index), "aperiodic ghost")
            s = R.add(s, R.mul(c, xs[v]))
        out.append(s)
    return IndexedVector.from_payloads(G, GHOST, R, out)


def ap_ghost_inv(b: IndexedVector, group=None) -> IndexedVector:
    if b.flavor != GHOST:
        raise ValueError("ap_ghost_inv expects a Ghost vector")
    G = group or b.group
    ct = subgroup_classes(G)
    mm = marks_matrix(G)
    R = b.ring
    bs = b.payloads()
    xs = []
    for u in range(len(bs)):
        acc = bs[u]
        for v in range(u):
            m = mm.zeta.entry(v, u)
            if m == 0 or R.is_zero(xs[v]):
                continue
            c = _ap_coeff(R, Fraction(m, ct.classes[v].index), "aperiodic ghost inverse")
            acc = R.sub(acc, R.mul(c, xs[v]))
        diag = Fraction(mm.zeta.entry(u, u), ct.classes[u].index)
        if diag.denominator == 1:
            q = R.try_div(acc, R.from_int(diag.numerator))
        elif R.is_qalgebra:
            q = R.try_div(acc, R.from_fraction(diag))
        else:
            q = None
        if q is None:
            raise NotInImage(
                f"ghost vector is not an aperiodic ghost over {R.name} at class "
                f"{ct.classes[u].label}"
            )
        xs.append(q)
    return IndexedVector.from_payloads(G, APERIODIC, R, xs)


# ---------------------------------------------------------------------------
# universal polynomials for the Witt flavor


class UniversalPolySet:
    """Integer polynomial formulas for one Witt-flavor ring operation."""

    __slots__ = ("group", "op", "vars", "polys", "compiled")

    def __init__(self, group, op, vars, polys):
        self.group = group
        self.op = op
        self.vars = tuple(vars)
        self.polys = tuple(polys)
        self.compiled = tuple(
            tuple((int(c), factors) for c, factors in p.compiled()) for p in self.polys
        )


_OPS = ("sum", "prod", "neg")
_UNIVERSAL_CACHE: dict = {}


def _group_key(G: FiniteGroup) -> str:
    blob = repr(G.elements).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _cache_path(G, op):
    root = os.environ.get("WB_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"wg-{_group_key(G)}-{op}.json")


def _ghost_polys(G, vars, offset, nvars):
    """Symbolic ghost components: one MultiPoly per class in the given variables."""
    ct = subgroup_classes(G)
    mm = marks_matrix(G)
    out = []
    for u in range(len(ct)):
        iu = ct.classes[u].index
        p = MultiPoly(vars)
        for v in range(u + 1):
            m = mm.zeta.entry(v, u)
            if m == 0:
                continue
            e = [0] * nvars
            e[offset + v] = iu // ct.classes[v].index
            p = p + MultiPoly(vars, {tuple(e): Fraction(m)})
        out.append(p)
    return out


def derive_universal(G: FiniteGroup, op: str) -> UniversalPolySet:
    """Solve the ghost equations symbolically; coefficients must come out integral."""
    if op not in _OPS:
        raise ValueError(f"op must be one of {_OPS}")
    key = (G, op)
    if key in _UNIVERSAL_CACHE:
        return _UNIVERSAL_CACHE[key]
    cached = _cache_read(G, op)
    if cached is not None:
        _UNIVERSAL_CACHE[key] = cached
        return cached

    ct = subgroup_classes(G)
    labels = ct.labels()
    avars = tuple(f"a_{l}" for l in labels)
    bvars = tuple(f"b_{l}" for l in labels) if op != "neg" else ()
    vars = avars + bvars
    n = len(labels)
    nv = len(vars)
    ga = _ghost_polys(G, vars, 0, nv)
    if op == "sum":
        gb = _ghost_polys(G, vars, n, nv)
        targets = [x + y for x, y in zip(ga, gb)]
    elif op == "prod":
        gb = _ghost_polys(G, vars, n, nv)
        targets = [x * y for x, y in zip(ga, gb)]
    else:
        targets = [-x for x in ga]

    mm = marks_matrix(G)
    solved = []
    for u in range(n):
        iu = ct.classes[u].index
        acc = targets[u]
        for v in range(u):
            m = mm.zeta.entry(v, u)
            if m == 0:
                continue
            e = iu // ct.classes[v].index
            acc = acc - Fraction(m) * solved[v] ** e
        p = acc * Fraction(1, mm.zeta.entry(u, u))
        if not p.is_integral():
            raise IntegralityViolation(
                f"universal {op} polynomial at class {labels[u]} of {G.name} "
                "has fractional coefficients"
            )
        solved.append(p)
    ups = UniversalPolySet(G, op, vars, solved)
    _UNIVERSAL_CACHE[key] = ups
    _cache_write(G, op, ups)
    return ups


def _cache_read(G, op):
    path = _cache_path(G, op)
    if not path or not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        vars = tuple(data["vars"])
        polys = []
        for terms in data["polys"]:
            d = {}
            for coeff, exps in terms:
                d[tuple(exps)] = Fraction(coeff)
            polys.append(MultiPoly(vars, d))
        return UniversalPolySet(G, op, vars, polys)
    except (OSError, KeyError, ValueError, TypeError):
        return None  # treat a bad cache entry as a miss


def _cache_write(G, op, ups: UniversalPolySet):
    path = _cache_path(G, op)
    if not path:
        return
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        data = {
            "vars": list(ups.vars),
            "polys": [
                [[int(c), list(e)] for e, c in p.sorted_terms()] for p in ups.polys
            ],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True)
    except OSError:
        pass


def _eval_compiled(compiled, R: RingSpec, payloads):
    powcache = {}
    total = R.zero()
    for coeff, factors in compiled:
        term = R.from_int(coeff)
        for vi, e in factors:
            p = powcache.get((vi, e))
            if p is None:
                p = R.pow(payloads[vi], e)
                powcache[(vi, e)] = p
            term = R.mul(term, p)
        total = R.add(total, term)
    return total


def wg_op(op: str, a: IndexedVector, b: IndexedVector | None = None) -> IndexedVector:
    """Witt-flavor ring operation via the universal polynomials."""
    if a.flavor != WITT:
        raise ValueError("wg_op expects Witt vectors")
    if (b is None) != (op == "neg"):
        raise ValueError("binary ops need two operands, neg exactly one")
    if b is not None:
        _check_same(a, b)
    ups = derive_universal(a.group, op)
    env = a.payloads() + (b.payloads() if b is not None else ())
    R = a.ring
    out = [_eval_compiled(c, R, env) for c in ups.compiled]
    return IndexedVector.from_payloads(a.group, WITT, R, out)


# ---------------------------------------------------------------------------
# necklace and aperiodic operations


def _componentwise(op, x, y=None):
    if op == "neg":
        return x.with_components([-c for c in x.components])
    return x.with_components([c + d for c, d in zip(x.components, y.components)])


def nr_op(op: str, x: IndexedVector, y: IndexedVector | None = None) -> IndexedVector:
    """Necklace ring operation; multiplication uses the double-coset constants."""
    if x.flavor != NECKLACE:
        raise ValueError("nr_op expects Necklace vectors")
    if (y is None) != (op == "neg"):
        raise ValueError("binary ops need two operands, neg exactly one")
    if y is not None:
        _check_same(x, y)
    if x.coord_form:
        out = wg_op(op, x.retag(WITT, coord_form=False),
                    y.retag(WITT, coord_form=False) if y is not None else None)
        return out.retag(NECKLACE, coord_form=True)
    if op in ("sum", "neg"):
        return _componentwise(op, x, y)
    if op != "prod":
        raise ValueError(f"unknown op {op!r}")
    R = x.ring
    xs, ys = x.payloads(), y.payloads()
    out = [R.zero() for _ in xs]
    for (i, j, k), c in structure_constants(x.group).p.items():
        if R.is_zero(xs[i]) or R.is_zero(ys[j]):
            continue
        term = R.mul(R.from_int(c), R.mul(xs[i], ys[j]))
        out[k] = R.add(out[k], term)
    return IndexedVector.from_payloads(x.group, NECKLACE, R, out)


def ap_op(op: str, x: IndexedVector, y: IndexedVector | None = None) -> IndexedVector:
    """Aperiodic ring operation; constants are index-weighted double-coset counts."""
    if x.flavor != APERIODIC:
        raise ValueError("ap_op expects Aperiodic vectors")
    if (y is None) != (op == "neg"):
        raise ValueError("binary ops need two operands, neg exactly one")
    if y is not None:
        _check_same(x, y)
    if x.coord_form:
        out = wg_op(op, x.retag(WITT, coord_form=False),
                    y.retag(WITT, coord_form=False) if y is not None else None)
        return out.retag(APERIODIC, coord_form=True)
    if op in ("sum", "neg"):
        return _componentwise(op, x, y)
    if op != "prod":
        raise ValueError(f"unknown op {op!r}")
    R = x.ring
    xs, ys = x.payloads(), y.payloads()
    out = [R.zero() for _ in xs]
    for (i, j, k), f in structure_constants(x.group).a.items():
        if R.is_zero(xs[i]) or R.is_zero(ys[j]):
            continue
        c = _ap_coeff(R, f, "aperiodic product")
        out[k] = R.add(out[k], R.mul(c, R.mul(xs[i], ys[j])))
    return IndexedVector.from_payloads(x.group, APERIODIC, R, out)


# ---------------------------------------------------------------------------
# exponential scalars and the flavor transports


def _exp_M_payloads(G: FiniteGroup, r, Rq: RingSpec):
    """(M_G(r, V))_V over a Q-algebra: Mobius inversion of the power ghost."""
    ct = subgroup_classes(G)
    ghost = [Rq.pow(r, c.index) for c in ct.classes]
    vec = IndexedVector.from_payloads(G, GHOST, Rq, ghost)
    return nr_ghost_inv(vec, group=G).payloads()


def exp_M(G: FiniteGroup, r: RingValue) -> IndexedVector:
    """Necklace coordinates of the multiplicative lift of a single scalar."""
    R = r.spec
    if R.is_qalgebra:
        return IndexedVector.from_payloads(G, NECKLACE, R, _exp_M_payloads(G, r.payload, R))
    if not _is_binomial(R):
        raise NotBinomial(
            f"exponential scalars over {R.name} need a rational algebra or Z"
        )
    Rq = R.rationalized()
    vals = _exp_M_payloads(G, R.to_rationalized(r.payload), Rq)
    out = []
    for v, cls in zip(vals, subgroup_classes(G).classes):
        w = R.from_rationalized(v)
        if w is None:
            raise IntegralityViolation(
                f"exponential scalar escaped {R.name} at class {cls.label}"
            )
        out.append(w)
    return IndexedVector.from_payloads(G, NECKLACE, R, out)


def exp_S(G: FiniteGroup, r: RingValue) -> IndexedVector:
    """Aperiodic coordinates: the index-scaled exponential scalars."""
    return theta(exp_M(G, r))


def _teichmuller_payloads(G, alphas, Rq):
    """Necklace image of a Witt vector over a Q-algebra, by lattice exponentials."""
    ct = subgroup_classes(G)
    n = len(ct)
    out = [Rq.zero()] * n
    for ci in range(n):
        r = alphas[ci]
        if Rq.is_zero(r):
            continue
        U = subgroup_group(G, ci)
        vals = _exp_M_payloads(U, r, Rq)
        fuse = ind_class_map(G, ci)
        for pos, w in enumerate(fuse):
            out[w] = Rq.add(out[w], vals[pos])
    return out


def teichmuller(alpha: IndexedVector) -> IndexedVector:
    """Witt -> Necklace transport (a ring isomorphism onto its image)."""
    if alpha.flavor != WITT:
        raise ValueError("teichmuller expects a Witt vector")
    R = alpha.ring
    strat = _strategy(R)
    if strat == "quotient":
        # no canonical component form exists mod m; carry Witt coordinates
        return alpha.retag(NECKLACE, coord_form=True)
    if strat == "qalgebra":
        vals = _teichmuller_payloads(alpha.group, alpha.payloads(), R)
        return IndexedVector.from_payloads(alpha.group, NECKLACE, R, vals)
    Rq = R.rationalized()
    lifted = [R.to_rationalized(p) for p in alpha.payloads()]
    vals = _teichmuller_payloads(alpha.group, lifted, Rq)
    if _is_binomial(R):
        out = []
        for v, cls in zip(vals, subgroup_classes(alpha.group).classes):
            w = R.from_rationalized(v)
            if w is None:
                raise IntegralityViolation(
                    f"teichmuller escaped {R.name} at class {cls.label}"
                )
            out.append(w)
        return IndexedVector.from_payloads(alpha.group, NECKLACE, R, out)
    # torsion-free but not binomial: the image lives in the rationalisation
    return IndexedVector.from_payloads(alpha.group, NECKLACE, Rq, vals)


def teichmuller_inv(x: IndexedVector) -> IndexedVector:
    """Recover Witt coordinates from a necklace vector in the teichmuller image."""
    if x.flavor != NECKLACE:
        raise ValueError("teichmuller_inv expects a Necklace vector")
    if x.coord_form:
        return x.retag(WITT, coord_form=False)
    if _strategy(x.ring) == "quotient":
        raise DomainError(
            "component vectors over a residue ring have no canonical Witt "
            "coordinates; only coordinate-backed vectors invert"
        )
    G = x.group
    R = x.ring
    Rq = R.rationalized()
    ct = subgroup_classes(G)
    n = len(ct)
    target = [R.to_rationalized(p) for p in x.payloads()]
    residue = list(target)
    alphas = []
    for ci in range(n):
        a = residue[ci]
        alphas.append(a)
        if Rq.is_zero(a):
            continue
        U = subgroup_group(G, ci)
        vals = _exp_M_payloads(U, a, Rq)
        fuse = ind_class_map(G, ci)
        for pos, w in enumerate(fuse):
            residue[w] = Rq.sub(residue[w], vals[pos])
    if any(not Rq.is_zero(residue[i]) for i in range(n)):
        raise IntegralityViolation("teichmuller inverse did not close; solver bug")
    out = []
    for v, cls in zip(alphas, ct.classes):
        w = R.from_rationalized(v)
        if w is None:
            raise NotInImage(
                f"vector is not a teichmuller image over {R.name} at class {cls.label}"
            )
        out.append(w)
    return IndexedVector.from_payloads(G, WITT, R, out)


def theta(x: IndexedVector) -> IndexedVector:
    """Necklace -> Aperiodic: scale each class by its index."""
    if x.flavor != NECKLACE:
        raise ValueError("theta expects a Necklace vector")
    if x.coord_form:
        return x.retag(APERIODIC)
    ct = subgroup_classes(x.group)
    R = x.ring
    out = [R.mul(R.from_int(c.index), p) for c, p in zip(ct.classes, x.payloads())]
    return IndexedVector.from_payloads(x.group, APERIODIC, R, out)


def theta_inv(y: IndexedVector) -> IndexedVector:
    if y.flavor != APERIODIC:
        raise ValueError("theta_inv expects an Aperiodic vector")
    if y.coord_form:
        return y.retag(NECKLACE)
    ct = subgroup_classes(y.group)
    R = y.ring
    out = []
    for c, p in zip(ct.classes, y.payloads()):
        q = R.try_div(p, R.from_int(c.index))
        if q is None:
            raise NotInvertibleIndex(c.label)
        out.append(q)
    return IndexedVector.from_payloads(y.group, NECKLACE, R, out)


def gamma(alpha: IndexedVector) -> IndexedVector:
    """Witt -> Aperiodic transport."""
    return theta(teichmuller(alpha))


def gamma_inv(y: IndexedVector) -> IndexedVector:
    if y.coord_form:
        return y.retag(WITT, coord_form=False)
    return teichmuller_inv(theta_inv(y))


# ---------------------------------------------------------------------------
# induction and restriction


def _require_subgroup_vector(G, ci, x):
    U = subgroup_group(G, ci)
    if x.group != U:
        raise ValueError("vector is not indexed by the chosen subgroup's classes")
    return U


def ind_nr(G: FiniteGroup, ci: int, x: IndexedVector) -> IndexedVector:
    """Necklace induction: push classes of the subgroup along class fusion."""
    _require_subgroup_vector(G, ci, x)
    if x.flavor != NECKLACE:
        raise ValueError("ind_nr expects a Necklace vector")
    R = x.ring
    n = len(subgroup_classes(G))
    out = [R.zero()] * n
    for pos, w in enumerate(ind_class_map(G, ci)):
        out[w] = R.add(out[w], x.payloads()[pos])
    return IndexedVector.from_payloads(G, NECKLACE, R, out)


def ind_ap(G: FiniteGroup, ci: int, x: IndexedVector) -> IndexedVector:
    """Aperiodic induction: fusion weighted by the subgroup's index."""
    _require_subgroup_vector(G, ci, x)
    if x.flavor != APERIODIC:
        raise ValueError("ind_ap expects an Aperiodic vector")
    R = x.ring
    idx = subgroup_classes(G).classes[ci].index
    n = len(subgroup_classes(G))
    out = [R.zero()] * n
    for pos, w in enumerate(ind_class_map(G, ci)):
        out[w] = R.add(out[w], R.mul(R.from_int(idx), x.payloads()[pos]))
    return IndexedVector.from_payloads(G, APERIODIC, R, out)


def res_nr(G: FiniteGroup, ci: int, x: IndexedVector) -> IndexedVector:
    """Necklace restriction: orbit counts of the subgroup acting on each G/V."""
    if x.flavor != NECKLACE:
        raise ValueError("res_nr expects a Necklace vector")
    if x.group != G:
        raise ValueError("vector is not indexed by the parent group's classes")
    U = subgroup_group(G, ci)
    R = x.ring
    nu = len(subgroup_classes(U))
    out = [R.zero()] * nu
    for cj, p in enumerate(x.payloads()):
        if R.is_zero(p):
            continue
        for (w, m) in res_orbit_data(G, ci, cj):
            out[w] = R.add(out[w], R.mul(R.from_int(m), p))
    return IndexedVector.from_payloads(U, NECKLACE, R, out)


def res_ap(G: FiniteGroup, ci: int, x: IndexedVector) -> IndexedVector:
    """Aperiodic restriction: orbits weighted by (U:W)/(G:V)."""
    if x.flavor != APERIODIC:
        raise ValueError("res_ap expects an Aperiodic vector")
    if x.group != G:
        raise ValueError("vector is not indexed by the parent group's classes")
    ct = subgroup_classes(G)
    U = subgroup_group(G, ci)
    ut = subgroup_classes(U)
    R = x.ring
    out = [R.zero()] * len(ut)
    for cj, p in enumerate(x.payloads()):
        if R.is_zero(p):
            continue
        gv = ct.classes[cj].index
        for (w, m) in res_orbit_data(G, ci, cj):
            uw = U.order // ut.classes[w].order
            f = Fraction(m * uw, gv)
            c = _ap_coeff(R, f, "aperiodic restriction")
            out[w] = R.add(out[w], R.mul(c, p))
    return IndexedVector.from_payloads(U, APERIODIC, R, out)


# ---------------------------------------------------------------------------
# Frobenius/Verschiebung on Witt coordinates, ghost-level companions


def _to_rational_vector(x: IndexedVector):
    Rq = x.ring.rationalized()
    return IndexedVector.from_payloads(
        x.group, x.flavor, Rq, [x.ring.to_rationalized(p) for p in x.payloads()]
    ), Rq


def _pull_back(vec: IndexedVector, R: RingSpec, what: str) -> IndexedVector:
    out = []
    for p, cls in zip(vec.payloads(), subgroup_classes(vec.group).classes):
        w = R.from_rationalized(p)
        if w is None:
            raise IntegralityViolation(f"{what} escaped {R.name} at class {cls.label}")
        out.append(w)
    return IndexedVector.from_payloads(vec.group, vec.flavor, R, out)


def witt_v(G: FiniteGroup, ci: int, alpha: IndexedVector) -> IndexedVector:
    """Verschiebung-type map on Witt coordinates, conjugated through teichmuller."""
    _require_subgroup_vector(G, ci, alpha)
    if alpha.flavor != WITT:
        raise ValueError("witt_v expects a Witt vector")
    R = alpha.ring
    strat = _strategy(R)
    if strat == "qalgebra":
        return teichmuller_inv(ind_nr(G, ci, teichmuller(alpha)))
    if strat == "quotient":
        m = R.modulus
        lifted = alpha.map_ring(ZZ, lambda p: p)
        return witt_v(G, ci, lifted).map_ring(R, lambda p: p % m)
    vec, _ = _to_rational_vector(alpha)
    res = teichmuller_inv(ind_nr(G, ci, teichmuller(vec)))
    return _pull_back(res, R, "induced Witt vector")


def witt_f(G: FiniteGroup, ci: int, alpha: IndexedVector) -> IndexedVector:
    """Frobenius-type map on Witt coordinates, conjugated through teichmuller."""
    if alpha.flavor != WITT:
        raise ValueError("witt_f expects a Witt vector")
    if alpha.group != G:
        raise ValueError("vector is not indexed by the parent group's classes")
    R = alpha.ring
    strat = _strategy(R)
    if strat == "qalgebra":
        return teichmuller_inv(res_nr(G, ci, teichmuller(alpha)))
    if strat == "quotient":
        m = R.modulus
        lifted = alpha.map_ring(ZZ, lambda p: p)
        return witt_f(G, ci, lifted).map_ring(R, lambda p: p % m)
    vec, _ = _to_rational_vector(alpha)
    res = teichmuller_inv(res_nr(G, ci, teichmuller(vec)))
    return _pull_back(res, R, "restricted Witt vector")


def ghost_nu(G: FiniteGroup, ci: int, b: IndexedVector) -> IndexedVector:
    """Ghost-level companion of induction."""
    _require_subgroup_vector(G, ci, b)
    if b.flavor != GHOST:
        raise ValueError("ghost_nu expects a Ghost vector")
    R = b.ring
    ct = subgroup_classes(G)
    if G.is_abelian():
        # fusion is injective, so the map is a scaled reindexing in any ring
        idx = R.from_int(ct.classes[ci].index)
        fuse = ind_class_map(G, ci)
        back = {w: pos for pos, w in enumerate(fuse)}
        out = []
        for w in range(len(ct)):
            if w in back:
                out.append(R.mul(idx, b.payloads()[back[w]]))
            else:
                out.append(R.zero())
        return IndexedVector.from_payloads(G, GHOST, R, out)
    U = subgroup_group(G, ci)
    if R.is_qalgebra:
        return nr_ghost(ind_nr(G, ci, nr_ghost_inv(b, group=U)))
    if _strategy(R) == "quotient":
        raise NonIntegralConstant(
            "ghost-level induction over a residue ring needs an abelian group"
        )
    vec, _ = _to_rational_vector(b)
    res = nr_ghost(ind_nr(G, ci, nr_ghost_inv(vec, group=U)))
    out = []
    for p, cls in zip(res.payloads(), ct.classes):
        w = R.from_rationalized(p)
        if w is None:
            raise NotInImage(
                f"ghost induction leaves {R.name} at class {cls.label}"
            )
        out.append(w)
    return IndexedVector.from_payloads(G, GHOST, R, out)


def ghost_F(G: FiniteGroup, ci: int, c: IndexedVector) -> IndexedVector:
    """Ghost-level companion of restriction: read off along class fusion."""
    if c.flavor != GHOST:
        raise ValueError("ghost_F expects a Ghost vector")
    if c.group != G:
        raise ValueError("vector is not indexed by the parent group's classes")
    U = subgroup_group(G, ci)
    R = c.ring
    fuse = ind_class_map(G, ci)
    out = [c.payloads()[w] for w in fuse]
    return IndexedVector.from_payloads(U, GHOST, R, out)


def delta_membership(x: IndexedVector, target: RingSpec) -> bool:
    """Does a rational necklace vector have Witt coordinates inside `target`?"""
    if x.flavor != NECKLACE:
        raise ValueError("delta_membership expects a Necklace vector")
    if _strategy(x.ring) == "quotient":
        raise DomainError("membership testing needs a torsion-free coefficient ring")
    vec, _ = _to_rational_vector(x)
    try:
        alpha = teichmuller_inv(vec)
    except NotInImage:
        return False
    return all(target.from_rationalized(p) is not None for p in alpha.payloads())


def delta_reduce(x: IndexedVector, m: int) -> IndexedVector:
    """Morphism Z -> Z/m on the necklace/aperiodic picture.

    Mod m the image of the Witt coordinates has no canonical component
    form, so the result is coordinate-backed: the class of x is recorded by
    its Witt coordinates reduced mod m.
    """
    if x.ring != ZZ:
        raise ValueError("delta_reduce starts from integer vectors")
    R = parse_ring(f"Z/{m}")
    if x.flavor == NECKLACE:
        alpha = teichmuller_inv(x)
    elif x.flavor == APERIODIC:
        alpha = gamma_inv(x)
    else:
        raise ValueError("delta_reduce expects a Necklace or Aperiodic vector")
    reduced = alpha.map_ring(R, lambda p: p % m)
    return reduced.retag(x.flavor, coord_form=True)
