"""
Teichmuller, theta and gamma: three rings, one structure
========================================================

tau sends Witt coordinates to necklace components (the exponential
expansion), theta rescales each class by its index to reach aperiodic
coordinates, and gamma is their composite.  All three are bijections
whose round trips recover the input exactly, and all commute with the
ghost maps.
"""
from fractions import Fraction

from wittburnside import build_group, exp_M, subgroup_classes
from wittburnside import IndexedVector, WITT
from wittburnside import teichmuller, teichmuller_inv, theta, gamma, gamma_inv
from wittburnside import wg_ghost, nr_ghost, ap_ghost
from wittburnside.rings import QQ, ZZ, RingValue, parse_ring

S3 = build_group("S3")
labels = list(subgroup_classes(S3).labels())

# exp_M(r) is tau of the vector supported at the top class: the
# necklace-count expansion of a single element r
r = RingValue.from_int(ZZ, 2)
print("exp_M(2) on S3:", dict(zip(labels, exp_M(S3, r).payloads())))

a = IndexedVector.from_ints(S3, WITT, ZZ, [1, -2, 3, 5])
tau = teichmuller(a)
print("\na      =", a.payloads())
print("tau(a) =", tau.payloads())
print("round trip:", teichmuller_inv(tau).payloads())

# theta multiplies component V by the index (G:V); gamma = theta . tau
print("\ntheta(tau(a)) =", theta(tau).payloads())
print("gamma(a)      =", gamma(a).payloads())
print("gamma inverts:", gamma_inv(gamma(a)).payloads())

# every transport is ghost-compatible; the aperiodic ghost of a
# nonabelian group weights classes by 1/index, so it asks for rational
# scalars -- lift to Q for that one reading
aq = IndexedVector(S3, WITT, QQ,
                   [RingValue(QQ, Fraction(p)) for p in a.payloads()])
print("\nghost(a)        =", wg_ghost(a).payloads())
print("ghost(tau(a))   =", nr_ghost(tau).payloads())
print("ghost(gamma(a)) =", ap_ghost(gamma(aq)).payloads())

# over a residue ring there is no canonical component form, so the
# transports carry Witt coordinates along (coord_form); products in the
# carried form agree with Witt products on the coordinates
Z8 = parse_ring("Z/8")
am = IndexedVector.from_ints(S3, WITT, Z8, [3, 5, 1, 7])
tm = teichmuller(am)
print("\nover Z/8 the image is coordinate-backed:", tm.coord_form)
print("round trip still exact:", teichmuller_inv(tm).payloads())
