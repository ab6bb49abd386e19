"""
Tables of marks and the Burnside ring
=====================================

The table of marks of a finite group records, for each pair of subgroup
classes (U, V), how many cosets of V are fixed by U acting on G/V.  It
is the change-of-basis matrix between the basis of transitive G-sets
and the ghost (fixed-point) coordinates.
"""
from wittburnside import build_group, subgroup_classes, marks_matrix
from wittburnside import IndexedVector, wg_ghost, nr_ghost, WITT, NECKLACE
from wittburnside.rings import ZZ

S3 = build_group("S3")
ct = subgroup_classes(S3)
print("subgroup classes of S3 (by label / order / index / #conjugates):")
for cls in ct.classes:
    print(f"  {cls.label:>2}  order {cls.order}  index {cls.index}  x{len(cls.conjugates)}")

mm = marks_matrix(S3)
print("\ntable of marks (zeta):")
for row in mm.zeta.rows:
    print("  ", row)

# the Mobius inverse recovers multiplicities of transitive sets from marks
print("\nMobius inverse:")
for row in mm.mobius.rows:
    print("  ", [str(c) for c in row])

# a single transitive G-set G/G has one fixed point for every subgroup,
# so its ghost vector is all ones
one_hot = IndexedVector.from_ints(S3, NECKLACE, ZZ, [1, 0, 0, 0])
print("\nghost of [G/G]:", nr_ghost(one_hot).payloads())

# the regular representation 6*[G/1] seen from the Witt side
reg = IndexedVector.from_ints(S3, WITT, ZZ, [0, 0, 0, 1])
print("Witt ghost of the vector supported at the trivial class:",
      wg_ghost(reg).payloads())

# D4 has a richer lattice: three maximal classes over the centre
D4 = build_group("D4")
print("\nD4 classes:", list(subgroup_classes(D4).labels()))
print("D4 marks, first row:", marks_matrix(D4).zeta.rows[0])
