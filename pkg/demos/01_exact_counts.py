#!/usr/bin/env python3
"""Exact counting: class sizes and family-class intersections.

Every figure here is an exact integer computed three ways where
possible: closed form, double counting, and brute-force enumeration.
"""

from covernum.combinat import Partition, class_size, factorial, odd_two_power_class
from covernum.families import (
    blockstab_ncycle_count,
    intersect_blockstab,
    intersect_blockstab_half,
    intersect_setstab,
    pgl2_fullcycle_count,
)
from covernum.permengine import Perm, block_stabilizer_group

print("Conjugacy class sizes in symmetric groups")
for parts in [(2, 2, 2), (4, 1, 1), (4, 4, 2), (5, 5), (4, 4, 4)]:
    lam = Partition(parts)
    print(f"  type {parts} in S_{lam.n}: {class_size(lam)} elements")

print()
print("The designated odd class of 2-power cycle type, per degree")
for n in (5, 7, 10, 11, 14, 18, 20, 40):
    lam = odd_two_power_class(n)
    print(f"  n={n:3d}: class {lam.parts}, size {class_size(lam)}")

print()
print("How many class elements a single set stabilizer contains")
print("  (4,4,2,1) in S11, 1-point stabilizer:",
      intersect_setstab(Partition((4, 4, 2, 1)), 1))
print("  (4,4,2)   in S10, 2-set stabilizer:  ",
      intersect_setstab(Partition((4, 4, 2)), 2))

print()
print("Two-block stabilizers on classes with no half-degree subsum")
print("  (8)     in S8,  blocks 4+4:", intersect_blockstab_half(Partition((8,))))
print("  (4,4,2) in S10, blocks 5+5:", intersect_blockstab_half(Partition((4, 4, 2))))
print("  (8,4,2) in S14, blocks 7+7:", intersect_blockstab_half(Partition((8, 4, 2))))

print()
print("Exact intersections via preserved-system double counting")
for d in (2, 3, 4, 6):
    cnt = intersect_blockstab(Partition((4, 4, 4)), d)
    print(f"  (4,4,4) in S12, block size {d}: {cnt}")

print()
print("Full cycles inside transitive subgroups of S8")
w2 = block_stabilizer_group(8, [(1, 2), (3, 4), (5, 6), (7, 8)])
brute = sum(1 for t in w2.elements if Perm(t).cycle_type() == Partition((8,)))
print("  blocks of 2 (formula):", blockstab_ncycle_count(8, 2),
      " (brute force):", brute)
print("  blocks of 4:", blockstab_ncycle_count(8, 4), "= 4! * 3! =",
      factorial(4) * factorial(3))
print("  projective group on 8 points:", pgl2_fullcycle_count(3))
