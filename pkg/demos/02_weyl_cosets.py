#!/usr/bin/env python3
"""Minimal coset representatives of Weyl subgroups.

A Weyl subgroup is given by a pi-system of positive roots.  Every right
coset holds a unique representative w of shortest length, characterised by
w^{-1} sending each basis root to a positive root; the representatives are
grown level by level from the identity.
"""

import time

from nilorb import WeylSubgroup, build_root_system, format_dynkin_type, shortest_coset_reps

a2 = build_root_system("A", 2)
sub = WeylSubgroup(a2, [(1, 0)])
reps = shortest_coset_reps(a2, sub)
print("A2 modulo the subgroup generated by s_1:")
for w in reps:
    word = "".join(f"s{i + 1}" for i in w.word) or "e"
    print(f"  length {w.length()}: {word}")

print()
print("Counting identity: #reps x |W0| = |W|")
for label, rank, basis in [("B", 3, [(1, 0, 0), (0, 0, 1)]), ("F", 4, [(1, 0, 0, 0)])]:
    rs = build_root_system(label, rank)
    reps = shortest_coset_reps(rs, WeylSubgroup(rs, basis))
    print(
        f"  {label}{rank} / {format_dynkin_type(rs.dynkin_type(basis))}: "
        f"{len(reps)} x {rs.weyl_order(basis)} = {len(reps) * rs.weyl_order(basis)} = |W|"
    )

print()
print("The big one: 2A4 inside E8")
e8 = build_root_system("E", 8)
ext = e8.extended_basis()
gens = [ext[i] for i in range(9) if i != 5]
basis = e8.subsystem_positive_basis(gens)
t = time.time()
reps = shortest_coset_reps(e8, WeylSubgroup(e8, basis))
print(f"  {format_dynkin_type(e8.dynkin_type(basis))}: {len(reps)} cosets in {time.time() - t:.1f}s")
