#!/usr/bin/env python3
"""Tour of the root-system layer: exact data for the simple types.

Everything downstream is built on integer root coordinates and an integral
invariant form (short roots normalised to squared length 2), so there is no
floating point anywhere in the pipeline.
"""

from nilorb import build_root_system, format_dynkin_type

print("Root counts and extended-diagram marks")
print("--------------------------------------")
for label, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4), ("E", 8)]:
    rs = build_root_system(label, rank)
    print(f"{label}{rank}: {rs.n_pos * 2:4d} roots, marks {list(rs.marks)}")

print()
g2 = build_root_system("G", 2)
print("G2 in detail (first simple root short)")
print("--------------------------------------")
print("positive roots:", [list(r) for r in g2.positive_roots])
print("highest root:", list(g2.highest_root))
print("pairing <a1, a2^v> =", g2.pairing((1, 0), (0, 1)))
print("pairing <a2, a1^v> =", g2.pairing((0, 1), (1, 0)))

# the lowest root of a subsystem drives the elementary transformations used
# to classify pi-systems later on
print("lowest root of the full G2 system:", list(g2.lowest_root_of_subsystem([(1, 0), (0, 1)])))

print()
print("Recognising subsystem types from a basis")
print("----------------------------------------")
e8 = build_root_system("E", 8)
ext = e8.extended_basis()
for node in (1, 2, 5):
    gens = [ext[i] for i in range(9) if i != node]
    basis = e8.subsystem_positive_basis(gens)
    print(f"extended E8 diagram minus node {node}: {format_dynkin_type(e8.dynkin_type(basis))}")
