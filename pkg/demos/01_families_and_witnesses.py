"""Tour of the set-family primitives.

A family lives on a ground set [n] = {1, ..., n}; each member set is a
bitmask.  Union-closedness, frequencies, complements, and the
"element in at least half the sets" witness all come from one module.
"""

from frankl_lab import (SetFamily, complement, family_to_json, frankl_witness,
                        frequencies, is_union_closed, max_frequency,
                        union_closure)

# The running example: four sets on a ground set of four elements.
family = SetFamily.from_sets(4, [(1,), (2, 3), (1, 2, 3), (1, 2, 3, 4)])
print("family:", family.sets())
print("union-closed?", is_union_closed(family))

# Element frequencies: how many member sets contain each element.
print("frequencies:", tuple(frequencies(family)))
print("most frequent:", max_frequency(family))

# The conjecture's witness: an element in at least half of the sets.
# Here elements 1, 2, 3 all appear in 3 of 4 sets; the smallest is reported.
print("witness element:", frankl_witness(family))

# Families that are not union-closed can be repaired by taking the
# closure: the smallest union-closed superfamily.
ragged = SetFamily.from_sets(3, [(1,), (2,), (3,)])
closed = union_closure(ragged)
print("\nclosure of three singletons:", closed.sets())
print("closure is idempotent:", union_closure(closed) == closed)

# The complement (the "missing" sets) drives several structural facts.
print("\ncomplement of the closure:", complement(closed).sets())

# Families serialize to JSON two ways; masks are canonical on output.
print("\nJSON (masks):", family_to_json(family))
print("JSON (sets): ", family_to_json(family, form="sets"))
