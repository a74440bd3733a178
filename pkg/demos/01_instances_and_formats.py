"""Build weighted constraint instances three ways and round-trip the formats.

Run: python demos/01_instances_and_formats.py
"""

from maxcsp import (
    Assignment,
    Constraint,
    CspInstance,
    clause_from_literals,
    clause_length_histogram,
    contribution,
    parse,
    serialize,
    weight_of,
)

print("=== from literals ===")
# (x1 v x2 v x3) and (x1 v x2 v x4), unit weights
inst = CspInstance(
    4,
    (clause_from_literals((1, 2, 3)), clause_from_literals((1, 2, 4))),
    clause_built=True,
)
print("n =", inst.num_vars, " m =", inst.num_constraints)
print("total weight w =", inst.total_weight)
print("weighted length l =", inst.weighted_length)
print("per-variable contributions:", inst.contributions)
print("contribution of x1:", contribution(inst, 1))

z = Assignment((1, 0, 0, 0))
print(f"assignment {z} satisfies weight", weight_of(inst, z))

print()
print("=== DIMACS CNF text ===")
text = serialize(inst, "cnf")
print(text, end="")
again, diags = parse(text)
assert again == inst
print("round-trip identical:", again == inst)
print("clause length histogram:", clause_length_histogram(inst))

print()
print("=== weighted clauses (WCNF) ===")
wtext = "p wcnf 2 2\n2.5 1 0\n0.5 -2 0\n"
winst, _ = parse(wtext)
print(wtext, end="")
print("w =", winst.total_weight, " l =", winst.weighted_length)
print("best single assignment (x1=1, x2=0):", weight_of(winst, Assignment((1, 0))))

print()
print("=== arbitrary truth tables (native CSP format) ===")
# XOR(x1, x2) cannot be written as one clause; the table can say anything
xor = Constraint.from_table_string(1.0, (1, 2), "0110")
cinst = CspInstance(2, (xor,))
ctext = serialize(cinst, "csp")
print(ctext, end="")
for bits in [(0, 0), (1, 0), (0, 1), (1, 1)]:
    print(f"  XOR{bits} ->", weight_of(cinst, Assignment(bits)))
