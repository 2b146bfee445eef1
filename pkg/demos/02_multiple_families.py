# Several generating solutions: a = 2, b = 3.
#
#   python3 demos/02_multiple_families.py

from diophrec.pipeline import derive
from diophrec.proof import render_proof
from diophrec.solver import orbit

d = derive((2, 3, 1))
print("P =", d.polynomial)
print("search limit:", d.search_limit)
print("generators:", d.generators.generators)

# none of these reaches another by forward steps: four separate families
for g in d.generators.generators:
    print(g, "->", orbit(d.rec, g, 0, 3)[1:])

# (0, 2, 7) is not a solution, (0, 2, 5) is
print("P(0, 2, 5) =", d.polynomial(0, 2, 5), " P(0, 2, 7) =", d.polynomial(0, 2, 7))

print()
print(render_proof(d))
