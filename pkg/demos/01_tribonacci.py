# Tribonacci: from the recurrence to every solution of a cubic equation.
#
#   python3 demos/01_tribonacci.py

from diophrec.invariant import Recurrence, build_invariant, is_invariant, forward
from diophrec.reduction import dehomogenize, reduce_recurrence
from diophrec.solver import enumerate_below, classify_generators, brute_force_verify, orbit
from diophrec.proof import exact_expression

rec = Recurrence((1, 1, 1))          # a(n) = a(n-1) + a(n-2) + a(n-3)
P = build_invariant(rec)             # determinant of the window matrix, P(0,0,1) = 1
print("P =", P)
print("invariant under the shift:", is_invariant(rec, P))

# every window of the sequence is a solution
w = (0, 0, 1)
for _ in range(8):
    print(w, P(*w))
    w = forward(rec, w)

# divide by z^3 and put t = x/z, s = y/z
f = dehomogenize(P)
print("f(t, s) =", f)

# minimize f exactly on the two bad regions of the unit square
bound = reduce_recurrence(rec)
for r in bound.per_region:
    print(r.region.name, r.region.render(), "min =", exact_expression(r.minimum),
          "~", r.minimum.to_decimal(10), "-> z >=", r.inverse_cube_root().to_decimal(10))
print("search limit:", bound.search_limit)

# below the limit there are only a handful of increasing solutions
S = enumerate_below(P, bound.search_limit)
print("increasing solutions below the limit:", list(S))
print("generators:", classify_generators(rec, S).generators)

# desk-scale check: every solution in a cube lies on the orbit of (0, 0, 1)
rep = brute_force_verify(rec, P, 30, [(0, 0, 1)])
print(len(rep.solutions), "solutions in [-30, 30]^3,", len(rep.unexplained), "unexplained")
print("a stretch of the orbit:", orbit(rec, (0, 0, 1), 3, 3))
