# Where the method stops, and how the search limit grows with a.
#
#   python3 demos/03_failures_and_growth.py

from diophrec.invariant import Recurrence, is_admissible
from diophrec.reduction import reduce_recurrence, asymptotic_limit

# b = a + 2 makes the characteristic polynomial reducible
rep = is_admissible(Recurrence((1, 3, 1)))
print("admissible:", rep.admissible)
for reason in rep.reasons:
    print("  ", reason)

# admissible, but the cubic dips below zero on a bad region
bound = reduce_recurrence(Recurrence((1, 4, 1)))
print("(1, 4): method ok =", bound.method_ok)
for r in bound.per_region:
    print("  ", r.region.name, "min ~", r.minimum.to_decimal(6), "at",
          tuple(w.to_decimal(6) for w in r.witness))

# the limit tracks a^2 + b^2 a/12 + 3b/2 + b^4/72 for large a
print(" a  b   limit   truncation")
for a, b in [(5, 3), (10, 1), (20, 1), (40, 1)]:
    L = reduce_recurrence(Recurrence((a, b, 1))).search_limit
    print(f"{a:2d} {b:2d} {L:7d} {float(asymptotic_limit(a, b)):12.3f}")
