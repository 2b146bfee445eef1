# The forward step seen in the (t, s) plane, sampled for plotting.
#
#   python3 demos/04_plane_map.py [out.csv]

import sys

import numpy as np

from diophrec.invariant import Recurrence
from diophrec.plotdata import plot_csv, vector_field
from diophrec.reduction import fixed_point, value_at_fixed_point

rec = Recurrence((1, 1, 1))
t, s, dt, ds = vector_field(1, 1, 21)
speed = np.hypot(dt, ds)
k = int(np.argmin(speed))
print("slowest grid point:", (float(t[k]), float(s[k])), "|step| =", float(speed[k]))

ft, fs = fixed_point(rec)           # (1/alpha^2, 1/alpha)
print("fixed point:", ft.to_decimal(6), fs.to_decimal(6))
print("f at the fixed point is exactly zero:", value_at_fixed_point(rec) == 0)

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(plot_csv(rec, 21))
    print("wrote", sys.argv[1])
