"""
Telling two perfect codes apart by shortening
=============================================

At m = 4 the direct sum g of two 2x2 maps and multiplication h by a
primitive element both give perfect codes of length 16.  Fixing twelve
coordinates of the first can leave a perfect code in X^4; the second never
allows it.  The difference survives coordinate permutation and translation.
"""

import time

from dpcodes import build_d3, default_spec, parse_operator, shorten
from dpcodes.verifier import is_perfect_d3, nonequivalence_certificate, shorten_scan

spec = default_spec(4)
g = build_d3(spec, parse_operator("sum(matrix2,matrix2)", spec))
h = build_d3(spec, parse_operator("gamma", spec))

small = shorten(g, {i: 0 for i in range(5, 17)})
print("g with coordinates 5..16 fixed to 0:", sorted(str(w) for w in small))
print("perfect in X^4:", is_perfect_d3(small))

t = time.perf_counter()
print("fixings of h giving a perfect X^4 code:", shorten_scan(h, 4, first_only=True) or "none")
cert = nonequivalence_certificate(g, h)
print(cert.verdict, cert.profile_left, cert.profile_right, f"({time.perf_counter() - t:.1f} s)")
