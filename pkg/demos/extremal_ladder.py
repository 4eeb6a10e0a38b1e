"""The ladder family that maximises the Wiener index.

Builds the n-vertex ladder-with-chords quadrangulation for a range of sizes
and checks its Wiener index against the closed-form extremal value, exactly.
"""

from quadwiener import build_qn, canonical_code, conjectured_max, wiener_index
from quadwiener.embed import read_planar_code, write_planar_code

print("n   W(ladder)  bound      parity branch")
print("--  ---------  ---------  -------------")
for n in list(range(4, 17)) + [50, 100, 200]:
    ladder = build_qn(n)
    w = wiener_index(ladder)
    bound = conjectured_max(n)
    branch = "n^3/12 + 7n/6 - 2" if n % 2 == 0 else "n^3/12 + 11n/12 - 1"
    marker = "=" if w == bound else "!"
    print(f"{n:<3} {w:<10} {bound:<10} {branch}  {marker}")

print()
print("The ladder on 6 vertices in detail:")
q6 = build_qn(6)
print("  rotation system:", [list(r) for r in q6.rotation])
print("  faces:", q6.faces)
print("  degree-2 ladder ends:", [v for v in range(6) if q6.degrees[v] == 2])

print()
print("Round trip through the planar_code interchange format:")
stream = write_planar_code([q6])
(back,) = read_planar_code(stream)
print("  stream bytes:", len(stream))
print("  identical rotation after read:", back.rotation == q6.rotation)
print("  canonical code preserved:", canonical_code(back) == canonical_code(q6))
