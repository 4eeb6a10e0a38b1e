"""A tour of the graph surgeries and the inequalities they certify.

Walks the three reduction operations on concrete instances: deleting a
degree-2 vertex, contracting the two edges at a degree-2 vertex whose second
level is a single opposite pair, and deleting a good degree-3 vertex while
adding one of its absent candidate edges.  Each step shows the exact
bookkeeping identity the bound's induction rests on.
"""

from fractions import Fraction

from quadwiener import (
    canonical_code,
    dec,
    degree3_profile,
    delete_degree2,
    fixture,
    good_vertex_surgery,
    min_dec,
    minimum_separating_cycle,
    split_at_cycle,
    status,
    validate_quadrangulation,
    wiener_index,
)
from quadwiener.bounds import dec_bound
from quadwiener.construct import from_faces
from quadwiener.embed import build_embedded

print("1. Degree-2 deletion")
pyramid = fixture("pyramid5")
smaller = delete_degree2(pyramid, 4)
print(f"   pyramid5 (W={wiener_index(pyramid)}) minus its apex -> n={smaller.n}, W={wiener_index(smaller)}")
print(f"   W(G) <= W(G-v) + status(v): {wiener_index(pyramid)} <= {wiener_index(smaller)} + {status(pyramid, (4,))}")

print()
print("2. Good-vertex surgery on the cube")
cube = fixture("cube")
profile = degree3_profile(cube, 0)
print(f"   profile of vertex 0: neighbours {profile.neighbors}, far corners {profile.opposites}, good: {profile.is_good}")
for i in (1, 2, 3):
    child = good_vertex_surgery(cube, profile, i)
    decrease = dec(cube, child, 0)
    print(
        f"   edge e{i}: child W={wiener_index(child)}, dec={decrease}, "
        f"identity 48 == {wiener_index(child)} + {status(cube, (0,))} + {decrease}"
    )
index, best = min_dec(cube, profile)
print(f"   min dec = {best} (edge e{index}), bound (n-1)^2/18 = {dec_bound(8)} -> {Fraction(best) <= dec_bound(8)}")

print()
print("3. Double-edge contraction at a degree-2 vertex")
gadget = validate_quadrangulation(
    from_faces([(0, 1, 3, 2), (0, 1, 4, 2), (3, 5, 4, 1), (3, 6, 4, 2), (5, 3, 6, 4)])
)
from quadwiener.surgery import contract_to_x, contraction_context

ctx = contraction_context(gadget, 0)
print(f"   environment: x1={ctx.x1} x2={ctx.x2} x3={ctx.x3} x4={ctx.x4} cherries z1={ctx.z1} z2={ctx.z2}")
contracted = contract_to_x(gadget, 0)
print(f"   7-vertex instance (W={wiener_index(gadget)}) contracts to n={contracted.n}, W={wiener_index(contracted)}")
print(f"   result is the pyramid: {canonical_code(contracted) == canonical_code(pyramid)}")

print()
print("4. Splitting at a separating 4-cycle")
rot = [list(r) for r in cube.rotation]
walk = next(w for w in cube.faces if set(w) == {0, 1, 2, 3})
a, b, c, d = walk
rot[a].insert(rot[a].index(d) + 1, 8)
rot[c].insert(rot[c].index(b) + 1, 8)
rot.append([a, c])
nine = validate_quadrangulation(build_embedded(9, rot))
cycle = minimum_separating_cycle(nine)
print(f"   cube plus one capped face: separating cycle {cycle.cycle}, interior {sorted(cycle.interior)}")
inner, outer = split_at_cycle(nine, cycle)
print(f"   split -> inner n={inner.n} (the pyramid), outer n={outer.n} (the cube)")
print(f"   sizes add to n + 4: {inner.n + outer.n} == {nine.n + 4}")
print(f"   W(G) = {wiener_index(nine)} <= W(inner) + W(outer) - 8 + cross distances")
