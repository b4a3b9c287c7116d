"""Paths, stars and the tree threshold, one small graph at a time."""

from cfckit import cfc_exact
from cfckit.constructions import color_path
from cfckit.enumeration import enumerate_graphs
from cfckit.families import double_star, path, star
from cfckit.solve import bounds

# The ruler colouring: colour i is one plus the number of trailing zeros of i.
# The largest colour in any stretch of the path appears exactly once.
for m in (1, 3, 7, 15):
    col = color_path(m)
    print(f"P with {m:2d} edges: {''.join(map(str, col.colors))}  -> {col.k} colours")

# The search agrees with the formula on small paths.
for n in range(2, 10):
    print(f"cfc(P_{n}) = {cfc_exact(path(n)).value}")

# A star needs a distinct colour on every edge.
res = cfc_exact(star(6))
print("star on 6 vertices:", res.value, "colours,", res.optimality_evidence)

# Double stars sit between the two. Bounds explain where the answer comes from.
g = double_star(3, 7)
b = bounds(g)
print("S_{3,4}: lower", b.lower_reasons, "upper", b.upper_reasons)
print("         cfc =", cfc_exact(g).value)

# Count the trees of order 8 by their value.
tally = {}
for t in enumerate_graphs("trees", 8):
    v = cfc_exact(t).value
    tally[v] = tally.get(v, 0) + 1
print("trees of order 8 by cfc:", dict(sorted(tally.items())))
