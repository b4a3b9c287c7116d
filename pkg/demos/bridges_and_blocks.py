"""How cut-edges decide the answer: the forest C(G), h(G), and the two constructions."""

from cfckit import cfc_exact
from cfckit.constructions import color_general, color_two_edge_connected
from cfckit.decomposition import block_matching, cut_edge_forest, decompose
from cfckit.families import cycle, family
from cfckit.graph import graph_from_edge_list
from cfckit.solve import component_values
from cfckit.verify import verify

# A 2-edge-connected graph: one edge per block gets colour 2, everything else 1.
c6 = cycle(6)
col = color_two_edge_connected(c6)
print("C6 colouring", col.colors, "valid:", verify(c6, col).ok)

# Two triangles joined by a path of bridges, with a pendant on each end.
g = graph_from_edge_list(
    9,
    [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4), (0, 7), (6, 8)],
)
dec = decompose(g)
forest = cut_edge_forest(g)
print("nontrivial blocks:", dec.nontrivial_blocks)
print("block matching:", sorted(block_matching(g)))
print("C(G) components:", [forest.parent_edges(i) for i in range(forest.s)])
values = component_values(g)
print("component values:", values, " h =", max(values))

# h <= cfc <= h+1. With a single component attaining h the answer is h.
res = cfc_exact(g)
print("cfc =", res.value, "via", res.method)

# The fresh-colour construction always lands on h+1.
fresh = color_general(g, fresh=True)
print("fresh construction uses", fresh.k, "colours, valid:", verify(g, fresh).ok)

# U_n: a triangle hanging off a double star.
u = family("U", 8)
print("U_8 cfc =", cfc_exact(u).value)
