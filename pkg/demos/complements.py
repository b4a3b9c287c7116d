"""A graph and its complement: the sum and product of their cfc values."""

from collections import Counter

from cfckit.enumeration import enumerate_graphs
from cfckit.graph import complement
from cfckit.harness import ng_report

for n in (5, 6, 7):
    sums, products = Counter(), Counter()
    extremal = []
    for g in enumerate_graphs("connected", n):
        if not complement(g).is_connected():
            continue
        rec = ng_report(g)
        sums[rec.sum] += 1
        products[rec.product] += 1
        if rec.sum == n:
            extremal.append(g)
    print(f"n={n}: sums {dict(sorted(sums.items()))}")
    print(f"     products {dict(sorted(products.items()))}")
    # the top value is reached by trees with max degree n-2, or P5, on one side
    shapes = ["tree" if g.is_tree() else "complement of a tree" for g in extremal]
    print(f"     sum = n reached by {len(extremal)} graphs: {Counter(shapes)}")
