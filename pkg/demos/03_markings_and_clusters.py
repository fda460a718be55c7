"""
The two greedy markings and the cluster decomposition
=====================================================

Both schemes assign each part the smallest mark compatible with a sliding
conflict window; the row counts N_1 >= N_2 >= ... classify overpartitions
into profile classes.
"""

from ggmark import Overpartition, clusters, gg_mark, gordon_mark


def render(marked):
    """Rows top-down, columns by part value."""
    rows = marked.max_mark
    for r in range(rows, 0, -1):
        cells = [str(p) for p in marked.row(r)]
        print(f"  row {r}: " + "  ".join(cells))


# the plain marking: parts of sizes t, t (overlined), t+1 need distinct
# marks, with a one-shot exemption when the next overline is present
lam = Overpartition.parse("1,2,2,~4,5,5,~6,6,7,~8,8,8,~10,11,12,12,13,16")
m = gordon_mark(lam)
print("plain marking of", lam.serialize())
render(m)
print("row counts:", m.row_counts)

# the even/odd refinement: plain odd and overlined even parts pin to row 1
nu = Overpartition.parse("1,1,~2,2,~3,~4,6,7,8,8,~10,10,~11,~12,~13")
g = gg_mark(nu)
print("\neven/odd marking of", nu.serialize())
render(g)
print("row counts:", g.row_counts)

# clusters: chains of increasing mark anchored at the 1-marked parts
d = clusters(g)
print("\ncluster decomposition (largest anchor first):")
for j in range(1, d.n1 + 1):
    chain = "  ".join(f"{p}[{mark}]" for p, mark in d.cluster(j))
    print(f"  cluster {j}: {chain}")
