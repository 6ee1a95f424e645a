"""
Treedepth of small graphs
=========================

Exact treedepth by the elimination recursion, with the elimination forest
it picks.
"""

from imsep import melon, treedepth_bruteforce
from imsep.graph import Graph

k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
for name, g in [("K1", Graph(1)), ("K4", k4), ("path on 5", melon(1)[0]), ("melon(3)", melon(3)[0])]:
    res = treedepth_bruteforce(g)
    print(f"{name:>10}: depth {res.depth}, parents {res.parents()}")
