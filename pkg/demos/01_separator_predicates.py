"""
Separators, minimal separators and inclusion-wise minimal separators
=====================================================================

Three notions that are easy to mix up, shown on two tiny graphs.
"""

from imsep import (
    banner,
    components,
    is_ab_separator,
    is_inclusion_wise_minimal_separator,
    is_minimal_ab_separator,
    is_separator,
)
from imsep.graph import Graph

# The banner: a 4-cycle a-b-c-d with a pendant e hanging off d.
g, names = banner()
a, b, c, d, e = (names[k] for k in "abcde")

# {b, d} cuts a from c and nothing smaller does ...
print("{b,d} minimal a-c separator:", is_minimal_ab_separator(g, {b, d}, a, c))

# ... yet it is not inclusion-wise minimal: {d} alone already separates e.
print("{b,d} inclusion-wise minimal:", is_inclusion_wise_minimal_separator(g, {b, d}))
print("{d} inclusion-wise minimal:  ", is_inclusion_wise_minimal_separator(g, {d}))
print("components without d:", [sorted(x) for x in components(g, {d})])

# Plain separators are not closed under taking supersets.  On the path
# 0-1-2-3-4, {1} separates, {0,1} does not (only 2-3-4 is left), and
# {0,1,3} separates again.
path = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
for s in ({1}, {0, 1}, {0, 1, 3}):
    print(sorted(s), "separator:", is_separator(path, s))

# For a fixed pair the property *is* monotone, which is why dropping one
# vertex at a time is enough to test minimality.
print("{1} separates 0 from 4:", is_ab_separator(path, {1}, 0, 4))
print("{1,3} separates 0 from 4:", is_ab_separator(path, {1, 3}, 0, 4))
