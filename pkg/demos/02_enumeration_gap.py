"""
Minimal versus inclusion-wise minimal separators
================================================

Melon graphs have exponentially many inclusion-wise minimal separators.
Hanging a pendant on every vertex collapses that family to the singletons
while the minimal separators keep growing, which is what makes
"enumerate all minimal separators, then filter" expensive.
"""

from imsep import (
    enumerate_iwm_filter,
    enumerate_iwm_search,
    enumerate_minimal_separators,
    melon,
    melon_with_pendants,
)
from imsep.gadgets import melon_cross_product

print(f"{'n':>2} {'melon iwm':>10} {'3^n':>5} | {'pendant minimal':>16} {'pendant iwm':>12}")
for n in range(1, 5):
    g, names = melon(n)
    iwm = enumerate_iwm_filter(g)
    assert all(s in iwm for s in melon_cross_product(n, names))

    h, _ = melon_with_pendants(n)
    minimal = enumerate_minimal_separators(h)
    collapsed = enumerate_iwm_search(h)
    print(f"{n:>2} {len(iwm):>10} {3**n:>5} | {len(minimal):>16} {len(collapsed):>12}")

# The pendant melon's inclusion-wise family is just the original vertices.
h, names = melon_with_pendants(2)
print(enumerate_iwm_filter(h).to_text())
