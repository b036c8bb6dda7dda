"""Searching for ETFs and skew conference matrices.

The continuous search minimizes the order-p frame potential over synthesis
matrices with the Gram's nuclear norm pinned; hitting the bound n(n-1)
certifies an ETF.  The discrete search flips tournament edges to minimize
sum((S^2)_ij)^2, whose zero level set is exactly the skew conference
matrices.  The exhaustive oracle confirms the size restriction n <= d+1
behind it all.
"""

import numpy as np

from sympetf import (
    SearchConfig,
    certify_etf,
    continuous_etf_search,
    discrete_diamond_search,
    gerzon_oracle,
    gram,
    is_skew_conference,
)

np.set_printoptions(precision=4, suppress=True)

print("continuous search for a (2,3) ETF, 8 restarts:")
out = continuous_etf_search(2, 3, 2, SearchConfig(seed=1234, restarts=8))
print("  success:", out.success, " best potential:", out.best_value)
g = gram(out.best_object)
mu = np.mean(np.abs(g[~np.eye(3, dtype=bool)]))
print("  rounded certificate:", certify_etf(np.rint(g / mu), 2))

print("\ncontinuous search at the forbidden size (4,5): the potential stays above 20")
out45 = continuous_etf_search(4, 5, 2, SearchConfig(seed=7, restarts=8))
print("  success:", out45.success, " best potential:", out45.best_value)

print("\ndiscrete search for an order-8 skew conference matrix:")
disc = discrete_diamond_search(8, SearchConfig(seed=7, restarts=8))
print("  success:", disc.success, " verified:", is_skew_conference(disc.best_object))
print(disc.best_object)

print("\nexhaustive minimum rank over all Seidel sign patterns:")
for n in (2, 3, 4, 5, 6):
    print(f"  n={n}: min rank = {gerzon_oracle(n)}")
