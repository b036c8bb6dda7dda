"""Recovering frames from Gram matrices and certifying tight / equiangular ones.

Any skew-symmetric matrix of even rank d factors as the Gram of a d-by-n
frame, unique up to symplectic equivalence.  Tightness is the cubic
identity G^3 = -c^2 G at full rank; equiangularity asks for a common
off-diagonal modulus.  Both together admit only n in {d, d+1}.
"""

import numpy as np

from sympetf import (
    admissible_sizes,
    certify_etf,
    factor_gram,
    gram,
    is_tight,
    symplectic_witness,
    omega,
)

np.set_printoptions(precision=4, suppress=True)

g = np.array([[0.0, 0.0, -2.0], [0.0, 0.0, 1.0], [2.0, -1.0, 0.0]]) / np.sqrt(5.0)
print("Gram matrix g =\n", g)
print("tightness constant:", is_tight(g, 2))

phi = factor_gram(g)
print("\nfactored synthesis matrix =\n", phi)
print("round-trip residual:", np.linalg.norm(gram(phi) - g))

m = symplectic_witness(omega(2) @ phi)
print("\nwitness recovering the applied symplectic map:\n", m)

conf = np.array([[0, 1, 1, 1], [-1, 0, -1, 1], [-1, 1, 0, -1], [-1, -1, 1, 0]], dtype=float)
print("\norder-4 conference matrix certificate:", certify_etf(conf, 4))
print("its 3x3 core certificate:", certify_etf(conf[1:, 1:], 2))

print("\nadmissible ETF sizes by dimension:")
for d in (2, 4, 6, 8, 10, 12):
    print(f"  d={d}: n in {sorted(admissible_sizes(d))}")
