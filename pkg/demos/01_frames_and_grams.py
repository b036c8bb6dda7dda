"""Frames in real symplectic space: the basic operators on a worked 2x3 example.

The ambient form is [x, y] = x.T @ omega @ y.  Because the form is
alternating, Gram matrices are skew-symmetric with zero diagonal, and the
frame operator need not be symmetric or even normal, yet it is always
diagonalizable with purely imaginary spectrum.
"""

import numpy as np

from sympetf import analysis, dual_frame, frame_bounds, frame_operator, gram, is_frame, omega

np.set_printoptions(precision=4, suppress=True)

phi = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 1.0]])
print("synthesis matrix phi =\n", phi)
print("\nsymplectic form omega =\n", omega(2))

print("\nanalysis operator phi.T @ omega =\n", analysis(phi))
print("\nframe operator =\n", frame_operator(phi))
print("eigenvalues of the frame operator:", np.linalg.eigvals(frame_operator(phi)))

g = gram(phi)
print("\nGram matrix =\n", g)
print("skew check: ||g + g.T|| =", np.linalg.norm(g + g.T))

print("\nis_frame:", is_frame(phi))
print("frame bounds:", frame_bounds(phi))

dual = dual_frame(phi)
print("\ncanonical dual frame =\n", dual)
x = np.array([0.3, -1.2])
recon = dual @ (analysis(phi) @ x)
print("reconstruction of x =", x, "->", recon)
recon2 = -phi @ (analysis(dual) @ x)
print("second reconstruction   ->", recon2)
