"""
Discrete Gabor systems and dual windows
=======================================

Translates and modulates of one prototype window tile time-frequency space.
At full density the system is tight for any window; undersample it and the
vectors stop spanning no matter how the window is chosen.
"""

import numpy as np

from framekit import canonical_dual, frame_bounds, frame_operator
from framekit.gabor import (
    GaborParams,
    build_gabor_frame,
    gabor_dual_prototype,
    named_prototype,
    verify_wh_structure,
    weyl_matrix,
)

np.set_printoptions(precision=4, suppress=True)

# Full-density system on C^6: every shift, every modulation.
m = 6
params = GaborParams(length=m, shift=1, mods=m)
g = named_prototype("gaussian", m)
system = build_gabor_frame(g, params)
b = frame_bounds(system)
print("full density, gaussian window: %d vectors in C^%d" % (system.num_vectors, m))
print("bounds (%.4f, %.4f); M*||g||^2 = %.4f"
      % (b.lower, b.upper, m * np.linalg.norm(g) ** 2))

# The frame operator commutes with every translate-modulate of the system,
# so the canonical dual is itself a Gabor system: one dual window generates it.
s = frame_operator(system)
w = weyl_matrix(2, 3, params)
print("operator commutes with the shifts:", np.allclose(s @ w, w @ s))

dual_window = gabor_dual_prototype(g, params)
dual = canonical_dual(system)
print("canonical dual is generated by the dual window:",
      verify_wh_structure(dual, dual_window, params))
print("dual window:", np.round(dual_window.real, 4))

# Coarser time steps: still a frame while K*L >= M and the window cooperates.
coarse = GaborParams(length=6, shift=2, mods=3)
b = frame_bounds(build_gabor_frame(named_prototype("gaussian", 6), coarse))
print("\nT=2, K=3 gaussian system: bounds (%.4f, %.4f)" % (b.lower, b.upper))

# The same geometry fails for a window the shifts cannot move off itself:
# the boxcar is shift-invariant, so only K = 3 distinct vectors remain.
b = frame_bounds(build_gabor_frame(named_prototype("boxcar", 6), coarse))
print("T=2, K=3 boxcar system: bounds (%.4f, %.4f) (shift-invariant window)"
      % (b.lower, b.upper))

# Undersampled: K*L = 2 vectors cannot span C^4, whatever the window.
sparse = GaborParams(length=4, shift=2, mods=1)
b = frame_bounds(build_gabor_frame(named_prototype("gaussian", 4), sparse))
print("undersampled K*L < M: lower bound %.4f (not a frame)" % b.lower)

# Counting is not sufficient: a delta window at T=2, K=2 duplicates vectors.
dup = GaborParams(length=4, shift=2, mods=2)
system = build_gabor_frame(named_prototype("delta", 4), dup)
b = frame_bounds(system)
print("delta window, K*L = M but duplicated vectors: lower bound %.4f" % b.lower)
