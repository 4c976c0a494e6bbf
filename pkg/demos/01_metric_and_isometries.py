"""A first tour of the trace metric on invertible matrices.

The tangent space at an invertible matrix A is all of n x n matrix space,
and the metric there is g_A(V, W) = tr(A^{-1} V A^{-1} W).  It is symmetric
and nondegenerate but not positive definite: symmetric directions have
positive length, antisymmetric ones negative length.
"""

import numpy as np

import tracegeo as tg

np.set_printoptions(precision=6, suppress=True)

I2 = np.eye(2)

print("== Metric values at the identity ==")
print("g_I(I, I)           =", tg.trace_metric(I2, I2, I2), " (trace of I, i.e. n)")
E12 = np.array([[0.0, 1.0], [0.0, 0.0]])
print("g_I(E12, E12)       =", tg.trace_metric(I2, E12, E12), " (a null direction!)")
print("g_I(E12, E21)       =", tg.trace_metric(I2, E12, E12.T))
S = (E12 + E12.T) / np.sqrt(2)
A = (E12 - E12.T) / np.sqrt(2)
print("g_I(sym, sym)       =", tg.trace_metric(I2, S, S), " (> 0, space-like)")
print("g_I(skew, skew)     =", tg.trace_metric(I2, A, A), " (< 0, time-like)")
print("g_I(sym, skew)      =", tg.trace_metric(I2, S, A), " (the split is orthogonal)")

print()
print("== Signature is the same at every point ==")
print("at I2:", tg.signature_at(I2))
print("at I3:", tg.signature_at(np.eye(3)))
rng = np.random.default_rng(0)
for _ in range(3):
    M = rng.uniform(-1, 1, (3, 3)) + 2 * np.eye(3)
    print("at a random point:", tg.signature_at(M))
print("(n(n+1)/2 positive and n(n-1)/2 negative directions, always)")

print()
print("== The isometry catalog ==")
A0 = rng.uniform(-1, 1, (2, 2)) + 2 * I2
V = rng.uniform(-1, 1, (2, 2))
W = rng.uniform(-1, 1, (2, 2))
G = rng.uniform(-1, 1, (2, 2)) + 2 * I2
base = tg.trace_metric(A0, V, W)
print(f"g_A(V, W) = {base:.12f}")
for iso in [
    tg.left_translate(G),
    tg.right_translate(G),
    tg.conjugate_by(G),
    tg.congruence_by(G),
    tg.inversion(),
    tg.transposition(),
    tg.negation(),
    tg.point_symmetry(A0),
]:
    img = tg.apply_isometry(iso, A0)
    moved = tg.trace_metric(img, tg.pushforward(iso, A0, V), tg.pushforward(iso, A0, W))
    print(f"  pulled back through {iso.kind:16s}: {moved:.12f}")

print()
print("== The point symmetry really is a symmetry about its center ==")
psi = tg.point_symmetry(A0)
print("psi_A(A) - A        =", np.linalg.norm(tg.apply_isometry(psi, A0) - A0))
print("D(psi_A)_A(W) + W   =", np.linalg.norm(tg.pushforward(psi, A0, W) + W))
print("(fixes the center, acts as -identity on its tangent space)")
