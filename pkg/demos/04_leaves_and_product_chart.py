"""Determinant leaves and the product chart on the positive component.

Fixing the determinant carves the invertible matrices into leaves, each a
totally geodesic copy of the unimodular group where the metric is Einstein.
On the positive-determinant component the determinant direction splits off
as a flat Euclidean line: Q <-> (Q / det(Q)^{1/n}, log det(Q) / sqrt(n)).
"""

import numpy as np

import tracegeo as tg

np.set_printoptions(precision=6, suppress=True)

rng = np.random.default_rng(3)
n = 3

print("== Leaves are labelled by the determinant ==")
K = rng.uniform(-1, 1, (n, n)) + 2 * np.eye(n)
c = tg.leaf_of(K)
print("leaf label det(K) =", c)

print()
print("== Tangent to a leaf means a vanishing weighted trace ==")
W = rng.uniform(-1, 1, (n, n))
X = tg.sl_tangent_project(K, W)
print("tr(K^{-1} X) after projection:", np.trace(np.linalg.solve(K, X)))
print("projection is idempotent:", np.linalg.norm(tg.sl_tangent_project(K, X) - X))

print()
print("== Trace-free directions never leave the leaf ==")
C = rng.uniform(-1, 1, (n, n))
C -= (np.trace(C) / n) * np.eye(n)
geo = tg.Geodesic(K, C)
for t in (-2.0, 0.0, 1.0, 2.0):
    print(f"  det P({t:+.0f}) = {np.linalg.det(geo.point(t)):.12f}")

print()
print("== On leaf tangents the metric is Einstein ==")
Y = tg.sl_tangent_project(K, rng.uniform(-1, 1, (n, n)))
lhs, rhs = tg.sl_einstein_check(K, X, Y)
print(f"Ric(X, Y) = {lhs:.12f}   -(n/2) g(X, Y) = {rhs:.12f}")

print()
print("== Every leaf is a translated copy of the unimodular group ==")
P0 = tg.leaf_base_point(c, n)
chart = tg.left_translate(np.linalg.inv(P0))
Q = tg.apply_isometry(chart, K)
print("det of the chart image:", np.linalg.det(Q))
g_before = tg.trace_metric(K, X, Y)
g_after = tg.trace_metric(Q, tg.pushforward(chart, K, X), tg.pushforward(chart, K, Y))
print(f"metric before {g_before:.12f} / after {g_after:.12f}")

print()
print("== The product chart on the positive component ==")
Pu = K / np.linalg.det(K) ** (1.0 / n)
x = 0.8
point = tg.ProductPoint(Pu, x)
Q = tg.product_forward(point)
back = tg.product_inverse(Q)
print("round trip errors:", np.linalg.norm(back.sl_part - Pu), abs(back.line_part - x))

M = tg.sl_tangent_project(Pu, rng.uniform(-1, 1, (n, n)))
M2 = tg.sl_tangent_project(Pu, rng.uniform(-1, 1, (n, n)))
a, a2 = 0.4, -1.1
got = tg.trace_metric(Q, tg.product_pushforward(point, M, a), tg.product_pushforward(point, M2, a2))
want = tg.trace_metric(Pu, M, M2) + a * a2
print(f"pulled-back metric {got:.12f} vs leaf metric + line metric {want:.12f}")
print("(the determinant direction contributes a flat Euclidean factor)")
