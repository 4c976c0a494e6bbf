"""The trace metric on invertible matrices and its symmetry structure.

The metric is g_A(V, W) = tr(A^{-1} V A^{-1} W) for an invertible base point
A and tangent matrices V, W.  This module computes the metric and its
signature, applies the catalog of isometries and their differentials,
projects onto tangent spaces of determinant level sets, and realises the
isometry between the positive-determinant component and the product of the
unimodular group with a Euclidean line.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateMetricError,
    NonPositiveDeterminantError,
    NotUnimodularError,
    SingularMatrixError,
)
from .matcore import as_square, require_invertible, require_same_order


def trace_metric(A, V, W):
    """Metric value tr(A^{-1} V A^{-1} W); symmetric and bilinear in (V, W)."""
    A = as_square(A, "A")
    V = as_square(V, "V")
    W = as_square(W, "W")
    require_same_order(A, V, W)
    require_invertible(A, "A")
    return float(np.trace(np.linalg.solve(A, V) @ np.linalg.solve(A, W)))


def standard_basis(n):
    """The n^2 matrix units E_alpha ordered column by column."""
    out = np.zeros((n * n, n, n))
    for alpha in range(n * n):
        i, j = alpha % n, alpha // n
        out[alpha, i, j] = 1.0
    return out


def gram_matrix(A):
    """Gram matrix of the metric at ``A`` in the standard basis.

    Entry (alpha, beta) is g_A(E_alpha, E_beta) with alpha enumerating the
    matrix units column by column.  For B = A^{-1} the value collapses to
    B[j, k] * B[l, i] with alpha <-> (i, j), beta <-> (k, l).
    """
    A = as_square(A, "A")
    require_invertible(A, "A")
    n = A.shape[0]
    B = np.linalg.inv(A)
    T = np.einsum("jk,li->jilk", B, B)
    return T.reshape(n * n, n * n)


@dataclass(frozen=True)
class MetricSignature:
    """Counts of positive and negative directions of the metric."""

    positive: int
    negative: int


def signature_at(A, zero_tol=1e-10):
    """Signature of the metric at ``A`` from the eigenvalues of its Gram matrix.

    Raises DegenerateMetricError when a Gram eigenvalue is numerically zero,
    which signals breakdown rather than a mathematical possibility.
    """
    G = gram_matrix(A)
    w = np.linalg.eigvalsh(0.5 * (G + G.T))
    cut = zero_tol * float(np.abs(w).max())
    if np.any(np.abs(w) <= cut):
        raise DegenerateMetricError("Gram matrix has a numerically zero eigenvalue")
    pos = int(np.count_nonzero(w > 0))
    return MetricSignature(positive=pos, negative=w.size - pos)


# ---------------------------------------------------------------------------
# Isometries
# ---------------------------------------------------------------------------

_PARAMETRIC_KINDS = ("left-translate", "right-translate", "conjugate", "congruence", "point-symmetry")
_PLAIN_KINDS = ("inversion", "transposition", "negation")
ISOMETRY_KINDS = _PARAMETRIC_KINDS + _PLAIN_KINDS


@dataclass(frozen=True, eq=False)
class Isometry:
    """One isometry of the trace metric, tagged by kind.

    Parametric kinds carry an invertible matrix: translations multiply by it,
    conjugation maps X to G^{-1} X G, congruence to G^T X G, and the point
    symmetry about A maps X to A X^{-1} A.  Inversion, transposition and
    negation need no parameter.
    """

    kind: str
    parameter: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in ISOMETRY_KINDS:
            raise ValueError(f"unknown isometry kind {self.kind!r}")
        if self.kind in _PARAMETRIC_KINDS:
            if self.parameter is None:
                raise ValueError(f"{self.kind} requires a parameter matrix")
            G = as_square(self.parameter, "parameter")
            require_invertible(G, "parameter")
            object.__setattr__(self, "parameter", G)
        elif self.parameter is not None:
            raise ValueError(f"{self.kind} takes no parameter")


def left_translate(G):
    return Isometry("left-translate", G)


def right_translate(G):
    return Isometry("right-translate", G)


def conjugate_by(G):
    return Isometry("conjugate", G)


def congruence_by(G):
    return Isometry("congruence", G)


def inversion():
    return Isometry("inversion")


def transposition():
    return Isometry("transposition")


def negation():
    return Isometry("negation")


def point_symmetry(A):
    return Isometry("point-symmetry", A)


def apply_isometry(iso, X):
    """Apply ``iso`` to the invertible matrix ``X``."""
    X = as_square(X, "X")
    G = iso.parameter
    if iso.kind == "left-translate":
        return G @ X
    if iso.kind == "right-translate":
        return X @ G
    if iso.kind == "conjugate":
        return np.linalg.solve(G, X @ G)
    if iso.kind == "congruence":
        return G.T @ X @ G
    if iso.kind == "transposition":
        return X.T
    if iso.kind == "negation":
        return -X
    require_invertible(X, "X")
    if iso.kind == "inversion":
        return np.linalg.inv(X)
    # point symmetry about G: the composition R_G . L_G . inversion
    Y = apply_isometry(inversion(), X)
    Y = apply_isometry(left_translate(G), Y)
    return apply_isometry(right_translate(G), Y)


def pushforward(iso, A, V):
    """Differential of ``iso`` at the point ``A`` applied to the tangent ``V``.

    Linear isometries are their own differential; inversion has differential
    -A^{-1} V A^{-1}; the point symmetry composes the chain of the maps it is
    built from.
    """
    A = as_square(A, "A")
    V = as_square(V, "V")
    require_same_order(A, V)
    G = iso.parameter
    if iso.kind == "left-translate":
        return G @ V
    if iso.kind == "right-translate":
        return V @ G
    if iso.kind == "conjugate":
        return np.linalg.solve(G, V @ G)
    if iso.kind == "congruence":
        return G.T @ V @ G
    if iso.kind == "transposition":
        return V.T
    if iso.kind == "negation":
        return -V
    require_invertible(A, "A")
    if iso.kind == "inversion":
        Ainv = np.linalg.inv(A)
        return -Ainv @ V @ Ainv
    B = apply_isometry(inversion(), A)
    W = pushforward(inversion(), A, V)
    W = pushforward(left_translate(G), B, W)
    return pushforward(right_translate(G), apply_isometry(left_translate(G), B), W)


# ---------------------------------------------------------------------------
# Determinant level sets and the product structure
# ---------------------------------------------------------------------------


def sl_tangent_project(K, W):
    """g_K-orthogonal projection of W onto {V : tr(K^{-1} V) = 0}.

    Returns W - (tr(K^{-1} W) / n) K; idempotent, and the output satisfies
    the trace condition up to roundoff.
    """
    K = as_square(K, "K")
    W = as_square(W, "W")
    require_same_order(K, W)
    require_invertible(K, "K")
    n = K.shape[0]
    return W - (float(np.trace(np.linalg.solve(K, W))) / n) * K


def leaf_of(Q):
    """Label of the determinant leaf through ``Q``: det(Q)."""
    Q = as_square(Q, "Q")
    require_invertible(Q, "Q")
    return float(np.linalg.det(Q))


def leaf_base_point(c, n):
    """Deterministic base point with determinant ``c`` on the leaf.

    Left translation by its inverse carries the leaf isometrically onto the
    unimodular group.
    """
    c = float(c)
    if c == 0.0 or not math.isfinite(c):
        raise SingularMatrixError("leaf label must be a nonzero finite real")
    P = np.eye(n) * abs(c) ** (1.0 / n)
    P[0, 0] *= math.copysign(1.0, c)
    return P


@dataclass(frozen=True, eq=False)
class ProductPoint:
    """Point (P, x) of the product of the unimodular group with a line."""

    sl_part: np.ndarray
    line_part: float

    def __post_init__(self):
        P = as_square(self.sl_part, "sl_part")
        if abs(np.linalg.det(P) - 1.0) > 1e-10:
            raise NotUnimodularError("sl_part must have determinant 1")
        object.__setattr__(self, "sl_part", P)
        object.__setattr__(self, "line_part", float(self.line_part))


def product_forward(p):
    """Map (P, x) to e^{x / sqrt(n)} P in the positive-determinant component."""
    P = p.sl_part
    n = P.shape[0]
    return math.exp(p.line_part / math.sqrt(n)) * P


def product_inverse(Q):
    """Inverse of :func:`product_forward`.

    Returns (Q / det(Q)^{1/n}, log(det Q) / sqrt(n)); requires det(Q) > 0.
    """
    Q = as_square(Q, "Q")
    d = float(np.linalg.det(Q))
    if d <= 0.0:
        raise NonPositiveDeterminantError("product chart needs a positive determinant")
    n = Q.shape[0]
    return ProductPoint(Q / d ** (1.0 / n), math.log(d) / math.sqrt(n))


def product_pushforward(p, M, a):
    """Differential of :func:`product_forward` at (P, x) on the tangent (M, a)."""
    P = p.sl_part
    M = as_square(M, "M")
    require_same_order(P, M)
    n = P.shape[0]
    scale = math.exp(p.line_part / math.sqrt(n))
    return scale * M + (scale / math.sqrt(n)) * float(a) * P
