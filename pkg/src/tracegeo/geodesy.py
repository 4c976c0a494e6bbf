"""Geodesics of the trace metric: evaluation, arcs, classification, joints.

Geodesics are exactly the curves t -> K exp(tC) with K invertible.  Whether
two points K0, K1 can be joined by a geodesic arc reduces to the existence
of a real solution of exp(X) = K0^{-1} K1, which is read off the Jordan
structure of that matrix: blocks of negative eigenvalues must pair up
evenly, and uniqueness requires a positive spectrum with no repeated block.
"""

import enum
from collections import Counter
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import (
    DifferentComponentsError,
    IllConditionedError,
    NotSPDError,
    NotSymmetricError,
    NotUniqueError,
)
from .matcore import (
    DEFAULT_TOL,
    SpectralProfile,
    as_square,
    polar_decompose,
    real_log_principal,
    require_invertible,
    require_same_order,
    so_log,
    spectral_profile,
)


@dataclass(frozen=True, eq=False)
class Geodesic:
    """The geodesic t -> base_point @ expm(t * direction)."""

    base_point: np.ndarray
    direction: np.ndarray

    def __post_init__(self):
        K = as_square(self.base_point, "base_point")
        C = as_square(self.direction, "direction")
        require_same_order(K, C)
        require_invertible(K, "base_point")
        object.__setattr__(self, "base_point", K)
        object.__setattr__(self, "direction", C)

    def point(self, t):
        return self.base_point @ sla.expm(float(t) * self.direction)

    __call__ = point


def geodesic_eval(geo, t):
    """Point of ``geo`` at parameter ``t`` (defined for every real t)."""
    return geo.point(t)


def geodesic_from_velocity(K, S):
    """The unique geodesic through K at t=0 with initial velocity S.

    The curve is K exp(t K^{-1} S).
    """
    K = as_square(K, "K")
    S = as_square(S, "S")
    require_same_order(K, S)
    require_invertible(K, "K")
    return Geodesic(K, np.linalg.solve(K, S))


def spd_geodesic(K, S, t):
    """Symmetric-positive-definite geodesic K^{1/2} exp(t K^{-1/2} S K^{-1/2}) K^{1/2}.

    Agrees with geodesic_from_velocity(K, S) evaluated at t; stated for a
    symmetric positive definite base and a symmetric velocity, where the
    whole curve stays symmetric positive definite.
    """
    K = as_square(K, "K")
    S = as_square(S, "S")
    require_same_order(K, S)
    if np.linalg.norm(K - K.T) > 1e-10 * max(1.0, np.linalg.norm(K)):
        raise NotSPDError("base point must be symmetric")
    if np.linalg.norm(S - S.T) > 1e-10 * max(1.0, np.linalg.norm(S)):
        raise NotSymmetricError("velocity must be symmetric")
    w, Q = np.linalg.eigh(0.5 * (K + K.T))
    if w.min() <= 0:
        raise NotSPDError("base point must be positive definite")
    half = Q @ (np.sqrt(w)[:, None] * Q.T)
    inv_half = Q @ (np.sqrt(w)[:, None] ** -1 * Q.T)
    return half @ sla.expm(float(t) * inv_half @ S @ inv_half) @ half


def nabla(P, Xp, Yp, euc_deriv):
    """Covariant derivative value (X(Y))_P - (Xp P^{-1} Yp + Yp P^{-1} Xp)/2.

    ``euc_deriv`` is the caller-supplied Euclidean derivative of the field Y
    along X at P (zero for constant-coefficient fields).
    """
    P = as_square(P, "P")
    Xp = as_square(Xp, "Xp")
    Yp = as_square(Yp, "Yp")
    D = as_square(euc_deriv, "euc_deriv")
    require_same_order(P, Xp, Yp, D)
    require_invertible(P, "P")
    PiY = np.linalg.solve(P, Yp)
    PiX = np.linalg.solve(P, Xp)
    return D - 0.5 * (Xp @ PiY + Yp @ PiX)


def curve_residual(curve, t, h=1e-4):
    """Frobenius norm of the geodesic-equation defect of ``curve`` at ``t``.

    ``curve`` is a callable returning a matrix; derivatives are central
    differences of step ``h``.  Vanishes as O(h^2) on true geodesics.
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    P0 = as_square(curve(t), "curve(t)")
    Pp = as_square(curve(t + h), "curve(t+h)")
    Pm = as_square(curve(t - h), "curve(t-h)")
    vel = (Pp - Pm) / (2.0 * h)
    acc = (Pp - 2.0 * P0 + Pm) / (h * h)
    return float(np.linalg.norm(acc - vel @ np.linalg.solve(P0, vel)))


def geodesic_residual(geo, t, h=1e-4):
    """Geodesic-equation residual of a Geodesic value (sanity oracle)."""
    return curve_residual(geo.point, t, h)


# ---------------------------------------------------------------------------
# Arc classification
# ---------------------------------------------------------------------------


class ArcKind(str, enum.Enum):
    """Cardinality of the family of geodesic arcs joining two points."""

    NO_ARC = "no-arc"
    UNIQUE = "unique"
    COUNTABLE = "countable"
    CONTINUUM = "continuum"


@dataclass(frozen=True, eq=False)
class ArcClassification:
    """Verdict for one pair of endpoints, plus a witness arc when one exists."""

    verdict: ArcKind
    witness: Geodesic | None
    profile: SpectralProfile  # of K0^{-1} K1


def _verdict(profile):
    neg = profile.negative_real()
    pos = profile.positive_real()
    cplx = profile.non_real()
    for c in neg:
        if any(count % 2 for count in Counter(c.block_sizes).values()):
            return ArcKind.NO_ARC
    pos_no_repeat = all(len(set(c.block_sizes)) == len(c.block_sizes) for c in pos)
    if not neg and not cplx and pos_no_repeat:
        return ArcKind.UNIQUE
    if not neg and cplx and pos_no_repeat and all(len(c.block_sizes) == 1 for c in cplx):
        return ArcKind.COUNTABLE
    return ArcKind.CONTINUUM


def _nullspace(M, cutoff):
    _, s, Vh = np.linalg.svd(M)
    rank = int(np.count_nonzero(s > cutoff))
    return Vh[rank:].conj().T


def _pick_complement(candidates, excluded, need):
    """``need`` columns inside span(candidates) independent of span(excluded)."""
    if candidates.shape[1] < need:
        raise IllConditionedError("Jordan chain extraction ran out of directions")
    if excluded.shape[1]:
        Q, _ = np.linalg.qr(excluded)
        reduced = candidates - Q @ (Q.T @ candidates)
    else:
        reduced = candidates
    _, s, Vh = np.linalg.svd(reduced)
    if s.size < need or s[need - 1] <= 1e-10:
        raise IllConditionedError("Jordan chain extraction found dependent directions")
    return candidates @ Vh[:need].T


def _jordan_chains(B, lam, sizes, tol):
    """Jordan chains of B for the real eigenvalue lam with known block sizes.

    Each chain is returned bottom-up: [x_1, ..., x_k] with (B - lam) x_1 = 0
    and (B - lam) x_j = x_{j-1}.
    """
    n = B.shape[0]
    E = B - lam * np.eye(n)
    kmax = max(sizes)
    s1 = max(1.0, float(np.linalg.svd(E, compute_uv=False)[0]))
    null_bases = {0: np.zeros((n, 0))}
    Ek = np.eye(n)
    for k in range(1, kmax + 1):
        Ek = Ek @ E
        null_bases[k] = _nullspace(Ek, tol * s1**k)
    chains = []
    carry = np.zeros((n, 0))  # height-k vectors inherited from longer chains
    for k in range(kmax, 0, -1):
        need = sizes.count(k)
        tops = np.zeros((n, 0))
        if need:
            excluded = np.hstack([null_bases[k - 1], carry])
            tops = _pick_complement(null_bases[k], excluded, need)
            for idx in range(need):
                top = tops[:, idx]
                chain = [top]
                for _ in range(k - 1):
                    chain.append(E @ chain[-1])
                chain.reverse()
                scale = max(np.linalg.norm(v) for v in chain)
                chains.append([v / scale for v in chain])
        level = np.hstack([carry, tops])
        carry = E @ level if level.shape[1] else level
    return chains


def _log_series_nilpotent(lam, k):
    """Sum_{i=1}^{k-1} (-1)^{i+1} N^i / (i lam^i) for the k x k nilpotent N."""
    S = np.zeros((k, k))
    for i in range(1, k):
        S += ((-1) ** (i + 1) / (i * lam**i)) * np.eye(k, k, i)
    return S


def _negative_spectrum_log(B, tol):
    """Real logarithm of a matrix whose spectrum is negative with even pairing.

    Equal-size Jordan chains of each eigenvalue are paired; on the span of a
    pair the logarithm acts as [[log|lam| I + S, -pi I], [pi I, log|lam| I + S]]
    with S the nilpotent log series, the realification of the angle-pi branch
    of the complex logarithm.
    """
    profile = spectral_profile(B, tol)
    columns = []
    blocks = []
    for cluster in profile.clusters:
        lam = cluster.eigenvalue.real
        if cluster.eigenvalue.imag != 0.0 or lam >= 0:
            raise IllConditionedError("negative-spectrum block contains non-negative eigenvalues")
        chains = _jordan_chains(B, lam, sorted(cluster.block_sizes, reverse=True), tol)
        by_len = {}
        for chain in chains:
            by_len.setdefault(len(chain), []).append(chain)
        for k in sorted(by_len):
            group = by_len[k]
            if len(group) % 2:
                raise IllConditionedError("negative eigenvalue with unpaired Jordan block")
            base = np.log(abs(lam)) * np.eye(k) + _log_series_nilpotent(lam, k)
            for first, second in zip(group[0::2], group[1::2]):
                columns.extend(first)
                columns.extend(second)
                blk = np.block([[base, -np.pi * np.eye(k)], [np.pi * np.eye(k), base]])
                blocks.append(blk)
    V = np.column_stack(columns)
    L_local = sla.block_diag(*blocks)
    return V @ L_local @ np.linalg.inv(V)


def _real_log_witness(M, profile, tol):
    """Some real solution of exp(X) = M, principal wherever possible."""
    if not profile.negative_real():
        return real_log_principal(M, tol)
    n = M.shape[0]

    def select(re, im):
        mod = np.hypot(re, im)
        return (re < 0) & (np.abs(im) <= tol * np.maximum(1.0, mod))

    T, Z, k = sla.schur(M, output="real", sort=select)
    if k == 0:
        raise IllConditionedError("spectral split lost the negative eigenvalues")
    if k == n:
        L = _negative_spectrum_log(T, tol)
        return Z @ L @ Z.T
    T11, T12, T22 = T[:k, :k], T[:k, k:], T[k:, k:]
    X = sla.solve_sylvester(T11, -T22, -T12)
    L11 = _negative_spectrum_log(T11, tol)
    L22 = real_log_principal(T22, tol)
    L_blk = sla.block_diag(L11, L22)
    R = np.eye(n)
    R[:k, k:] = X
    Rinv = np.eye(n)
    Rinv[:k, k:] = -X
    return Z @ (R @ L_blk @ Rinv) @ Z.T


def classify_arc(K0, K1, tol=DEFAULT_TOL):
    """Classify the geodesic arcs joining ``K0`` to ``K1``.

    The verdict is read off the Jordan structure of M = K0^{-1} K1:

    * no arc when some negative eigenvalue has a block size occurring an odd
      number of times;
    * a unique arc when the spectrum is positive real and no (eigenvalue,
      size) pair repeats;
    * countably many when non-real eigenvalues each own a single block and
      the real spectrum is positive without repeats;
    * a continuum otherwise.

    When an arc exists the returned witness starts at K0 and reaches K1 at
    t = 1.  Classification is re-run at tol/10 and 10 tol; a disagreement
    raises IllConditionedError instead of guessing.
    """
    K0 = as_square(K0, "K0")
    K1 = as_square(K1, "K1")
    require_same_order(K0, K1)
    require_invertible(K0, "K0")
    require_invertible(K1, "K1")
    M = np.linalg.solve(K0, K1)

    profile = spectral_profile(M, tol)
    verdict = _verdict(profile)
    for factor in (0.1, 10.0):
        if _verdict(spectral_profile(M, tol * factor)) is not verdict:
            raise IllConditionedError(
                f"verdict is ambiguous at tolerance {tol:g} (differs at {tol * factor:g})"
            )
    witness = None
    if verdict is not ArcKind.NO_ARC:
        C = _real_log_witness(M, profile, tol)
        witness = Geodesic(K0, C)
        err = np.linalg.norm(witness.point(1.0) - K1)
        if err > 1e-6 * max(1.0, np.linalg.norm(K1)):
            raise IllConditionedError(f"witness endpoint check failed (error {err:g})")
    return ArcClassification(verdict=verdict, witness=witness, profile=profile)


def unique_arc(K0, K1, tol=DEFAULT_TOL):
    """The unique geodesic arc between ``K0`` and ``K1``: K0 (K0^{-1}K1)^t.

    Raises NotUniqueError when the classification verdict is anything else;
    callers who already classified can read the witness off the verdict.
    """
    outcome = classify_arc(K0, K1, tol)
    if outcome.verdict is not ArcKind.UNIQUE:
        raise NotUniqueError(f"arc classification is {outcome.verdict.value!r}, not unique")
    return outcome.witness


# ---------------------------------------------------------------------------
# Singly broken geodesics
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BrokenArc:
    """Two geodesic arcs sharing the joint: first(1) = second(0) = joint."""

    first: Geodesic
    second: Geodesic
    joint: np.ndarray


def broken_arc(K1, K2, tol=DEFAULT_TOL):
    """Join two same-component points by a singly broken geodesic arc.

    With left polar K1 = O1 P1 and right polar K2 = P2 O2 the joint is
    Z = P2 O1.  K1^{-1} Z has positive spectrum, so the first leg is a
    principal-log arc; Z^{-1} K2 = O1^T O2 is special orthogonal, so the
    second leg is a rotation arc through the skew logarithm.
    """
    K1 = as_square(K1, "K1")
    K2 = as_square(K2, "K2")
    require_same_order(K1, K2)
    require_invertible(K1, "K1")
    require_invertible(K2, "K2")
    if np.linalg.det(K1) * np.linalg.det(K2) <= 0:
        raise DifferentComponentsError("endpoints lie in different determinant components")
    left = polar_decompose(K1, side="left")
    right = polar_decompose(K2, side="right")
    Z = right.positive @ left.orthogonal
    C1 = real_log_principal(np.linalg.solve(K1, Z), tol)
    C2 = so_log(left.orthogonal.T @ right.orthogonal, tol)
    return BrokenArc(first=Geodesic(K1, C1), second=Geodesic(Z, C2), joint=Z)
