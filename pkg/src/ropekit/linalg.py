"""Real skew-symmetric matrices: brackets, exponentials, block-canonical form.

Every rotation-style position encoding in this package is ``exp(A)`` for some
real skew-symmetric ``A``.  This module provides the shared machinery: exact
antisymmetrisation, the commutator test that decides which encodings are
abelian, and the orthogonal change of basis that rewrites any ``A`` as a direct
sum of 2x2 rotation generators ``[[0, -lam], [lam, 0]]`` (plus zero modes).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SKEW_ATOL = 1e-12          # construction-time antisymmetry tolerance
COMMUTE_RTOL = 1e-9        # default relative tolerance for is_commuting
ZERO_FREQ_RTOL = 1e-10     # lam <= ZERO_FREQ_RTOL * max(1, ||A||_F) counts as a zero mode
JACOBI_MAX_SWEEPS = 100

_SPAN_TOL = 1e-8           # residual norm below which a direction is already spanned


def as_skew(a, atol: float = SKEW_ATOL) -> np.ndarray:
    """Validate near-antisymmetry and return the exactly antisymmetrised copy.

    Args:
        a: square array-like.
        atol: absolute entrywise bound on ``a + a.T``.

    Returns:
        ``0.5 * (a - a.T)``, which satisfies ``m.T == -m`` exactly.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    worst = float(np.max(np.abs(a + a.T))) if a.size else 0.0
    if worst > atol:
        raise ValueError(
            f"matrix is not skew-symmetric: max |a + a.T| entry is {worst:.3e} > {atol:.1e}"
        )
    return 0.5 * (a - a.T)


def commutator(a, b) -> np.ndarray:
    """Lie bracket ``[a, b] = a @ b - b @ a``, re-antisymmetrised exactly."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    c = a @ b - b @ a
    # closure: the bracket of skew matrices is skew; kill the rounding residue
    return 0.5 * (c - c.T)


def is_commuting(a, b, rel_tol: float = COMMUTE_RTOL) -> bool:
    """True when ``||[a, b]||_F <= rel_tol * ||a||_F * ||b||_F``.

    A zero matrix commutes with everything, so either factor having zero norm
    short-circuits to True.
    """
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return True
    return float(np.linalg.norm(commutator(a, b))) <= rel_tol * na * nb


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Orthogonal block-diagonalisation of a skew matrix.

    ``basis`` is orthogonal with columns grouped as (u_0, v_0, u_1, v_1, ...)
    followed by a single leftover column when the dimension is odd;
    ``frequencies`` holds floor(n/2) values, sorted descending, zeros included.
    ``zero_modes`` is the kernel dimension of the original matrix.
    """

    frequencies: np.ndarray
    basis: np.ndarray
    zero_modes: int

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def block_matrix(self) -> np.ndarray:
        """The direct sum blockdiag([[0, -lam_d], [lam_d, 0]], ...) padded to n x n."""
        n = self.dim
        m = np.zeros((n, n))
        for d, lam in enumerate(self.frequencies):
            m[2 * d, 2 * d + 1] = -lam
            m[2 * d + 1, 2 * d] = lam
        return m

    def reconstruct(self) -> np.ndarray:
        return self.basis @ self.block_matrix() @ self.basis.T


def _round_robin_rounds(n: int):
    """Chess-tournament pair ordering: n-1 rounds of disjoint (p, q) pairs
    jointly covering every unordered pair exactly once per sweep."""
    players = list(range(n)) + ([None] if n % 2 else [])
    m = len(players)
    rounds = []
    arr = players[:]
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            x, y = arr[i], arr[m - 1 - i]
            if x is not None and y is not None:
                pairs.append((min(x, y), max(x, y)))
        rounds.append(
            (np.array([p for p, _ in pairs]), np.array([q for _, q in pairs]))
        )
        arr = [arr[0], arr[-1]] + arr[1:-1]
    return rounds


def _jacobi_eigh(s: np.ndarray, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic Jacobi eigensolver for a symmetric matrix.

    Sweeps use a round-robin ordering so each round's disjoint plane rotations
    can be applied in one vectorised step (rotations in disjoint planes
    commute, so the batch equals their sequential product exactly).  Returns
    ``(eigenvalues, eigenvectors)`` with orthonormal eigenvector columns;
    raises RuntimeError if the off-diagonal mass has not been annihilated
    after ``max_sweeps`` sweeps.
    """
    a = np.array(s, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return np.diag(a).copy(), v
    frob = float(np.linalg.norm(a))
    if frob == 0.0:
        return np.zeros(n), v
    stop = 1e-14 * frob
    skip = stop / (2.0 * n)
    rounds = _round_robin_rounds(n)

    def offdiag_norm(m):
        return float(np.linalg.norm(m - np.diag(np.diag(m))))

    for _ in range(max_sweeps):
        off = offdiag_norm(a)
        if off <= stop:
            return np.diag(a).copy(), v
        for p_idx, q_idx in rounds:
            apq = a[p_idx, q_idx]
            active = np.abs(apq) > skip
            if not active.any():
                continue
            app = a[p_idx, p_idx]
            aqq = a[q_idx, q_idx]
            tau = (aqq - app) / (2.0 * np.where(active, apq, 1.0))
            root = np.sqrt(1.0 + tau * tau)
            sgn = np.where(tau >= 0.0, 1.0, -1.0)
            t = -sgn / (np.abs(tau) + root)
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            sn = t * c
            # A <- G.T A G for the whole round's rotations [[c, -s], [s, c]]
            rp, rq = a[p_idx, :], a[q_idx, :]
            cc, ss = c[:, None], sn[:, None]
            a[p_idx, :] = cc * rp + ss * rq
            a[q_idx, :] = cc * rq - ss * rp
            cp, cq = a[:, p_idx], a[:, q_idx]
            a[:, p_idx] = cp * c + cq * sn
            a[:, q_idx] = cq * c - cp * sn
            a[p_idx, p_idx] = app + t * apq
            a[q_idx, q_idx] = aqq - t * apq
            a[p_idx, q_idx] = np.where(active, 0.0, apq)
            a[q_idx, p_idx] = a[p_idx, q_idx]
            vp, vq = v[:, p_idx], v[:, q_idx]
            v[:, p_idx] = vp * c + vq * sn
            v[:, q_idx] = vq * c - vp * sn

    off = offdiag_norm(a)
    if off <= stop:
        return np.diag(a).copy(), v
    raise RuntimeError(
        f"Jacobi eigensolver did not converge within {max_sweeps} sweeps "
        f"(off-diagonal norm {off:.3e})"
    )


def _project_off(w: np.ndarray, cols: list) -> np.ndarray:
    """Remove from ``w`` its components along each unit vector in ``cols``."""
    r = w.copy()
    for c in cols:
        r -= c * float(c @ r)
    return r


def canonical_form(a) -> CanonicalForm:
    """Orthogonally block-diagonalise a skew matrix into 2x2 rotation generators.

    The symmetric PSD matrix ``S = -A @ A`` is diagonalised with the cyclic
    Jacobi solver; within each positive eigenspace a unit ``u`` is completed to
    the oriented pair ``(u, A u / lam)``, with Gram-Schmidt hygiene against the
    columns already chosen.  Eigendirections at or below the zero threshold
    become zero modes.

    Returns a CanonicalForm with ``A = basis @ block_matrix() @ basis.T``
    (up to roundoff) and frequencies sorted descending.
    """
    a = as_skew(a)
    n = a.shape[0]
    s = -(a @ a)
    s = 0.5 * (s + s.T)
    evals, evecs = _jacobi_eigh(s)
    order = np.argsort(evals)[::-1]
    thr = ZERO_FREQ_RTOL * max(1.0, float(np.linalg.norm(a)))

    pairs: list[tuple[float, np.ndarray, np.ndarray]] = []
    taken: list[np.ndarray] = []
    kernel_seeds: list[np.ndarray] = []
    zero_cols: list[np.ndarray] = []

    def try_pair(w: np.ndarray) -> None:
        r = _project_off(w, taken)
        nr = float(np.linalg.norm(r))
        if nr < _SPAN_TOL:
            return
        u = _project_off(r / nr, taken)
        u = u / float(np.linalg.norm(u))
        au = a @ u
        lam = float(np.linalg.norm(au))
        if lam <= thr:
            zero_cols.append(u)
            taken.append(u)
            return
        v = _project_off(au / lam, taken)
        v -= u * float(u @ v)
        v = v / float(np.linalg.norm(v))
        pairs.append((lam, u, v))
        taken.append(u)
        taken.append(v)

    for idx in order:
        lam2 = float(evals[idx])
        w = evecs[:, idx]
        if lam2 <= thr * thr:
            kernel_seeds.append(w)
            continue
        try_pair(w)

    # deferred kernel directions, then completion against the standard basis
    for w in kernel_seeds:
        r = _project_off(w, taken)
        nr = float(np.linalg.norm(r))
        if nr < _SPAN_TOL:
            continue
        r = _project_off(r / nr, taken)
        r = r / float(np.linalg.norm(r))
        zero_cols.append(r)
        taken.append(r)
    k = 0
    while len(taken) < n and k < n:
        r = _project_off(np.eye(n)[:, k], taken)
        k += 1
        nr = float(np.linalg.norm(r))
        if nr < _SPAN_TOL:
            continue
        u = _project_off(r / nr, taken)
        u = u / float(np.linalg.norm(u))
        au = a @ u
        lam = float(np.linalg.norm(au))
        if lam > thr:
            v = _project_off(au / lam, taken)
            v -= u * float(u @ v)
            v = v / float(np.linalg.norm(v))
            pairs.append((lam, u, v))
            taken.append(u)
            taken.append(v)
        else:
            zero_cols.append(u)
            taken.append(u)
    if len(taken) != n:
        raise RuntimeError("canonical form basis completion failed")

    pairs.sort(key=lambda item: -item[0])
    freqs = [lam for lam, _, _ in pairs]
    cols = []
    for _, u, v in pairs:
        cols.append(u)
        cols.append(v)
    # zero-frequency blocks consume kernel directions two at a time
    zc = list(zero_cols)
    while len(freqs) < n // 2:
        freqs.append(0.0)
        cols.append(zc.pop(0))
        cols.append(zc.pop(0))
    cols.extend(zc)

    return CanonicalForm(
        frequencies=np.asarray(freqs, dtype=float),
        basis=np.column_stack(cols),
        zero_modes=len(zero_cols),
    )


# ---------------------------------------------------------------------------
# matrix exponential
# ---------------------------------------------------------------------------


def matrix_exp(a) -> np.ndarray:
    """exp(a) for skew ``a`` via the canonical form (per-block cosine/sine).

    The result is orthogonal with determinant +1.
    """
    cf = canonical_form(a)
    n = cf.dim
    r = np.zeros((n, n))
    for d, lam in enumerate(cf.frequencies):
        c, sn = np.cos(lam), np.sin(lam)
        r[2 * d, 2 * d] = c
        r[2 * d, 2 * d + 1] = -sn
        r[2 * d + 1, 2 * d] = sn
        r[2 * d + 1, 2 * d + 1] = c
    if n % 2 == 1:
        r[n - 1, n - 1] = 1.0
    return cf.basis @ r @ cf.basis.T


def matrix_exp_series(a, term_tol: float = 1e-16) -> np.ndarray:
    """Scaling-and-squaring Taylor route for exp(a); independent of canonical_form.

    The argument is halved ``s = max(0, ceil(log2 ||a||_F))`` times, the Taylor
    series is summed until a term's Frobenius norm drops below ``term_tol``,
    and the result is squared ``s`` times.
    """
    a = as_skew(a)
    n = a.shape[0]
    nrm = float(np.linalg.norm(a))
    if nrm == 0.0:
        return np.eye(n)
    s = max(0, int(np.ceil(np.log2(nrm))))
    b = a / (2.0 ** s)
    result = np.eye(n)
    term = np.eye(n)
    k = 1
    while k <= 80:
        term = term @ b / k
        result = result + term
        if float(np.linalg.norm(term)) < term_tol:
            break
        k += 1
    for _ in range(s):
        result = result @ result
    return result
