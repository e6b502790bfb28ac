"""Dense matrix kernels backing the state-space rank oracles.

Rank is decided from singular values rather than pivoted elimination; the
genericity experiments feed this routine near-degenerate samples and the
SVD tolerance handles them robustly.
"""

from __future__ import annotations

from typing import Optional

import numpy as np


def numerical_rank(m, tol: Optional[float] = None) -> int:
    """Number of singular values of ``m`` above a tolerance.

    Parameters
    ----------
    m : array_like
        Real matrix with finite entries.
    tol : float, optional
        Singular values strictly above ``tol`` count towards the rank.
        Defaults to ``sigma_max * max(rows, cols) * eps`` with ``eps`` the
        float64 machine epsilon, the usual SVD rank convention.

    Returns
    -------
    int
        Rank estimate; 0 for an empty or all-zero matrix.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.size == 0:
        return 0
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return 0
    if tol is None:
        tol = s[0] * max(a.shape) * np.finfo(np.float64).eps
    return int(np.count_nonzero(s > tol))


def observability_stack(cmat, amat) -> np.ndarray:
    """Vertical stack ``[C; C A; C A^2; ...; C A^(n-1)]`` for n x n inputs.

    The stack is truncated at power n-1 (Cayley-Hamilton: higher powers add
    no new rows to the row space).  For a state-space pair with output map
    ``C`` and state matrix ``A``, the rank of this stack is the dimension of
    the observable subspace.
    """
    c = np.asarray(cmat, dtype=np.float64)
    a = np.asarray(amat, dtype=np.float64)
    if c.ndim != 2 or a.ndim != 2 or c.shape != a.shape or c.shape[0] != c.shape[1]:
        raise ValueError(f"expected two equal square matrices, got {c.shape} and {a.shape}")
    n = c.shape[0]
    blocks = [c]
    cur = c
    for _ in range(n - 1):
        cur = cur @ a
        blocks.append(cur)
    return np.vstack(blocks)
