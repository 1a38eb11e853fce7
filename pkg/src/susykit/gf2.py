"""Dense linear algebra over the two-element field, numpy uint8 backed."""

from __future__ import annotations

import numpy as np

__all__ = ["solve_gf2"]


def solve_gf2(
    a: np.ndarray, b: np.ndarray
) -> tuple[bool, np.ndarray | None, list[np.ndarray]]:
    """Solve ``a @ x = b`` over GF(2).

    Returns ``(consistent, particular, nullspace_basis)``.  When the system
    is inconsistent the particular solution is None and the basis is empty.
    The solution set, when nonempty, is the particular solution plus the
    span of the basis, so it has exactly ``2 ** len(basis)`` elements.
    """
    a = np.array(a, dtype=np.uint8, copy=True) % 2
    b = np.array(b, dtype=np.uint8, copy=True) % 2
    if a.ndim != 2 or b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise ValueError("shape mismatch")
    rows, cols = a.shape

    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if aug[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            aug[[r, pivot]] = aug[[pivot, r]]
        # eliminate everywhere else in this column
        for i in range(rows):
            if i != r and aug[i, c]:
                aug[i, :] ^= aug[r, :]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break

    for i in range(r, rows):
        if aug[i, cols]:
            return False, None, []

    particular = np.zeros(cols, dtype=np.uint8)
    for i, c in enumerate(pivot_cols):
        particular[c] = aug[i, cols]

    free_cols = [c for c in range(cols) if c not in set(pivot_cols)]
    basis: list[np.ndarray] = []
    for fc in free_cols:
        vec = np.zeros(cols, dtype=np.uint8)
        vec[fc] = 1
        for i, c in enumerate(pivot_cols):
            vec[c] = aug[i, fc]
        basis.append(vec)
    return True, particular, basis
