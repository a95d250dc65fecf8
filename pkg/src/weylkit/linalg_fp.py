"""Dense linear algebra over F_p built on numpy integer arrays."""

from __future__ import annotations

import numpy as np


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (rref, pivot columns)."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for rr in range(r, rows):
            if m[rr, c] % p:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        for rr in range(rows):
            if rr != r and m[rr, c]:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the right nullspace of mat over F_p."""
    mat = np.atleast_2d(np.array(mat, dtype=np.int64)) % p
    rows, cols = mat.shape
    r, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def solve(mat: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of mat @ x = rhs over F_p, or None."""
    mat = np.atleast_2d(np.array(mat, dtype=np.int64)) % p
    rhs = np.array(rhs, dtype=np.int64) % p
    aug = np.hstack([mat, rhs.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    cols = mat.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x


def in_rowspace(rows: np.ndarray, v: np.ndarray, p: int) -> bool:
    if rows.size == 0:
        return not np.any(np.array(v) % p)
    return rank(np.vstack([rows, v]), p) == rank(rows, p)


class Subspace:
    """A subspace of F_p^dim in canonical reduced row echelon form."""

    def __init__(self, vectors, ambient_dim: int, p: int):
        self.p = p
        self.ambient_dim = ambient_dim
        arr = np.atleast_2d(np.array(list(vectors), dtype=np.int64)) if len(vectors) else np.zeros((0, ambient_dim), dtype=np.int64)
        if arr.size == 0:
            self.basis = np.zeros((0, ambient_dim), dtype=np.int64)
        else:
            self.basis = rref(arr, p)[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, v) -> bool:
        return in_rowspace(self.basis, np.array(v, dtype=np.int64), self.p)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and bool(np.all(self.basis == other.basis))
        )

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def key(self):
        return self.basis.tobytes()

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace(
            np.vstack([self.basis, other.basis]), self.ambient_dim, self.p
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: nullspace of stacked [A; B]^T combination
        if self.dim == 0 or other.dim == 0:
            return Subspace([], self.ambient_dim, self.p)
        stacked = np.vstack([self.basis, other.basis]).T  # dim x (r1+r2)
        ns = nullspace(stacked, self.p)
        vecs = [ (c[: self.dim] @ self.basis) % self.p for c in ns ]
        return Subspace(vecs, self.ambient_dim, self.p)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self):
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, p={self.p})"
