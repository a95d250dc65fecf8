"""Structure-constant algebras over F_p and a small zoo of constructors."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import InvalidFormError, TooLargeError
from .linalg_fp import Subspace

ENUM_BUDGET = 1 << 16


class FinDimAlgebra:
    """A finite-dimensional associative unital algebra given by structure
    constants: e_i e_j = sum_k table[i, j, k] e_k over F_p.

    An optional central subalgebra is designated by a basis (rows); its
    elements must commute with everything.
    """

    def __init__(self, table, unit, p: int, central_basis=None, name: str = ""):
        self.p = p
        self.table = np.array(table, dtype=np.int64) % p
        self.dim = self.table.shape[0]
        if self.table.shape != (self.dim, self.dim, self.dim):
            raise InvalidFormError("structure constant tensor must be d x d x d")
        self.unit = np.array(unit, dtype=np.int64) % p
        self.name = name
        self._check_axioms()
        if central_basis is not None:
            self.central_basis = np.atleast_2d(np.array(central_basis, dtype=np.int64)) % p
            for r in self.central_basis:
                for j in range(self.dim):
                    ej = np.eye(self.dim, dtype=np.int64)[j]
                    if np.any((self.mul(r, ej) - self.mul(ej, r)) % p):
                        raise InvalidFormError("designated subalgebra is not central")
        else:
            self.central_basis = None

    def _check_axioms(self):
        t = self.table
        p = self.p
        lhs = np.einsum("ijl,lkm->ijkm", t, t) % p
        rhs = np.einsum("jkl,ilm->ijkm", t, t) % p
        if np.any(lhs != rhs):
            raise InvalidFormError("structure constants are not associative")
        for j in range(self.dim):
            ej = np.eye(self.dim, dtype=np.int64)[j]
            if np.any((self.mul(self.unit, ej) - ej) % p) or np.any(
                (self.mul(ej, self.unit) - ej) % p
            ):
                raise InvalidFormError("unit laws fail")

    def mul(self, u, v) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u % self.p, v % self.p, self.table) % self.p

    def left_mult(self, v) -> np.ndarray:
        """Matrix L with L @ e_j = v * e_j (columns indexed by j)."""
        return np.einsum("i,ijk->kj", v % self.p, self.table) % self.p

    def right_mult(self, v) -> np.ndarray:
        return np.einsum("j,ijk->ki", v % self.p, self.table) % self.p

    def power(self, v, e: int) -> np.ndarray:
        out = self.unit.copy()
        for _ in range(e):
            out = self.mul(out, v)
        return out

    def is_nilpotent_element(self, v) -> bool:
        x = np.array(v, dtype=np.int64) % self.p
        for _ in range(self.dim + 1):
            if not np.any(x):
                return True
            x = self.mul(x, v)
        return False

    def elements(self):
        if self.p**self.dim > ENUM_BUDGET:
            raise TooLargeError(
                f"p^d = {self.p}**{self.dim} exceeds the enumeration budget"
            )
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            yield np.array(coeffs, dtype=np.int64)

    def subspace(self, vectors) -> Subspace:
        return Subspace(vectors, self.dim, self.p)

    def subspace_product(self, U: Subspace, V: Subspace) -> Subspace:
        vecs = [self.mul(u, v) for u in U.basis for v in V.basis]
        return Subspace(vecs, self.dim, self.p)

    def two_sided_ideal(self, vectors) -> Subspace:
        """Closure of span(vectors) under left and right multiplication."""
        span = Subspace(vectors, self.dim, self.p)
        basis_vectors = np.eye(self.dim, dtype=np.int64)
        while True:
            new = list(span.basis)
            for v in span.basis:
                for e in basis_vectors:
                    new.append(self.mul(e, v))
                    new.append(self.mul(v, e))
            grown = Subspace(new, self.dim, self.p)
            if grown.dim == span.dim:
                return grown
            span = grown

    def is_nilpotent_subspace(self, I: Subspace) -> bool:
        cur = I
        for _ in range(self.dim + 1):
            if cur.is_zero():
                return True
            nxt = self.subspace_product(cur, I)
            if nxt.dim == cur.dim and nxt == cur:
                return False
            cur = nxt
        return cur.is_zero()

    def opposite(self) -> "FinDimAlgebra":
        return FinDimAlgebra(
            np.transpose(self.table, (1, 0, 2)),
            self.unit,
            self.p,
            name=f"{self.name}^op" if self.name else "op",
        )

    def quotient(self, I: Subspace):
        """Quotient algebra A/I for a two-sided ideal; returns
        (algebra, projection matrix, lift matrix)."""
        from .linalg_fp import rref

        p = self.p
        full = np.vstack([I.basis, np.eye(self.dim, dtype=np.int64)])
        r, pivots = rref(full, p)
        # complement: coordinate vectors whose pivot falls outside I
        _, ipiv = rref(I.basis, p) if I.dim else (None, [])
        comp = [c for c in pivots if c not in ipiv]
        lift = np.eye(self.dim, dtype=np.int64)[comp]  # q x d rows
        q = len(comp)
        # projection: write e_j = i + sum_c lambda_c e_c with i in I
        proj = np.zeros((q, self.dim), dtype=np.int64)
        span = np.vstack([I.basis, lift]) if I.dim else lift
        from .linalg_fp import solve

        for j in range(self.dim):
            ej = np.eye(self.dim, dtype=np.int64)[j]
            sol = solve(span.T, ej, p)
            if sol is None:
                raise InvalidFormError("not an ideal-complement decomposition")
            proj[:, j] = sol[I.dim :]
        table = np.zeros((q, q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                table[a, b] = proj @ self.mul(lift[a], lift[b]) % p
        unit = proj @ self.unit % p
        quo = FinDimAlgebra(table, unit, p, name=f"{self.name}/I")
        return quo, proj, lift

    def __repr__(self):
        return f"FinDimAlgebra({self.name or 'dim %d' % self.dim}, p={self.p})"


# -- constructors ------------------------------------------------------------


def full_matrix_algebra(n: int, p: int) -> FinDimAlgebra:
    """M_n(F_p) on the basis e_{rc} in row-major order."""
    d = n * n
    table = np.zeros((d, d, d), dtype=np.int64)
    idx = lambda r, c: r * n + c
    for r, c, rr, cc in itertools.product(range(n), repeat=4):
        if c == rr:
            table[idx(r, c), idx(rr, cc), idx(r, cc)] = 1
    unit = np.zeros(d, dtype=np.int64)
    for r in range(n):
        unit[idx(r, r)] = 1
    return FinDimAlgebra(table, unit, p, name=f"M_{n}(F_{p})")


def upper_triangular_algebra(n: int, p: int) -> FinDimAlgebra:
    """T_n(F_p): upper triangular n x n matrices; basis e_{rc}, r <= c."""
    pairs = [(r, c) for r in range(n) for c in range(r, n)]
    d = len(pairs)
    idx = {rc: k for k, rc in enumerate(pairs)}
    table = np.zeros((d, d, d), dtype=np.int64)
    for (r, c), (rr, cc) in itertools.product(pairs, repeat=2):
        if c == rr:
            table[idx[(r, c)], idx[(rr, cc)], idx[(r, cc)]] = 1
    unit = np.zeros(d, dtype=np.int64)
    for r in range(n):
        unit[idx[(r, r)]] = 1
    return FinDimAlgebra(table, unit, p, name=f"T_{n}(F_{p})")


def truncated_polynomial_algebra(p: int, k: int) -> FinDimAlgebra:
    """F_p[x]/(x^k) on the basis 1, x, ..., x^{k-1}."""
    table = np.zeros((k, k, k), dtype=np.int64)
    for a, b in itertools.product(range(k), repeat=2):
        if a + b < k:
            table[a, b, a + b] = 1
    unit = np.zeros(k, dtype=np.int64)
    unit[0] = 1
    return FinDimAlgebra(table, unit, p, name=f"F_{p}[x]/(x^{k})")


def product_algebra(A: FinDimAlgebra, B: FinDimAlgebra) -> FinDimAlgebra:
    if A.p != B.p:
        raise InvalidFormError("mismatched moduli")
    d = A.dim + B.dim
    table = np.zeros((d, d, d), dtype=np.int64)
    table[: A.dim, : A.dim, : A.dim] = A.table
    table[A.dim :, A.dim :, A.dim :] = B.table
    unit = np.concatenate([A.unit, B.unit])
    return FinDimAlgebra(table, unit, A.p, name=f"{A.name} x {B.name}")


def cyclic_group_algebra(p: int, order: int) -> FinDimAlgebra:
    """F_p[Z/order] on the group element basis."""
    table = np.zeros((order, order, order), dtype=np.int64)
    for a, b in itertools.product(range(order), repeat=2):
        table[a, b, (a + b) % order] = 1
    unit = np.zeros(order, dtype=np.int64)
    unit[0] = 1
    return FinDimAlgebra(table, unit, p, name=f"F_{p}[C_{order}]")
