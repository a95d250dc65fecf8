"""Exact Ext computations over finite-dimensional F_p-algebras.

Resolutions are built from free covers on minimal generating sets (lifted
from the semisimple top via Nakayama); any projective resolution computes
Ext, so the values below do not depend on minimality.  Grade beyond the
resolution budget is reported as a lower bound, never a value: a finite
computation cannot certify inf(empty) = +infinity except for the zero
module.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidFormError, TooLargeError
from .findim import FinDimAlgebra
from .linalg_fp import Subspace, nullspace, rank, rref, solve
from .localring import jacobson_radical


class FDModule:
    """A left or right module given by one action matrix per algebra basis
    element; matrices act on column vectors and compose like the algebra
    (for right modules this is the natural left A^op action)."""

    def __init__(self, A: FinDimAlgebra, action, side: str = "left"):
        self.A = A
        self.p = A.p
        self.side = side
        self.action = np.array(action, dtype=np.int64) % A.p
        if self.action.ndim != 3 or self.action.shape[0] != A.dim:
            raise InvalidFormError("need one action matrix per basis element")
        self.dim = self.action.shape[1]
        self._validate()

    def _validate(self):
        p = self.p
        t = self.A.table if self.side == "left" else np.transpose(self.A.table, (1, 0, 2))
        for i in range(self.A.dim):
            for j in range(self.A.dim):
                lhs = self.action[i] @ self.action[j] % p
                rhs = np.einsum("k,kab->ab", t[i, j], self.action) % p
                if np.any(lhs != rhs):
                    raise InvalidFormError("action does not respect the product")
        unit_act = np.einsum("i,iab->ab", self.A.unit, self.action) % p
        if self.dim and np.any(unit_act != np.eye(self.dim, dtype=np.int64)):
            raise InvalidFormError("unit does not act as identity")

    def act(self, a) -> np.ndarray:
        return np.einsum("i,iab->ab", np.array(a) % self.p, self.action) % self.p

    def is_zero(self):
        return self.dim == 0

    @classmethod
    def regular(cls, A: FinDimAlgebra, side="left") -> "FDModule":
        if side == "left":
            mats = [A.left_mult(e) for e in np.eye(A.dim, dtype=np.int64)]
        else:
            mats = [A.right_mult(e) for e in np.eye(A.dim, dtype=np.int64)]
        return cls(A, mats, side)

    @classmethod
    def zero(cls, A: FinDimAlgebra, side="left") -> "FDModule":
        return cls(A, np.zeros((A.dim, 0, 0), dtype=np.int64), side)


def _free_action(A: FinDimAlgebra, r: int) -> np.ndarray:
    """Left action of the basis on A^r, flattened to F_p^{r*d}."""
    d = A.dim
    out = np.zeros((d, r * d, r * d), dtype=np.int64)
    for i in range(d):
        L = A.left_mult(np.eye(d, dtype=np.int64)[i])
        for b in range(r):
            out[i, b * d : (b + 1) * d, b * d : (b + 1) * d] = L
    return out


def _module_closure(M: FDModule, vectors) -> Subspace:
    span = Subspace(vectors, M.dim, M.p)
    while True:
        new = list(span.basis)
        for v in span.basis:
            for i in range(M.A.dim):
                new.append(M.action[i] @ v % M.p)
        grown = Subspace(new, M.dim, M.p)
        if grown.dim == span.dim:
            return grown
        span = grown


def _minimal_generators(M: FDModule, rad: Subspace) -> list[np.ndarray]:
    """Greedy generating set: add vectors outside N + rad*M until N = M.

    Each step picks the candidate whose cyclic closure covers the most of M
    (coordinate vectors alone can miss e.g. the unit of a regular module, so
    the pool also holds the all-ones vector and a few seeded random ones).
    """
    p = M.p
    radM = Subspace(
        [M.act(r) @ v for r in rad.basis for v in np.eye(M.dim, dtype=np.int64)],
        M.dim,
        p,
    )
    rng = random.Random(0)
    candidates = [np.ones(M.dim, dtype=np.int64)] + list(
        np.eye(M.dim, dtype=np.int64)
    )
    for _ in range(16):
        candidates.append(
            np.array([rng.randrange(p) for _ in range(M.dim)], dtype=np.int64)
        )
    gens: list[np.ndarray] = []
    N = Subspace([], M.dim, p)
    while True:
        cover = N.add(radM)
        if cover.dim == M.dim:
            return gens
        best = None
        best_closure = None
        for v in candidates:
            if cover.contains(v):
                continue
            closure = _module_closure(M, list(N.basis) + [v % p])
            if best is None or closure.dim > best_closure.dim:
                best, best_closure = v % p, closure
        gens.append(best)
        N = best_closure


@dataclass
class Resolution:
    """... -> A^{r2} -> A^{r1} -> A^{r0} -> M -> 0 (free covers)."""

    A: FinDimAlgebra
    M: FDModule
    ranks: list[int]
    eps: np.ndarray  # dim M x (r0 * d)
    diffs: list[np.ndarray] = field(default_factory=list)
    # diffs[i] is the F_p matrix of P_{i+1} -> P_i  ((r_i d) x (r_{i+1} d));
    # generators[i] holds the chosen kernel generators as rows in F_p^{r_i d}
    generators: list[np.ndarray] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.diffs)

    def check(self) -> bool:
        """d^2 = 0 and exactness at every computed stage, by rank counts."""
        p = self.A.p
        mats = [self.eps] + self.diffs
        for a, b in zip(mats, mats[1:]):
            if a.size and b.size and np.any(a @ b % p):
                return False
        for a, b in zip(mats, mats[1:]):
            cols = a.shape[1]
            ker = cols - (rank(a.T, p) if a.size else 0)
            img = rank(b.T, p) if b.size else 0
            if ker != img:
                return False
        return True


def minimal_projective_resolution(M: FDModule, A: FinDimAlgebra, length: int) -> Resolution:
    """Free resolution on minimal generating sets, extended to the requested
    length (it stops early if a kernel vanishes)."""
    if M.side != "left":
        raise InvalidFormError("resolutions are computed for left modules")
    p = A.p
    d = A.dim
    if M.is_zero():
        return Resolution(A, M, [], np.zeros((0, 0), dtype=np.int64))
    rad = jacobson_radical(A)
    gens = _minimal_generators(M, rad)
    r0 = len(gens)
    eps = np.zeros((M.dim, r0 * d), dtype=np.int64)
    for t, g in enumerate(gens):
        for i in range(d):
            eps[:, t * d + i] = M.action[i] @ g % p
    res = Resolution(A, M, [r0], eps)
    prev_map = eps
    prev_rank = r0
    for _ in range(length):
        ker = nullspace(prev_map, p) if prev_map.size else np.eye(
            prev_rank * d, dtype=np.int64
        )
        if ker.shape[0] == 0:
            break
        K = _SyzygyModule(A, prev_rank, ker)
        kgens = _minimal_generators(K, rad)
        # kgens live in K's coordinates; send back to F_p^{prev_rank*d}
        kg = [(g @ ker) % p for g in kgens]
        r = len(kg)
        free_act = _free_action(A, prev_rank)
        D = np.zeros((prev_rank * d, r * d), dtype=np.int64)
        for t, g in enumerate(kg):
            for i in range(d):
                D[:, t * d + i] = free_act[i] @ g % p
        res.ranks.append(r)
        res.diffs.append(D)
        res.generators.append(np.array(kg, dtype=np.int64))
        prev_map = D
        prev_rank = r
    return res


class _SyzygyModule(FDModule):
    """A submodule of A^r presented in the coordinates of a kernel basis."""

    def __init__(self, A: FinDimAlgebra, r: int, basis_rows: np.ndarray):
        p = A.p
        free_act = _free_action(A, r)
        k = basis_rows.shape[0]
        mats = np.zeros((A.dim, k, k), dtype=np.int64)
        for i in range(A.dim):
            for b in range(k):
                img = free_act[i] @ basis_rows[b] % p
                coeffs = solve(basis_rows.T, img, p)
                if coeffs is None:
                    raise InvalidFormError("kernel is not a submodule")
                mats[i, :, b] = coeffs
        super().__init__(A, mats, "left")


def hom_module_dimension(M: FDModule, A: FinDimAlgebra) -> int:
    """dim Hom_A(M, A) by solving the intertwining system directly
    (independent oracle for Ext^0)."""
    p = A.p
    d = A.dim
    m = M.dim
    if m == 0:
        return 0
    # unknown F: d x m with F @ act_M(e_i) = L_{e_i} @ F for all i
    rows = []
    eye = np.eye(d, dtype=np.int64)
    for i in range(d):
        L = A.left_mult(eye[i])
        # vec(F @ R - L @ F) = (R^T (x) I - I (x) L) vec(F)
        R = M.action[i]
        rows.append(np.kron(R.T, eye) - np.kron(np.eye(m, dtype=np.int64), L))
    sys = np.vstack(rows) % p
    return (d * m) - rank(sys, p)


@dataclass
class ExtResult:
    degree: int
    dim: int
    # right-module structure: matrices composing like the opposite algebra,
    # acting on column vectors in the quotient coordinates
    action: np.ndarray
    reps: np.ndarray  # rows: cocycle representatives in F_p^{r_i * d}

    def as_right_module(self, A: FinDimAlgebra) -> FDModule:
        return FDModule(A.opposite(), self.action, "left")


def _dual_matrix(A: FinDimAlgebra, gens: np.ndarray, r_prev: int) -> np.ndarray:
    """Hom(P_{i}, A) -> Hom(P_{i+1}, A):  c |-> (sum_j g_{t,j} * c_j)_t."""
    p = A.p
    d = A.dim
    r_next = gens.shape[0]
    out = np.zeros((r_next * d, r_prev * d), dtype=np.int64)
    for t in range(r_next):
        for j in range(r_prev):
            comp = gens[t, j * d : (j + 1) * d]
            out[t * d : (t + 1) * d, j * d : (j + 1) * d] = A.left_mult(comp)
    return out % p


def _right_action_blocks(A: FinDimAlgebra, r: int) -> np.ndarray:
    d = A.dim
    out = np.zeros((d, r * d, r * d), dtype=np.int64)
    for i in range(d):
        R = A.right_mult(np.eye(d, dtype=np.int64)[i])
        for b in range(r):
            out[i, b * d : (b + 1) * d, b * d : (b + 1) * d] = R
    return out


def ext_groups(M: FDModule, A: FinDimAlgebra, i: int, resolution: Resolution | None = None) -> ExtResult:
    """Ext^i_A(M, A) with its right-module structure, as the cohomology of
    the dualized free resolution."""
    p = A.p
    d = A.dim
    if M.is_zero():
        return ExtResult(i, 0, np.zeros((d, 0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64))
    res = resolution or minimal_projective_resolution(M, A, i + 1)
    if res.length < i + 1 and len(res.ranks) <= i + 1:
        # resolution stopped early: P_{i+1} = 0, so the dual is zero there
        pass
    r_i = res.ranks[i] if i < len(res.ranks) else 0
    if r_i == 0:
        return ExtResult(i, 0, np.zeros((d, 0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64))
    # delta_{i+1}: Hom(P_i, A) -> Hom(P_{i+1}, A)
    if i < len(res.generators):
        delta_next = _dual_matrix(A, res.generators[i], r_i)
        ker = nullspace(delta_next, p)
    else:
        ker = np.eye(r_i * d, dtype=np.int64)
    if i == 0:
        img = np.zeros((0, r_i * d), dtype=np.int64)
    else:
        delta_i = _dual_matrix(A, res.generators[i - 1], res.ranks[i - 1])
        img = rref(delta_i.T, p)[0]  # rows spanning the image
    img_space = Subspace(img, r_i * d, p)
    # quotient representatives: kernel vectors extending the image
    reps = []
    cur = img_space
    for v in ker:
        if not cur.contains(v):
            reps.append(v % p)
            cur = cur.add(Subspace([v], r_i * d, p))
    reps = np.array(reps, dtype=np.int64) if reps else np.zeros((0, r_i * d), dtype=np.int64)
    q = reps.shape[0]
    blocks = _right_action_blocks(A, r_i)
    action = np.zeros((d, q, q), dtype=np.int64)
    if q:
        span = np.vstack([img, reps]) if img.size else reps
        for k in range(d):
            for b in range(q):
                u = blocks[k] @ reps[b] % p
                coeffs = solve(span.T, u, p)
                if coeffs is None:
                    raise InvalidFormError("right action does not preserve cocycles")
                action[k, :, b] = coeffs[img.shape[0] :]
        # matrices compose like A^op already (column convention)
    return ExtResult(i, q, action, reps)


@dataclass(frozen=True)
class GradeBound:
    """grade(M) exceeds the probed budget; only a lower bound is certified."""

    exceeds: int

    def __ge__(self, other: int):
        return self.exceeds + 1 >= other

    def __repr__(self):
        return f"> {self.exceeds}"


def grade(M: FDModule, A: FinDimAlgebra, budget: int = 4):
    """j(M) = least i with Ext^i(M, A) != 0; +inf for the zero module,
    GradeBound(budget) when every probed Ext vanishes."""
    if M.is_zero():
        return math.inf
    res = minimal_projective_resolution(M, A, budget + 1)
    for i in range(budget + 1):
        if ext_groups(M, A, i, res).dim:
            return i
    return GradeBound(budget)


def _cyclic_right_submodules(E: ExtResult, A: FinDimAlgebra, budget: int = 1 << 16):
    """Distinct cyclic submodules of the Ext right module."""
    p = A.p
    q = E.dim
    if p**q > budget:
        raise TooLargeError("cyclic submodule enumeration budget exceeded")
    seen = {}
    for coeffs in itertools.product(range(p), repeat=q):
        v = np.array(coeffs, dtype=np.int64)
        if not np.any(v):
            continue
        span = Subspace([v], q, p)
        while True:
            new = list(span.basis)
            for w in span.basis:
                for k in range(A.dim):
                    new.append(E.action[k] @ w % p)
            grown = Subspace(new, q, p)
            if grown.dim == span.dim:
                break
            span = grown
        seen[span.key()] = span
    return list(seen.values())


def _submodule_as_module(E: ExtResult, N: Subspace, A: FinDimAlgebra) -> FDModule:
    """Restrict the Ext action to a submodule, over the opposite algebra."""
    p = A.p
    k = N.dim
    mats = np.zeros((A.dim, k, k), dtype=np.int64)
    for a in range(A.dim):
        for b in range(k):
            img = E.action[a] @ N.basis[b] % p
            coeffs = solve(N.basis.T, img, p)
            if coeffs is None:
                raise InvalidFormError("not a submodule")
            mats[a, :, b] = coeffs
    return FDModule(A.opposite(), mats, "left")


@dataclass
class AuslanderReport:
    passed: bool
    depth: int
    checks: list[tuple[int, int, object, bool]]  # (i, dim N, grade, ok)
    note: str = (
        "cyclic right submodules probed up to the stated depth; "
        "a probe, not a proof"
    )


def auslander_probe(A: FinDimAlgebra, M: FDModule, depth: int = 3) -> AuslanderReport:
    """For each i <= depth and each cyclic right submodule N of Ext^i(M, A),
    check grade(N) >= i over the opposite algebra."""
    res = minimal_projective_resolution(M, A, depth + 1)
    Aop = A.opposite()
    checks = []
    ok_all = True
    for i in range(depth + 1):
        E = ext_groups(M, A, i, res)
        if E.dim == 0:
            continue
        for N in _cyclic_right_submodules(E, A):
            Nmod = _submodule_as_module(E, N, A)
            j = grade(Nmod, Aop, budget=max(depth, i))
            if j is math.inf:
                ok = True
            elif isinstance(j, GradeBound):
                ok = j.exceeds + 1 >= i
            else:
                ok = j >= i
            checks.append((i, N.dim, j, ok))
            ok_all = ok_all and ok
    return AuslanderReport(ok_all, depth, checks)
