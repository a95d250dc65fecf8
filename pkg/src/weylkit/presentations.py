"""Exact noncommutative polynomial arithmetic for commutation-type presentations.

An algebra is presented by an ordered list of generators ``g_0 < g_1 < ...``
over the prime field F_p, together with a relation table ``c[(j, i)]`` (for
``j > i``) meaning

    g_j * g_i = g_i * g_j + c[(j, i)]        (i.e. c_ji = [g_j, g_i]).

Elements are kept in PBW normal form: every monomial is an exponent vector,
read as the product of generators in increasing index order.  At most one
generator may be marked invertible, in which case its exponent may be
negative; the commutation rule for the inverse is derived on the fly and
requires the relevant relations to be scalar.

All values are immutable after construction and every operation is a pure
function, so polynomials and presentations may be shared freely.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .errors import (
    FiltrationError,
    MalformedPresentationError,
    UnsupportedError,
)

Monomial = tuple[int, ...]

NEG_INF = float("-inf")


def _normalize_terms(terms: dict[Monomial, int], p: int) -> dict[Monomial, int]:
    out = {}
    for m, c in terms.items():
        c %= p
        if c:
            out[m] = c
    return out


class NCPoly:
    """A linear combination of PBW monomials with coefficients in F_p."""

    __slots__ = ("terms", "p")

    def __init__(self, terms: dict[Monomial, int], p: int):
        self.terms = _normalize_terms(terms, p)
        self.p = p

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, weights: tuple[int, ...] | None = None):
        """Total (weighted) degree; the zero polynomial has degree -inf."""
        if not self.terms:
            return NEG_INF
        if weights is None:
            return max(sum(m) for m in self.terms)
        return max(sum(w * e for w, e in zip(weights, m)) for m in self.terms)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return NCPoly(out, self.p)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return NCPoly(out, self.p)

    def __neg__(self) -> "NCPoly":
        return NCPoly({m: -c for m, c in self.terms.items()}, self.p)

    def scale(self, c: int) -> "NCPoly":
        return NCPoly({m: c * v for m, v in self.terms.items()}, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def monomials(self):
        return sorted(self.terms)

    def __repr__(self):
        return f"NCPoly({self.format()!r}, p={self.p})"

    def format(self, names: tuple[str, ...] | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 0:
                    continue
                nm = names[i] if names else f"g{i + 1}"
                factors.append(nm if e == 1 else f"{nm}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


# A word is a product of generator powers in written (not normal) order.
Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class WeightFiltration:
    """One nonnegative weight per generator; at least one must be positive."""

    weights: tuple[int, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise FiltrationError("weights must be nonnegative")
        if not any(w > 0 for w in self.weights):
            raise FiltrationError("at least one weight must be positive")


class Presentation:
    """Generators, relation table and termination guard for one algebra."""

    def __init__(
        self,
        names: tuple[str, ...],
        p: int,
        relations: dict[tuple[int, int], NCPoly],
        weights: tuple[int, ...] | None = None,
        invertible: int | None = None,
        max_steps: int = 2_000_000,
    ):
        if p < 2 or any(p % q == 0 for q in range(2, p)):
            raise UnsupportedError(f"p={p} is not prime")
        self.names = tuple(names)
        self.p = p
        self.ngens = len(self.names)
        self.weights = tuple(weights) if weights else (1,) * self.ngens
        if len(self.weights) != self.ngens:
            raise MalformedPresentationError("weight vector length mismatch")
        self.invertible = invertible
        self.max_steps = max_steps
        rel = {}
        for (j, i), c in relations.items():
            if not (0 <= i < j < self.ngens):
                raise MalformedPresentationError(f"bad relation pair ({j}, {i})")
            if c.p != p:
                raise MalformedPresentationError("relation modulus mismatch")
            if c.is_zero():
                continue
            bound = self.weights[i] + self.weights[j]
            if c.degree(self.weights) > bound:
                raise MalformedPresentationError(
                    f"relation [{self.names[j]},{self.names[i]}] exceeds the "
                    f"weighted degree guard ({c.degree(self.weights)} > {bound})"
                )
            rel[(j, i)] = c
        self.relations = rel
        self._mono_gen_cache: dict[tuple[Monomial, int, int], NCPoly] = {}
        self._mono_mul_cache: dict[tuple[Monomial, Monomial], NCPoly] = {}
        self._steps = 0
        self._active = False

    # -- basic constructors -------------------------------------------------

    def zero(self) -> NCPoly:
        return NCPoly({}, self.p)

    def one(self) -> NCPoly:
        return NCPoly({(0,) * self.ngens: 1}, self.p)

    def scalar(self, c: int) -> NCPoly:
        return NCPoly({(0,) * self.ngens: c}, self.p)

    def gen(self, i: int, power: int = 1) -> NCPoly:
        if power < 0 and i != self.invertible:
            raise UnsupportedError(f"generator {self.names[i]} is not invertible")
        m = [0] * self.ngens
        m[i] = power
        return NCPoly({tuple(m): 1}, self.p)

    def poly(self, terms: dict[Monomial, int]) -> NCPoly:
        for m in terms:
            self._check_monomial(m)
        return NCPoly(terms, self.p)

    def _check_monomial(self, m: Monomial):
        if len(m) != self.ngens:
            raise MalformedPresentationError("monomial length mismatch")
        for i, e in enumerate(m):
            if e < 0 and i != self.invertible:
                raise MalformedPresentationError(
                    f"negative exponent on non-invertible generator {self.names[i]}"
                )

    def commutator_rel(self, j: int, i: int) -> NCPoly:
        """The stored c_ji = [g_j, g_i] for j > i (zero if commuting)."""
        return self.relations.get((j, i), self.zero())

    # -- core rewriting -----------------------------------------------------

    def _tick(self):
        self._steps += 1
        if self._steps > self.max_steps:
            raise MalformedPresentationError(
                "rewriting budget exceeded; presentation is likely non-terminating"
            )

    def _mono_times_gen(self, m: Monomial, i: int, sign: int) -> NCPoly:
        """Normal form of (monomial m) * g_i**sign with sign in {+1, -1}."""
        key = (m, i, sign)
        cached = self._mono_gen_cache.get(key)
        if cached is not None:
            return cached
        self._tick()
        k = None
        for t in range(self.ngens - 1, i, -1):
            if m[t] != 0:
                k = t
                break
        if k is None:
            out = list(m)
            out[i] += sign
            result = NCPoly({tuple(out): 1}, self.p)
        elif sign == 1:
            # m = m' * g_k with k > i;  g_k g_i = g_i g_k + c_ki
            mp = list(m)
            mp[k] -= 1
            mp = tuple(mp)
            result = self._poly_times_gen(self._mono_times_gen(mp, i, 1), k, 1)
            c = self.relations.get((k, i))
            if c is not None:
                result = result + self.multiply(NCPoly({mp: 1}, self.p), c)
        else:
            # g_k g_i^{-1} = g_i^{-1} g_k - c g_i^{-2} for scalar c = c_ki
            c = self.relations.get((k, i))
            cval = 0
            if c is not None:
                nonscalar = [mm for mm in c.terms if any(mm)]
                if nonscalar:
                    raise UnsupportedError(
                        "inverse rules require scalar commutators with the "
                        "invertible generator"
                    )
                cval = c.terms.get((0,) * self.ngens, 0)
            mp = list(m)
            mp[k] -= 1
            mp = tuple(mp)
            base = self._poly_times_gen(self._mono_times_gen(mp, i, -1), k, 1)
            if cval:
                corr = self._poly_times_gen(
                    self._mono_times_gen(mp, i, -1), i, -1
                ).scale(-cval)
                base = base + corr
            result = base
        self._mono_gen_cache[key] = result
        return result

    def _poly_times_gen(self, x: NCPoly, i: int, sign: int = 1) -> NCPoly:
        out: dict[Monomial, int] = {}
        for m, c in x.terms.items():
            for mm, cc in self._mono_times_gen(m, i, sign).terms.items():
                out[mm] = out.get(mm, 0) + c * cc
        return NCPoly(out, self.p)

    def _mono_mul(self, a: Monomial, b: Monomial) -> NCPoly:
        key = (a, b)
        cached = self._mono_mul_cache.get(key)
        if cached is not None:
            return cached
        result = NCPoly({a: 1}, self.p)
        for i, e in enumerate(b):
            sign = 1 if e >= 0 else -1
            for _ in range(abs(e)):
                result = self._poly_times_gen(result, i, sign)
        self._mono_mul_cache[key] = result
        return result

    def multiply(self, a: NCPoly, b: NCPoly) -> NCPoly:
        fresh = not self._active
        if fresh:
            self._steps = 0
            self._active = True
        try:
            out: dict[Monomial, int] = {}
            for ma, ca in a.terms.items():
                for mb, cb in b.terms.items():
                    for m, c in self._mono_mul(ma, mb).terms.items():
                        out[m] = out.get(m, 0) + ca * cb * c
            return NCPoly(out, self.p)
        finally:
            if fresh:
                self._active = False

    def commutator(self, a: NCPoly, b: NCPoly) -> NCPoly:
        return self.multiply(a, b) - self.multiply(b, a)

    def power(self, a: NCPoly, e: int) -> NCPoly:
        out = self.one()
        for _ in range(e):
            out = self.multiply(out, a)
        return out

    def normal_form_word(self, word: Word, coeff: int = 1) -> NCPoly:
        """Normal form of a product of generator powers in written order."""
        if not self._active:
            self._steps = 0
        result = self.one().scale(coeff)
        for g, e in word:
            sign = 1 if e >= 0 else -1
            if sign < 0 and g != self.invertible:
                raise UnsupportedError(
                    f"generator {self.names[g]} is not invertible"
                )
            for _ in range(abs(e)):
                result = self._poly_times_gen(result, g, sign)
        return result

    def normal_form_words(self, terms: dict[Word, int]) -> NCPoly:
        out = self.zero()
        for w, c in terms.items():
            out = out + self.normal_form_word(w, c)
        return out


# -- module-level operation surface -----------------------------------------


def normal_form(x, P: Presentation) -> NCPoly:
    """Normal form of ``x`` relative to ``P``.

    ``x`` may be an NCPoly (whose exponent-vector monomials are intrinsically
    ordered; coefficients are re-reduced), a single word, or a dict mapping
    words to coefficients.
    """
    if isinstance(x, NCPoly):
        for m in x.terms:
            P._check_monomial(m)
        return NCPoly(dict(x.terms), P.p)
    if isinstance(x, dict):
        return P.normal_form_words(x)
    return P.normal_form_word(tuple(x))


def multiply(a: NCPoly, b: NCPoly, P: Presentation) -> NCPoly:
    return P.multiply(a, b)


def commutator(a: NCPoly, b: NCPoly, P: Presentation) -> NCPoly:
    return P.commutator(a, b)


def hilbert_function(P: Presentation, d: int) -> int:
    """Number of PBW monomials of total degree exactly d."""
    if P.invertible is not None:
        raise UnsupportedError("hilbert_function does not support localizations")
    if d < 0:
        raise UnsupportedError("degree must be nonnegative")
    return math.comb(d + P.ngens - 1, P.ngens - 1)


# -- diamond-lemma confluence check -----------------------------------------

FlatWord = tuple[int, ...]


def _flatten_monomial(m: Monomial) -> FlatWord:
    out = []
    for i, e in enumerate(m):
        if e < 0:
            raise UnsupportedError("cannot flatten negative exponents")
        out.extend([i] * e)
    return tuple(out)


def _word_to_monomial(w: FlatWord, ngens: int) -> Monomial:
    m = [0] * ngens
    for g in w:
        m[g] += 1
    return tuple(m)


def _rewrite_at(P: Presentation, w: FlatWord, t: int) -> dict[FlatWord, int]:
    """One application of g_j g_i -> g_i g_j + c_ji at position t (w[t] > w[t+1])."""
    j, i = w[t], w[t + 1]
    out: dict[FlatWord, int] = {}
    swapped = w[:t] + (i, j) + w[t + 2 :]
    out[swapped] = out.get(swapped, 0) + 1
    c = P.relations.get((j, i))
    if c is not None:
        for m, cc in c.terms.items():
            nw = w[:t] + _flatten_monomial(m) + w[t + 2 :]
            out[nw] = out.get(nw, 0) + cc
    return out


def _reduce_word_poly(
    P: Presentation,
    terms: dict[FlatWord, int],
    budget: int,
    rng: random.Random | None = None,
) -> dict[FlatWord, int]:
    """Fully rewrite a word polynomial to sorted words.

    The canonical strategy rewrites the leftmost inversion; passing an ``rng``
    picks a random inversion instead (used to fuzz reduction-order
    independence).
    """
    pending = dict(terms)
    done: dict[FlatWord, int] = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        c %= P.p
        if not c:
            continue
        positions = [t for t in range(len(w) - 1) if w[t] > w[t + 1]]
        if not positions:
            done[w] = (done.get(w, 0) + c) % P.p
            continue
        steps += 1
        if steps > budget:
            raise MalformedPresentationError("confluence rewriting budget exceeded")
        t = positions[0] if rng is None else rng.choice(positions)
        for nw, cc in _rewrite_at(P, w, t).items():
            pending[nw] = (pending.get(nw, 0) + c * cc) % P.p
    return {w: c for w, c in done.items() if c % P.p}


def _word_poly_to_ncpoly(P: Presentation, terms: dict[FlatWord, int]) -> NCPoly:
    out: dict[Monomial, int] = {}
    for w, c in terms.items():
        m = _word_to_monomial(w, P.ngens)
        out[m] = out.get(m, 0) + c
    return NCPoly(out, P.p)


@dataclass
class ConfluenceReport:
    passed: bool
    overlaps_checked: int
    discrepancies: list[tuple[tuple[int, int, int], NCPoly]] = field(default_factory=list)


def check_confluence(P: Presentation, max_degree: int = 8) -> ConfluenceReport:
    """Resolve every overlap word g_k g_j g_i (k > j > i) both ways.

    Both reduction orders must produce the same normal form; any discrepancy
    polynomial is reported rather than raised.
    """
    budget = max(10_000, 200 * max_degree * P.ngens**2)
    discrepancies = []
    checked = 0
    for k, j, i in itertools.combinations(range(P.ngens - 1, -1, -1), 3):
        checked += 1
        w = (k, j, i)
        route_a = _reduce_word_poly(P, _rewrite_at(P, w, 0), budget)
        route_b = _reduce_word_poly(P, _rewrite_at(P, w, 1), budget)
        diff = _word_poly_to_ncpoly(P, route_a) - _word_poly_to_ncpoly(P, route_b)
        if not diff.is_zero():
            discrepancies.append(((k, j, i), diff))
    return ConfluenceReport(not discrepancies, checked, discrepancies)


def fuzz_reduction_order(
    P: Presentation, word: FlatWord, trials: int, seed: int = 0
) -> bool:
    """Spot-check that random reduction orders agree with the canonical one."""
    budget = 100_000
    canonical = _reduce_word_poly(P, {word: 1}, budget)
    for t in range(trials):
        rng = random.Random(seed * 1_000_003 + t)
        if _reduce_word_poly(P, {word: 1}, budget, rng) != canonical:
            return False
    return True


# -- associated graded ------------------------------------------------------


def associated_graded(P: Presentation, W: WeightFiltration) -> Presentation:
    """Associated graded presentation for the filtration with weights W.

    Each relation keeps exactly its weight-(w_i + w_j) homogeneous component.
    Higher-weight components vanish in the graded algebra and are discarded;
    so do weight-0 scalar components (they land in the degree-0 piece).  Any
    other lower-weight component is incompatible with the filtration.
    """
    if len(W.weights) != P.ngens:
        raise FiltrationError("weight vector length mismatch")
    new_rel: dict[tuple[int, int], NCPoly] = {}
    for (j, i), c in P.relations.items():
        target = W.weights[i] + W.weights[j]
        kept: dict[Monomial, int] = {}
        for m, cc in c.terms.items():
            w = sum(wt * e for wt, e in zip(W.weights, m))
            if w == target:
                kept[m] = cc
            elif w > target:
                continue
            elif not any(m):
                continue  # scalar component, weight 0 < target
            else:
                raise FiltrationError(
                    f"relation [{P.names[j]},{P.names[i]}] has a component of "
                    f"weight {w} below the filtration target {target}"
                )
        if kept:
            new_rel[(j, i)] = NCPoly(kept, P.p)
    # pick a guard weight vector that keeps the graded relations admissible
    for guard in (tuple(w if w > 0 else 1 for w in W.weights), (1,) * P.ngens, P.weights):
        ok = all(
            c.degree(guard) <= guard[i] + guard[j] for (j, i), c in new_rel.items()
        )
        if ok:
            return Presentation(
                P.names, P.p, new_rel, weights=guard, invertible=P.invertible
            )
    raise FiltrationError("no admissible termination guard for the graded relations")
