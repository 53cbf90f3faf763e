"""Exact arithmetic in the universal enveloping algebra, in PBW normal form.

Elements are finite rational combinations of ordered monomials
X_1^{e_1}...X_n^{e_n}, stored as {exponent tuple: coefficient}.  Two
copies coexist: copy "L" multiplies with the structure constants C and
copy "R" (generators written Y_j) with -C; the antiisomorphism phi maps
one onto the other.  Straightening X_j X_i -> X_i X_j - sum_k C^k_ij X_k
for i < j terminates because each rewrite either lowers the total degree
or the number of inversions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .lie import LieAlgebra, as_scalar

COPY_L = "L"
COPY_R = "R"

_ZERO = 0
_ONE = 1


def zero_mono(n: int) -> tuple:
    return (0,) * n


def mono_degree(e: tuple) -> int:
    return sum(e)


def _clean(terms: dict) -> dict:
    return {m: v for m, v in terms.items() if v}


class UeaElement:
    """A PBW-normal element of U(g) (copy L) or U(g_R) (copy R)."""

    __slots__ = ("alg", "copy", "terms")

    def __init__(self, alg: LieAlgebra, terms: dict, copy: str = COPY_L):
        if copy not in (COPY_L, COPY_R):
            raise ValueError(f"copy tag must be 'L' or 'R', got {copy!r}")
        self.alg = alg
        self.copy = copy
        self.terms = _clean(terms)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, alg, copy=COPY_L):
        return cls(alg, {}, copy)

    @classmethod
    def one(cls, alg, copy=COPY_L):
        return cls(alg, {zero_mono(alg.n): _ONE}, copy)

    @classmethod
    def generator(cls, alg, j: int, copy=COPY_L):
        """X_j (or Y_j on copy R), j 1-based."""
        if not 1 <= j <= alg.n:
            raise IndexError(f"generator index {j} out of range 1..{alg.n}")
        e = [0] * alg.n
        e[j - 1] = 1
        return cls(alg, {tuple(e): _ONE}, copy)

    @classmethod
    def monomial(cls, alg, e: tuple, copy=COPY_L, coeff=_ONE):
        return cls(alg, {tuple(e): as_scalar(coeff)}, copy)

    # -- ring structure ----------------------------------------------

    def _check_mate(self, other):
        if self.alg is not other.alg and self.alg != other.alg:
            raise ValueError("elements live over different algebras")
        if self.copy != other.copy:
            raise ValueError(f"mixed copy tags {self.copy!r} and {other.copy!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UeaElement.one(self.alg, self.copy) * other
        self._check_mate(other)
        terms = dict(self.terms)
        for m, v in other.terms.items():
            terms[m] = terms.get(m, _ZERO) + v
        return UeaElement(self.alg, terms, self.copy)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        s = as_scalar(scalar)
        return UeaElement(self.alg, {m: s * v for m, v in self.terms.items()}, self.copy)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return other * self
        return mul_uea(self, other)

    def __eq__(self, other):
        if not isinstance(other, UeaElement):
            if other == 0:
                return not self.terms
            other = UeaElement.one(self.alg, self.copy) * other
        return self.copy == other.copy and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=0)

    def coefficient(self, e: tuple) -> Fraction:
        return self.terms.get(tuple(e), _ZERO)

    def __str__(self):
        return render_uea(self)

    __repr__ = __str__


def _letter(alg, idx0, copy):
    if copy == COPY_R:
        return f"Y{idx0 + 1}"
    return f"X{idx0 + 1}"


def render_mono(alg, e, copy=COPY_L) -> str:
    if not any(e):
        return "1"
    parts = []
    for j, p in enumerate(e):
        if p == 1:
            parts.append(_letter(alg, j, copy))
        elif p > 1:
            parts.append(f"{_letter(alg, j, copy)}^{p}")
    return "*".join(parts)


def _render_terms(term_strs) -> str:
    """Join (coeff, monostr) pairs into a canonical signed sum."""
    out = []
    for coeff, mono in term_strs:
        neg = coeff < 0
        a = -coeff if neg else coeff
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out) if out else "0"


def render_uea(x: UeaElement) -> str:
    keys = sorted(x.terms, key=lambda m: (mono_degree(m), m))
    return _render_terms((x.terms[m], render_mono(x.alg, m, x.copy)) for m in keys)


# -- multiplication -------------------------------------------------

def _sign(copy) -> int:
    return 1 if copy == COPY_L else -1


@lru_cache(maxsize=None)
def _mono_times_gen(alg: LieAlgebra, copy: str, e: tuple, j0: int):
    """X^e * X_{j0} as a tuple of (monomial, coeff); j0 is 0-based."""
    top = max((i for i, p in enumerate(e) if p), default=-1)
    if top <= j0:
        f = list(e)
        f[j0] += 1
        return ((tuple(f), _ONE),)
    # e ends with X_top, top > j0: X^e X_j = (X^e' X_j) X_top + X^e' [X_top, X_j]
    e1 = list(e)
    e1[top] -= 1
    e1 = tuple(e1)
    acc = {}
    for m, v in _mono_times_gen(alg, copy, e1, j0):
        f = list(m)
        f[top] += 1  # indices in m stay <= top, appending X_top is direct
        f = tuple(f)
        acc[f] = acc.get(f, _ZERO) + v
    s = _sign(copy)
    for k in range(alg.n):
        ck = alg.c[k][top][j0]
        if ck:
            for m, v in _mono_times_gen(alg, copy, e1, k):
                acc[m] = acc.get(m, _ZERO) + s * ck * v
    return tuple((m, v) for m, v in acc.items() if v)


@lru_cache(maxsize=None)
def _mono_mul(alg: LieAlgebra, copy: str, e: tuple, f: tuple):
    """Product of two PBW monomials as a tuple of (monomial, coeff)."""
    if not any(f):
        return ((e, _ONE),)
    acc = {e: _ONE}
    for j0, p in enumerate(f):
        for _ in range(p):
            nxt = {}
            for m, v in acc.items():
                for m2, w in _mono_times_gen(alg, copy, m, j0):
                    nxt[m2] = nxt.get(m2, _ZERO) + v * w
            acc = {m: v for m, v in nxt.items() if v}
    return tuple(acc.items())


def mul_uea(a: UeaElement, b: UeaElement) -> UeaElement:
    """Bilinear PBW product; both factors must carry the same copy tag."""
    a._check_mate(b)
    out = {}
    for e, u in a.terms.items():
        for f, v in b.terms.items():
            uv = u * v
            for m, w in _mono_mul(a.alg, a.copy, e, f):
                out[m] = out.get(m, _ZERO) + uv * w
    return UeaElement(a.alg, out, a.copy)


# -- coalgebra -------------------------------------------------------

def _splits(e: tuple, parts: int):
    """Yield (tuple of part-monomials, multinomial coefficient).

    Decompositions of e into `parts` ordered summands; the coefficient
    is the product over j of multinomial(e_j; parts).
    """
    if parts == 1:
        yield (e,), 1
        return
    n = len(e)
    for first in _iter_sub(e):
        rest = tuple(e[j] - first[j] for j in range(n))
        coeff = 1
        for j in range(n):
            coeff *= comb(e[j], first[j])
        for tail, c2 in _splits(rest, parts - 1):
            yield (first,) + tail, coeff * c2


def _iter_sub(e: tuple):
    """All monomials k with 0 <= k <= e componentwise."""
    if not e:
        yield ()
        return
    head = e[0]
    for tail in _iter_sub(e[1:]):
        for h in range(head + 1):
            yield (h,) + tail


@lru_cache(maxsize=None)
def splits2(e: tuple):
    """Two-leg coproduct splits of X^e: ((left, right, coefficient), ...)."""
    out = []
    for k in _iter_sub(e):
        c = 1
        for t in range(len(e)):
            c *= comb(e[t], k[t])
        out.append((k, tuple(e[t] - k[t] for t in range(len(e))), c))
    return tuple(out)


def coproduct_uea(x: UeaElement, m: int = 1) -> dict:
    """Iterated coproduct Delta^{(m)} as {(mono_1,...,mono_{m+1}): coeff}.

    Generators are primitive, so Delta(X^e) expands by binomials; the
    result needs no straightening because every leg stays ordered.
    """
    if m < 1:
        raise ValueError("fold count must be >= 1")
    out = {}
    for e, v in x.terms.items():
        for legs, c in _splits(e, m + 1):
            out[legs] = out.get(legs, _ZERO) + v * c
    return {k: v for k, v in out.items() if v}


def counit_uea(x: UeaElement) -> Fraction:
    """Coefficient of the empty monomial."""
    return x.terms.get(zero_mono(x.alg.n), _ZERO)


@lru_cache(maxsize=None)
def _antipode_mono(alg: LieAlgebra, copy: str, e: tuple):
    """S(X^e) = (-1)^{|e|} X_n^{e_n}...X_1^{e_1}, renormalized."""
    acc = {zero_mono(alg.n): _ONE}
    for j0 in range(alg.n - 1, -1, -1):
        for _ in range(e[j0]):
            nxt = {}
            for m, v in acc.items():
                for m2, w in _mono_times_gen(alg, copy, m, j0):
                    nxt[m2] = nxt.get(m2, _ZERO) + v * w
            acc = nxt
    sign = -1 if mono_degree(e) % 2 else 1
    return tuple((m, sign * v) for m, v in acc.items() if v)


def antipode_uea(x: UeaElement) -> UeaElement:
    out = {}
    for e, v in x.terms.items():
        for m, w in _antipode_mono(x.alg, x.copy, e):
            out[m] = out.get(m, _ZERO) + v * w
    return UeaElement(x.alg, out, x.copy)


# -- the sign-flipped copy ------------------------------------------

@lru_cache(maxsize=None)
def _phi_mono(alg: LieAlgebra, e: tuple, source: str):
    """phi(X^e) = Y-word reversed (or back), normalized in the target copy."""
    target = COPY_R if source == COPY_L else COPY_L
    acc = {zero_mono(alg.n): _ONE}
    for j0 in range(alg.n - 1, -1, -1):
        for _ in range(e[j0]):
            nxt = {}
            for m, v in acc.items():
                for m2, w in _mono_times_gen(alg, target, m, j0):
                    nxt[m2] = nxt.get(m2, _ZERO) + v * w
            acc = nxt
    return tuple(acc.items())


def phi(x: UeaElement) -> UeaElement:
    """The antiisomorphism U(g) -> U(g_R), X_i |-> Y_i on generators."""
    if x.copy != COPY_L:
        raise ValueError("phi expects a copy-L element")
    out = {}
    for e, v in x.terms.items():
        for m, w in _phi_mono(x.alg, e, COPY_L):
            out[m] = out.get(m, _ZERO) + v * w
    return UeaElement(x.alg, out, COPY_R)


def phi_inv(y: UeaElement) -> UeaElement:
    """Inverse antiisomorphism U(g_R) -> U(g), Y_i |-> X_i."""
    if y.copy != COPY_R:
        raise ValueError("phi_inv expects a copy-R element")
    out = {}
    for e, v in y.terms.items():
        for m, w in _phi_mono(y.alg, e, COPY_R):
            out[m] = out.get(m, _ZERO) + v * w
    return UeaElement(y.alg, out, COPY_L)


@lru_cache(maxsize=None)
def monomials_up_to(alg: LieAlgebra, dmax: int) -> tuple:
    """All PBW exponent tuples of total degree <= dmax, by degree then lex."""
    out = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(budget + 1):
            rec(prefix + [p], remaining - 1, budget - p)

    rec([], alg.n, dmax)
    out.sort(key=lambda e: (mono_degree(e), e))
    return tuple(out)
