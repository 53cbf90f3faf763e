"""The scalar-extension Hopf algebroid carried by B = H # U(g).

Structure maps over the two base algebras, realized on the canonical
carrier:

    alpha_L(X_j) = 1 # X_j                 beta_L(X_j) = lambda(X_j) - c_j
    alpha_R(Y_j) = lambda(X_j)             beta_R(Y_j) = 1 # X_j
    eps_L(f # D) = phi^-1(phi(D) < S(f))   eps_R(f # D) = eps(f) phi(D)
    tau(f # M)   = lambda(M) (S(f) # 1)    tau^-1(f # M) = beta_L(M) (S(f) # 1)

with c the modular vector.  The shared comultiplication representative
sends 1 # X_j to sum_i U[i,j] # 1 (x) 1 # X_i and f # 1 to
sum f_(2) # 1 (x) f_(1) # 1, extended multiplicatively; its left leg
stays inside H # 1, the normal form for the balanced tensor.  Viewed in
B (x)_L B it is the left-bialgebroid comultiplication (so that
Delta(alpha_L(a)) = alpha_L(a) (x) 1 after balancing), viewed in
B (x)_R B the right one.  The balancing move is

    beta_L(a) x (x) y  ==  x (x) alpha_L(a) y,

and reduce_balanced rewrites the left leg into H # 1 with it; the top
layer of each rewrite cancels only as functionals (through U Ubar = I),
so reduced coefficients are compared semantically.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .lie import LieAlgebra, as_scalar, modular_vector
from .uea import (COPY_L, COPY_R, UeaElement, mono_degree, monomials_up_to,
                  phi, phi_inv, render_mono, zero_mono, _render_terms)
from .dual import (DualElement, EqualsResult, U_KIND, UBAR_KIND, antipode_dual,
                   counit_dual, parse_mode, render_dual_mono,
                   tensor_functional_zero)
from .smash import (SmashElement, SmashTensor, act_right, lambda_coact,
                    render_smash, smash_equal, smash_mul, _lambda_mono)

_ZERO = 0
_ONE = 1


# -- source and target maps -------------------------------------------

def alpha_L(u: UeaElement) -> SmashElement:
    """The source embedding U(g) -> B, an algebra map."""
    if u.copy != COPY_L:
        raise ValueError("alpha_L expects a copy-L element")
    return SmashElement.from_uea(u)


@lru_cache(maxsize=None)
def _beta_L_gen(alg: LieAlgebra, j0: int) -> SmashElement:
    c = modular_vector(alg)
    e = [0] * alg.n
    e[j0] = 1
    lam = _lambda_mono(alg, tuple(e))
    return lam - c[j0] * SmashElement.one(alg)


@lru_cache(maxsize=None)
def _beta_L_mono(alg: LieAlgebra, e: tuple) -> SmashElement:
    if not any(e):
        return SmashElement.one(alg)
    last = max(i for i, p in enumerate(e) if p)
    e1 = list(e)
    e1[last] -= 1
    return smash_mul(_beta_L_gen(alg, last), _beta_L_mono(alg, tuple(e1)))


def beta_L(u: UeaElement) -> SmashElement:
    """The target map: antimultiplicative, X_j -> lambda(X_j) - c_j."""
    if u.copy != COPY_L:
        raise ValueError("beta_L expects a copy-L element")
    out = SmashElement.zero(u.alg)
    for e, v in u.terms.items():
        out = out + v * _beta_L_mono(u.alg, e)
    return out


@lru_cache(maxsize=None)
def _alpha_R_mono(alg: LieAlgebra, e: tuple) -> SmashElement:
    if not any(e):
        return SmashElement.one(alg)
    first = next(i for i, p in enumerate(e) if p)
    e1 = list(e)
    e1[first] -= 1
    g = [0] * alg.n
    g[first] = 1
    return smash_mul(_lambda_mono(alg, tuple(g)), _alpha_R_mono(alg, tuple(e1)))


def alpha_R(y: UeaElement) -> SmashElement:
    """The right-base source: multiplicative on U(g_R), Y_j -> lambda(X_j)."""
    if y.copy != COPY_R:
        raise ValueError("alpha_R expects a copy-R element")
    out = SmashElement.zero(y.alg)
    for e, v in y.terms.items():
        out = out + v * _alpha_R_mono(y.alg, e)
    return out


def beta_R(y: UeaElement) -> SmashElement:
    """The right-base target: antimultiplicative, Y_j -> 1 # X_j."""
    if y.copy != COPY_R:
        raise ValueError("beta_R expects a copy-R element")
    return SmashElement.from_uea(phi_inv(y))


def source_target(alg: LieAlgebra, j: int):
    """(alpha_L(X_j), beta_L(X_j), alpha_R(Y_j), beta_R(Y_j)), j 1-based."""
    if not 1 <= j <= alg.n:
        raise IndexError(f"generator index {j} out of range 1..{alg.n}")
    xj = UeaElement.generator(alg, j)
    yj = UeaElement.generator(alg, j, COPY_R)
    return (alpha_L(xj), beta_L(xj), alpha_R(yj), beta_R(yj))


# -- balanced tensors ---------------------------------------------------

class BalancedTensor:
    """An element of B (x)_A B in normal form: left legs inside H # 1.

    Terms are keyed (left H monomial, right H monomial, right PBW
    monomial).  Coefficients are compared as functionals; the normal
    form is canonical only up to semantic equality of its H legs.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: LieAlgebra, terms: dict):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def unit(cls, alg):
        return cls(alg, {((), (), zero_mono(alg.n)): _ONE})

    def __add__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, _ZERO) + v
        return BalancedTensor(self.alg, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        s = as_scalar(scalar)
        return BalancedTensor(self.alg, {k: s * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product; left legs stay in H # 1."""
        if isinstance(other, (int, Fraction)):
            return other * self
        out = {}
        for (h1, g1, e1), u in self.terms.items():
            for (h2, g2, e2), v in other.terms.items():
                h = tuple(sorted(h1 + h2))
                right = smash_mul(SmashElement(self.alg, {(g1, e1): _ONE}),
                                  SmashElement(self.alg, {(g2, e2): _ONE}))
                uv = u * v
                for (g, e), w in right.terms.items():
                    key = (h, g, e)
                    out[key] = out.get(key, _ZERO) + uv * w
        return BalancedTensor(self.alg, out)

    def __eq__(self, other):
        return isinstance(other, BalancedTensor) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def fibers(self):
        """Group by right PBW monomial: {e: {(h, g): coeff}}."""
        out = {}
        for (h, g, e), v in self.terms.items():
            slot = out.setdefault(e, {})
            slot[(h, g)] = slot.get((h, g), _ZERO) + v
        return out

    def __str__(self):
        keys = sorted(self.terms, key=lambda k: (mono_degree(k[2]), k[2], k[0], k[1]))
        return _render_terms(
            (self.terms[k],
             f"({render_dual_mono(k[0])} # 1) (x) "
             f"({render_dual_mono(k[1])} # {render_mono(self.alg, k[2])})")
            for k in keys)

    __repr__ = __str__


def balanced_equal(a: BalancedTensor, b: BalancedTensor, mode: str = "heuristic:6",
                   *, dim_cap: int = 512) -> EqualsResult:
    """Semantic equality of normal forms, fiberwise over the PBW leg."""
    diff = a - b
    if not diff.terms:
        return EqualsResult(True)
    for e, terms in sorted(diff.fibers().items()):
        res = tensor_functional_zero(a.alg, terms, mode, dim_cap=dim_cap)
        if res.equal is None:
            return res
        if not res.equal:
            return EqualsResult(False, witness=(e, res.detail),
                                detail=f"H-tensor fiber at {render_mono(a.alg, e)} is nonzero")
    return EqualsResult(True)


# -- comultiplication ---------------------------------------------------

@lru_cache(maxsize=None)
def _delta_gen(alg: LieAlgebra, j0: int) -> BalancedTensor:
    """Delta(1 # X_j) = sum_i U[i,j] # 1 (x) 1 # X_i."""
    terms = {}
    for i in range(alg.n):
        e = [0] * alg.n
        e[i] = 1
        terms[(((U_KIND, i, j0),), (), tuple(e))] = _ONE
    return BalancedTensor(alg, terms)


@lru_cache(maxsize=None)
def _delta_mono(alg: LieAlgebra, e: tuple) -> BalancedTensor:
    if not any(e):
        return BalancedTensor.unit(alg)
    last = max(i for i, p in enumerate(e) if p)
    e1 = list(e)
    e1[last] -= 1
    return _delta_mono(alg, tuple(e1)) * _delta_gen(alg, last)


@lru_cache(maxsize=None)
def _delta_hgen(alg: LieAlgebra, m: tuple) -> BalancedTensor:
    """Delta(f # 1) = sum f_(2) # 1 (x) f_(1) # 1 on a dual monomial."""
    from .smash import _dual_mono_coproduct

    z = zero_mono(alg.n)
    terms = {}
    for (l, r, c) in _dual_mono_coproduct(alg, m):
        key = (r, l, z)
        terms[key] = terms.get(key, _ZERO) + c
    return BalancedTensor(alg, terms)


def delta_L(x: SmashElement) -> BalancedTensor:
    """Left-bialgebroid comultiplication, B -> B (x)_L B in normal form.

    Multiplicative by construction: on a basis term f # M it is the
    product of Delta(f # 1) with Delta(1 # X_j) over the factors of M.
    """
    if x.copy != COPY_L:
        raise ValueError("delta expects the canonical copy-L carrier")
    out = BalancedTensor(x.alg, {})
    for (m, e), v in x.terms.items():
        out = out + v * (_delta_hgen(x.alg, m) * _delta_mono(x.alg, e))
    return out


def delta_R(x: SmashElement) -> BalancedTensor:
    """Right-bialgebroid comultiplication; the same normal-form
    representative as delta_L, read in B (x)_R B."""
    return delta_L(x)


# -- counits ------------------------------------------------------------

def epsilon_L(x: SmashElement) -> UeaElement:
    """eps_L(f # D) = phi^-1(phi(D) < S(f)), the left counit into U(g)."""
    out = UeaElement.zero(x.alg)
    for (m, e), v in x.terms.items():
        acted = act_right(phi(UeaElement.monomial(x.alg, e)),
                          antipode_dual(DualElement(x.alg, {m: _ONE})))
        out = out + v * phi_inv(acted)
    return out


def epsilon_R(x: SmashElement) -> UeaElement:
    """eps_R(f # D) = eps(f) phi(D), the right counit into U(g_R)."""
    out = UeaElement.zero(x.alg, COPY_R)
    for (m, e), v in x.terms.items():
        c = counit_dual(DualElement(x.alg, {m: _ONE}))
        if c:
            out = out + v * c * phi(UeaElement.monomial(x.alg, e))
    return out


# -- antipode ------------------------------------------------------------

def tau(x: SmashElement) -> SmashElement:
    """The algebroid antipode: tau(f # M) = lambda(M) (S(f) # 1)."""
    out = SmashElement.zero(x.alg)
    for (m, e), v in x.terms.items():
        sm = SmashElement.from_dual(antipode_dual(DualElement(x.alg, {m: _ONE})))
        out = out + v * smash_mul(_lambda_mono(x.alg, e), sm)
    return out


def tau_inv(x: SmashElement) -> SmashElement:
    """Inverse antipode: tau^-1(f # M) = beta_L(M) (S(f) # 1)."""
    out = SmashElement.zero(x.alg)
    for (m, e), v in x.terms.items():
        sm = SmashElement.from_dual(antipode_dual(DualElement(x.alg, {m: _ONE})))
        out = out + v * smash_mul(_beta_L_mono(x.alg, e), sm)
    return out


# -- reduction to the balanced normal form -------------------------------

def reduce_balanced(t: SmashTensor, *, _check: bool = False) -> BalancedTensor:
    """Rewrite a raw B (x) B element into the left-leg-in-H#1 normal form.

    Peels the last PBW factor X_j of the left leg through the semantic
    identity 1 # X_j = sum_i beta_L(X_i) (U[i,j] # 1) and the balancing
    move beta_L(a) x (x) y -> x (x) alpha_L(a) y.  The degree-|M| part
    of the residual vanishes as functionals (by U Ubar = I) and is
    dropped; each step lowers the left UEA degree, so this terminates.
    Idempotent on normal forms and linear.
    """
    alg = t.alg
    if t.copy != COPY_L:
        raise ValueError("reduce_balanced expects the copy-L carrier")
    out = {}
    stack = [((fm, pe), (gm, de), v) for ((fm, pe), (gm, de)), v in t.terms.items()]
    while stack:
        (fm, pe), (gm, de), v = stack.pop()
        if not v:
            continue
        if not any(pe):
            key = (fm, gm, de)
            out[key] = out.get(key, _ZERO) + v
            continue
        j = max(i for i, p in enumerate(pe) if p)
        e1 = list(pe)
        e1[j] -= 1
        e1 = tuple(e1)
        maxdeg = mono_degree(e1)
        x1 = SmashElement(alg, {(fm, e1): _ONE})
        y = SmashElement(alg, {(gm, de): _ONE})
        residual = SmashElement(alg, {(fm, pe): _ONE})
        for i in range(alg.n):
            ugen = SmashElement.from_dual(DualElement.generator(alg, U_KIND, i + 1, j + 1))
            w = smash_mul(x1, ugen)
            residual = residual - smash_mul(_beta_L_gen(alg, i), w)
            moved = smash_mul(SmashElement.from_uea(UeaElement.generator(alg, i + 1)), y)
            for kw, vw in w.terms.items():
                for km, vm in moved.terms.items():
                    stack.append((kw, km, v * vw * vm))
        # the top layer of the residual is zero as functionals; drop it
        for (rm, re), rv in residual.terms.items():
            if mono_degree(re) <= maxdeg:
                stack.append(((rm, re), (gm, de), v * rv))
    return BalancedTensor(alg, out)


# -- the axiom suite ------------------------------------------------------

def algebroid_suite(alg: LieAlgebra, dmax: int = 2, rmax: int = 2,
                    mode: str = "heuristic:6", seed: int = 0, dim_cap: int = 512):
    """Verify the Hopf algebroid axioms (a)-(h) exactly, within bounds.

    Runs the functional-matrix hypothesis report first and refuses to
    check the algebroid on top of a failing foundation.  Failures become
    report entries with witnesses.
    """
    import random

    from .dual import check_theorem61
    from .report import CheckRecord, timed
    from .samples import random_dual, random_smash, random_uea

    rng = random.Random(seed)
    n = alg.n
    recs = list(check_theorem61(alg, dim_cap=dim_cap))
    if any(r.status == "fail" for r in recs):
        recs.append(CheckRecord(suite="algebroid", code="gate",
                                instance="functional-matrix hypotheses must pass first",
                                status="fail", witness=None, ms=0.0))
        return recs

    gens_x = [UeaElement.generator(alg, j) for j in range(1, n + 1)]
    c = modular_vector(alg)

    def seq(x, y, code, instance, t):
        res = smash_equal(x, y, mode, dim_cap=dim_cap)
        status = "pass" if res.equal else ("inconclusive" if res.equal is None else "fail")
        wit = None if res.equal else (render_smash(x), render_smash(y))
        recs.append(CheckRecord(suite="algebroid", code=code, instance=instance,
                                status=status, witness=wit, ms=t.ms))

    # (a) alpha_L is an algebra map carrying the bracket
    with timed() as t:
        bad = None
        for i in range(n):
            for j in range(n):
                lhs = smash_mul(alpha_L(gens_x[i]), alpha_L(gens_x[j])) \
                    - smash_mul(alpha_L(gens_x[j]), alpha_L(gens_x[i]))
                rhs = alpha_L(gens_x[i] * gens_x[j] - gens_x[j] * gens_x[i])
                if lhs != rhs:
                    bad = (f"[alpha_L(X{i + 1}), alpha_L(X{j + 1})]", render_smash(rhs))
        for _ in range(4):
            u, w = random_uea(alg, rng, deg=2), random_uea(alg, rng, deg=2)
            if smash_mul(alpha_L(u), alpha_L(w)) != alpha_L(u * w):
                bad = (f"alpha_L({u}) alpha_L({w})", f"alpha_L({u * w})")
    recs.append(CheckRecord(suite="algebroid", code="a",
                            instance="alpha_L homomorphism and embedded bracket",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # (b) beta_L antihomomorphism with the sign-flipped bracket
    with timed() as t:
        bad = None
        for i in range(n):
            for j in range(n):
                lhs = smash_mul(beta_L(gens_x[i]), beta_L(gens_x[j])) \
                    - smash_mul(beta_L(gens_x[j]), beta_L(gens_x[i]))
                rhs = -1 * beta_L(gens_x[i] * gens_x[j] - gens_x[j] * gens_x[i])
                res = smash_equal(lhs, rhs, mode, dim_cap=dim_cap)
                if not res.equal:
                    bad = (f"[beta_L(X{i + 1}), beta_L(X{j + 1})]",
                           f"-beta_L([X{i + 1},X{j + 1}])")
        for _ in range(4):
            u, w = random_uea(alg, rng, deg=2), random_uea(alg, rng, deg=2)
            res = smash_equal(smash_mul(beta_L(u), beta_L(w)), beta_L(w * u),
                              mode, dim_cap=dim_cap)
            if not res.equal:
                bad = (f"beta_L({u}) beta_L({w})", f"beta_L({w * u})")
    recs.append(CheckRecord(suite="algebroid", code="b",
                            instance="beta_L antihomomorphism, flipped bracket",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # (c) commuting images
    with timed() as t:
        bad = None
        for i in range(n):
            for j in range(n):
                a, b = alpha_L(gens_x[i]), beta_L(gens_x[j])
                if smash_mul(a, b) != smash_mul(b, a):
                    bad = (f"alpha_L(X{i + 1}) beta_L(X{j + 1})", "reverse order")
    recs.append(CheckRecord(suite="algebroid", code="c",
                            instance="images of alpha_L and beta_L commute",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # spanning set for counit laws
    span = [SmashElement.from_uea(UeaElement.monomial(alg, e))
            for e in monomials_up_to(alg, dmax)]
    span += [SmashElement.from_dual(DualElement.generator(alg, kind, i + 1, j + 1))
             for kind in (U_KIND, UBAR_KIND) for i in range(n) for j in range(n)]
    span += [random_smash(alg, rng, deg=max(dmax - 1, 1), length=1, nterms=2)
             for _ in range(3)]

    # (d) comultiplication: coassociative, counital, source/target laws
    with timed() as t:
        bad = None
        from .smash import _dual_mono_coproduct
        for x in span:
            d = delta_L(x)
            diff = {}
            for (h, g, e), v in d.terms.items():
                for (h1, g1, e1), w in delta_L(SmashElement(alg, {(g, e): _ONE})).terms.items():
                    key = (h, h1, g1, e1)
                    diff[key] = diff.get(key, _ZERO) + v * w
            for (h, g, e), v in d.terms.items():
                for (l, r, cc) in _dual_mono_coproduct(alg, h):
                    key = (r, l, g, e)
                    diff[key] = diff.get(key, _ZERO) - v * cc
            fibers = {}
            for (m1, m2, m3, e), v in diff.items():
                if v:
                    slot = fibers.setdefault(e, {})
                    slot[(m1, m2, m3)] = slot.get((m1, m2, m3), _ZERO) + v
            for e, terms in fibers.items():
                res = tensor_functional_zero(alg, terms, mode, dim_cap=dim_cap)
                if not res.equal:
                    bad = (f"(id x Delta) Delta vs (Delta x id) Delta on {render_smash(x)}",
                           f"PBW fiber {render_mono(alg, e)}")
                    break
            if bad:
                break
    recs.append(CheckRecord(suite="algebroid", code="d",
                            instance="Delta_L coassociative",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    with timed() as t:
        bad = None
        for x in span:
            d = delta_L(x)
            # left counit law: alpha_L(eps_L(x_(1))) x_(2) = x
            acc1 = SmashElement.zero(alg)
            # target law: beta_L(eps_L(x_(2))) x_(1) = x
            acc2 = SmashElement.zero(alg)
            # right counit laws
            acc3 = SmashElement.zero(alg)
            acc4 = SmashElement.zero(alg)
            for (h, g, e), v in d.terms.items():
                left = SmashElement(alg, {(h, zero_mono(n)): _ONE})
                right = SmashElement(alg, {(g, e): _ONE})
                acc1 = acc1 + v * smash_mul(alpha_L(epsilon_L(left)), right)
                acc2 = acc2 + v * smash_mul(beta_L(epsilon_L(right)), left)
                acc3 = acc3 + v * smash_mul(left, alpha_R(epsilon_R(right)))
                acc4 = acc4 + v * counit_dual(DualElement(alg, {h: _ONE})) * right
            checks = [("alpha_L(eps_L(x1)) x2", acc1),
                      ("beta_L(eps_L(x2)) x1", acc2),
                      ("x1 alpha_R(eps_R(x2))", acc3),
                      ("eps_H(x1) x2", acc4)]
            for name, acc in checks:
                res = smash_equal(acc, x, mode, dim_cap=dim_cap)
                if not res.equal:
                    bad = (f"{name} on {render_smash(x)}", render_smash(acc))
                    break
            if bad:
                break
        # source/target comultiplication laws through the balancing
        if bad is None:
            for j in range(n):
                lhs = reduce_balanced(SmashTensor.from_pair(
                    alpha_L(gens_x[j]), SmashElement.one(alg)))
                res = balanced_equal(lhs, delta_L(alpha_L(gens_x[j])), mode, dim_cap=dim_cap)
                if not res.equal:
                    bad = (f"alpha_L(X{j + 1}) (x) 1 reduced", "Delta(alpha_L(X_j))")
                    break
                res = balanced_equal(
                    delta_L(beta_L(gens_x[j])),
                    reduce_balanced(SmashTensor.from_pair(SmashElement.one(alg),
                                                          beta_L(gens_x[j]))),
                    mode, dim_cap=dim_cap)
                if not res.equal:
                    bad = (f"Delta(beta_L(X{j + 1}))", "1 (x) beta_L(X_j)")
                    break
    recs.append(CheckRecord(suite="algebroid", code="d",
                            instance="Delta_L counital; source/target laws",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # (e) multiplicativity into the balanced tensor
    with timed() as t:
        bad = None
        grid = [alpha_L(g) for g in gens_x]
        grid += [SmashElement.from_dual(DualElement.generator(alg, kind, i + 1, j + 1))
                 for kind in (U_KIND, UBAR_KIND) for i in range(n) for j in range(n)]
        deg2 = [SmashElement.from_uea(UeaElement.monomial(alg, e))
                for e in monomials_up_to(alg, dmax) if mono_degree(e) == 2]
        extra = deg2[:2] + [random_smash(alg, rng, deg=1, length=1, nterms=2)]
        for x in grid + extra:
            for y in grid:
                res = balanced_equal(delta_L(smash_mul(x, y)),
                                     delta_L(x) * delta_L(y), mode, dim_cap=dim_cap)
                if res.equal is None:
                    bad = (res.detail, "")
                    break
                if not res.equal:
                    bad = (f"Delta(xy), x={render_smash(x)}, y={render_smash(y)}",
                           "Delta(x) Delta(y)")
                    break
            if bad:
                break
    recs.append(CheckRecord(suite="algebroid", code="e",
                            instance="Delta_L multiplicative into the balanced tensor",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # (f) antipode laws
    with timed() as t:
        bad = None
        for j in range(n):
            res = smash_equal(tau(beta_L(gens_x[j])), alpha_L(gens_x[j]),
                              mode, dim_cap=dim_cap)
            if not res.equal:
                bad = (f"tau(beta_L(X{j + 1}))", f"alpha_L(X{j + 1})")
        pool = [alpha_L(g) for g in gens_x]
        pool += [SmashElement.from_dual(random_dual(alg, rng, length=1, nterms=1))
                 for _ in range(2)]
        pool += [random_smash(alg, rng, deg=2, length=1, nterms=2) for _ in range(2)]
        if bad is None:
            for x in pool:
                for y in pool[:4]:
                    res = smash_equal(tau(smash_mul(x, y)),
                                      smash_mul(tau(y), tau(x)), mode, dim_cap=dim_cap)
                    if not res.equal:
                        bad = (f"tau(xy), x={render_smash(x)}, y={render_smash(y)}",
                               "tau(y) tau(x)")
                        break
                res = smash_equal(tau_inv(tau(x)), x, mode, dim_cap=dim_cap)
                if not (res.equal and smash_equal(tau(tau_inv(x)), x, mode,
                                                  dim_cap=dim_cap).equal):
                    bad = (f"tau_inv(tau(x)) for x={render_smash(x)}", "x")
                if bad:
                    break
        if bad is None:
            f = random_dual(alg, rng, length=2, nterms=2)
            if tau(SmashElement.from_dual(f)) != SmashElement.from_dual(antipode_dual(f)):
                bad = ("tau(f # 1)", "S(f) # 1")
    recs.append(CheckRecord(suite="algebroid", code="f",
                            instance="tau antimultiplicative, tau(beta_L)=alpha_L, inverse",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # (g) counit compatibility with source and target
    with timed() as t:
        bad = None
        grid = [alpha_L(g) for g in gens_x]
        grid += [SmashElement.from_dual(DualElement.generator(alg, kind, i + 1, j + 1))
                 for kind in (U_KIND, UBAR_KIND) for i in range(n) for j in range(n)]
        for x in grid:
            for y in grid:
                mid = epsilon_L(smash_mul(x, y))
                via_a = epsilon_L(smash_mul(x, alpha_L(epsilon_L(y))))
                via_b = epsilon_L(smash_mul(x, beta_L(epsilon_L(y))))
                if via_a != mid or via_b != mid:
                    bad = (f"eps_L(x alpha/beta(eps_L(y))), x={render_smash(x)}, "
                           f"y={render_smash(y)}", f"eps_L(xy) = {mid}")
                    break
            if bad:
                break
    recs.append(CheckRecord(suite="algebroid", code="g",
                            instance="counit-source/target compatibility",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))

    # (h) translation of the other presentation's formulas on generators
    with timed() as t:
        bad = None
        for j in range(n):
            xj, yj = gens_x[j], UeaElement.generator(alg, j + 1, COPY_R)
            lhs = SmashElement.zero(alg)
            for i in range(n):
                u = SmashElement.from_dual(DualElement.generator(alg, U_KIND, i + 1, j + 1))
                lhs = lhs + smash_mul(u, alpha_R(UeaElement.generator(alg, i + 1, COPY_R)))
            if not smash_equal(lhs, alpha_L(xj), mode, dim_cap=dim_cap).equal:
                bad = (f"sum_i U[i,{j + 1}] Y_i", f"alpha_L(X{j + 1})")
                break
            if beta_L(xj) != lambda_coact(xj) - c[j] * SmashElement.one(alg):
                bad = (f"beta_L(X{j + 1})", "lambda(X_j) - c_j")
                break
            for (kind, nm) in ((U_KIND, "U"), (UBAR_KIND, "Ubar")):
                f = DualElement.generator(alg, kind, 1, min(2, n))
                fy = smash_mul(SmashElement.from_dual(f), alpha_R(yj))
                want_l = phi_inv(act_right(phi(xj), antipode_dual(f))) \
                    + counit_dual(f) * c[j] * UeaElement.one(alg)
                if epsilon_L(fy) != want_l:
                    bad = (f"eps_L({nm}[1,2] Y_{j + 1})", "f > X_j + eps(f) c_j")
                    break
                if epsilon_R(fy) != counit_dual(f) * yj:
                    bad = (f"eps_R({nm}[1,2] Y_{j + 1})", "eps(f) Y_j")
                    break
                want_tau = smash_mul(alpha_L(xj) + c[j] * SmashElement.one(alg),
                                     SmashElement.from_dual(antipode_dual(f)))
                if not smash_equal(tau(fy), want_tau, mode, dim_cap=dim_cap).equal:
                    bad = (f"tau({nm}[1,2] Y_{j + 1})", "(X_j + c_j) S(f)")
                    break
                want_tinv = smash_mul(alpha_L(xj), SmashElement.from_dual(antipode_dual(f)))
                if not smash_equal(tau_inv(fy), want_tinv, mode, dim_cap=dim_cap).equal:
                    bad = (f"tau_inv({nm}[1,2] Y_{j + 1})", "X_j S^-1(f)")
                    break
            if bad:
                break
    recs.append(CheckRecord(suite="algebroid", code="h",
                            instance="presentation translation on generators",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))
    return recs
