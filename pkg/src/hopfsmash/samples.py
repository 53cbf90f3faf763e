"""Seeded random elements for property checks and suite sampling."""

from __future__ import annotations

from fractions import Fraction

from .dual import U_KIND, UBAR_KIND, DualElement
from .smash import SmashElement
from .uea import COPY_L, UeaElement


def random_scalar(rng) -> Fraction:
    num = rng.randint(-4, 4) or 1
    den = rng.randint(1, 3)
    return Fraction(num, den)


def random_pbw_mono(alg, rng, deg):
    e = [0] * alg.n
    for _ in range(rng.randint(0, deg)):
        e[rng.randrange(alg.n)] += 1
    return tuple(e)


def random_uea(alg, rng, deg=3, nterms=2, copy=COPY_L) -> UeaElement:
    terms = {}
    for _ in range(nterms):
        m = random_pbw_mono(alg, rng, deg)
        terms[m] = terms.get(m, Fraction(0)) + random_scalar(rng)
    return UeaElement(alg, terms, copy)


def random_dual_mono(alg, rng, length):
    syms = []
    for _ in range(rng.randint(0, length)):
        syms.append((rng.choice((U_KIND, UBAR_KIND)),
                     rng.randrange(alg.n), rng.randrange(alg.n)))
    return tuple(sorted(syms))


def random_dual(alg, rng, length=2, nterms=2) -> DualElement:
    terms = {}
    for _ in range(nterms):
        m = random_dual_mono(alg, rng, length)
        terms[m] = terms.get(m, Fraction(0)) + random_scalar(rng)
    return DualElement(alg, terms)


def random_smash(alg, rng, deg=2, length=2, nterms=2, copy=COPY_L) -> SmashElement:
    terms = {}
    for _ in range(nterms):
        key = (random_dual_mono(alg, rng, length), random_pbw_mono(alg, rng, deg))
        terms[key] = terms.get(key, Fraction(0)) + random_scalar(rng)
    return SmashElement(alg, terms, copy)
