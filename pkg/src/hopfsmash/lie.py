"""Finite-dimensional Lie algebras presented by structure constants.

A Lie algebra is stored as the array C with C[k][i][j] = C^k_ij, the
coefficient of X_k in [X_i, X_j], over exact rationals.  Everything
downstream (enveloping algebra, dual functionals, smash product) is
derived from this single input.  Indices are 0-based internally and
1-based in every user-facing signature, message and report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Scalar = Fraction


class LieStructureError(ValueError):
    """A structure-constant array violates the Lie algebra axioms."""


class AntisymmetryViolation(LieStructureError):
    """C^k_ij != -C^k_ji for some i, j, k (reported 1-based)."""

    def __init__(self, i: int, j: int, k: int):
        self.indices = (i, j, k)
        super().__init__(f"antisymmetry fails at (i,j,k) = ({i},{j},{k}): C^k_ij != -C^k_ji")


class JacobiViolation(LieStructureError):
    """The Jacobi identity fails at (i, j, k, l) (reported 1-based)."""

    def __init__(self, i: int, j: int, k: int, l: int, value: Fraction):
        self.indices = (i, j, k, l)
        self.value = value
        super().__init__(f"Jacobi identity fails at (i,j,k,l) = ({i},{j},{k},{l}): sum = {value}")


def as_scalar(x):
    """Coerce ints, strings like '3/2' and Fractions to an exact rational.

    Integral values are kept as plain int (a fast exact rational); only
    genuine fractions carry a Fraction.  Mixed arithmetic stays exact.
    """
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        return as_scalar(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True, eq=True)
class LieAlgebra:
    """A validated Lie algebra; construct through validate_structure()."""

    n: int
    c: tuple  # c[k][i][j] = C^k_ij, exact rationals, 0-based
    labels: tuple
    name: str = ""

    def __post_init__(self):
        # memoized hash: instances key every cache in the package
        object.__setattr__(self, "_h", hash((self.n, self.c, self.labels, self.name)))

    def __hash__(self):
        return self._h

    def bracket(self, i: int, j: int) -> dict:
        """[X_i, X_j] as a sparse map {k: C^k_ij} with 1-based keys."""
        out = {}
        for k in range(self.n):
            v = self.c[k][i - 1][j - 1]
            if v:
                out[k + 1] = v
        return out

    def __repr__(self):
        return f"LieAlgebra({self.name or 'n=%d' % self.n})"


def _freeze(c_raw, n: int) -> tuple:
    rows = []
    for k in range(n):
        plane = []
        for i in range(n):
            plane.append(tuple(as_scalar(c_raw[k][i][j]) for j in range(n)))
        rows.append(tuple(plane))
    return tuple(rows)


def validate_structure(c_raw, n: int, labels: Sequence[str] | None = None,
                       name: str = "") -> LieAlgebra:
    """Check antisymmetry and Jacobi, returning the validated algebra.

    Raises AntisymmetryViolation or JacobiViolation with the offending
    1-based index tuple.
    """
    if n <= 0:
        raise LieStructureError("dimension must be positive")
    if len(c_raw) != n or any(len(c_raw[k]) != n or any(len(c_raw[k][i]) != n for i in range(n))
                              for k in range(n)):
        raise LieStructureError(f"structure array is not {n}x{n}x{n}")
    c = _freeze(c_raw, n)
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                if c[k][i][j] != -c[k][j][i]:
                    raise AntisymmetryViolation(i + 1, j + 1, k + 1)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(n):
                    s = sum((c[m][i][j] * c[l][m][k]
                             + c[m][j][k] * c[l][m][i]
                             + c[m][k][i] * c[l][m][j]) for m in range(n))
                    if s:
                        raise JacobiViolation(i + 1, j + 1, k + 1, l + 1, s)
    if labels is None:
        labels = tuple(f"X{p + 1}" for p in range(n))
    else:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise LieStructureError("label count does not match dimension")
    return LieAlgebra(n=n, c=c, labels=labels, name=name)


def adjoint_matrix(alg: LieAlgebra, k: int) -> tuple:
    """Matrix of ad_{X_k} (1-based k): entry (i,j) is C^i_kj."""
    if not 1 <= k <= alg.n:
        raise IndexError(f"generator index {k} out of range 1..{alg.n}")
    n = alg.n
    return tuple(tuple(alg.c[i][k - 1][j] for j in range(n)) for i in range(n))


def modular_vector(alg: LieAlgebra) -> tuple:
    """The vector c with c_j = sum_i C^i_ij = -trace(ad X_j).

    Zero exactly for unimodular algebras; corrects the target map and
    the inverse antipode of the algebroid otherwise.
    """
    n = alg.n
    return tuple(sum(alg.c[i][i][j] for i in range(n)) for j in range(n))


def _from_brackets(n, entries, labels=None, name=""):
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k, v) in entries:
        v = as_scalar(v)
        c[k - 1][i - 1][j - 1] = v
        c[k - 1][j - 1][i - 1] = -v
    return validate_structure(c, n, labels=labels, name=name)


def builtin(name: str) -> LieAlgebra:
    """Catalog algebras: abelian2, solvable2, heisenberg3, sl2."""
    if name == "abelian2":
        return _from_brackets(2, [], name="abelian2")
    if name == "solvable2":
        # [X1, X2] = X2
        return _from_brackets(2, [(1, 2, 2, 1)], name="solvable2")
    if name == "heisenberg3":
        # [X1, X2] = X3
        return _from_brackets(3, [(1, 2, 3, 1)], name="heisenberg3")
    if name == "sl2":
        # [H, E] = 2E, [H, F] = -2F, [E, F] = H  with (H, E, F) = (X1, X2, X3)
        return _from_brackets(3, [(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1)],
                              labels=("H", "E", "F"), name="sl2")
    raise KeyError(f"unknown catalog algebra {name!r}; options: " + ", ".join(BUILTIN_NAMES))


BUILTIN_NAMES = ("abelian2", "solvable2", "heisenberg3", "sl2")


def lie_from_json(data) -> LieAlgebra:
    """Build an algebra from the input file schema.

    Schema: {"name": str, "dim": int, "labels": [str],
             "brackets": [{"i": int, "j": int, "k": int, "num": int, "den": int}]}
    listing only i < j entries; the antisymmetric completion is implied.
    """
    n = int(data["dim"])
    entries = []
    for b in data.get("brackets", []):
        i, j, k = int(b["i"]), int(b["j"]), int(b["k"])
        if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n):
            raise LieStructureError(f"bracket indices out of range: {b}")
        if i >= j:
            raise LieStructureError(f"bracket entries must have i < j: {b}")
        entries.append((i, j, k, Fraction(int(b["num"]), int(b.get("den", 1)))))
    return _from_brackets(n, entries, labels=data.get("labels"), name=data.get("name", ""))


def lie_to_json(alg: LieAlgebra) -> dict:
    brackets = []
    for i in range(alg.n):
        for j in range(i + 1, alg.n):
            for k in range(alg.n):
                v = alg.c[k][i][j]
                if v:
                    brackets.append({"i": i + 1, "j": j + 1, "k": k + 1,
                                     "num": v.numerator, "den": v.denominator})
    return {"name": alg.name, "dim": alg.n, "labels": list(alg.labels), "brackets": brackets}


def load_lie_file(path: str) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return lie_from_json(json.load(fh))
