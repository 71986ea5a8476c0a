"""Coefficient modules for SL2(Z) and its finite subgroups.

SL2(Z) is generated by

    S = [[0, -1], [1, 0]]   of order 4,
    U = [[0, -1], [1, 1]]   of order 6,

with S^2 = U^3 = -I central of order 2, exhibiting the group as the
amalgamated product Z/4 *_{Z/2} Z/6.  The unipotent T = [[1, 1], [0, 1]]
is recovered as S^{-1} U.

A ``GroupModule`` stores the matrices by which these generators act.  The
k-th symmetric power of the standard rank-2 module uses the monomial basis

    e1^k, e1^{k-1} e2, ..., e2^k          (decreasing e1-degree),

and a matrix g acts on e1, e2 through its columns, so Sym is a covariant
functor: sym_power_matrix(g*h, k) == sym_power_matrix(g, k) * sym_power_matrix(h, k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exact_linalg import IntegerMatrix, _is_prime

S_MATRIX = IntegerMatrix([[0, -1], [1, 0]])
U_MATRIX = IntegerMatrix([[0, -1], [1, 1]])
T_MATRIX = IntegerMatrix([[1, 1], [0, 1]])  # equals S^{-1} * U
MINUS_IDENTITY = IntegerMatrix([[-1, 0], [0, -1]])


@dataclass(frozen=True)
class GeneratorSet:
    """The standard generators of SL2(Z), with their relations verified."""

    s: IntegerMatrix
    u: IntegerMatrix
    minus_i: IntegerMatrix

    def __post_init__(self):
        if self.s ** 4 != IntegerMatrix.identity(2):
            raise ValueError("S must have order 4")
        if self.u ** 6 != IntegerMatrix.identity(2):
            raise ValueError("U must have order 6")
        if self.s ** 2 != self.minus_i or self.u ** 3 != self.minus_i:
            raise ValueError("S^2 = U^3 = -I must hold")

    @property
    def t(self) -> IntegerMatrix:
        return (self.s ** 3) * self.u  # S^{-1} = S^3


def standard_generators() -> GeneratorSet:
    return GeneratorSet(S_MATRIX, U_MATRIX, MINUS_IDENTITY)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def sym_power_matrix(g: IntegerMatrix, k: int) -> IntegerMatrix:
    """Matrix of the k-th symmetric power of g on the monomial basis.

    >>> sym_power_matrix(S_MATRIX, 2).to_lists()
    [[0, 0, 1], [0, -1, 0], [1, 0, 0]]
    >>> sym_power_matrix(S_MATRIX, 0).to_lists()
    [[1]]
    """
    if g.shape != (2, 2):
        raise ValueError("symmetric powers are taken of 2x2 matrices here")
    if k < 0:
        raise ValueError("k must be non-negative")
    if abs(g.det()) != 1:
        raise ValueError("g must be invertible over Z")
    a, b = g[0][0], g[1][0]  # image of e1
    c, d = g[0][1], g[1][1]  # image of e2
    cols = []
    for i in range(k + 1):
        # (a e1 + b e2)^(k-i) * (c e1 + d e2)^i, coefficients by e2-degree
        poly = [1]
        for _ in range(k - i):
            poly = _poly_mul(poly, [a, b])
        for _ in range(i):
            poly = _poly_mul(poly, [c, d])
        cols.append(poly)
    return IntegerMatrix([[cols[j][i] for j in range(k + 1)] for i in range(k + 1)],
                         cols=k + 1)


@dataclass(frozen=True)
class GroupModule:
    """A module for the standard generators, over Z (base None) or F_p.

    ``actions`` maps generator names ("S", "U", "-I") to square matrices of
    size ``rank``.  Action matrices must be invertible over the base, and
    whenever all three standard names are present the defining relations
    S^4 = I, U^6 = I, S^2 = U^3 = -I are checked.
    """

    rank: int
    actions: dict[str, IntegerMatrix]
    base: int | None = None
    name: str = field(default="module", compare=False)

    def __post_init__(self):
        if self.base is not None and not _is_prime(self.base):
            raise ValueError(f"base must be None or a prime, got {self.base}")
        for gen, mat in self.actions.items():
            if mat.shape != (self.rank, self.rank):
                raise ValueError(f"action of {gen} has shape {mat.shape}")
            det = mat.det()
            if self.base is None:
                if abs(det) != 1:
                    raise ValueError(f"action of {gen} is not invertible over Z")
            elif det % self.base == 0:
                raise ValueError(f"action of {gen} is singular mod {self.base}")
        if {"S", "U", "-I"} <= set(self.actions):
            self._check_relations()

    def _check_relations(self):
        s, u, mi = self.actions["S"], self.actions["U"], self.actions["-I"]
        eye = IntegerMatrix.identity(self.rank)
        pairs = [(s ** 4, eye), (u ** 6, eye), (s ** 2, mi), (u ** 3, mi)]
        for got, want in pairs:
            if self.base is not None:
                got, want = got.mod(self.base), want.mod(self.base)
            if got != want:
                raise ValueError("generator relations fail on this module")

    def action(self, gen: str) -> IntegerMatrix:
        if gen not in self.actions:
            raise KeyError(f"module {self.name!r} carries no action of {gen}")
        return self.actions[gen]

    def reduce(self, p: int) -> "GroupModule":
        """The same module with coefficients reduced mod a prime."""
        if self.base is not None:
            raise ValueError("module is already over a prime field")
        return GroupModule(self.rank,
                           {g: m.mod(p) for g, m in self.actions.items()},
                           base=p, name=f"{self.name} mod {p}")


@lru_cache(maxsize=None)
def _sym_actions(k: int) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    gens = standard_generators()
    return (sym_power_matrix(gens.s, k),
            sym_power_matrix(gens.u, k),
            sym_power_matrix(gens.minus_i, k))


def standard_coefficient_module(name: str, k: int | None = None) -> GroupModule:
    """The coefficient systems used throughout: "sym_k", "f2_squared", "trivial_Z".

    "sym_k" needs the symmetric-power degree k; "f2_squared" is the rank-2
    mod-2 reduction of the standard module; "trivial_Z" is Z with every
    generator acting as the identity.
    """
    if name == "trivial_Z":
        one = IntegerMatrix([[1]])
        return GroupModule(1, {"S": one, "U": one, "-I": one}, name="trivial_Z")
    if name == "sym_k":
        if k is None or k < 0:
            raise ValueError("sym_k needs a non-negative degree k")
        s, u, mi = _sym_actions(k)
        return GroupModule(k + 1, {"S": s, "U": u, "-I": mi}, name=f"sym_{k}")
    if name == "f2_squared":
        return standard_coefficient_module("sym_k", 1).reduce(2)
    raise ValueError(f"unknown coefficient module {name!r}")
