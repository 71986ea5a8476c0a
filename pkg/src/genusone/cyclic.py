"""Cohomology of finite cyclic groups from the 2-periodic resolution.

For Z/m generated by g acting on a module M, the cochain complex

    M --(g-1)--> M --N--> M --(g-1)--> M --N--> ...

with N = 1 + g + ... + g^{m-1} computes H^*(Z/m, M).  The restriction to
the subgroup of index d (generated by g^d) is realized on these complexes
by the chain map which is the identity in even degrees and the partial norm
1 + g + ... + g^{d-1} in odd degrees; ``restriction_cochain_matrix`` returns
those matrices and the chain-map identity is part of the test suite.

The generator matrix only needs g^m = I, not exact order m, so modules on
which the group acts through a quotient are fine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import CochainComplex, FgAbelianGroup, IntegerMatrix, cohomology_at


@dataclass(frozen=True)
class CyclicAction:
    """An action of Z/m on a free module, over Z (base None) or F_p."""

    order: int
    gen: IntegerMatrix
    base: int | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("group order must be positive")
        if self.gen.rows != self.gen.cols:
            raise ValueError("generator action must be square")
        eye = IntegerMatrix.identity(self.rank)
        power = self.gen ** self.order
        if self.base is not None:
            power, eye = power.mod(self.base), eye.mod(self.base)
        if power != eye:
            raise ValueError(f"generator matrix does not satisfy g^{self.order} = I")

    @property
    def rank(self) -> int:
        return self.gen.rows

    def power(self, i: int) -> IntegerMatrix:
        m = self.gen ** (i % self.order)
        return m.mod(self.base) if self.base is not None else m

    def coboundary(self) -> IntegerMatrix:
        out = self.gen - IntegerMatrix.identity(self.rank)
        return out.mod(self.base) if self.base is not None else out

    def norm(self) -> IntegerMatrix:
        total = IntegerMatrix.zeros(self.rank, self.rank)
        power = IntegerMatrix.identity(self.rank)
        for _ in range(self.order):
            total = total + power
            power = power * self.gen
        return total.mod(self.base) if self.base is not None else total


def periodic_complex(action: CyclicAction, top_degree: int) -> CochainComplex:
    """The periodic complex in degrees 0..top_degree.

    Even-degree differentials are g - 1, odd-degree ones are the norm.
    For the trivial group (m = 1) the norm is the identity, which gives the
    correct cohomology M, 0, 0, ...
    """
    if top_degree < 0:
        raise ValueError("top_degree must be non-negative")
    delta = action.coboundary()
    norm = action.norm()
    diffs = [delta if n % 2 == 0 else norm for n in range(top_degree)]
    return CochainComplex([action.rank] * (top_degree + 1), diffs, base=action.base)


def cyclic_cohomology(action: CyclicAction, n: int) -> FgAbelianGroup:
    """H^n(Z/m, M) in canonical form.

    >>> swap = CyclicAction(2, IntegerMatrix([[0, 1], [1, 0]]))
    >>> str(cyclic_cohomology(swap, 2))
    '0'
    >>> reflect = CyclicAction(2, IntegerMatrix([[1, 0], [0, -1]]))
    >>> str(cyclic_cohomology(reflect, 2))
    'Z/2'
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    return cohomology_at(periodic_complex(action, n + 1), n)


def restriction_cochain_matrix(action: CyclicAction, d: int, n: int) -> IntegerMatrix:
    """Degree-n block of the restriction chain map to the index-d subgroup.

    Identity in even degrees, the partial norm 1 + g + ... + g^{d-1} in odd
    degrees.  Together these satisfy restriction o d = d o restriction
    between the period-2 complexes of the group and of the subgroup.
    """
    if d < 1 or action.order % d:
        raise ValueError(f"{d} does not divide the group order {action.order}")
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n % 2 == 0:
        return IntegerMatrix.identity(action.rank)
    total = IntegerMatrix.zeros(action.rank, action.rank)
    power = IntegerMatrix.identity(action.rank)
    for _ in range(d):
        total = total + power
        power = power * action.gen
    return total.mod(action.base) if action.base is not None else total


def subgroup_action(action: CyclicAction, d: int) -> CyclicAction:
    """The induced action of the index-d subgroup, generated by g^d."""
    if d < 1 or action.order % d:
        raise ValueError(f"{d} does not divide the group order {action.order}")
    return CyclicAction(action.order // d, action.power(d), base=action.base)
