"""The canonical 4-element torsor attached to 2-torsion, and a brute-force
1-cocycle solver for small matrix groups.

Everything here is finite: the module is (Z/4)^2 with 16 elements, the
torsor has 4, and the largest group handled by the cocycle solver is
GL_2(Z/4) with 96 elements.  The solver deliberately writes down the full
|G|^2 system of cocycle equations instead of reducing to generators, so
it can serve as an independent check on the resolution-based machinery.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exact_linalg import _is_prime

MODULUS = 4


def _neg(m: tuple) -> tuple:
    return (-m[0] % MODULUS, -m[1] % MODULUS)


def _class_rep(m: tuple) -> tuple:
    """Canonical representative of {m, -m}, the lexicographic minimum."""
    return min(m, _neg(m))


@dataclass(frozen=True)
class TorsorConfiguration:
    """The doubling cover of (Z/4)^2 and its partitions into two sections.

    ``classes`` lists sign-classes of exact-order-4 elements, each named
    by its lexicographically least member.  ``phi`` sends a class to its
    double, a 2:1 map onto the three order-2 elements.  ``elements`` are
    the partitions of ``phi`` into two sections, each encoded by the part
    containing ``classes[0]``.
    """

    module: tuple
    order_four: tuple
    classes: tuple
    two_torsion: tuple
    targets: tuple
    phi: dict
    elements: tuple
    raw_labeling_count: int

    def canonical_part(self, part) -> tuple:
        """Encode a partition, given either part, by the part with classes[0]."""
        part = frozenset(part)
        if self.classes[0] not in part:
            part = frozenset(self.classes) - part
        return tuple(sorted(part))

    def translate_class(self, a: tuple, c: tuple) -> tuple:
        if a not in self.two_torsion:
            raise ValueError(f"{a} is not 2-torsion")
        return _class_rep(((c[0] + a[0]) % MODULUS, (c[1] + a[1]) % MODULUS))

    def translate(self, a: tuple, t: tuple) -> tuple:
        if t not in self.elements:
            raise ValueError(f"{t} is not a torsor element")
        return self.canonical_part(self.translate_class(a, c) for c in t)


def build_canonical_torsor() -> TorsorConfiguration:
    module = tuple((x, y) for x in range(MODULUS) for y in range(MODULUS))
    order_four = tuple(m for m in module if m[0] % 2 or m[1] % 2)
    classes = tuple(sorted({_class_rep(m) for m in order_four}))
    two_torsion = tuple(m for m in module if m[0] % 2 == 0 and m[1] % 2 == 0)
    targets = tuple(t for t in two_torsion if t != (0, 0))
    phi = {c: (2 * c[0] % MODULUS, 2 * c[1] % MODULUS) for c in classes}

    if len(order_four) != 12 or len(classes) != 6 or len(targets) != 3:
        raise AssertionError("doubling-cover counts are off")
    fibers = [tuple(c for c in classes if phi[c] == t) for t in targets]
    if any(len(f) != 2 for f in fibers):
        raise AssertionError("phi is not a 2:1 cover")

    # a section picks one class over each target; the complementary picks
    # form the partner section, and the unordered pair is a torsor element
    raw, elements = 0, set()
    for bits in range(2 ** len(fibers)):
        raw += 1
        part = frozenset(f[(bits >> i) & 1] for i, f in enumerate(fibers))
        complement = frozenset(classes) - part
        if classes[0] not in part:
            part = complement
        elements.add(tuple(sorted(part)))
    config = TorsorConfiguration(module, order_four, classes, two_torsion,
                                 targets, phi, tuple(sorted(elements)), raw)
    if len(config.elements) != 4:
        raise AssertionError("torsor must have 4 elements")
    for a in two_torsion:
        for t in config.elements:
            image = config.translate(a, t)
            if image not in config.elements:
                raise AssertionError("translation left the torsor")
            if sorted(phi[c] for c in image) != list(targets):
                raise AssertionError("translation broke the section property")
    return config


def torsor_translation_orbit(t: tuple, config: TorsorConfiguration | None = None) -> dict:
    """Map each 2-torsion translation to its effect on the element t."""
    config = config or build_canonical_torsor()
    return {a: config.translate(a, t) for a in config.two_torsion}


def torsor_matrix_action(g, config: TorsorConfiguration | None = None) -> dict:
    """The permutation of the torsor induced by g in GL_2(Z/4)."""
    config = config or build_canonical_torsor()
    (a, b), (c, d) = ((x % MODULUS for x in row) for row in g)
    if (a * d - b * c) % 2 == 0:
        raise ValueError("matrix is not invertible mod 4")
    move = lambda m: _class_rep(((a * m[0] + b * m[1]) % MODULUS,
                                 (c * m[0] + d * m[1]) % MODULUS))
    return {t: config.canonical_part(move(cl) for cl in t) for t in config.elements}


def cycle_lengths(perm: dict) -> tuple:
    """Cycle type of a permutation given as a dict, longest first."""
    seen, lengths = set(), []
    for start in perm:
        if start in seen:
            continue
        n, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class TorsorWitness:
    generator: tuple
    permutation: dict
    cycles: tuple

    @property
    def fixed_point_free(self) -> bool:
        return all(image != t for t, image in self.permutation.items())

    @property
    def passed(self) -> bool:
        # a fixed-point-free action means the torsor has no section, which
        # pins its class to the one nonzero element of an order-2 H^1
        return self.fixed_point_free and self.cycles == (4,)


def torsor_nontriviality_witness(config: TorsorConfiguration | None = None) -> TorsorWitness:
    generator = ((1, 1), (0, 1))
    perm = torsor_matrix_action(generator, config)
    return TorsorWitness(generator, perm, cycle_lengths(perm))


@dataclass(frozen=True)
class FiniteGroupData:
    """A finite group as a full multiplication table, acting on F_p^d.

    ``table[i][j]`` is the index of element i times element j; ``action``
    gives one d x d matrix mod p per element.  Construction validates the
    table (identity and inverses in full, associativity on seeded random
    triples) and the action (homomorphism on seeded random pairs).
    """

    elements: tuple
    table: tuple
    action: tuple
    p: int
    identity: int = 0

    def __post_init__(self):
        n = len(self.elements)
        if not _is_prime(self.p):
            raise ValueError("the coefficient field needs a prime p")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("multiplication table has the wrong shape")
        e = self.identity
        if any(self.table[e][j] != j or self.table[j][e] != j for j in range(n)):
            raise ValueError("the designated identity does not act as one")
        for i in range(n):
            if sorted(self.table[i]) != list(range(n)):
                raise ValueError("rows must be permutations (no inverses otherwise)")
            if e not in self.table[i]:
                raise ValueError(f"element {i} has no right inverse")
        rng = random.Random(0)
        for _ in range(min(500, n ** 3)):
            i, j, k = (rng.randrange(n) for _ in range(3))
            if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                raise ValueError("multiplication table is not associative")
        d = len(self.action[0])
        if len(self.action) != n:
            raise ValueError("need one action matrix per element")
        if self.action[e] != tuple(tuple(int(r == c) for c in range(d)) for r in range(d)):
            raise ValueError("identity must act as the identity matrix")
        for _ in range(min(500, n * n)):
            i, j = rng.randrange(n), rng.randrange(n)
            if self._mat_mul(self.action[i], self.action[j]) != self.action[self.table[i][j]]:
                raise ValueError("action is not a homomorphism")

    def _mat_mul(self, x, y):
        d = len(x)
        return tuple(tuple(sum(x[r][m] * y[m][c] for m in range(d)) % self.p
                           for c in range(d)) for r in range(d))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return len(self.action[0])


def gl2_z4_group() -> FiniteGroupData:
    """GL_2(Z/4) by exhaustive enumeration, acting on (Z/2)^2 via reduction."""
    mats = []
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    if (a * d - b * c) % 2:
                        mats.append(((a, b), (c, d)))
    if len(mats) != 96:
        raise AssertionError(f"|GL_2(Z/4)| should be 96, got {len(mats)}")
    index = {m: i for i, m in enumerate(mats)}
    eye = ((1, 0), (0, 1))

    def mul(x, y):
        return tuple(tuple(sum(x[r][m] * y[m][c] for m in range(2)) % 4
                           for c in range(2)) for r in range(2))

    table = tuple(tuple(index[mul(x, y)] for y in mats) for x in mats)
    action = tuple(tuple(tuple(v % 2 for v in row) for row in m) for m in mats)
    return FiniteGroupData(tuple(mats), table, action, 2, identity=index[eye])


def cyclic_group_data(order: int, matrix, p: int) -> FiniteGroupData:
    """Z/order acting on F_p^d through powers of the given matrix."""
    d = len(matrix)
    matrix = tuple(tuple(v % p for v in row) for row in matrix)
    eye = tuple(tuple(int(r == c) for c in range(d)) for r in range(d))
    powers, current = [eye], eye

    def mul(x, y):
        return tuple(tuple(sum(x[r][m] * y[m][c] for m in range(d)) % p
                           for c in range(d)) for r in range(d))

    for _ in range(order - 1):
        current = mul(current, matrix)
        powers.append(current)
    if mul(current, matrix) != eye:
        raise ValueError(f"matrix order does not divide {order}")
    table = tuple(tuple((i + j) % order for j in range(order)) for i in range(order))
    return FiniteGroupData(tuple(range(order)), table, tuple(powers), p)


def _rank_f2(rows) -> int:
    """Rank of a bitmask matrix over F_2, incremental reduction."""
    pivots = {}
    for row in rows:
        while row:
            low = row & -row
            if low not in pivots:
                pivots[low] = row
                break
            row ^= pivots[low]
    return len(pivots)


def _rank_modp(rows, width: int, p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(v - c * w) % p for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def h1_one_cocycles(group: FiniteGroupData) -> int:
    """dim Z^1 - dim B^1 over F_p, from the full |G|^2 system of equations.

    Unknowns are the |G| * d values of a map c: G -> F_p^d; each pair
    (g, h) imposes c(gh) = c(g) + g.c(h).  Coboundaries are the maps
    g |-> (g - 1)v.
    """
    n, d, p = group.order, group.dim, group.p
    width = n * d
    if p == 2:
        rows = []
        for i in range(n):
            act = group.action[i]
            for j in range(n):
                k = group.table[i][j]
                for r in range(d):
                    row = (1 << (k * d + r)) ^ (1 << (i * d + r))
                    for s in range(d):
                        if act[r][s]:
                            row ^= 1 << (j * d + s)
                    rows.append(row)
        dim_z1 = width - _rank_f2(rows)
        brows = []
        for v in range(d):
            row = 0
            for i in range(n):
                act = group.action[i]
                if act[v][v] != 1:
                    row ^= 1 << (i * d + v)
                for r in range(d):
                    if r != v and act[r][v]:
                        row ^= 1 << (i * d + r)
            brows.append(row)
        dim_b1 = _rank_f2(brows)
    else:
        rows = []
        for i in range(n):
            act = group.action[i]
            for j in range(n):
                k = group.table[i][j]
                for r in range(d):
                    coeff = [0] * width
                    coeff[k * d + r] += 1
                    coeff[i * d + r] -= 1
                    for s in range(d):
                        coeff[j * d + s] -= act[r][s]
                    rows.append([v % p for v in coeff])
        dim_z1 = width - _rank_modp(rows, width, p)
        brows = []
        for v in range(d):
            coeff = [0] * width
            for i in range(n):
                act = group.action[i]
                for r in range(d):
                    coeff[i * d + r] = (act[r][v] - int(r == v)) % p
            brows.append(coeff)
        dim_b1 = _rank_modp(brows, width, p)
    return dim_z1 - dim_b1
