"""Finite groups as explicit multiplication tables; symmetric groups S_n.

Composition convention (load-bearing, do not change): ``(p * q)(i) = p(q(i))``,
i.e. the right factor acts first.  Every derived identity in this package --
minimal transposition words, contraction index sets, cocycle exponent tables --
depends on this choice.  Indices are 0-based internally; cycle notation at I/O
boundaries is 1-based, e.g. ``(1 2)(3 4)``, with fixed points omitted and
``e`` (or ``()``) for the identity.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

ENUMERATION_BOUND = 8  # n! blows up past this; override per call if you must


class Permutation:
    """A permutation of {0..n-1} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def transposition(n: int, a: int, b: int) -> "Permutation":
        if not (0 <= a < n and 0 <= b < n and a != b):
            raise ValueError(f"bad transposition ({a} {b}) for degree {n}")
        images = list(range(n))
        images[a], images[b] = b, a
        return Permutation(images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return cycle_notation(self)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> "OrbitPartition":
        return cycles(self)

    def degree(self) -> int:
        return degree(self)

    def sign(self) -> int:
        return sign(self)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, descending; conjugation invariant."""
        return tuple(sorted((len(b) for b in cycles(self).blocks), reverse=True))

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of {0..n-1} into canonical blocks.

    Blocks are sorted ascending internally and ordered by minimal element;
    this fixes the tensor-factor order everywhere downstream.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(i for b in self.blocks for i in b)
        if seen != list(range(self.n)):
            raise ValueError(f"blocks do not partition 0..{self.n - 1}")
        canonical = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0]))
        if canonical != self.blocks:
            raise ValueError("blocks are not in canonical order (sorted, by minimal element)")

    @staticmethod
    def from_blocks(n: int, blocks) -> "OrbitPartition":
        canonical = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return OrbitPartition(n, canonical)

    def block_index(self) -> dict[int, int]:
        """point -> position of its block in the canonical order."""
        out = {}
        for pos, block in enumerate(self.blocks):
            for i in block:
                out[i] = pos
        return out

    def __len__(self):
        return len(self.blocks)

    def refines(self, coarser: "OrbitPartition") -> bool:
        """True iff every block of `coarser` is a union of blocks of self."""
        if self.n != coarser.n:
            return False
        coarse_of = coarser.block_index()
        return all(len({coarse_of[i] for i in block}) == 1 for block in self.blocks)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p * q)(i) = p(q(i)): apply q first, then p."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    qi = q.images
    pi = p.images
    return Permutation(tuple(pi[qi[i]] for i in range(p.n)))


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """g h g^-1; relabels h's cycles by g, preserving cycle type."""
    return compose(compose(g, h), g.inverse())


def commutator(g: Permutation, h: Permutation) -> Permutation:
    return compose(compose(g, h), compose(g.inverse(), h.inverse()))


def cycles(p: Permutation) -> OrbitPartition:
    """Orbits of <p>, fixed points included as singletons."""
    seen = [False] * p.n
    blocks = []
    for start in range(p.n):
        if seen[start]:
            continue
        block = []
        i = start
        while not seen[i]:
            seen[i] = True
            block.append(i)
            i = p.images[i]
        blocks.append(tuple(sorted(block)))
    return OrbitPartition(p.n, tuple(blocks))


def degree(p: Permutation) -> int:
    """|p| = n - (number of cycles) = minimal transposition word length."""
    return p.n - len(cycles(p).blocks)


def sign(p: Permutation) -> int:
    return -1 if degree(p) % 2 else 1


def group_orbits(gens, n: int | None = None) -> OrbitPartition:
    """Orbits of the group generated by `gens`, via union-find over images."""
    gens = list(gens)
    if not gens:
        if n is None:
            raise ValueError("group_orbits needs a degree when the generator list is empty")
    else:
        degrees = {g.n for g in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators of mixed degree: {sorted(degrees)}")
        if n is not None and n != gens[0].n:
            raise ValueError(f"degree {n} does not match generators of degree {gens[0].n}")
        n = gens[0].n
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g.images[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return OrbitPartition.from_blocks(n, groups.values())


def is_transversal(p: Permutation, q: Permutation) -> bool:
    """True iff |pq| = |p| + |q| (product incurs no contraction)."""
    return degree(compose(p, q)) == degree(p) + degree(q)


def enumerate_sn(n: int, bound: int = ENUMERATION_BOUND) -> list[Permutation]:
    """All of S_n in lexicographic one-line order (identity first)."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n > bound:
        raise ValueError(f"S_{n} enumeration exceeds the configured bound {bound}")
    return [Permutation(images) for images in itertools.permutations(range(n))]


def transpositions(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, a, b) for a in range(n) for b in range(a + 1, n)]


def conjugacy_classes(n: int, bound: int = ENUMERATION_BOUND) -> list[list[Permutation]]:
    """Classes of S_n keyed by cycle type, ordered by cycle type."""
    by_type: dict[tuple[int, ...], list[Permutation]] = {}
    for p in enumerate_sn(n, bound):
        by_type.setdefault(p.cycle_type(), []).append(p)
    return [by_type[t] for t in sorted(by_type)]


# -- cycle notation I/O ----------------------------------------------------

def cycle_notation(p: Permutation) -> str:
    """1-based cycle string, fixed points omitted; 'e' for the identity."""
    parts = []
    for block in cycles(p).blocks:
        if len(block) == 1:
            continue
        cyc = [block[0]]
        i = p.images[block[0]]
        while i != block[0]:
            cyc.append(i)
            i = p.images[i]
        parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse '(1 2)(3 4)'-style input (1-based); 'e', '()' and '' mean identity."""
    s = text.strip()
    if s in ("e", "()", ""):
        return Permutation.identity(n)
    consumed = _CYCLE_RE.sub("", s).strip()
    if consumed:
        raise ValueError(f"unparseable cycle notation: {text!r}")
    images = list(range(n))
    # disjointness is enforced; right-to-left application order would only
    # matter for overlapping cycles
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(s):
        points = [int(tok) for tok in body.replace(",", " ").split()]
        if not points:
            continue
        if any(not 1 <= pt <= n for pt in points):
            raise ValueError(f"cycle point out of range 1..{n} in {text!r}")
        zero_based = [pt - 1 for pt in points]
        if len(set(zero_based)) != len(zero_based) or seen.intersection(zero_based):
            raise ValueError(f"cycles are not disjoint in {text!r}")
        seen.update(zero_based)
        for a, b in zip(zero_based, zero_based[1:] + zero_based[:1]):
            images[a] = b
    return Permutation(images)


# -- explicit multiplication tables ----------------------------------------

class FiniteGroup:
    """A finite group given by its multiplication table over 0..order-1."""

    def __init__(self, labels, table, validate: bool = True, assoc_bound: int = 200):
        self.labels = list(labels)
        self.order = len(self.labels)
        self.table = [list(row) for row in table]
        if len(self.table) != self.order or any(len(r) != self.order for r in self.table):
            raise ValueError("multiplication table shape does not match the label count")
        self.identity = self._find_identity()
        self.inverse = self._find_inverses()
        self.perms: list[Permutation] | None = None  # set by symmetric()
        if validate:
            self._validate(assoc_bound)

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][g] == g and self.table[g][e] == g for g in range(self.order)):
                return e
        raise ValueError("multiplication table has no identity element")

    def _find_inverses(self) -> list[int]:
        inv = [-1] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.table[g][h] == self.identity and self.table[h][g] == self.identity:
                    inv[g] = h
                    break
            if inv[g] < 0:
                raise ValueError(f"element {self.labels[g]} has no inverse")
        return inv

    def _validate(self, assoc_bound: int):
        n = self.order
        for g in range(n):
            if sorted(self.table[g]) != list(range(n)) or sorted(r[g] for r in self.table) != list(range(n)):
                raise ValueError(f"table row/column for {self.labels[g]} is not a bijection")
        if n <= assoc_bound:
            t = self.table
            for g in range(n):
                tg = t[g]
                for h in range(n):
                    tgh = t[tg[h]]
                    th = t[h]
                    for k in range(n):
                        if tgh[k] != tg[th[k]]:
                            raise ValueError(
                                f"table is not associative at "
                                f"({self.labels[g]}, {self.labels[h]}, {self.labels[k]})"
                            )

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1 by table lookups."""
        return self.table[self.table[g][h]][self.inverse[g]]

    def commutator(self, g: int, h: int) -> int:
        return self.table[self.conj(g, h)][self.inverse[h]]

    def elements(self) -> range:
        return range(self.order)

    def conjugacy_classes(self) -> list[list[int]]:
        """Classes as index lists, each sorted, ordered by minimal element."""
        remaining = set(range(self.order))
        classes = []
        while remaining:
            g = min(remaining)
            cls = sorted({self.conj(k, g) for k in range(self.order)})
            classes.append(cls)
            remaining.difference_update(cls)
        return classes

    def centralizer(self, g: int) -> list[int]:
        return [h for h in range(self.order) if self.table[g][h] == self.table[h][g]]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no group element labelled {label!r}")

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGroup)
            and self.labels == other.labels
            and self.table == other.table
        )

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


@lru_cache(maxsize=None)
def symmetric_group(n: int, bound: int = ENUMERATION_BOUND) -> FiniteGroup:
    """S_n as an explicit table; element order matches enumerate_sn(n)."""
    perms = enumerate_sn(n, bound)
    index = {p.images: i for i, p in enumerate(perms)}
    table = [[index[compose(p, q).images] for q in perms] for p in perms]
    # associator scan is cubic; past order 200 trust composition-by-construction
    group = FiniteGroup([cycle_notation(p) for p in perms], table, assoc_bound=200)
    group.perms = perms
    return group
