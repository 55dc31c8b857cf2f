"""Combinatorial operators on finite pointed levels.

An operator from degree ``k`` to degree ``n`` is a list of ``k`` pairwise
disjoint subsets ("pieces") of ``{1..n}``.  It encodes exactly the pointed map
``n⁺ → k⁺`` sending ``j`` to the unique ``i`` whose piece contains ``j`` (and
to 0 when no piece does), so there are ``(k+1)ⁿ`` operators ``k → n``.

Operators compose like relations-of-pieces; under the encoding this is
composition of the underlying pointed maps in the opposite order.  Functors on
levels in this library are stored covariantly over pointed maps, so an
operator ``k → n`` moves level-``n`` data to level-``k`` data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DegreeMismatch
from .pointed import FinPointedSet, PointedMap, map_space, smash_map


@dataclass(frozen=True)
class GammaOperator:
    dom: int
    cod: int
    pieces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.pieces) != self.dom:
            raise DegreeMismatch("need one piece per domain index")
        seen: set[int] = set()
        for p in self.pieces:
            if tuple(sorted(p)) != p:
                raise ValueError("pieces must be sorted tuples")
            for j in p:
                if not 1 <= j <= self.cod:
                    raise ValueError(f"piece entry {j} outside 1..{self.cod}")
                if j in seen:
                    raise ValueError(f"pieces must be disjoint; {j} repeats")
                seen.add(j)

    def underlying(self) -> PointedMap:
        """The pointed map ``cod⁺ → dom⁺`` this operator encodes."""
        table = [0] * (self.cod + 1)
        for i, piece in enumerate(self.pieces, start=1):
            for j in piece:
                table[j] = i
        return PointedMap(FinPointedSet(self.cod), FinPointedSet(self.dom), tuple(table))

    def is_covering(self) -> bool:
        """Do the pieces exhaust ``{1..cod}``?"""
        return sum(len(p) for p in self.pieces) == self.cod

    def has_fat_piece(self) -> bool:
        return any(len(p) >= 2 for p in self.pieces)

    def is_invertible(self) -> bool:
        return (
            self.dom == self.cod
            and self.is_covering()
            and not self.has_fat_piece()
        )

    def __repr__(self):
        return f"GammaOperator({self.dom}->{self.cod}, {[list(p) for p in self.pieces]})"


def operator_from_map(f: PointedMap) -> GammaOperator:
    """Inverse of :meth:`GammaOperator.underlying`."""
    k, n = f.cod.size, f.dom.size
    buckets: list[list[int]] = [[] for _ in range(k)]
    for j in f.dom.nonbase():
        v = f(j)
        if v:
            buckets[v - 1].append(j)
    return GammaOperator(k, n, tuple(tuple(b) for b in buckets))


def compose_operators(psi: GammaOperator, phi: GammaOperator) -> GammaOperator:
    """``psi`` then ``phi``:  l → k → n  gives  l → n.

    The j-th piece of the composite is the union of the ``phi`` pieces named
    by the j-th piece of ``psi``.
    """
    if psi.cod != phi.dom:
        raise DegreeMismatch("operator composition mismatch")
    merged = tuple(
        tuple(sorted(itertools.chain.from_iterable(phi.pieces[i - 1] for i in piece)))
        for piece in psi.pieces
    )
    return GammaOperator(psi.dom, phi.cod, merged)


def smash_operators(a: GammaOperator, b: GammaOperator) -> GammaOperator:
    """Smash of operators, via the lexicographic pairing on underlying maps."""
    return operator_from_map(smash_map(a.underlying(), b.underlying()))


def enumerate_operators(k: int, n: int) -> list[GammaOperator]:
    """All operators ``k → n``, in the index order of the hom space ``n⁺ → k⁺``."""
    H = map_space(FinPointedSet(n), FinPointedSet(k))
    return [operator_from_map(f) for f in H.maps()]


def operator_index(op: GammaOperator) -> int:
    H = map_space(FinPointedSet(op.cod), FinPointedSet(op.dom))
    return H.index_of(op.underlying())


def operator_at(k: int, n: int, idx: int) -> GammaOperator:
    H = map_space(FinPointedSet(n), FinPointedSet(k))
    return operator_from_map(H.map_at(idx))
