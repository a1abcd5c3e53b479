"""Finite root data in coroot coordinates, with Weyl group enumeration.

The cocharacter lattice is Z^rank with the simple coroots as basis.  A Cartan
table row i lists the pairings of the simple root alpha_i against the basis,
so reflections, dominance and root strings all reduce to integer row sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .laurent import Exp, Mat, apply_mat

WEYL_BOUND = 1152

_CARTAN: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "A4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "B3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "B4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -2), (0, 0, -1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -2, 2)),
    "D4": ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def cartan_types() -> List[str]:
    return sorted(_CARTAN)


@dataclass(frozen=True)
class WeylElem:
    """Group element as an integer matrix on the coroot lattice plus a reduced word."""

    mat: Mat
    word: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def act(self, v: Exp) -> Exp:
        return apply_mat(self.mat, v)

    def __repr__(self) -> str:
        return "s" + "".join(str(i + 1) for i in self.word) if self.word else "e"


def _mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _identity(rank: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


class RootDatum:
    """Cartan table of a fixed finite type together with its Weyl group."""

    def __init__(self, type_name: str) -> None:
        if type_name not in _CARTAN:
            raise ValueError(f"unsupported Cartan type {type_name!r}; have {cartan_types()}")
        self.type_name = type_name
        self.cartan = _CARTAN[type_name]
        self.rank = len(self.cartan)
        self._gen_mats = tuple(self._reflection_mat(i) for i in range(self.rank))
        self._elements: List[WeylElem] | None = None
        self._by_mat: Dict[Mat, WeylElem] = {}

    def _reflection_mat(self, i: int) -> Mat:
        rank = self.rank
        return tuple(
            tuple(int(k == j) - (self.cartan[i][j] if k == i else 0) for j in range(rank))
            for k in range(rank)
        )

    def pairing(self, i: int, v: Exp) -> int:
        """Pairing of the simple root alpha_i with the coroot-lattice vector v."""
        return sum(self.cartan[i][j] * v[j] for j in range(self.rank))

    def reflect(self, i: int, v: Exp) -> Exp:
        return apply_mat(self._gen_mats[i], v)

    def reflection_matrix(self, i: int) -> Mat:
        return self._gen_mats[i]

    def simple_coroot(self, i: int) -> Exp:
        return tuple(int(j == i) for j in range(self.rank))

    def is_dominant(self, v: Exp) -> bool:
        return all(self.pairing(i, v) >= 0 for i in range(self.rank))

    # Weyl group

    def weyl_elements(self) -> List[WeylElem]:
        """All elements, enumerated by length then by word, words reduced."""
        if self._elements is None:
            ident = WeylElem(_identity(self.rank), ())
            seen: Dict[Mat, WeylElem] = {ident.mat: ident}
            frontier = [ident]
            ordered = [ident]
            while frontier:
                nxt: List[WeylElem] = []
                for w in frontier:
                    for i in range(self.rank):
                        mat = _mat_mul(w.mat, self._gen_mats[i])
                        if mat not in seen:
                            elem = WeylElem(mat, w.word + (i,))
                            seen[mat] = elem
                            nxt.append(elem)
                if len(seen) > WEYL_BOUND:
                    raise ValueError("Weyl group larger than the supported bound")
                nxt.sort(key=lambda e: e.word)
                ordered.extend(nxt)
                frontier = nxt
            self._elements = ordered
            self._by_mat = seen
        return self._elements

    def weyl_simple(self, i: int) -> WeylElem:
        self.weyl_elements()
        return self._by_mat[self._gen_mats[i]]

    def weyl_word(self, word: Tuple[int, ...]) -> WeylElem:
        """The element with this word, in its canonical reduced form."""
        mat = _identity(self.rank)
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"generator index {i} out of range")
            mat = _mat_mul(mat, self._gen_mats[i])
        self.weyl_elements()
        return self._by_mat[mat]

    def mul(self, a: WeylElem, b: WeylElem) -> WeylElem:
        self.weyl_elements()
        return self._by_mat[_mat_mul(a.mat, b.mat)]

    def inv(self, w: WeylElem) -> WeylElem:
        return self.weyl_word(tuple(reversed(w.word)))

    def longest_element(self) -> WeylElem:
        return self.weyl_elements()[-1]

    # Roots

    def positive_coroots(self) -> List[Exp]:
        """Coroots with non-negative coordinates, sorted by height then lex."""
        found = {self.simple_coroot(i) for i in range(self.rank)}
        frontier = set(found)
        while frontier:
            nxt = set()
            for v in frontier:
                for i in range(self.rank):
                    img = self.reflect(i, v)
                    pos = all(c >= 0 for c in img)
                    neg = all(c <= 0 for c in img)
                    if pos and img not in found:
                        nxt.add(img)
                    elif not pos and not neg:
                        raise AssertionError("reflection left the root system")
            found |= nxt
            frontier = nxt
        return sorted(found, key=lambda v: (sum(v), v))

    def inversions(self, w: WeylElem) -> List[Exp]:
        """Positive coroots sent to negative ones by w."""
        out = []
        for v in self.positive_coroots():
            img = w.act(v)
            if all(c <= 0 for c in img):
                out.append(v)
        return out

    def coroot_orbit_rep(self, v: Exp) -> int:
        """Index of a simple coroot in the same Weyl orbit."""
        orbit = {v}
        frontier = {v}
        while frontier:
            nxt = set()
            for u in frontier:
                for i in range(self.rank):
                    img = self.reflect(i, u)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.add(img)
            frontier = nxt
        for i in range(self.rank):
            if self.simple_coroot(i) in orbit:
                return i
        raise AssertionError("coroot orbit misses the simple coroots")
