"""Cover data: quadratic form, bilinear form, and the congruence coset space.

A cover is a root datum with a degree n, a Weyl-invariant quadratic form Q
given by its values on the simple coroots, and one rank-one marker per node
(kind sl2 or su3, residue field degree d).  The congruence sublattice is cut
out row by row: pairing against an sl2 row must vanish mod n_alpha, against an
su3 row mod 2 n_alpha.  Cosets are keyed by those residues, and the canonical
representative of a coset is its lexicographically least non-negative member.
"""

from __future__ import annotations

import itertools
from math import gcd, lcm
from typing import Dict, List, Tuple

from .laurent import Exp
from .rootdata import RootDatum
from .scalars import SL2, SU3, Scalar


class CoverError(ValueError):
    """Invalid cover configuration."""


Marker = Tuple[str, int]


class CoverStructure:
    def __init__(self, datum: RootDatum, n: int, qform: Tuple[int, ...], markers: Tuple[Marker, ...]) -> None:
        self.datum = datum
        self.n = n
        self.qdiag = tuple(qform)
        self.markers = tuple(markers)
        self._validate_shape()
        self.n_alpha = tuple(n // gcd(n, q) for q in self.qdiag)
        self.moduli = tuple(
            (2 if kind == SU3 else 1) * na for (kind, _), na in zip(self.markers, self.n_alpha)
        )
        self._orbit_cache: Dict[Exp, int] = {}
        self._validate_form()
        self._box = lcm(*self.moduli)
        if self._box ** datum.rank > 2_000_000:
            raise CoverError("coset space too large for this engine")
        self._cosets, self._in_box_lattice = self._scan_box()
        self._rep_by_key = {key: rep for rep, key in self._cosets}
        self._validate_stability()

    # Validation

    def _validate_shape(self) -> None:
        r = self.datum.rank
        if self.n < 1:
            raise CoverError("cover degree must be a positive integer")
        if len(self.qdiag) != r or len(self.markers) != r:
            raise CoverError("need one Q value and one marker per node")
        kinds = {k for k, _ in self.markers}
        if not kinds <= {SL2, SU3}:
            raise CoverError(f"unknown marker kind in {sorted(kinds)}")
        if len(kinds) > 1:
            raise CoverError("mixed sl2/su3 markings are not supported")
        if any(d < 1 for _, d in self.markers):
            raise CoverError("marker degrees must be positive")
        if any(q == 0 for q in self.qdiag):
            raise CoverError("Q must be nonzero on every simple coroot")

    def _validate_form(self) -> None:
        r = self.datum.rank
        c = self.datum.cartan
        for i in range(r):
            for j in range(r):
                if self.qdiag[i] * c[i][j] != self.qdiag[j] * c[j][i]:
                    raise CoverError("Q is not Weyl invariant: symmetry of B fails")
        for i, (kind, _) in enumerate(self.markers):
            if kind == SU3 and any(self.qdiag[i] * c[i][j] % 2 for j in range(r)):
                raise CoverError("an su3 row needs every B entry even; " f"row {i} is odd")
        for v in self.datum.positive_coroots():
            if self.qvalue(v) == 0:
                raise CoverError("Q vanishes on a coroot")
        for j in range(r):
            i = self.orbit_marker_index(self.datum.simple_coroot(j))
            if self.markers[j][1] != self.markers[i][1]:
                raise CoverError("marker degree varies along a Weyl orbit")

    def _validate_stability(self) -> None:
        # The congruence lattice must be stable under every generator; with
        # per-kind row moduli this can fail off the supported grid, so check
        # on a generating set (box multiples of the basis plus the in-box
        # lattice members found during the coset scan).
        probes = [
            tuple(self._box * int(j == i) for j in range(self.datum.rank))
            for i in range(self.datum.rank)
        ] + self._in_box_lattice
        for vec in probes:
            for i in range(self.datum.rank):
                if not self.in_lattice(self.datum.reflect(i, vec)):
                    raise CoverError("congruence lattice is not Weyl stable for this configuration")
        for i, na in enumerate(self.n_alpha):
            vec = tuple(na * int(j == i) for j in range(self.datum.rank))
            if not self.in_lattice(vec):
                raise CoverError("n_alpha multiples of the simple coroots must lie in the lattice")

    # Forms

    def qvalue(self, v: Exp) -> int:
        """The quadratic form on an arbitrary coroot-lattice vector."""
        r = self.datum.rank
        total = sum(self.qdiag[i] * v[i] * v[i] for i in range(r))
        for i in range(r):
            for j in range(i + 1, r):
                total += v[i] * v[j] * self.qdiag[i] * self.datum.cartan[i][j]
        return total

    def bform(self, u: Exp, v: Exp) -> int:
        return sum(u[i] * self.qdiag[i] * self.datum.pairing(i, v) for i in range(self.datum.rank))

    def brow(self, i: int, v: Exp) -> int:
        """B paired against the i-th simple coroot."""
        return self.qdiag[i] * self.datum.pairing(i, v)

    def n_coroot(self, v: Exp) -> int:
        return self.n // gcd(self.n, self.qvalue(v))

    def eps_coroot(self, v: Exp) -> int:
        return -1 if self.n_coroot(v) % 2 else 1

    def orbit_marker_index(self, v: Exp) -> int:
        if v not in self._orbit_cache:
            self._orbit_cache[v] = self.datum.coroot_orbit_rep(v)
        return self._orbit_cache[v]

    def coroot_marker(self, v: Exp) -> Marker:
        return self.markers[self.orbit_marker_index(v)]

    # Congruence lattice and cosets

    def in_lattice(self, v: Exp) -> bool:
        return all(
            self.datum.pairing(i, v) % m == 0 for i, m in enumerate(self.moduli)
        )

    def coset_key(self, v: Exp) -> Tuple[int, ...]:
        """Injective coset invariant: the row residues."""
        return tuple(self.datum.pairing(i, v) % m for i, m in enumerate(self.moduli))

    def _scan_box(self) -> Tuple[List[Tuple[Exp, Tuple[int, ...]]], List[Exp]]:
        # One lex pass over the box; the first vector seen in a coset is that
        # coset's lexicographically least non-negative representative.
        reps: Dict[Tuple[int, ...], Exp] = {}
        members: List[Exp] = []
        zero_key = (0,) * self.datum.rank
        for vec in itertools.product(range(self._box), repeat=self.datum.rank):
            key = self.coset_key(vec)
            if key not in reps:
                reps[key] = vec
            if key == zero_key and any(vec):
                members.append(vec)
        cosets = sorted(((rep, key) for key, rep in reps.items()), key=lambda t: t[0])
        return cosets, members

    def cosets(self) -> List[Tuple[Exp, Tuple[int, ...]]]:
        """(canonical representative, key) pairs, sorted by representative."""
        return self._cosets

    def coset_count(self) -> int:
        return len(self._cosets)

    def coset_rep(self, v: Exp) -> Exp:
        return self._rep_by_key[self.coset_key(v)]

    # Gauss symbols at the cover's modulus

    def gauss(self, kind: str, degree: int, t: int) -> Scalar:
        return Scalar.gauss(kind, self.n, degree, t)


def build_cover(type_name: str, n: int, qform, markers) -> CoverStructure:
    """Construct and fully validate a cover from plain config values."""
    datum = RootDatum(type_name)
    q = tuple(int(x) for x in qform)
    mk = tuple((str(k), int(d)) for k, d in markers)
    return CoverStructure(datum, int(n), q, mk)
