"""Finitely generated modules presented inside a homology group.

A homology group over the coefficient ring is D/(a_1) + ... + D/(a_m) + D^f
with non-unit torsion coefficients a_1 | ... | a_m. A submodule is held as a
list of generator coordinate vectors (torsion residues first, then free
coordinates). Structure, membership, intersection and sum all go through the
lifted lattice in D^{m+f}: the lift of a submodule always contains the
relation vectors a_i * e_i, which makes every question a Smith form or
Diophantine computation.

Generator lists may be redundant; the derived structure is canonical, and
submodule equality is mutual membership of generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exact import ExactMatrix, kernel, snf, solve


@dataclass(frozen=True)
class ModuleStructure:
    """Isomorphism type: D^betti plus one cyclic summand per torsion entry."""

    betti: int
    torsion: tuple

    @property
    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def describe(self, ring=None) -> str:
        if self.is_zero:
            return "0"
        base = f"Z/{ring.p}" if ring is not None and ring.is_field else "Z"
        parts = [f"Z/({a})" for a in self.torsion]
        if self.betti == 1:
            parts.append(base)
        elif self.betti > 1:
            parts.append(f"{base}^{self.betti}")
        return " + ".join(parts)


@dataclass(frozen=True)
class HomologyAmbient:
    """The ambient group a submodule lives in: torsion coefficients + free rank."""

    ring: object
    torsion: tuple
    free_rank: int

    @property
    def length(self) -> int:
        return len(self.torsion) + self.free_rank

    def reduce_vector(self, vec) -> tuple:
        """Canonicalize coordinates: torsion entries mod a_i, free entries as is."""
        if len(vec) != self.length:
            raise ValueError("coordinate length does not match ambient")
        ring = self.ring
        out = []
        for i, a in enumerate(self.torsion):
            out.append(ring.of(vec[i]) % a if not ring.is_field else ring.of(vec[i]))
        for i in range(len(self.torsion), self.length):
            out.append(ring.of(vec[i]))
        return tuple(out)

    def relation_columns(self) -> list:
        """The lifted relation vectors a_i * e_i."""
        cols = []
        for i, a in enumerate(self.torsion):
            v = [0] * self.length
            v[i] = a
            cols.append(v)
        return cols

    def full_structure(self) -> ModuleStructure:
        return ModuleStructure(self.free_rank, self.torsion)


class SubmoduleOfHomology:
    """A submodule of the ambient group, generated by coordinate vectors."""

    def __init__(self, ambient: HomologyAmbient, generators):
        self.ambient = ambient
        gens = []
        seen = set()
        for g in generators:
            rg = ambient.reduce_vector(g)
            if any(x != 0 for x in rg) and rg not in seen:
                seen.add(rg)
                gens.append(rg)
        self.generators = tuple(gens)

    @classmethod
    def zero(cls, ambient: HomologyAmbient) -> "SubmoduleOfHomology":
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient: HomologyAmbient) -> "SubmoduleOfHomology":
        n = ambient.length
        eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(ambient, eye)

    def _lifted_matrix(self) -> ExactMatrix:
        """Generators plus relation vectors, as columns over the ring."""
        n = self.ambient.length
        cols = [list(g) for g in self.generators] + self.ambient.relation_columns()
        data = [[col[i] for col in cols] for i in range(n)]
        return ExactMatrix(self.ambient.ring, n, len(cols), data)

    @cached_property
    def structure(self) -> ModuleStructure:
        return module_structure(self)

    def member(self, vec) -> bool:
        """Whether the class with these coordinates lies in the submodule."""
        target = list(self.ambient.reduce_vector(vec))
        if self.ambient.length == 0:
            return True
        return solve(self._lifted_matrix(), target).solvable

    def intersect(self, other: "SubmoduleOfHomology") -> "SubmoduleOfHomology":
        if other.ambient != self.ambient:
            raise ValueError("ambient groups differ")
        g1 = self._lifted_matrix()
        g2 = other._lifted_matrix()
        paired = g1.hstack(g2.negated())
        gens = []
        for w in kernel(paired):
            x = g1.apply(w[:g1.cols])
            gens.append(x)
        return SubmoduleOfHomology(self.ambient, gens)

    def add(self, other: "SubmoduleOfHomology") -> "SubmoduleOfHomology":
        if other.ambient != self.ambient:
            raise ValueError("ambient groups differ")
        return SubmoduleOfHomology(self.ambient, self.generators + other.generators)

    def contains(self, other: "SubmoduleOfHomology") -> bool:
        return all(self.member(g) for g in other.generators)

    def __eq__(self, other):
        return (isinstance(other, SubmoduleOfHomology)
                and self.ambient == other.ambient
                and self.contains(other) and other.contains(self))

    def __hash__(self):  # pragma: no cover - equality is semantic
        return hash(self.ambient)

    def __repr__(self):
        s = self.structure
        return f"SubmoduleOfHomology({s.describe(self.ambient.ring)}, {len(self.generators)} generators)"


def module_structure(S: SubmoduleOfHomology) -> ModuleStructure:
    """Isomorphism type of the submodule.

    Lift the generators to the free module D^{m+f}, adjoin the relation
    vectors a_i * e_i to get the lattice L, and compute L / R for R the
    relation span: write a basis of L from the Smith form of the lifted
    matrix, express each relation vector in that basis, and read the betti
    number and invariant factors off a second Smith form.
    """
    ambient = S.ambient
    ring = ambient.ring
    m = len(ambient.torsion)
    n = ambient.length
    if n == 0:
        return ModuleStructure(0, ())
    G = S._lifted_matrix()
    s = snf(G)
    r = s.rank
    if m == 0:
        return ModuleStructure(r, ())
    # L has basis c_i = d_i * (P^{-1} e_i), i < r. A relation vector a_j e_j
    # lies in L, so its i-th coordinate is a_j P[i][j] / d_i, and the rows
    # past the rank must vanish.
    rows = []
    for i in range(r):
        d = s.D.data[i][i]
        row = []
        for j, a in enumerate(ambient.torsion):
            row.append(ring.exact_div(ring.mul(a, s.P.data[i][j]), d))
        rows.append(row)
    for i in range(r, n):
        for j, a in enumerate(ambient.torsion):
            if not ring.is_zero(ring.mul(a, s.P.data[i][j])):
                raise AssertionError("relation vector escapes the lifted lattice")
    Y = ExactMatrix(ring, r, m, rows)
    sy = snf(Y)
    torsion = tuple(a for a in sy.invariant_factors if not ring.is_unit(a))
    return ModuleStructure(r - sy.rank, torsion)


def submodule_intersect(S1: SubmoduleOfHomology, S2: SubmoduleOfHomology) -> SubmoduleOfHomology:
    return S1.intersect(S2)


def submodule_member(S: SubmoduleOfHomology, vec) -> bool:
    return S.member(vec)


def submodule_sum(S1: SubmoduleOfHomology, S2: SubmoduleOfHomology) -> SubmoduleOfHomology:
    return S1.add(S2)
