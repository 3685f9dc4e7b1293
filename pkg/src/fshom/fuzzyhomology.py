"""Lattice-valued fuzzy homology of a fuzzy subcomplex.

Built on the reduced chain complex: the value of a chain is the meet of the
values of its supporting simplices, and the value eta_d of a homology class
is the join, over levels in the meet-closed value set L(kappa_d), of those
levels whose constraint system is solvable. The constraint system at level l
asks whether some boundary pushes a representative cycle off every simplex
whose value fails to dominate l; it is a linear Diophantine system in the
boundary coefficients.

Two standing assumptions are enforced at construction: the support of the
subcomplex is the whole complex (arranged by restriction), and 0 is
meet-prime in the value lattice. Without meet-primeness eta_d does not live
on the homology module and no algorithm is provided, so construction is
refused.
"""

from __future__ import annotations

from itertools import combinations

from .exact import ExactMatrix, kernel, solve, ZZ
from .fuzzy import FuzzySubcomplex
from .homology import ClassCoordinates, ReducedChainComplex
from .lattice import LatticeValue, format_value
from .modules import SubmoduleOfHomology


class NotComputableError(RuntimeError):
    """A capability refusal: the inputs are valid but outside what we compute."""


DEFAULT_SUBSET_CAP = 16
DEFAULT_BRUTE_FORCE_CAP = 1 << 20


class FuzzyHomologyContext:
    """Shared state for fuzzy homology queries over one subcomplex and ring."""

    def __init__(self, mu: FuzzySubcomplex, ring=ZZ, subset_cap: int = DEFAULT_SUBSET_CAP):
        if not mu.lattice.zero_is_meet_prime:
            raise NotComputableError(
                "0 is not meet-prime in the value lattice; fuzzy homology is "
                "only computed when a & b = 0 forces a = 0 or b = 0")
        self.mu = mu.restrict_to_support()
        self.lattice = mu.lattice
        self.ring = ring
        self.subset_cap = subset_cap
        self.reduced = ReducedChainComplex(self.mu.complex, ring)
        self._hdl_cache = {}
        self._values = [
            [self.mu.value(s) for s in self.mu.complex.simplices(d)]
            for d in range(self.reduced.top + 1)
        ]

    # -- chain values -------------------------------------------------

    def simplex_values(self, d: int) -> list:
        return list(self._values[d]) if 0 <= d <= self.reduced.top else []

    def kappa(self, d: int, chain) -> LatticeValue:
        """Value of a chain: meet of values over its non-zero coordinates."""
        vals = self._values[d] if 0 <= d <= self.reduced.top else []
        if len(chain) != len(vals):
            raise ValueError("chain length does not match the simplex basis")
        support = [v for c, v in zip(chain, vals) if not self.ring.is_zero(self.ring.of(c))]
        return self.lattice.meet(support)

    def delta_value_set(self, d: int) -> list:
        """Distinct simplex values in degree d, deterministically ordered."""
        return sorted(set(self._values[d]), key=format_value) if 0 <= d <= self.reduced.top else []

    def kappa_value_set(self, d: int) -> list:
        """L(kappa_d): the meet-closure of the non-zero simplex values plus 1."""
        bottom = self.lattice.bottom
        seed = {v for v in self.delta_value_set(d) if v != bottom}
        seed.add(self.lattice.top)
        closed = set(seed)
        frontier = set(seed)
        while frontier:
            fresh = set()
            for a in frontier:
                for b in closed:
                    m = self.lattice.meet([a, b])
                    if m not in closed and m not in fresh:
                        fresh.add(m)
            closed |= fresh
            frontier = fresh
        return sorted(closed, key=format_value)

    # -- constraint systems and level submodules ----------------------

    def index_set(self, d: int, level: LatticeValue) -> tuple:
        """0-based indices of d-simplices whose value does not dominate level."""
        self.lattice._check(level)
        vals = self._values[d] if 0 <= d <= self.reduced.top else []
        return tuple(i for i, v in enumerate(vals) if not self.lattice.leq(level, v))

    def _boundary_block(self, d: int) -> ExactMatrix:
        """(U_d | T_d A_d): the columns spanning the boundaries in degree d."""
        U, T, _, _ = self.reduced.blocks(d)
        ring = self.ring
        scaled = [[ring.mul(T.data[i][j], a) for j, a in enumerate(self.reduced.torsion[d])]
                  for i in range(T.rows)]
        TA = ExactMatrix(ring, T.rows, T.cols, scaled)
        return U.hstack(TA)

    def constraint_system(self, d: int, chain, level: LatticeValue):
        """Matrix and right-hand side of S(chain, I(level))."""
        idx = self.index_set(d, level)
        mat = self._boundary_block(d).take_rows(idx)
        rhs = [self.ring.neg(self.ring.of(chain[i])) for i in idx]
        return mat, rhs

    def is_level_solvable(self, d: int, chain, level: LatticeValue) -> bool:
        mat, rhs = self.constraint_system(d, chain, level)
        if mat.rows == 0:
            return True
        return solve(mat, rhs).solvable

    def hdl_submodule(self, d: int, level: LatticeValue) -> SubmoduleOfHomology:
        """H_d(level): classes with a representative supported on the cut.

        Computed as the projection of the kernel of (U_d | T_d | F_d)
        restricted to the rows of the index set.
        """
        key = (d, level)
        if key in self._hdl_cache:
            return self._hdl_cache[key]
        ambient = self.reduced.ambient(d)
        if not 0 <= d <= self.reduced.top:
            return SubmoduleOfHomology.zero(ambient)
        U, T, _, F = self.reduced.blocks(d)
        G = U.hstack(T).hstack(F)
        idx = self.index_set(d, level)
        restricted = G.take_rows(idx)
        n_U, n_T = U.cols, T.cols
        gens = []
        for w in kernel(restricted):
            gens.append(tuple(w[n_U:n_U + n_T]) + tuple(w[n_U + n_T:]))
        result = SubmoduleOfHomology(ambient, gens)
        self._hdl_cache[key] = result
        return result

    # -- eta values and cuts -------------------------------------------

    def eta_solvable_levels(self, d: int, h: ClassCoordinates) -> list:
        """Levels of L(kappa_d) whose constraint system the class satisfies."""
        z = self.reduced.cycle_of_class(d, h)
        return [lv for lv in self.kappa_value_set(d) if self.is_level_solvable(d, z, lv)]

    def eta_value(self, d: int, h: ClassCoordinates) -> LatticeValue:
        """eta_d of the class: the join of its solvable levels."""
        return self.lattice.join(self.eta_solvable_levels(d, h))

    def eta_cut(self, d: int, level: LatticeValue) -> SubmoduleOfHomology:
        """The cut of eta_d at the level, as a submodule of H_d.

        Union over subsets S of L(kappa_d) with join(S) >= level of the
        intersections of the H_d(s). When the relevant values form a chain
        this collapses to H_d at the smallest value above the level.
        """
        self.lattice._check(level)
        ambient = self.reduced.ambient(d)
        values = self.kappa_value_set(d)
        chain = all(self.lattice.leq(a, b) or self.lattice.leq(b, a)
                    for a, b in combinations(values, 2))
        if chain:
            above = [v for v in values if self.lattice.leq(level, v)]
            if not above:
                return SubmoduleOfHomology.zero(ambient)
            t = above[0]
            for v in above[1:]:
                if self.lattice.leq(v, t):
                    t = v
            return self.hdl_submodule(d, t)
        if len(values) > self.subset_cap:
            raise NotComputableError(
                f"L(kappa_{d}) has {len(values)} values, above the cut cap of "
                f"{self.subset_cap}; query levels individually instead")
        result = SubmoduleOfHomology.zero(ambient)
        for S in self._antichains(values):
            if not self.lattice.leq(level, self.lattice.join(S)):
                continue
            if S:
                inter = self.hdl_submodule(d, S[0])
                for s in S[1:]:
                    inter = inter.intersect(self.hdl_submodule(d, s))
            else:
                inter = SubmoduleOfHomology.full(ambient)
            result = result.add(inter)
        return result

    def _antichains(self, values):
        """All antichain subsets of the values (larger comparable elements
        only shrink an intersection, so they never enlarge the union)."""
        out = [()]
        for i, v in enumerate(values):
            extended = []
            for S in out:
                if all(not self.lattice.leq(v, s) and not self.lattice.leq(s, v) for s in S):
                    extended.append(S + (v,))
            out.extend(extended)
        return out

    def rank_cut_table(self, d: int, levels) -> dict:
        """Betti number of the eta cut at each requested level."""
        return {lv: self.eta_cut(d, lv).structure.betti for lv in levels}

    # -- brute-force oracle (field coefficients) -----------------------

    def brute_force_eta(self, d: int, h: ClassCoordinates,
                        cap: int = DEFAULT_BRUTE_FORCE_CAP) -> LatticeValue:
        """Join of kappa over every representative of the class.

        Enumerates the whole boundary space, so the coefficient ring must be
        a field with p^rank below the cap. Intended as a test oracle.
        """
        if not self.ring.is_field:
            raise NotComputableError("brute-force enumeration needs field coefficients")
        p = self.ring.p
        U, _, _, _ = self.reduced.blocks(d)
        if p ** U.cols > cap:
            raise NotComputableError(f"boundary space {p}^{U.cols} exceeds the cap {cap}")
        z = self.reduced.cycle_of_class(d, h)
        basis = [U.col(j) for j in range(U.cols)]
        best = []
        coeffs = [0] * len(basis)
        ring = self.ring
        while True:
            b = list(z)
            for c, vec in zip(coeffs, basis):
                if c:
                    for i, x in enumerate(vec):
                        b[i] = ring.add(b[i], ring.mul(c, x))
            best.append(self.kappa(d, b))
            i = 0
            while i < len(coeffs) and coeffs[i] == p - 1:
                coeffs[i] = 0
                i += 1
            if i == len(coeffs):
                break
            coeffs[i] += 1
        return self.lattice.join(best)
