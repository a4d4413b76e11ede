"""Finitely generated permutation groups by full element enumeration.

Groups at desk scale (order up to a configurable cap, default 200 000) are
materialized as explicit element lists via breadth-first closure of the
generators.  Membership, centralizers, normality, cosets and quotients are
then direct scans.  All objects are immutable after construction, so any
operation may run concurrently with any other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .perms import Permutation

DEFAULT_CAP = 200_000


class GroupTooLargeError(RuntimeError):
    """Raised when a closure exceeds the element cap."""


class NotASubgroupError(ValueError):
    pass


class NotNormalError(ValueError):
    pass


def _close(degree: int, gen_images: Sequence[tuple], cap: int) -> list[tuple]:
    """BFS closure of image tuples under right multiplication by generators.

    Deterministic: elements appear in discovery order starting from the
    identity.  Inverses are reached automatically since every generator has
    finite order.
    """
    ident = tuple(range(degree))
    seen = {ident: 0}
    elems = [ident]
    frontier = [ident]
    while frontier:
        new_frontier = []
        for a in frontier:
            for g in gen_images:
                prod = tuple(g[x] for x in a)
                if prod not in seen:
                    seen[prod] = len(elems)
                    elems.append(prod)
                    new_frontier.append(prod)
                    if len(elems) > cap:
                        raise GroupTooLargeError(
                            "group too large for desk-scale enumeration "
                            f"(cap {cap})"
                        )
        frontier = new_frontier
    return elems


class PermGroup:
    """A finite permutation group with its full element list materialized."""

    __slots__ = (
        "degree",
        "generators",
        "elements",
        "_index",
        "_orders",
        "_involutions",
        "_abelian",
    )

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        cap: int = DEFAULT_CAP,
        _elements: Optional[list[Permutation]] = None,
    ):
        if not generators:
            raise ValueError("generator list must be nonempty")
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        if _elements is None:
            images = _close(degree, [g.images for g in generators], cap)
            _elements = [Permutation._make(t) for t in images]
        self.elements = tuple(_elements)
        self._index = {g.images: i for i, g in enumerate(self.elements)}
        self._orders: Optional[tuple[int, ...]] = None
        self._involutions: Optional[tuple[int, ...]] = None
        self._abelian: Optional[bool] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, g: Permutation) -> bool:
        return g.images in self._index

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, g: Permutation) -> int:
        return self._index[g.images]

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order}>"

    # -- cached element statistics -------------------------------------------------

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(g.order() for g in self.elements)
        return self._orders

    def order_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for k in self.element_orders():
            hist[k] = hist.get(k, 0) + 1
        return hist

    def involution_indices(self) -> tuple[int, ...]:
        if self._involutions is None:
            self._involutions = tuple(
                i for i, k in enumerate(self.element_orders()) if k == 2
            )
        return self._involutions

    def exponent_of_prime(self, p: int) -> int:
        e = 0
        n = self.order
        while n % p == 0:
            n //= p
            e += 1
        return e

    def prime_divisors(self) -> list[int]:
        n = self.order
        out = []
        d = 2
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            out.append(n)
        return out

    def is_abelian(self) -> bool:
        if self._abelian is None:
            gens = self.generators
            self._abelian = all(
                a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :]
            )
        return self._abelian

    # -- subgroups -----------------------------------------------------------------

    def subgroup(self, gens: Sequence[Permutation]) -> "PermGroup":
        """Closure of member elements inside this group (shares the degree)."""
        for g in gens:
            if g not in self:
                raise NotASubgroupError(f"element {g.cycle_string()} is not a member")
        if not gens:
            gens = [self.identity]
        return PermGroup(self.degree, list(gens), cap=self.order)

    def trivial_subgroup(self) -> "PermGroup":
        return PermGroup(self.degree, [self.identity])

    def is_subgroup(self, H: "PermGroup") -> bool:
        return H.degree == self.degree and all(h in self for h in H.elements)

    def same_elements(self, H: "PermGroup") -> bool:
        return self.order == H.order and self.is_subgroup(H)

    def conjugate_subgroup(self, H: "PermGroup", g: Permutation) -> "PermGroup":
        gi = g.inverse()
        return self.subgroup([gi * h * g for h in H.generators])

    # -- cosets --------------------------------------------------------------------

    def coset_labels(self, H: "PermGroup") -> tuple[list[int], list[int]]:
        """Label every element with its right-coset Hg.

        Returns (labels, reps): labels[i] is the coset id of elements[i], and
        reps[c] is the element index of the first element found in coset c.
        Computed by orbiting each unseen element under left multiplication by
        the generators of H.
        """
        if not self.is_subgroup(H):
            raise NotASubgroupError("coset space requires a subgroup")
        labels = [-1] * self.order
        reps: list[int] = []
        hgens = [h.images for h in H.generators]
        index = self._index
        elems = self.elements
        for i in range(self.order):
            if labels[i] != -1:
                continue
            cid = len(reps)
            reps.append(i)
            labels[i] = cid
            stack = [i]
            while stack:
                j = stack.pop()
                gj = elems[j].images
                for h in hgens:
                    # left multiplication: h * g
                    k = index[tuple(gj[x] for x in h)]
                    if labels[k] == -1:
                        labels[k] = cid
                        stack.append(k)
        return labels, reps

    def cosets(self, H: "PermGroup") -> list["Coset"]:
        labels, reps = self.coset_labels(H)
        return [Coset(H, self.elements[r]) for r in reps]

    # -- standard subgroup constructions ---------------------------------------------

    def center(self) -> "PermGroup":
        gens = self.generators
        central = [g for g in self.elements if all(g * x == x * g for x in gens)]
        return group_from_elements(self.degree, central)

    def centralizer(self, elems: Iterable[Permutation]) -> "PermGroup":
        elems = list(elems)
        for s in elems:
            if s not in self:
                raise NotASubgroupError("centralizer input must be members")
        found = [g for g in self.elements if all(g * s == s * g for s in elems)]
        return group_from_elements(self.degree, found)

    def normalizer(self, H: "PermGroup") -> "PermGroup":
        if not self.is_subgroup(H):
            raise NotASubgroupError("normalizer input must be a subgroup")
        hgens = H.generators
        found = []
        for g in self.elements:
            gi = g.inverse()
            if all((gi * h * g) in H for h in hgens):
                found.append(g)
        return group_from_elements(self.degree, found)

    def normal_closure(self, seed: Sequence[Permutation]) -> "PermGroup":
        gens = list(seed)
        if not gens:
            return self.trivial_subgroup()
        current = self.subgroup(gens)
        while True:
            extra = []
            for h in current.generators:
                for g in self.generators:
                    c = g.inverse() * h * g
                    if c not in current:
                        extra.append(c)
            if not extra:
                return current
            current = self.subgroup(list(current.generators) + extra)

    def commutator_subgroup(self) -> "PermGroup":
        gens = self.generators
        comms = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
        comms = [c for c in comms if not c.is_identity()]
        return self.normal_closure(comms)

    def is_normal(self, H: "PermGroup") -> bool:
        if not self.is_subgroup(H):
            raise NotASubgroupError("normality test requires a subgroup")
        return all(
            (g.inverse() * h * g) in H for h in H.generators for g in self.generators
        )

    def derived_series(self, cap: int = 20) -> list["PermGroup"]:
        series = [self]
        for _ in range(cap):
            nxt = series[-1].commutator_subgroup()
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
            if nxt.order == 1:
                break
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order == 1

    # -- quotients -----------------------------------------------------------------

    def quotient(self, N: "PermGroup") -> "QuotientGroup":
        if not self.is_normal(N):
            raise NotNormalError("quotient requires a normal subgroup")
        labels, reps = self.coset_labels(N)
        n_cosets = len(reps)
        index = self._index
        elems = self.elements

        def project_images(g: Permutation) -> tuple:
            return tuple(
                labels[index[(elems[r] * g).images]] for r in reps
            )

        qgens = [Permutation._make(project_images(g)) for g in self.generators]
        qgroup = PermGroup(n_cosets, qgens, cap=n_cosets + 1)
        if qgroup.order * N.order != self.order:
            raise AssertionError("quotient order law violated")
        return QuotientGroup(self, N, qgroup, tuple(labels), tuple(reps))


@dataclass(frozen=True)
class Coset:
    """A right coset Hg, held by its subgroup and a representative."""

    subgroup: PermGroup
    representative: Permutation

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coset):
            return NotImplemented
        if self.subgroup is not other.subgroup and not self.subgroup.same_elements(
            other.subgroup
        ):
            return False
        return (self.representative * other.representative.inverse()) in self.subgroup

    def __hash__(self) -> int:
        # canonical form: minimal image tuple over the coset
        return hash(min((h * self.representative).images for h in self.subgroup))

    def members(self) -> list[Permutation]:
        return [h * self.representative for h in self.subgroup]


@dataclass(frozen=True)
class QuotientGroup:
    """A parent group acting on the right cosets of a normal subgroup."""

    parent: PermGroup
    normal: PermGroup
    group: PermGroup
    labels: tuple[int, ...]
    reps: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.group.order

    def project(self, g: Permutation) -> Permutation:
        """Image of a parent element in the coset action."""
        if g not in self.parent:
            raise NotASubgroupError("cannot project a non-member")
        parent = self.parent
        return Permutation._make(
            tuple(
                self.labels[parent.index_of(parent.elements[r] * g)]
                for r in self.reps
            )
        )


def generate(degree: int, gens: Sequence[Permutation], cap: int = DEFAULT_CAP) -> PermGroup:
    """Materialize the group generated by the given permutations."""
    return PermGroup(degree, gens, cap=cap)


def group_from_elements(degree: int, elems: Iterable[Permutation]) -> PermGroup:
    """Build a PermGroup from a closed element set, picking a small generating set.

    Deterministic: candidate generators are scanned in sorted image order.
    """
    elems = list(elems)
    if not elems:
        raise ValueError("element set must contain at least the identity")
    pool = sorted(elems)
    ident = Permutation.identity(degree)
    gens: list[Permutation] = []
    current = {ident.images}
    for e in pool:
        if e.images not in current:
            gens.append(e)
            current = set(
                _close(degree, [g.images for g in gens], cap=len(elems) + 1)
            )
    if not gens:
        gens = [ident]
    G = PermGroup(degree, gens, cap=len(elems) + 1)
    if G.order != len(elems):
        raise ValueError("input element set is not closed under multiplication")
    return G


def intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    if A.degree != B.degree:
        raise ValueError("degree mismatch")
    common = [g for g in A.elements if g in B]
    return group_from_elements(A.degree, common)


def core_within(G: PermGroup, H: PermGroup) -> PermGroup:
    """Largest subgroup of H normal in G (iterated K := K ∩ K^g over generators)."""
    K = H
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            gi = g.inverse()
            kept = [k for k in K.elements if (gi * k * g) in K]
            if len(kept) < K.order:
                K = group_from_elements(G.degree, kept)
                changed = True
    return K
