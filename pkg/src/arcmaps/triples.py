"""Arc-transitive generating data: regular triples, reversing triples, rotary pairs.

A regular triple (x, y, z) is three involutions generating G with x, z a
commuting distinct pair (so <x, z> is the Klein group); a reversing triple
drops the commuting condition; a rotary pair (alpha, z) is a generating pair
whose second entry is an involution.  Existence searches are exhaustive and
deterministic: candidates are scanned in element-enumeration order, symmetric
candidates are pruned, and the generation test exits early once a closure
passes half the group order (a proper subgroup has index at least 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .groups import NotASubgroupError, NotNormalError, PermGroup
from .perms import Permutation
from .structure import is_cyclic, is_dihedral

KINDS = ("regular", "reversing", "rotary")


class LemmaViolationError(AssertionError):
    """A quotient of a triple landed outside every branch allowed by theory."""


@dataclass(frozen=True)
class GeneratingTriple:
    """Generating data of one of the three kinds, tied to its group."""

    kind: str  # "regular" | "reversing" | "rotary"
    elements: tuple[Permutation, ...]
    group: PermGroup

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        want = 2 if self.kind == "rotary" else 3
        if len(self.elements) != want:
            raise ValueError(f"{self.kind} data needs {want} elements")

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "elements": [g.cycle_string() for g in self.elements],
            "group_order": self.group.order,
        }


def generates(G: PermGroup, elems: Sequence[Permutation]) -> bool:
    """Closure test <elems> == G with early exit above |G| / 2."""
    half = G.order // 2
    index = G._index
    seen = {G.identity.images}
    frontier = [G.identity.images]
    gen_images = [e.images for e in elems]
    count = 1
    while frontier:
        new_frontier = []
        for a in frontier:
            for g in gen_images:
                prod = tuple(g[x] for x in a)
                if prod not in seen:
                    if prod not in index:
                        raise NotASubgroupError("element outside the ambient group")
                    seen.add(prod)
                    new_frontier.append(prod)
                    count += 1
                    if count > half:
                        return True
        frontier = new_frontier
    return count == G.order


def check_triple(G: PermGroup, candidate: Sequence[Permutation], kind: str) -> bool:
    """Do the elements satisfy the kind's defining conditions in G?"""
    for g in candidate:
        if g not in G:
            raise NotASubgroupError(f"{g.cycle_string()} is not a member")
    if kind == "rotary":
        alpha, z = candidate
        return z.order() == 2 and generates(G, [alpha, z])
    x, y, z = candidate
    if not (x.order() == y.order() == z.order() == 2):
        return False
    if kind == "regular" and (x == z or x * z != z * x):
        return False
    return generates(G, [x, y, z])


def count_involutions(G: PermGroup) -> int:
    return len(G.involution_indices())


def find_any(G: PermGroup, kind: str) -> Optional[GeneratingTriple]:
    """First valid data of the kind in the deterministic scan order, if any."""
    if kind == "regular":
        got = _find_regular(G)
    elif kind == "reversing":
        got = _find_reversing(G)
    elif kind == "rotary":
        got = _find_rotary(G)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if got is None:
        return None
    return GeneratingTriple(kind, got, G)


def exists(G: PermGroup, kind: str) -> bool:
    return find_any(G, kind) is not None


def search_space_size(G: PermGroup, kind: str) -> int:
    """Cardinality of the raw candidate space the exhaustive scan covers."""
    inv = len(G.involution_indices())
    if kind == "rotary":
        return G.order * inv
    return inv**3


def exhaustive_search_count(G: PermGroup, kind: str) -> tuple[Optional[tuple], int]:
    """Unpruned scan over the whole raw candidate space, counting every candidate.

    Slower than find_any (no symmetry pruning, no early stop), but the count
    of examined candidates equals search_space_size exactly, which is the
    certificate a non-existence claim wants.  Returns (first witness, count).
    """
    elems = G.elements
    inv = G.involution_indices()
    examined = 0
    witness = None
    if kind == "rotary":
        for alpha in elems:
            for k in inv:
                examined += 1
                if witness is None and generates(G, [alpha, elems[k]]):
                    witness = (alpha, elems[k])
        return witness, examined
    for i in inv:
        x = elems[i]
        for j in inv:
            y = elems[j]
            for k in inv:
                z = elems[k]
                examined += 1
                if witness is not None:
                    continue
                if kind == "regular" and (i == k or x * z != z * x):
                    continue
                if generates(G, [x, y, z]):
                    witness = (x, y, z)
    return witness, examined


def _find_regular(G) -> Optional[tuple]:
    elems = G.elements
    inv = G.involution_indices()
    # (x, z) and (z, x) give equivalent triples; scan i < k only
    for ii, i in enumerate(inv):
        x = elems[i]
        for k in inv[ii + 1 :]:
            z = elems[k]
            if x * z != z * x:
                continue
            for j in inv:
                y = elems[j]
                if generates(G, [x, y, z]):
                    return (x, y, z)
    return None


def _find_reversing(G) -> Optional[tuple]:
    elems = G.elements
    inv = G.involution_indices()
    # fully symmetric conditions: scan multisets i <= j <= k
    for a, i in enumerate(inv):
        x = elems[i]
        for b in range(a, len(inv)):
            y = elems[inv[b]]
            for c in range(b, len(inv)):
                z = elems[inv[c]]
                if generates(G, [x, y, z]):
                    return (x, y, z)
    return None


def _find_rotary(G) -> Optional[tuple]:
    elems = G.elements
    inv = G.involution_indices()
    # <alpha, z> depends on alpha only through <alpha>: skip repeated cyclic
    # subgroups; the kept representative is the first generator of its
    # subgroup in enumeration order, so first hits agree with the raw scan.
    seen_cyclic: set[frozenset] = set()
    for alpha in elems:
        key = frozenset(_cyclic_images(alpha))
        if key in seen_cyclic:
            continue
        seen_cyclic.add(key)
        for k in inv:
            z = elems[k]
            if generates(G, [alpha, z]):
                return (alpha, z)
    return None


def _cyclic_images(g: Permutation):
    x = g
    out = [g.images]
    while not x.is_identity():
        x = x * g
        out.append(x.images)
    return out


@dataclass(frozen=True)
class QuotientBehavior:
    """How generating data projects to a proper quotient.

    branch is "same-kind" when the projected elements are pairwise distinct
    and still valid data of the same kind, else "collapsed" with the
    degenerate shape recorded (Z2 / dihedral for triples, cyclic for rotary
    pairs).  Any other outcome would contradict the quotient lemma and raises
    LemmaViolationError instead.
    """

    branch: str
    collapsed_shape: Optional[str]
    quotient_order: int
    projected: tuple[str, ...]

    def to_record(self) -> dict:
        return {
            "branch": self.branch,
            "collapsed_shape": self.collapsed_shape,
            "quotient_order": self.quotient_order,
            "projected": list(self.projected),
        }


def quotient_behavior(G: PermGroup, triple: GeneratingTriple, N: PermGroup) -> QuotientBehavior:
    """Project the data to G/N and classify the branch taken."""
    if N.order == G.order:
        raise NotNormalError("quotient behavior needs a proper normal subgroup")
    quot = G.quotient(N)
    Q = quot.group
    imgs = tuple(quot.project(g) for g in triple.elements)
    strs = tuple(g.cycle_string() for g in imgs)

    if triple.kind == "rotary":
        if imgs[1].order() == 2 and check_triple(Q, imgs, "rotary"):
            return QuotientBehavior("same-kind", None, Q.order, strs)
        if is_cyclic(Q):
            return QuotientBehavior("collapsed", "cyclic", Q.order, strs)
        raise LemmaViolationError(
            "rotary pair projected to a non-cyclic quotient without a rotary pair"
        )

    distinct = len({g.images for g in imgs}) == 3
    if distinct and check_triple(Q, imgs, triple.kind):
        return QuotientBehavior("same-kind", None, Q.order, strs)
    if Q.order == 2:
        return QuotientBehavior("collapsed", "Z2", Q.order, strs)
    if is_dihedral(Q):
        return QuotientBehavior("collapsed", "dihedral", Q.order, strs)
    raise LemmaViolationError(
        f"{triple.kind} triple collapsed onto a quotient that is neither Z2 nor dihedral"
    )
