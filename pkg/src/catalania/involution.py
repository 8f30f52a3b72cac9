"""Colored planted forests and the weight-reversing pairing on them.

A colored forest is an ordered forest plus a number of planted roots
(colorable marks sitting above the first component, with no depth of their
own) and a coloring of a subset of leaves and planted roots with colors in
{1..t}.  Internal vertices are never colored.

``classify`` splits the structures with at least one internal vertex or one
colored leaf into two classes by scanning the bottom two levels of the
forest (levels are forest-global, component-major):

* first class: some colored leaf in the bottom two levels has no vertex
  with children anywhere to its left on its level.  The deepest, then
  leftmost, such leaf is the *candidate*.
* second class: no colored leaf on the bottom level, and some internal
  vertex on the level above it has no colored leaf to its left there.  The
  leftmost one is the *incumbent*.

``involute`` promotes a first-class candidate of color j to an internal
vertex by attaching p[j-1] leaf children (erasing its color), and demotes a
second-class incumbent with p[j-1] leaf children back to a colored leaf.
The map is a fixed-point-free involution that swaps the classes and flips
the (-1)**(number of colored objects) weight, so every alternating census
is carried entirely by the *exceptional* structures: those with no colored
leaf and no internal vertex (only planted roots colored).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

from .counting import VecProfile, catalan_gen, catalan_vector, check_outdegrees
from .exact import Rat, binom, check_nat, multinomial
from .forest import (
    LEAF,
    Forest,
    Tree,
    VertexAddr,
    check_budget,
    generate_forests,
    generate_mixed_forests,
    leaf_addresses,
    level_structure,
    replace_at,
    subtree_at,
)

FIRST = "first"
SECOND = "second"
EXCEPTIONAL = "exceptional"


class InvolutionDomainError(ValueError):
    """The pairing was applied to an exceptional structure."""


class StructureError(ValueError):
    """A structure is inconsistent with the declared outdegree classes."""


@dataclass(frozen=True)
class ColoredForest:
    """Forest + planted roots + coloring of leaves and planted roots.

    ``leaf_colors`` maps leaf addresses to colors >= 1 and is stored as a
    tuple of pairs sorted by address; ``root_colors`` maps planted-root
    indices (0 .. planted-1) to colors, sorted by index.  Structures are
    immutable, hashable and compare structurally.
    """

    forest: Forest
    planted: int = 0
    leaf_colors: tuple[tuple[VertexAddr, int], ...] = ()
    root_colors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        check_nat(self.planted, "planted")
        leaf_colors = tuple(sorted(tuple(self.leaf_colors)))
        root_colors = tuple(sorted(tuple(self.root_colors)))
        seen_addrs = set()
        for addr, color in leaf_colors:
            if not subtree_at(self.forest, addr).is_leaf:
                raise StructureError(f"colored vertex {addr} is not a leaf")
            if color < 1:
                raise StructureError(f"colors must be >= 1, got {color}")
            if addr in seen_addrs:
                raise StructureError(f"duplicate color entry for {addr}")
            seen_addrs.add(addr)
        seen_roots = set()
        for idx, color in root_colors:
            if not 0 <= idx < self.planted:
                raise StructureError(f"planted-root index {idx} out of range")
            if color < 1:
                raise StructureError(f"colors must be >= 1, got {color}")
            if idx in seen_roots:
                raise StructureError(f"duplicate color entry for root {idx}")
            seen_roots.add(idx)
        object.__setattr__(self, "leaf_colors", leaf_colors)
        object.__setattr__(self, "root_colors", root_colors)

    @property
    def colored_count(self) -> int:
        return len(self.leaf_colors) + len(self.root_colors)

    def weight(self) -> int:
        return -1 if self.colored_count % 2 else 1

    def colored_leaf_map(self) -> dict[VertexAddr, int]:
        return dict(self.leaf_colors)


@dataclass(frozen=True)
class Classification:
    """Outcome of ``classify``: which class, and the acting vertex."""

    kind: str  # FIRST | SECOND | EXCEPTIONAL
    vertex: Optional[VertexAddr] = None

    @staticmethod
    def first(candidate: VertexAddr) -> "Classification":
        return Classification(FIRST, candidate)

    @staticmethod
    def second(incumbent: VertexAddr) -> "Classification":
        return Classification(SECOND, incumbent)

    @staticmethod
    def exceptional() -> "Classification":
        return Classification(EXCEPTIONAL)


def classify(c: ColoredForest) -> Classification:
    """Assign a colored forest to its class (planted roots play no part)."""
    levels = level_structure(c.forest)
    if not levels:
        return Classification.exceptional()
    colored = {addr for addr, _ in c.leaf_colors}
    bottom = len(levels) - 1

    # First class: deepest-then-leftmost colored leaf in the bottom two
    # levels with no internal vertex anywhere to its left on its level.
    for depth in (bottom, bottom - 1):
        if depth < 0:
            continue
        blocked = False
        for addr, node in levels[depth]:
            if node.children:
                blocked = True
            elif addr in colored and not blocked:
                return Classification.first(addr)

    # Second class: bottom level free of colored leaves, and the leftmost
    # internal vertex one level up has no colored leaf to its left there.
    if bottom >= 1 and not any(addr in colored for addr, _ in levels[bottom]):
        for addr, node in levels[bottom - 1]:
            if node.children:
                return Classification.second(addr)
            if addr in colored:
                break
    return Classification.exceptional()


def involute(c: ColoredForest, p: Sequence[int]) -> ColoredForest:
    """Apply the pairing under outdegree classes ``p`` (scalar mode: [beta]).

    First class: attach p[j-1] leaves to the color-j candidate and erase
    its color.  Second class: delete the incumbent's p[j-1] leaf children
    and color it j.  Raises InvolutionDomainError on exceptional input and
    StructureError if the structure disagrees with ``p``.
    """
    p = check_outdegrees(p)
    cls = classify(c)
    if cls.kind == FIRST:
        addr = cls.vertex
        color = c.colored_leaf_map()[addr]
        if color > len(p):
            raise StructureError(f"color {color} has no outdegree class in {p}")
        grown = replace_at(c.forest, addr, Tree((LEAF,) * p[color - 1]))
        keep = tuple(pair for pair in c.leaf_colors if pair[0] != addr)
        return ColoredForest(grown, c.planted, keep, c.root_colors)
    if cls.kind == SECOND:
        addr = cls.vertex
        node = subtree_at(c.forest, addr)
        degree = len(node.children)
        if degree not in p:
            raise StructureError(f"incumbent outdegree {degree} not among classes {p}")
        if any(not child.is_leaf for child in node.children):
            raise StructureError("incumbent's children must all be leaves")
        color = p.index(degree) + 1
        pruned = replace_at(c.forest, addr, LEAF)
        recolored = c.leaf_colors + ((addr, color),)
        return ColoredForest(pruned, c.planted, recolored, c.root_colors)
    raise InvolutionDomainError(
        "exceptional structure (no colored leaf, no internal vertex) has no partner"
    )


# ---------------------------------------------------------------------------
# Enumeration of colored structures
# ---------------------------------------------------------------------------

def _check_alpha_gamma(alpha: int, gamma: int) -> None:
    check_nat(alpha, "alpha")
    check_nat(gamma, "gamma")
    if gamma < 1 or alpha < gamma:
        raise ValueError(f"need alpha >= gamma >= 1, got alpha={alpha}, gamma={gamma}")


def enumerate_colored(
    beta: int, n_internal: int, n_colored: int, gamma: int, alpha: int
) -> list[ColoredForest]:
    """All (alpha-gamma)-planted beta-ary gamma-component forests with
    ``n_internal`` internal vertices and ``n_colored`` colored objects
    (single color), in deterministic order."""
    _check_alpha_gamma(alpha, gamma)
    check_nat(n_internal, "n_internal")
    check_nat(n_colored, "n_colored")
    planted = alpha - gamma
    slots_per_forest = (beta - 1) * n_internal + alpha
    check_budget(catalan_gen(n_internal, beta, gamma) * binom(slots_per_forest, n_colored))
    out: list[ColoredForest] = []
    for forest in generate_forests(beta, n_internal, gamma):
        slots: list[tuple[str, object]] = [("leaf", a) for a in leaf_addresses(forest)]
        slots += [("root", i) for i in range(planted)]
        for combo in itertools.combinations(slots, n_colored):
            leaf_colors = tuple((slot, 1) for kind, slot in combo if kind == "leaf")
            root_colors = tuple((slot, 1) for kind, slot in combo if kind == "root")
            out.append(ColoredForest(forest, planted, leaf_colors, root_colors))
    return out


def _color_assignments(slot_count: int, marks: tuple[int, ...]) -> Iterator:
    """All ways to pick disjoint index sets of sizes marks[j] from
    range(slot_count); yields tuples of (index, color) pairs."""
    def rec(indices: tuple[int, ...], j: int):
        if j == len(marks):
            yield ()
            return
        for chosen in itertools.combinations(indices, marks[j]):
            rest = tuple(i for i in indices if i not in chosen)
            for tail in rec(rest, j + 1):
                yield tuple((i, j + 1) for i in chosen) + tail

    return rec(tuple(range(slot_count)), 0)


def enumerate_colored_vector(
    profile: VecProfile, marks: Sequence[int], gamma: int, alpha: int
) -> list[ColoredForest]:
    """All planted mixed forests matching ``profile`` with marks[j] objects
    colored j+1 among leaves and planted roots."""
    _check_alpha_gamma(alpha, gamma)
    marks = tuple(marks)
    if len(marks) != profile.t:
        raise ValueError("marks must give one count per outdegree class")
    for m in marks:
        check_nat(m, "marks[j]")
    planted = alpha - gamma
    slot_count = profile.leaf_count(gamma) + planted
    check_budget(catalan_vector(profile, gamma) * multinomial(slot_count, marks))
    out: list[ColoredForest] = []
    for forest in generate_mixed_forests(profile, gamma):
        slots: list[tuple[str, object]] = [("leaf", a) for a in leaf_addresses(forest)]
        slots += [("root", i) for i in range(planted)]
        for assignment in _color_assignments(len(slots), marks):
            leaf_colors = []
            root_colors = []
            for idx, color in assignment:
                kind, slot = slots[idx]
                if kind == "leaf":
                    leaf_colors.append((slot, color))
                else:
                    root_colors.append((slot, color))
            out.append(ColoredForest(forest, planted, tuple(leaf_colors), tuple(root_colors)))
    return out


# ---------------------------------------------------------------------------
# Alternating censuses
# ---------------------------------------------------------------------------

def signed_sum(beta: int, n: int, gamma: int, alpha: int) -> Rat:
    """Sum of weights over all colored structures with n_internal + colored
    = n, computed by enumeration.  Equals (-1)**n * binom(alpha-gamma, n).
    """
    _check_alpha_gamma(alpha, gamma)
    check_nat(n)
    total = 0
    for i in range(n + 1):
        for c in enumerate_colored(beta, n - i, i, gamma, alpha):
            total += c.weight()
    return Fraction(total)


def signed_sum_vector(profile: VecProfile, gamma: int, alpha: int) -> Rat:
    """Sum of weights over all t-colored planted mixed forests with
    class-wise internal + colored counts equal to profile.n, by enumeration.
    Equals (-1)**sum(n) * multinomial(alpha-gamma, n)."""
    _check_alpha_gamma(alpha, gamma)
    total = 0
    for marks in itertools.product(*(range(nj + 1) for nj in profile.n)):
        residual = VecProfile(
            tuple(nj - ij for nj, ij in zip(profile.n, marks)), profile.p
        )
        for c in enumerate_colored_vector(residual, marks, gamma, alpha):
            total += c.weight()
    return Fraction(total)


def exceptional_structures(structures: Iterable[ColoredForest]) -> list[ColoredForest]:
    """The structures with no partner under the pairing."""
    return [c for c in structures if classify(c).kind == EXCEPTIONAL]


# ---------------------------------------------------------------------------
# Generic signed-matching certificate
# ---------------------------------------------------------------------------

def find_matching_violation(
    structures: Sequence[Hashable],
    weight: Callable[[Hashable], int],
    partner: Callable[[Hashable], Hashable],
    klass: Optional[Callable[[Hashable], object]] = None,
) -> Optional[tuple[str, Hashable]]:
    """First reason why ``partner`` fails to be a fixed-point-free,
    weight-reversing involution on the given set, or None if it is one.

    With ``klass`` given, also requires partner to swap the two classes.
    """
    pool = set(structures)
    if len(pool) != len(structures):
        dupe = next(s for s in structures if structures.count(s) > 1)
        return ("duplicate structure", dupe)
    for s in structures:
        t = partner(s)
        if t not in pool:
            return ("partner leaves the set", s)
        if t == s:
            return ("fixed point", s)
        if partner(t) != s:
            return ("not an involution", s)
        if weight(t) != -weight(s):
            return ("weight not reversed", s)
        if klass is not None and klass(t) == klass(s):
            return ("class not swapped", s)
    return None


def check_signed_matching(
    structures: Sequence[Hashable],
    weight: Callable[[Hashable], int],
    partner: Callable[[Hashable], Hashable],
    klass: Optional[Callable[[Hashable], object]] = None,
) -> bool:
    """True iff ``partner`` perfectly matches the set with opposite weights,
    which certifies that the total weight is zero."""
    return find_matching_violation(structures, weight, partner, klass) is None


# ---------------------------------------------------------------------------
# Text encoding (extends the forest grammar)
# ---------------------------------------------------------------------------

def encode_colored(c: ColoredForest, num_colors: int = 1) -> str:
    """Text form: planted prefix "P[k:...]|" then the forest with colored
    leaves as "o*" (single color) or "o*j" (several colors).

    Root color entries are "i" (single color) or "i*j", comma-separated and
    sorted by index.
    """
    colors = c.colored_leaf_map()

    def tree_text(node: Tree, comp: int, path: tuple[int, ...]) -> str:
        if node.is_leaf:
            color = colors.get(VertexAddr(comp, path))
            if color is None:
                return "o"
            return "o*" if num_colors == 1 else f"o*{color}"
        parts = (tree_text(ch, comp, path + (i,)) for i, ch in enumerate(node.children))
        return "(" + "".join(parts) + ")"

    if num_colors == 1:
        roots = ",".join(str(i) for i, _ in c.root_colors)
    else:
        roots = ",".join(f"{i}*{j}" for i, j in c.root_colors)
    body = ";".join(tree_text(t, comp, ()) for comp, t in enumerate(c.forest.trees))
    return f"P[{c.planted}:{roots}]|{body}"
