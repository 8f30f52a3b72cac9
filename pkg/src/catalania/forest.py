"""Ordered rooted trees and forests: exhaustive generators and text codec.

Generators enumerate in a fixed canonical order (child-count splits in
lexicographic order, subtrees left to right), so their output lists are
stable golden-test material.  Each generator knows its own cardinality in
closed form and refuses, with that estimate, to materialize more than the
CATALANIA_MAX_STRUCTS budget (default 5,000,000).

Text encoding, bit-exact::

    forest := tree (";" tree)* | ""
    tree   := "o" | "(" tree+ ")"

A leaf is "o"; an internal vertex wraps the concatenation of its children
in parentheses; components are joined by ";".
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .counting import VecProfile, catalan_gen, catalan_vector
from .exact import check_nat

MAX_STRUCTS_ENV = "CATALANIA_MAX_STRUCTS"
DEFAULT_MAX_STRUCTS = 5_000_000


class EnumerationBudgetError(ValueError):
    """Enumeration would materialize more structures than the budget allows."""

    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"enumeration would produce {estimate} structures, over the "
            f"limit of {budget} (set {MAX_STRUCTS_ENV} to raise it)"
        )


def enumeration_budget() -> int:
    """Current structure budget, from CATALANIA_MAX_STRUCTS or the default."""
    raw = os.environ.get(MAX_STRUCTS_ENV)
    if raw is None:
        return DEFAULT_MAX_STRUCTS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_STRUCTS_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{MAX_STRUCTS_ENV} must be positive, got {value}")
    return value


def check_budget(estimate: Fraction | int) -> None:
    """Raise EnumerationBudgetError if an exact count exceeds the budget."""
    budget = enumeration_budget()
    if estimate > budget:
        raise EnumerationBudgetError(int(estimate), budget)


# ---------------------------------------------------------------------------
# Data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tree:
    """Ordered rooted tree; a vertex with no children is a leaf."""

    children: tuple["Tree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


LEAF = Tree()


@dataclass(frozen=True)
class Forest:
    """Ordered sequence of trees; the component count is gamma (may be 0).

    All component roots sit on depth 0; children of depth-d vertices sit on
    depth d+1.  Left-to-right order inside a depth is component-major.
    """

    trees: tuple[Tree, ...] = ()

    @property
    def gamma(self) -> int:
        return len(self.trees)


@dataclass(frozen=True, order=True)
class VertexAddr:
    """Address of a vertex: component index plus child-index path from the
    component root.  Tuple ordering of (component, path) is exactly the
    left-to-right order inside a fixed depth.
    """

    component: int
    path: tuple[int, ...] = field(default=())

    @property
    def depth(self) -> int:
        return len(self.path)


def iter_vertices(forest: Forest) -> Iterator[tuple[VertexAddr, Tree]]:
    """All vertices in component-major preorder."""

    def walk(node: Tree, comp: int, path: tuple[int, ...]):
        yield VertexAddr(comp, path), node
        for i, child in enumerate(node.children):
            yield from walk(child, comp, path + (i,))

    for comp, tree in enumerate(forest.trees):
        yield from walk(tree, comp, ())


def count_leaves(forest: Forest) -> int:
    """Number of childless vertices of the forest."""
    return sum(1 for _, node in iter_vertices(forest) if node.is_leaf)


def count_internal(forest: Forest) -> int:
    """Number of vertices with outdegree >= 1."""
    return sum(1 for _, node in iter_vertices(forest) if not node.is_leaf)


def leaf_addresses(forest: Forest) -> list[VertexAddr]:
    """Addresses of all leaves, in component-major preorder."""
    return [addr for addr, node in iter_vertices(forest) if node.is_leaf]


def level_structure(forest: Forest) -> list[list[tuple[VertexAddr, Tree]]]:
    """Vertices grouped by depth, each level in left-to-right order.

    Preorder within a component lists a level's vertices left to right, and
    components are walked in order, so plain append order is correct.
    """
    levels: list[list[tuple[VertexAddr, Tree]]] = []
    for addr, node in iter_vertices(forest):
        depth = addr.depth
        while len(levels) <= depth:
            levels.append([])
        levels[depth].append((addr, node))
    return levels


def subtree_at(forest: Forest, addr: VertexAddr) -> Tree:
    """The subtree rooted at addr; raises if the address does not exist."""
    try:
        node = forest.trees[addr.component]
        for i in addr.path:
            node = node.children[i]
    except IndexError:
        raise ValueError(f"no vertex at {addr}") from None
    return node


def replace_at(forest: Forest, addr: VertexAddr, new: Tree) -> Forest:
    """Forest with the subtree at addr swapped for ``new``."""

    def rebuild(node: Tree, path: tuple[int, ...]) -> Tree:
        if not path:
            return new
        i = path[0]
        if i >= len(node.children):
            raise ValueError(f"no vertex at {addr}")
        kids = list(node.children)
        kids[i] = rebuild(kids[i], path[1:])
        return Tree(tuple(kids))

    if addr.component >= len(forest.trees):
        raise ValueError(f"no vertex at {addr}")
    trees = list(forest.trees)
    trees[addr.component] = rebuild(trees[addr.component], addr.path)
    return Forest(tuple(trees))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head, *rest)


def _check_arity(beta: int) -> int:
    if not isinstance(beta, int) or isinstance(beta, bool) or beta < 1:
        raise ValueError(f"beta must be an integer >= 1, got {beta!r}")
    return beta


@lru_cache(maxsize=None)
def _kary_trees(beta: int, n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (LEAF,)
    out: list[Tree] = []
    for split in compositions(n - 1, beta):
        for kids in itertools.product(*(_kary_trees(beta, m) for m in split)):
            out.append(Tree(kids))
    return tuple(out)


def generate_kary(beta: int, n: int) -> list[Tree]:
    """All trees whose internal vertices have outdegree exactly ``beta``,
    with exactly ``n`` internal vertices, in canonical order."""
    _check_arity(beta)
    check_nat(n)
    check_budget(catalan_gen(n, beta, 1))
    return list(_kary_trees(beta, n))


def generate_forests(beta: int, n: int, gamma: int) -> list[Forest]:
    """All gamma-component ordered forests of beta-ary trees with ``n``
    internal vertices in total, in canonical order."""
    _check_arity(beta)
    check_nat(n)
    check_nat(gamma, "gamma")
    check_budget(catalan_gen(n, beta, gamma))
    out: list[Forest] = []
    for split in compositions(n, gamma):
        for trees in itertools.product(*(_kary_trees(beta, m) for m in split)):
            out.append(Forest(trees))
    return out


def _vector_boxes(vec: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All vectors 0 <= u <= vec coordinate-wise, lexicographic."""
    return itertools.product(*(range(v + 1) for v in vec))


def _vector_compositions(vec: tuple[int, ...], parts: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Splits of ``vec`` into ``parts`` ordered vector summands, lexicographic."""
    if parts == 0:
        if not any(vec):
            yield ()
        return
    if parts == 1:
        yield (vec,)
        return
    for head in _vector_boxes(vec):
        rest_vec = tuple(v - h for v, h in zip(vec, head))
        for rest in _vector_compositions(rest_vec, parts - 1):
            yield (head, *rest)


@lru_cache(maxsize=None)
def _mixed_trees(counts: tuple[int, ...], p: tuple[int, ...]) -> tuple[Tree, ...]:
    if not any(counts):
        return (LEAF,)
    out: list[Tree] = []
    for j, pj in enumerate(p):
        if counts[j] == 0:
            continue
        remaining = tuple(c - 1 if i == j else c for i, c in enumerate(counts))
        for split in _vector_compositions(remaining, pj):
            for kids in itertools.product(*(_mixed_trees(s, p) for s in split)):
                out.append(Tree(kids))
    return tuple(out)


def generate_mixed_forests(profile: VecProfile, gamma: int) -> list[Forest]:
    """All gamma-component ordered forests with exactly profile.n[j] internal
    vertices of outdegree profile.p[j] and every other vertex a leaf."""
    check_nat(gamma, "gamma")
    check_budget(catalan_vector(profile, gamma))
    out: list[Forest] = []
    for split in _vector_compositions(profile.n, gamma):
        for trees in itertools.product(*(_mixed_trees(s, profile.p) for s in split)):
            out.append(Forest(trees))
    return out


# ---------------------------------------------------------------------------
# Text codec
# ---------------------------------------------------------------------------

class ForestSyntaxError(ValueError):
    """Malformed forest text; ``position`` is the 0-based offending index."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


def encode_tree(tree: Tree) -> str:
    if tree.is_leaf:
        return "o"
    return "(" + "".join(encode_tree(c) for c in tree.children) + ")"


def encode(forest: Forest) -> str:
    """Parenthesis encoding; the empty forest encodes to ""."""
    return ";".join(encode_tree(t) for t in forest.trees)


def decode(text: str) -> Forest:
    """Parse the parenthesis encoding; inverse of encode on its image."""
    if text == "":
        return Forest(())
    pos = 0

    def parse_tree() -> Tree:
        nonlocal pos
        if pos >= len(text):
            raise ForestSyntaxError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "o":
            pos += 1
            return LEAF
        if ch == "(":
            pos += 1
            kids: list[Tree] = []
            while pos < len(text) and text[pos] in "o(":
                kids.append(parse_tree())
            if pos >= len(text):
                raise ForestSyntaxError("unclosed '('", pos)
            if text[pos] != ")":
                raise ForestSyntaxError(f"unexpected {text[pos]!r}", pos)
            if not kids:
                raise ForestSyntaxError("internal vertex needs at least one child", pos)
            pos += 1
            return Tree(tuple(kids))
        raise ForestSyntaxError(f"unexpected {ch!r}", pos)

    trees = [parse_tree()]
    while pos < len(text):
        if text[pos] != ";":
            raise ForestSyntaxError(f"unexpected {text[pos]!r}", pos)
        pos += 1
        trees.append(parse_tree())
    return Forest(tuple(trees))
