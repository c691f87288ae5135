"""Red/black edge coloring of labelled rooted trees and its decomposition.

Working from the leaves down to the root, every edge of a tree is marked
red or black by one local rule.  Cutting the red edges leaves a forest of
black components, each a type-A tree (the graft-embedding image), and the
red edges assemble those components into a skeleton tree: every red edge
runs from the *maximum vertex* of the component nearer the root to the
root of the component above it.  That makes the decomposition uniquely
reconstructible, which ``reconstruct`` does.

The coloring rule at a vertex r with child subtrees T_1..T_l (already
colored): let T'_i be the black component at the root of T_i and
b'_i = max(T'_i), indexed so b'_1 < ... < b'_l.  The edges out of r are
red when

    r > b'_1,   or   r < b'_1 and some T_i with i < l is not all black;

otherwise they are black.  The trees whose edges are *all* red admit the
independent recursive characterization implemented in ``is_x_tree``; the
test suite checks the two views agree exhaustively in small arities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maps import is_type_A
from .treebases import RootedTree, canonicalize, iter_rooted_trees


class DecompositionError(ValueError):
    """Internal consistency failure; indicates a coloring bug."""


@dataclass(frozen=True)
class ColoredTree:
    """A canonical rooted tree plus the set of its red edges, each edge a
    (parent label, child label) pair."""

    tree: RootedTree
    red_edges: frozenset

    def sorted_red_edges(self):
        return sorted(self.red_edges)

    def all_red(self) -> bool:
        return len(self.red_edges) == self.tree.size - 1

    def all_black(self) -> bool:
        return not self.red_edges

    def to_text(self) -> str:
        pairs = ",".join("(%d,%d)" % e for e in self.sorted_red_edges())
        return "%s red=[%s]" % (self.tree, pairs)

    def to_json_obj(self):
        return {"tree": str(self.tree),
                "red": [list(e) for e in self.sorted_red_edges()]}


def color_edges(t: RootedTree) -> ColoredTree:
    """Deterministically color the edges of a canonical tree."""
    red = set()

    def walk(node):
        # returns (component max at this root, subtree entirely black?)
        if node.is_leaf:
            return node.label, True
        stats = [walk(c) for c in node.children]
        order = sorted(range(len(stats)), key=lambda i: stats[i][0])
        b1 = stats[order[0]][0]
        r = node.label
        mark_red = r > b1 or any(not stats[i][1] for i in order[:-1])
        if mark_red:
            for c in node.children:
                red.add((r, c.label))
            return r, False
        return stats[order[-1]][0], all(black for _, black in stats)

    walk(t)
    return ColoredTree(tree=t, red_edges=frozenset(red))


@dataclass(frozen=True)
class Decomposition:
    """A tree cut along its red edges.

    ``blocks`` is the label-set partition given by the black components,
    ``components`` the type-A tree on each block, and ``skeleton`` the
    all-red tree obtained by identifying each block with its maximal
    element.  Blocks and components are aligned and sorted by block
    minimum.
    """

    blocks: tuple          # of frozensets
    components: tuple      # of RootedTrees, aligned with blocks
    skeleton: RootedTree

    def component_by_max(self):
        return {max(block): comp for block, comp in zip(self.blocks, self.components)}

    def to_json_obj(self):
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "components": [str(c) for c in self.components],
            "skeleton": str(self.skeleton),
        }


def decompose(t: RootedTree) -> Decomposition:
    """Color, cut, and contract; the output is validated before returning
    (each block of type A, each red edge leaving a block maximum), since
    the coloring is the subtlest algorithm here."""
    colored = color_edges(t)
    red = colored.red_edges

    comp_trees = []

    def component(node):
        # black component rooted here; components cut off by red edges are
        # collected into comp_trees as they are found
        kids = []
        for c in node.children:
            if (node.label, c.label) in red:
                comp_trees.append(component(c))
            else:
                kids.append(component(c))
        return RootedTree(node.label, sorted(kids, key=lambda s: s.min_label))

    comp_trees.append(component(t))

    blocks = []
    comps = []
    for comp in sorted(comp_trees, key=lambda c: c.min_label):
        blocks.append(comp.labels())
        comps.append(comp)

    label_block_max = {}
    for block in blocks:
        m = max(block)
        for lab in block:
            label_block_max[lab] = m

    for p, c in red:
        if p != label_block_max[p]:
            raise DecompositionError(
                "red edge (%d,%d) does not leave its block maximum" % (p, c))
    for comp in comps:
        if not is_type_A(comp):
            raise DecompositionError("black component %s is not of type A" % comp)

    kids = {max(b): [] for b in blocks}
    for p, c in red:
        kids[label_block_max[p]].append(label_block_max[c])

    def grow(rep):
        sub = sorted((grow(k) for k in kids[rep]), key=lambda s: s.min_label)
        return RootedTree(rep, sub)

    skeleton = grow(label_block_max[t.label])
    return Decomposition(blocks=tuple(blocks), components=tuple(comps),
                         skeleton=skeleton)


def _graft_at_label(t: RootedTree, at: int, sub: RootedTree) -> RootedTree:
    if t.label == at:
        kids = sorted(t.children + (sub,), key=lambda s: s.min_label)
        return RootedTree(t.label, kids)
    kids = [_graft_at_label(c, at, sub) if at in c.labels() else c
            for c in t.children]
    kids.sort(key=lambda s: s.min_label)
    return RootedTree(t.label, kids)


def reconstruct(d: Decomposition) -> RootedTree:
    """Invert ``decompose``: hang each component, following the skeleton,
    below the maximal vertex of the component it attaches to."""
    seen = set()
    for block in d.blocks:
        if block & seen:
            raise DecompositionError("blocks overlap")
        seen |= block
    by_max = {}
    for block, comp in zip(d.blocks, d.components):
        if comp.labels() != block:
            raise DecompositionError("component %s does not cover its block" % comp)
        if not is_type_A(comp):
            raise DecompositionError("component %s is not of type A" % comp)
        by_max[max(block)] = comp
    if d.skeleton.labels() != frozenset(by_max):
        raise DecompositionError("skeleton labels are not the block maxima")

    def rebuild(node):
        t = by_max[node.label]
        for sub in node.children:
            t = _graft_at_label(t, node.label, rebuild(sub))
        return t

    return canonicalize(rebuild(d.skeleton))


def is_x_tree(t: RootedTree) -> bool:
    """The recursive characterization of the all-red trees: order the root
    subtrees by their root labels r_1 < ... < r_l; the tree qualifies when
    every subtree does and either r > r_1, or r < r_1 with l > 1 and some
    subtree before the last bigger than a single vertex.  Single vertices
    qualify."""
    if t.is_leaf:
        return True
    kids = sorted(t.children, key=lambda c: c.label)
    for c in kids:
        if not is_x_tree(c):
            return False
    r = t.label
    if r > kids[0].label:
        return True
    return len(kids) > 1 and any(c.size > 1 for c in kids[:-1])


def count_x_trees(n: int) -> int:
    """Number of all-red trees on {1..n}, counted by the recursive
    characterization over the full enumeration."""
    if not 1 <= n <= 7:
        raise ValueError("all-red tree counting supports 1 <= n <= 7, got %r" % (n,))
    return sum(1 for t in iter_rooted_trees(n) if is_x_tree(t))
