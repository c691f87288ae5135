"""The bilinear products on tree bases, extended to linear combinations.

Rooted-tree side: the grafting product (sum over all ways of attaching the
second tree's root below a vertex of the first) and the root-graft product
(attach directly below the root), plus their symmetrizations.  Label sets
of the two operands must be disjoint.

Planar-binary-tree side: the two-operation family with a deformation
parameter, computed with ``LambdaPoly`` scalars so one run covers every
parameter value.  The recursive tree formulas used here are pinned by two
validation gates exercised in the test suite: the three defining relations
hold identically, and the recursion

    image(single node) = generator,   image(l v r) = image(l) > x < image(r)

reproduces every basis tree with coefficient one.

Word side: concatenation and its symmetrization in the free associative
algebra.
"""

from __future__ import annotations

from .exact import LAMBDA, LinComb, ONE_POLY
from .treebases import (BinaryTerm, PlanarBinaryTree, RootedTree, TermError,
                        Word, check_distinct_leaves)


class LabelOverlapError(ValueError):
    """Operands of a labelled product share a label."""


def _require_disjoint(a, b):
    common = a.labels() & b.labels()
    if common:
        raise LabelOverlapError("operands share labels %s"
                                % sorted(common))


def _bilinear(basis_fn, x: LinComb, y: LinComb) -> LinComb:
    acc = {}
    for a, ca in x.unsorted_items():
        for b, cb in y.unsorted_items():
            cab = ca * cb
            for elem, c in basis_fn(a, b).unsorted_items():
                prev = acc.get(elem)
                s = cab * c if prev is None else prev + cab * c
                if s == 0:
                    acc.pop(elem, None)
                else:
                    acc[elem] = s
    return LinComb(acc)


def _as_lincomb(x, kind):
    if isinstance(x, LinComb):
        return x
    if isinstance(x, kind):
        return LinComb.single(x)
    raise TypeError("expected %s or LinComb, got %r" % (kind.__name__, x))


# ---------------------------------------------------------------------------
# rooted trees

def _insert_child(t: RootedTree, sub: RootedTree) -> RootedTree:
    kids = sorted(t.children + (sub,), key=lambda s: s.min_label)
    return RootedTree(t.label, kids)


def _replace_child(t: RootedTree, index: int, sub: RootedTree) -> RootedTree:
    kids = list(t.children)
    kids[index] = sub
    kids.sort(key=lambda s: s.min_label)
    return RootedTree(t.label, kids)


def _graft_everywhere(t: RootedTree, y: RootedTree):
    """One tree per vertex of ``t``: attach ``y``'s root below that vertex."""
    yield _insert_child(t, y)
    for i, c in enumerate(t.children):
        for g in _graft_everywhere(c, y):
            yield _replace_child(t, i, g)


_prelie_memo = {}


def _prelie_basis(t: RootedTree, y: RootedTree) -> LinComb:
    got = _prelie_memo.get((t, y))
    if got is None:
        _require_disjoint(t, y)
        acc = {}
        for g in _graft_everywhere(t, y):
            acc[g] = acc.get(g, 0) + 1
        got = _prelie_memo[(t, y)] = LinComb(acc)
    return got


def _nap_basis(t: RootedTree, y: RootedTree) -> LinComb:
    _require_disjoint(t, y)
    return LinComb.single(_insert_child(t, y))


def prelie_product(x, y) -> LinComb:
    """Grafting product: on basis trees, the sum over vertices t of the
    first tree of the tree obtained by grafting the second tree's root
    onto t.  Extended bilinearly."""
    x = _as_lincomb(x, RootedTree)
    y = _as_lincomb(y, RootedTree)
    return _bilinear(_prelie_basis, x, y)


def nap_product(x, y) -> LinComb:
    """Root-graft product: attach the second tree's root as a new child of
    the first tree's root.  Satisfies (x y) z = (x z) y."""
    x = _as_lincomb(x, RootedTree)
    y = _as_lincomb(y, RootedTree)
    return _bilinear(_nap_basis, x, y)


_SHARP_KINDS = {"prelie": prelie_product, "nap": nap_product}


def sharp(kind: str, x, y) -> LinComb:
    """Symmetrized product: product(x, y) + product(y, x)."""
    try:
        prod = _SHARP_KINDS[kind]
    except KeyError:
        raise ValueError("unknown product kind %r (choose from %s)"
                         % (kind, ", ".join(sorted(_SHARP_KINDS)))) from None
    return prod(x, y) + prod(y, x)


def root_degree_filtration(t: RootedTree, y: RootedTree):
    """Split the grafting product of two basis trees into the root-graft
    leading term and the rest; helper for the filtration checks."""
    full = prelie_product(t, y)
    top = _insert_child(t, y)
    rest = full - LinComb.single(top, full.coeff(top))
    return full.coeff(top), top, rest


# ---------------------------------------------------------------------------
# planar binary trees

def _check_pbt_operand(t: PlanarBinaryTree):
    if t.is_leaf:
        raise TermError("the single leaf is not an algebra element")


_dend_memo = {}


def _dend_basis(op: str, t: PlanarBinaryTree, s: PlanarBinaryTree) -> LinComb:
    """Basis-level left ("L") / right ("R") operation, memoized.

    L:  t < s = t_l v (t_r < s + lam * t_r > s)
    R:  t > s = (lam * t < s_l + t > s_l) v s_r

    where a missing inner factor (a leaf) makes the bracket collapse to the
    other operand unchanged.  The result root keeps the generator of t (L)
    or of s (R).
    """
    key = (op, t, s)
    got = _dend_memo.get(key)
    if got is not None:
        return got
    _check_pbt_operand(t)
    _check_pbt_operand(s)
    if op == "L":
        if t.right.is_leaf:
            inner = LinComb.single(s, ONE_POLY)
        else:
            inner = (_dend_basis("L", t.right, s)
                     + _dend_basis("R", t.right, s).scale(LAMBDA))
        res = LinComb({PlanarBinaryTree.node(t.left, u, gen=t.gen): c
                       for u, c in inner.items()})
    else:
        if s.left.is_leaf:
            inner = LinComb.single(t, ONE_POLY)
        else:
            inner = (_dend_basis("L", t, s.left).scale(LAMBDA)
                     + _dend_basis("R", t, s.left))
        res = LinComb({PlanarBinaryTree.node(u, s.right, gen=s.gen): c
                       for u, c in inner.items()})
    _dend_memo[key] = res
    return res


def dend_left(x, y) -> LinComb:
    """The left operation, with polynomial scalars in the parameter."""
    x = _as_lincomb(x, PlanarBinaryTree)
    y = _as_lincomb(y, PlanarBinaryTree)
    return _bilinear(lambda a, b: _dend_basis("L", a, b), x, y)


def dend_right(x, y) -> LinComb:
    """The right operation, with polynomial scalars in the parameter."""
    x = _as_lincomb(x, PlanarBinaryTree)
    y = _as_lincomb(y, PlanarBinaryTree)
    return _bilinear(lambda a, b: _dend_basis("R", a, b), x, y)


def dend_square(x, y) -> LinComb:
    """x < y - x > y, the operation inducing the magmatic embedding."""
    return dend_left(x, y) - dend_right(x, y)


def dend_brace(x, y) -> LinComb:
    """x < y - y > x; at parameter value 1 this is a pre-Lie product."""
    return dend_left(x, y) - dend_right(y, x)


_GENERATOR_MEMO = {}


def pbt_generator(gen=None) -> PlanarBinaryTree:
    """The one-node tree, i.e. the generator (optionally indexed)."""
    got = _GENERATOR_MEMO.get(gen)
    if got is None:
        from .treebases import PBT_LEAF
        got = PlanarBinaryTree.node(PBT_LEAF, PBT_LEAF, gen=gen)
        _GENERATOR_MEMO[gen] = got
    return got


def dend_recursive_image(t: PlanarBinaryTree) -> LinComb:
    """Rewrite a basis tree as a product expression and evaluate it.

    Recursively, a tree with subtrees l, r at the root and generator g maps
    to  image(l) > x_g < image(r),  a leaf subtree contributing nothing on
    its side.  Self-consistency of the product conventions means this must
    return the input tree itself with coefficient one (for every parameter
    value), which the test suite checks exhaustively in small sizes.
    """
    _check_pbt_operand(t)
    x = LinComb.single(pbt_generator(t.gen), ONE_POLY)
    left_inner = not t.left.is_leaf
    right_inner = not t.right.is_leaf
    if not left_inner and not right_inner:
        return x
    if left_inner and not right_inner:
        return dend_right(dend_recursive_image(t.left), x)
    if right_inner and not left_inner:
        return dend_left(x, dend_recursive_image(t.right))
    return dend_left(dend_right(dend_recursive_image(t.left), x),
                     dend_recursive_image(t.right))


# ---------------------------------------------------------------------------
# words

def _concat_basis(a: Word, b: Word) -> LinComb:
    return LinComb.single(Word(a.letters + b.letters))


def assoc_concat(x, y) -> LinComb:
    """Concatenation product of the free associative algebra."""
    x = _as_lincomb(x, Word)
    y = _as_lincomb(y, Word)
    return _bilinear(_concat_basis, x, y)


def assoc_sym(x, y) -> LinComb:
    """Symmetrized concatenation: xy + yx."""
    return assoc_concat(x, y) + assoc_concat(y, x)


# ---------------------------------------------------------------------------
# convenience wrappers used by the CLI

def binary_term_leaves_distinct(t: BinaryTerm) -> BinaryTerm:
    return check_distinct_leaves(t)
