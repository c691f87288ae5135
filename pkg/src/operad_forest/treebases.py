"""Tree-shaped basis objects: canonical forms, enumeration, parsing, printing.

Four kinds of basis element live here:

* ``RootedTree``  -- labelled rooted trees, the basis of the free pre-Lie
  and NAP algebras on a label set.  Trees are non-planar; the canonical
  form orders the children of every vertex by the smallest label occurring
  in each child subtree.
* ``BinaryTerm``  -- full binary trees with labelled leaves, elements of
  the free magma; with the normalized writing (largest label always in the
  right factor) they form the basis of the free commutative magma.
* ``PlanarBinaryTree`` -- planar binary trees, the basis of the free
  two-operation (dendriform/duplicial family) algebras; internal nodes may
  carry generator indices (all of them or none of them).
* ``Word``        -- nonempty words in letters a-z, the basis of the free
  associative algebra.

All values are immutable and hashable; the cached text form doubles as the
canonical encoding.  The text grammar (see ``parse_term``) is the single
interchange syntax used by the CLI and the test fixtures:

    rooted tree   :=  label | label "(" tree ("," tree)* ")"
    binary term   :=  label | "(" term "*" term ")"
    planar binary :=  "o" | "(" pbt "," pbt ")" [":" genIndex]
    word          :=  letters a-z
    label, genIndex := decimal integers >= 1

Child order is insignificant when parsing rooted trees (the parser
canonicalizes); it is significant everywhere else.
"""

from __future__ import annotations

import itertools
from math import comb


class TermError(ValueError):
    """A structurally invalid term."""


class TermSyntaxError(TermError):
    """Unparseable text; ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset):
        super().__init__("%s (at byte %d)" % (message, offset))
        self.offset = offset


class DuplicateLabelError(TermError):
    """The same label occurs twice in one tree."""


def _check_label(value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise TermError("labels must be integers >= 1, got %r" % (value,))
    return value


class RootedTree:
    """A labelled rooted tree.

    ``children`` keeps whatever order the tree was built with; two trees
    compare equal only if they agree as *planar* structures.  Use
    ``canonicalize`` to reach the canonical representative (idempotent),
    after which structural equality is equality of non-planar trees.
    """

    __slots__ = ("label", "children", "min_label", "max_label", "size",
                 "_str", "_hash", "_labels")

    def __init__(self, label, children=()):
        self.label = _check_label(label)
        self.children = tuple(children)
        mn = mx = self.label
        size = 1
        for c in self.children:
            if not isinstance(c, RootedTree):
                raise TermError("children of a RootedTree must be RootedTrees")
            mn = min(mn, c.min_label)
            mx = max(mx, c.max_label)
            size += c.size
        self.min_label = mn
        self.max_label = mx
        self.size = size
        if self.children:
            self._str = "%d(%s)" % (self.label, ",".join(c._str for c in self.children))
        else:
            self._str = "%d" % self.label
        self._hash = hash(self._str)
        self._labels = None

    @property
    def is_leaf(self):
        return not self.children

    def labels(self):
        """Frozenset of all labels in the tree (cached)."""
        if self._labels is None:
            acc = set()
            stack = [self]
            while stack:
                t = stack.pop()
                acc.add(t.label)
                stack.extend(t.children)
            self._labels = frozenset(acc)
        return self._labels

    def root_degree(self):
        """Number of subtrees attached to the root."""
        return len(self.children)

    def __str__(self):
        return self._str

    def __repr__(self):
        return self._str

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self._str == other._str

    def __ne__(self, other):
        return not self.__eq__(other)


def canonicalize(t: RootedTree) -> RootedTree:
    """Return the canonical form of ``t``: at every vertex the children are
    sorted by the minimal label of their subtree, ascending.  Idempotent.
    Raises ``DuplicateLabelError`` if a label repeats.
    """
    seen = set()

    def walk(node):
        if node.label in seen:
            raise DuplicateLabelError("label %d occurs twice" % node.label)
        seen.add(node.label)
        kids = [walk(c) for c in node.children]
        kids.sort(key=lambda s: s.min_label)
        if tuple(kids) == node.children:
            return node
        return RootedTree(node.label, kids)

    return walk(t)


def relabel(t: RootedTree, mapping) -> RootedTree:
    """Apply a label substitution and re-canonicalize."""
    def walk(node):
        return RootedTree(mapping[node.label], [walk(c) for c in node.children])
    return canonicalize(walk(t))


class BinaryTerm:
    """A full binary tree with distinct integer-labelled leaves.

    Planar: ``(1*2)`` and ``(2*1)`` are different terms.  The normalized
    writing (see ``maps.normalize_commag``) keeps the largest label of
    every subterm in the right factor.
    """

    __slots__ = ("label", "left", "right", "max_label", "nleaves",
                 "_str", "_hash", "_labels")

    def __init__(self, label=None, left=None, right=None):
        if label is not None:
            if left is not None or right is not None:
                raise TermError("a BinaryTerm is either a leaf or a product")
            self.label = _check_label(label)
            self.left = self.right = None
            self.max_label = label
            self.nleaves = 1
            self._str = "%d" % label
        else:
            if not isinstance(left, BinaryTerm) or not isinstance(right, BinaryTerm):
                raise TermError("both factors of a BinaryTerm must be BinaryTerms")
            self.label = None
            self.left = left
            self.right = right
            self.max_label = max(left.max_label, right.max_label)
            self.nleaves = left.nleaves + right.nleaves
            self._str = "(%s*%s)" % (left._str, right._str)
        self._hash = hash(self._str)
        self._labels = None

    @classmethod
    def leaf(cls, label):
        return cls(label=label)

    @classmethod
    def node(cls, left, right):
        return cls(left=left, right=right)

    @property
    def is_leaf(self):
        return self.label is not None

    def labels(self):
        if self._labels is None:
            acc = set()
            stack = [self]
            while stack:
                t = stack.pop()
                if t.is_leaf:
                    acc.add(t.label)
                else:
                    stack.append(t.left)
                    stack.append(t.right)
            self._labels = frozenset(acc)
        return self._labels

    def leaf_labels(self):
        """Leaf labels in left-to-right order."""
        if self.is_leaf:
            return (self.label,)
        return self.left.leaf_labels() + self.right.leaf_labels()

    def __str__(self):
        return self._str

    def __repr__(self):
        return self._str

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, BinaryTerm) and self._str == other._str

    def __ne__(self, other):
        return not self.__eq__(other)


def check_distinct_leaves(t: BinaryTerm) -> BinaryTerm:
    """Raise ``DuplicateLabelError`` unless all leaf labels differ."""
    if len(t.labels()) != t.nleaves:
        seen = set()
        for lab in t.leaf_labels():
            if lab in seen:
                raise DuplicateLabelError("label %d occurs twice" % lab)
            seen.add(lab)
    return t


class PlanarBinaryTree:
    """A planar binary tree; ``n`` internal nodes means ``n+1`` leaves.

    Internal nodes optionally carry a generator index; within one tree
    either every internal node carries one or none does (enforced here).
    The single leaf is not an algebra element, only a building block.
    """

    __slots__ = ("left", "right", "gen", "nleaves", "_str", "_hash")

    def __init__(self, left=None, right=None, gen=None):
        if left is None and right is None:
            if gen is not None:
                raise TermError("a leaf carries no generator index")
            self.left = self.right = None
            self.gen = None
            self.nleaves = 1
            self._str = "o"
        else:
            if not isinstance(left, PlanarBinaryTree) or not isinstance(right, PlanarBinaryTree):
                raise TermError("both subtrees must be PlanarBinaryTrees")
            if gen is not None:
                _check_label(gen)
            for sub in (left, right):
                if not sub.is_leaf and (sub.gen is None) != (gen is None):
                    raise TermError("generator indices must decorate every internal node or none")
            self.left = left
            self.right = right
            self.gen = gen
            self.nleaves = left.nleaves + right.nleaves
            if gen is None:
                self._str = "(%s,%s)" % (left._str, right._str)
            else:
                self._str = "(%s,%s):%d" % (left._str, right._str, gen)
        self._hash = hash(self._str)

    @classmethod
    def node(cls, left, right, gen=None):
        return cls(left=left, right=right, gen=gen)

    @property
    def is_leaf(self):
        return self.left is None

    @property
    def has_gens(self):
        return self.gen is not None

    def internal_nodes(self):
        return self.nleaves - 1

    def __str__(self):
        return self._str

    def __repr__(self):
        return self._str

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, PlanarBinaryTree) and self._str == other._str

    def __ne__(self, other):
        return not self.__eq__(other)


PBT_LEAF = PlanarBinaryTree()


class Word:
    """A nonempty word in the letters a-z."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters):
        letters = str(letters)
        if not letters:
            raise TermError("words are nonempty")
        for ch in letters:
            if not ("a" <= ch <= "z"):
                raise TermError("word letters must be a-z, got %r" % ch)
        self.letters = letters
        self._hash = hash(letters)

    def __str__(self):
        return self.letters

    def __repr__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __ne__(self, other):
        return not self.__eq__(other)


# ---------------------------------------------------------------------------
# enumeration

def double_factorial(k: int) -> int:
    """Odd double factorial with the conventions (-1)!! = 1!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def iter_rooted_trees(n: int):
    """Yield every canonical labelled rooted tree on {1..n}, streaming.

    For each root r the parent functions {1..n}\\{r} -> {1..n} that are
    acyclic toward r are searched with incremental cycle detection, so
    exactly n^(n-1) trees come out, each once.  Order is deterministic but
    unsorted; ``enumerate_rooted_trees`` sorts.
    """
    if not isinstance(n, int) or not 1 <= n <= 8:
        raise ValueError("rooted-tree enumeration supports 1 <= n <= 8, got %r" % (n,))
    if n == 1:
        yield RootedTree(1)
        return
    for root in range(1, n + 1):
        others = [v for v in range(1, n + 1) if v != root]
        parent = {}

        def build():
            kids = {v: [] for v in range(1, n + 1)}
            for v, p in parent.items():
                kids[p].append(v)

            def grow(v):
                sub = [grow(c) for c in kids[v]]
                sub.sort(key=lambda s: s.min_label)
                return RootedTree(v, sub)

            return grow(root)

        def rec(i):
            if i == len(others):
                yield build()
                return
            v = others[i]
            for p in range(1, n + 1):
                if p == v:
                    continue
                cur = p
                while True:  # walk toward the root through assigned parents
                    if cur == v:
                        break  # would close a cycle
                    nxt = parent.get(cur)
                    if nxt is None:
                        parent[v] = p
                        yield from rec(i + 1)
                        del parent[v]
                        break
                    cur = nxt

        yield from rec(0)


def enumerate_rooted_trees(n: int):
    """All canonical labelled rooted trees on {1..n}; exactly n^(n-1)."""
    out = list(iter_rooted_trees(n))
    out.sort(key=str)
    return out


def enumerate_commag(n: int):
    """All normalized binary terms on {1..n}; exactly (2n-3)!!.

    A term is normalized when, recursively, the maximal label of every
    product sits in the right factor; commutativity makes this writing
    unique, so no deduplication is needed.
    """
    if not isinstance(n, int) or not 1 <= n <= 9:
        raise ValueError("commutative-magma enumeration supports 1 <= n <= 9, got %r" % (n,))
    memo = {}

    def terms(labels):
        got = memo.get(labels)
        if got is not None:
            return got
        if len(labels) == 1:
            res = [BinaryTerm.leaf(labels[0])]
        else:
            top = labels[-1]
            rest = labels[:-1]
            res = []
            for k in range(1, len(rest) + 1):
                for left_labels in itertools.combinations(rest, k):
                    chosen = set(left_labels)
                    right_labels = tuple(v for v in rest if v not in chosen) + (top,)
                    for u in terms(left_labels):
                        for v in terms(right_labels):
                            res.append(BinaryTerm.node(u, v))
        memo[labels] = res
        return res

    out = list(terms(tuple(range(1, n + 1))))
    out.sort(key=str)
    return out


def is_normalized(t: BinaryTerm) -> bool:
    """True when the maximal label of every product is in its right factor."""
    if t.is_leaf:
        return True
    return (t.right.max_label == t.max_label
            and is_normalized(t.left) and is_normalized(t.right))


_shape_memo = {1: [PBT_LEAF]}


def _pbt_shapes(leaves):
    got = _shape_memo.get(leaves)
    if got is not None:
        return got
    res = []
    for i in range(1, leaves):
        for l in _pbt_shapes(i):
            for r in _pbt_shapes(leaves - i):
                res.append(PlanarBinaryTree.node(l, r))
    _shape_memo[leaves] = res
    return res


def _decorate(shape, gens):
    """Rebuild ``shape`` assigning generator indices preorder from ``gens``."""
    it = iter(gens)

    def walk(t):
        if t.is_leaf:
            return t
        g = next(it)
        return PlanarBinaryTree.node(walk(t.left), walk(t.right), gen=g)

    return walk(shape)


def enumerate_pbt(leaves: int, generators: int = 1):
    """All planar binary trees with the given number of leaves.

    With one generator the Catalan(leaves-1) bare shapes come back; with g
    generators every shape is repeated with all g^(leaves-1) node labelings.
    """
    if not isinstance(leaves, int) or leaves < 1:
        raise ValueError("need at least one leaf, got %r" % (leaves,))
    if not isinstance(generators, int) or generators < 1:
        raise ValueError("need at least one generator, got %r" % (generators,))
    shapes = _pbt_shapes(leaves)
    if generators == 1:
        out = list(shapes)
    else:
        out = []
        for shape in shapes:
            for gens in itertools.product(range(1, generators + 1),
                                          repeat=shape.internal_nodes()):
                out.append(_decorate(shape, gens))
    out.sort(key=str)
    return out


# ---------------------------------------------------------------------------
# parsing and printing

KINDS = ("rooted", "binary", "pbt", "word")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise TermSyntaxError(message, self.pos)

    def peek(self):
        self._skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def take(self, ch):
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.pos += 1

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def integer(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.error("integers in terms are >= 1")
        return value

    def done(self):
        self._skip_ws()
        if self.pos != len(self.text):
            self.error("trailing input")

    # grammar rules ---------------------------------------------------

    def rooted(self):
        label = self.integer()
        kids = []
        if self.peek() == "(":
            self.take("(")
            kids.append(self.rooted())
            while self.peek() == ",":
                self.take(",")
                kids.append(self.rooted())
            self.take(")")
        return RootedTree(label, kids)

    def binary(self):
        if self.peek() == "(":
            self.take("(")
            left = self.binary()
            self.take("*")
            right = self.binary()
            self.take(")")
            return BinaryTerm.node(left, right)
        return BinaryTerm.leaf(self.integer())

    def pbt(self):
        if self.peek() == "o":
            self.take("o")
            return PBT_LEAF
        self.take("(")
        left = self.pbt()
        self.take(",")
        right = self.pbt()
        self.take(")")
        gen = None
        if self.peek() == ":":
            self.take(":")
            gen = self.integer()
        try:
            return PlanarBinaryTree.node(left, right, gen=gen)
        except TermError as exc:
            self.error(str(exc))

    def word(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and "a" <= self.text[self.pos] <= "z":
            self.pos += 1
        if self.pos == start:
            self.error("expected letters a-z")
        return Word(self.text[start:self.pos])


def parse_term(text: str, kind: str):
    """Parse ``text`` as an element of the given basis kind.

    Rooted trees come back canonicalized (input child order does not
    matter); binary terms and planar binary trees keep their structure.
    Syntax errors carry the byte offset; duplicate labels raise
    ``DuplicateLabelError``.
    """
    if kind not in KINDS:
        raise ValueError("unknown basis kind %r (choose from %s)" % (kind, ", ".join(KINDS)))
    p = _Parser(text)
    if kind == "rooted":
        t = p.rooted()
        p.done()
        return canonicalize(t)
    if kind == "binary":
        t = p.binary()
        p.done()
        return check_distinct_leaves(t)
    if kind == "pbt":
        t = p.pbt()
        p.done()
        return t
    t = p.word()
    p.done()
    return t


def format_term(elem) -> str:
    """Canonical text form; inverse of ``parse_term`` on canonical elements."""
    if not isinstance(elem, (RootedTree, BinaryTerm, PlanarBinaryTree, Word)):
        raise TypeError("not a basis element: %r" % (elem,))
    return str(elem)


def kind_of(elem) -> str:
    if isinstance(elem, RootedTree):
        return "rooted"
    if isinstance(elem, BinaryTerm):
        return "binary"
    if isinstance(elem, PlanarBinaryTree):
        return "pbt"
    if isinstance(elem, Word):
        return "word"
    raise TypeError("not a basis element: %r" % (elem,))
