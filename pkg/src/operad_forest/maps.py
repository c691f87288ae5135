"""Morphisms between the free algebras, and rank-based injectivity certificates.

The maps out of the free commutative magma:

* ``psi``        -- graft-embedding of a normalized term as a rooted tree:
  a leaf becomes a vertex, a product becomes the root-graft of the images.
  Its image is the set of "type A" trees, characterized recursively by
  ``is_type_A``; ``psi_inverse`` inverts it on that image.
* ``phi``        -- symmetrized-grafting image in rooted trees (each
  product becomes the symmetrized grafting product of the images).
* ``phi_tilde``  -- same with the symmetrized root-graft product.
* ``commag_to_mag`` -- forget commutativity: expand every product into the
  sum of its two orders.
* ``mag_to_dend``   -- interpret every product as the difference of the
  two planar-tree operations (left minus right).

``injectivity_certificate`` turns any of these into an exact rank
computation: one matrix row per source basis element, columns indexed by
the target basis, rank over the rationals.  The map is injective in arity
n exactly when the rank equals the source dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import limits
from .exact import ONE_POLY, LinComb, RationalMatrix
from .products import dend_square, pbt_generator, sharp
from .treebases import (BinaryTerm, RootedTree, catalan,
                        check_distinct_leaves, enumerate_commag,
                        is_normalized)


class NotTypeAError(ValueError):
    """The tree is not in the graft-embedding image."""


class NotNormalizedError(ValueError):
    """A normalized binary term was required."""


# ---------------------------------------------------------------------------
# normalized writing

def normalize_commag(t: BinaryTerm) -> BinaryTerm:
    """The unique rewriting of a term, under commutativity alone, that puts
    the maximal label of every subterm in the right factor.  Idempotent."""
    check_distinct_leaves(t)

    def walk(u):
        if u.is_leaf:
            return u
        left = walk(u.left)
        right = walk(u.right)
        if left.max_label > right.max_label:
            left, right = right, left
        return BinaryTerm.node(left, right)

    return walk(t)


# ---------------------------------------------------------------------------
# the graft embedding and type-A structure

def psi(t: BinaryTerm) -> RootedTree:
    """Embed a normalized term as a rooted tree: psi(leaf) is a vertex and
    psi(x*y) attaches the root of psi(y) below the root of psi(x)."""
    check_distinct_leaves(t)
    if not is_normalized(t):
        raise NotNormalizedError("term %s is not normalized" % t)

    def walk(u):
        if u.is_leaf:
            return RootedTree(u.label)
        base = walk(u.left)
        sub = walk(u.right)
        kids = sorted(base.children + (sub,), key=lambda s: s.min_label)
        return RootedTree(base.label, kids)

    return walk(t)


def is_type_A(t: RootedTree) -> bool:
    """True when the tree lies in the graft-embedding image: every root
    subtree is of type A and the root label is smaller than the maximum of
    every root subtree."""
    if t.is_leaf:
        return True
    for c in t.children:
        if t.label > c.max_label or not is_type_A(c):
            return False
    return True


@dataclass(frozen=True)
class TypeACertificate:
    """The unique factorization of a type-A tree as a root graft.

    ``x1`` and ``x2`` are the two factors (the maximal label lives in
    ``x2``) and ``d`` is the size of ``x2``; a single vertex carries no
    factorization (``root_is_max`` is true, ``d`` undefined).
    """

    tree: RootedTree
    x1: RootedTree | None
    x2: RootedTree | None
    d: int | None

    @property
    def root_is_max(self) -> bool:
        return self.x2 is None

    def to_json_obj(self):
        return {
            "tree": str(self.tree),
            "factorization": ("root-is-max" if self.root_is_max
                              else [str(self.x1), str(self.x2)]),
            "d": self.d,
        }


def type_a_certificate(t: RootedTree) -> TypeACertificate:
    """Factor a type-A tree as x1 root-grafted with x2, where x2 is the
    root subtree holding the maximal label; raises on non-type-A input."""
    if not is_type_A(t):
        raise NotTypeAError("tree %s is not in the graft-embedding image" % t)
    if t.is_leaf:
        return TypeACertificate(t, None, None, None)
    best = max(range(len(t.children)), key=lambda i: t.children[i].max_label)
    x2 = t.children[best]
    rest = t.children[:best] + t.children[best + 1:]
    x1 = RootedTree(t.label, rest)
    return TypeACertificate(t, x1, x2, x2.size)


def d_statistic(t: RootedTree) -> int | None:
    return type_a_certificate(t).d


def psi_inverse(t: RootedTree) -> BinaryTerm:
    """Inverse of the graft embedding on its image; the result is a
    normalized binary term."""
    cert = type_a_certificate(t)
    if cert.root_is_max:
        return BinaryTerm.leaf(t.label)
    return BinaryTerm.node(psi_inverse(cert.x1), psi_inverse(cert.x2))


# ---------------------------------------------------------------------------
# the symmetrized images

_phi_memo = {}
_phi_tilde_memo = {}
_commag_to_mag_memo = {}


def _phi_normalized(t: BinaryTerm) -> LinComb:
    got = _phi_memo.get(t)
    if got is None:
        if t.is_leaf:
            got = LinComb.single(RootedTree(t.label))
        else:
            got = sharp("prelie", _phi_normalized(t.left), _phi_normalized(t.right))
        _phi_memo[t] = got
    return got


def phi(t: BinaryTerm) -> LinComb:
    """Symmetrized-grafting image of a term in the rooted-tree algebra.

    A leaf becomes its vertex; a product becomes the symmetrized grafting
    product of the factor images.  The input is normalized first, so the
    map is well defined on commutative terms.
    """
    return _phi_normalized(normalize_commag(t))


def _phi_tilde_normalized(t: BinaryTerm) -> LinComb:
    got = _phi_tilde_memo.get(t)
    if got is None:
        if t.is_leaf:
            got = LinComb.single(RootedTree(t.label))
        else:
            got = sharp("nap", _phi_tilde_normalized(t.left),
                        _phi_tilde_normalized(t.right))
        _phi_tilde_memo[t] = got
    return got


def phi_tilde(t: BinaryTerm) -> LinComb:
    """Symmetrized root-graft image of a term; the fully recursive version,
    so each factor is itself expanded with the same map."""
    return _phi_tilde_normalized(normalize_commag(t))


def commag_to_mag(t: BinaryTerm) -> LinComb:
    """Expand every product u*v into u*v + v*u, recursively: 2^(n-1) terms
    with coefficient 1 for a term with n leaves."""
    check_distinct_leaves(t)
    got = _commag_to_mag_memo.get(t)
    if got is None:
        if t.is_leaf:
            got = LinComb.single(t)
        else:
            left = commag_to_mag(t.left)
            right = commag_to_mag(t.right)
            acc = {}
            for u, cu in left.items():
                for v, cv in right.items():
                    acc[BinaryTerm.node(u, v)] = cu * cv
                    acc[BinaryTerm.node(v, u)] = cu * cv
            got = LinComb(acc)
        _commag_to_mag_memo[t] = got
    return got


def mag_to_dend(t: BinaryTerm, generators=None) -> LinComb:
    """Interpret a binary term in the planar-tree algebra, reading every
    product as (left op) minus (right op); coefficients are polynomials in
    the deformation parameter.

    ``generators`` optionally maps leaf labels to generator indices; by
    default every leaf becomes the single anonymous generator.
    """
    check_distinct_leaves(t)

    def walk(u):
        if u.is_leaf:
            gen = None if generators is None else generators[u.label]
            return LinComb.single(pbt_generator(gen), ONE_POLY)
        return dend_square(walk(u.left), walk(u.right))

    return walk(t)


# ---------------------------------------------------------------------------
# rank certificates

@dataclass(frozen=True)
class RankCertificate:
    """Outcome of one exact injectivity check at a fixed arity."""

    map_name: str
    n: int
    source_dim: int
    rows: int
    cols: int
    rank: int
    injective: bool

    def to_json_obj(self):
        return {
            "map": self.map_name,
            "n": self.n,
            "source_dim": self.source_dim,
            "rank": self.rank,
            "injective": self.injective,
            "matrix": [self.rows, self.cols],
        }


def mag_basis_terms(n: int):
    """The Catalan(n-1) binary-tree shapes with n leaves, written as terms
    with leaves labelled 1..n left to right (only the shape matters)."""
    def shapes(labels):
        if len(labels) == 1:
            return [BinaryTerm.leaf(labels[0])]
        out = []
        for i in range(1, len(labels)):
            for l in shapes(labels[:i]):
                for r in shapes(labels[i:]):
                    out.append(BinaryTerm.node(l, r))
        return out

    out = shapes(tuple(range(1, n + 1)))
    out.sort(key=str)
    return out


INJECTIVITY_MAPS = ("phi", "phi_tilde", "commag_to_mag", "mag_to_dend")


def _target_dimension(map_name, n):
    if map_name in ("phi", "phi_tilde"):
        return n ** (n - 1)
    if map_name == "commag_to_mag":
        return catalan(n - 1) * _factorial(n)
    return catalan(n)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def injectivity_certificate(map_name: str, n: int, lam=None,
                            big: bool = False) -> RankCertificate:
    """Build the matrix of the named map on its arity-n basis and certify
    injectivity by exact rank.

    For ``mag_to_dend`` a rational parameter value ``lam`` must be given;
    the polynomial matrix is specialized there before the rank is taken.
    The arity is checked against the configured resource bounds.
    """
    if map_name not in INJECTIVITY_MAPS:
        raise ValueError("unknown map %r (choose from %s)"
                         % (map_name, ", ".join(INJECTIVITY_MAPS)))
    if n < 1:
        raise ValueError("arity must be >= 1")
    limits.check_arity(n, big=big, what="injectivity arity")

    if map_name == "mag_to_dend":
        if lam is None:
            raise ValueError("mag_to_dend needs a parameter value (lam)")
        lam = Fraction(lam)
        source = mag_basis_terms(n)
        images = [mag_to_dend(t).eval_lambda(lam) for t in source]
    else:
        source = enumerate_commag(n)
        fn = {"phi": phi, "phi_tilde": phi_tilde, "commag_to_mag": commag_to_mag}[map_name]
        images = [fn(t) for t in source]

    columns = {}
    rows = []
    for img in images:
        row = {}
        for elem, c in img.unsorted_items():
            col = columns.get(elem)
            if col is None:
                col = columns[elem] = len(columns)
            row[col] = c
        rows.append(row)

    ncols = _target_dimension(map_name, n)
    matrix = RationalMatrix.from_rows(rows, ncols)
    rk = matrix.rank()
    name = map_name if lam is None else "%s@lam=%s" % (map_name, lam)
    return RankCertificate(map_name=name, n=n, source_dim=len(source),
                           rows=len(source), cols=ncols, rank=rk,
                           injective=(rk == len(source)))
