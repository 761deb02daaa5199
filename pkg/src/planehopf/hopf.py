"""The noncommutative Connes-Kreimer Hopf algebra on plane forests and its dual.

Y basis: product is concatenation of forests, coproduct by admissible cuts.
With the canonical postorder labelling, the cuts of Y_F are encoded by the
colorings u in {1, 2}^n such that i below j implies u_i <= u_j; the color-1
nodes (a union of complete subtrees) go to the left tensor factor.

X basis (dual): coproduct is deconcatenation and the product is the transpose
of the Y coproduct.  The dendriform halves split each product term by the
color of the last postfix node (the root of the last tree).  The same product has a constructive
description by grafting, exposed through ``brace`` and ``prelie_graft``; the
two routes are compared in the test suite.

C basis: C_F = sum of X_G over G <= F in the Tamari order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import tamari
from .forests import (EMPTY_FOREST, Forest, Tree, aut_order, b_plus,
                      enumerate_forests, enumerate_trees, forest_size,
                      labelled_forest, plane_representatives, restrict_forest,
                      tree_size)
from .lincomb import LinComb


# ---------------------------------------------------------------------------
# Admissible cuts

def lower_subsets(f: Forest):
    """All descendant-closed label sets of the canonically labelled forest."""

    def per_tree(node):
        label, kids = node
        options = [frozenset()]
        for k in kids:
            options = [s | o for s in options for o in per_tree(k)]
        options.append(frozenset(_labels(node)))
        return options

    def _labels(node):
        label, kids = node
        yield label
        for k in kids:
            yield from _labels(k)

    subsets = [frozenset()]
    for root in labelled_forest(f):
        subsets = [s | o for s in subsets for o in per_tree(root)]
    return subsets


def y_coproduct(f: Forest) -> LinComb:
    """Coproduct of Y_F as a combination of (F1, F2) pairs."""
    n = forest_size(f)
    out = LinComb.zero()
    for s1 in lower_subsets(f):
        s2 = set(range(1, n + 1)) - s1
        out = out + LinComb.monomial((restrict_forest(f, set(s1)),
                                      restrict_forest(f, s2)))
    return out


def y_product(a: LinComb, b: LinComb) -> LinComb:
    """Concatenation product on the Y basis, extended bilinearly."""
    out = LinComb.zero()
    for f, cf in a.terms.items():
        for g, cg in b.terms.items():
            out = out + LinComb.monomial(f + g, cf * cg)
    return out


# ---------------------------------------------------------------------------
# X basis: product (transpose of the Y coproduct) and dendriform halves

@lru_cache(maxsize=None)
def _product_table(n1: int, n2: int):
    """For each forest H of size n1+n2, the cut terms with parts of sizes
    (n1, n2), classified by the color of node n (the root of the last tree).

    Returns dict (F1, F2) -> {H: [count_last_node_lower, count_last_node_upper]}.
    """
    out: dict[tuple[Forest, Forest], dict[Forest, list[int]]] = {}
    n = n1 + n2
    for h in enumerate_forests(n):
        for s1 in lower_subsets(h):
            if len(s1) != n1:
                continue
            s2 = set(range(1, n + 1)) - s1
            key = (restrict_forest(h, set(s1)), restrict_forest(h, s2))
            slot = out.setdefault(key, {}).setdefault(h, [0, 0])
            slot[0 if n in s1 else 1] += 1
    return out


def x_product(f: Forest, g: Forest) -> LinComb:
    """Product X_F X_G in the X basis."""
    if not f:
        return LinComb.monomial(g)
    if not g:
        return LinComb.monomial(f)
    terms = _product_table(forest_size(f), forest_size(g)).get((f, g), {})
    return LinComb({h: Fraction(c[0] + c[1]) for h, c in terms.items()})


def x_prec(f: Forest, g: Forest) -> LinComb:
    """Dendriform half-product X_F < X_G (last postfix node from F)."""
    if not f or not g:
        raise ValueError("dendriform half-products exclude the unit")
    terms = _product_table(forest_size(f), forest_size(g)).get((f, g), {})
    return LinComb({h: Fraction(c[0]) for h, c in terms.items() if c[0]})


def x_succ(f: Forest, g: Forest) -> LinComb:
    """Dendriform half-product X_F > X_G (last postfix node from G)."""
    if not f or not g:
        raise ValueError("dendriform half-products exclude the unit")
    terms = _product_table(forest_size(f), forest_size(g)).get((f, g), {})
    return LinComb({h: Fraction(c[1]) for h, c in terms.items() if c[1]})


def x_product_lin(a: LinComb, b: LinComb) -> LinComb:
    out = LinComb.zero()
    for f, cf in a.terms.items():
        for g, cg in b.terms.items():
            out = out + x_product(f, g).scale(cf * cg)
    return out


def x_coproduct(f: Forest) -> LinComb:
    """Deconcatenation coproduct of X_F."""
    out = LinComb.zero()
    for cut in range(len(f) + 1):
        out = out + LinComb.monomial((f[:cut], f[cut:]))
    return out


# ---------------------------------------------------------------------------
# Grafting: preLie and brace structures

def _graft_tree(t: Tree, trees: tuple[Tree, ...]):
    """All trees made by grafting ``trees`` on nodes of ``t``, their roots
    appearing in that order along the planar (prefix) traversal."""
    if not trees:
        yield t
        return
    m = len(t)
    r = len(trees)

    def splits(seq, k):
        if k == 1:
            yield (seq,)
            return
        for i in range(len(seq) + 1):
            for rest in splits(seq[i:], k - 1):
                yield (seq[:i],) + rest

    # blocks: B0, I1, B1, I2, ..., Im, Bm read in planar order
    for parts in splits(trees, 2 * m + 1):
        blocks = parts[0::2]
        inner = parts[1::2]
        child_options = [list(_graft_tree(c, inn))
                         for c, inn in zip(t, inner)]

        def rec(i, acc):
            if i == m:
                yield acc
                return
            for c in child_options[i]:
                yield from rec(i + 1, acc + (c,) + blocks[i + 1])

        yield from rec(0, blocks[0])


def brace(forest: Forest, t: Tree) -> LinComb:
    """Brace product <X_{T1...Tr}, X_T>: graft T1..Tr on nodes of T, keeping
    their planar order."""
    out = LinComb.zero()
    for res in _graft_tree(t, tuple(forest)):
        out = out + LinComb.monomial((res,))
    return out


def prelie_graft(t1: Tree, t2: Tree) -> LinComb:
    """Right preLie product X_T1 |> X_T2: graft T1 on a node of T2."""
    return brace((t1,), t2)


def x_tau(tau, n: int) -> LinComb:
    """Chapoton-Livernet element: |Aut(tau)| times the sum of X_T over plane
    trees T whose underlying non-plane tree is tau."""
    coeff = Fraction(aut_order(tau))
    out = LinComb.zero()
    for t in plane_representatives(tau, n):
        out = out + LinComb.monomial((t,), coeff)
    return out


# ---------------------------------------------------------------------------
# C basis

@lru_cache(maxsize=None)
def c_to_x(f: Forest) -> LinComb:
    """C_F expanded in the X basis (sum over the Tamari downset)."""
    return LinComb({g: Fraction(1) for g in tamari.downset(f)})


@lru_cache(maxsize=None)
def _x_in_c(f: Forest) -> LinComb:
    out = LinComb.monomial(f)
    for g in tamari.downset(f):
        if g != f:
            out = out - _x_in_c(g)
    return out


def x_to_c(a: LinComb) -> LinComb:
    """Rewrite a combination of X_F as a combination of C_F."""
    out = LinComb.zero()
    for f, c in a.terms.items():
        out = out + _x_in_c(f).scale(c)
    return out


def c_expand(a: LinComb) -> LinComb:
    """Rewrite a combination of C_F as a combination of X_F."""
    out = LinComb.zero()
    for f, c in a.terms.items():
        out = out + c_to_x(f).scale(c)
    return out


# ---------------------------------------------------------------------------
# Divided powers

def lambda_n(n: int) -> LinComb:
    return LinComb.monomial(tuple(() for _ in range(n)))


def s_n(n: int) -> LinComb:
    return LinComb({f: Fraction(1) for f in enumerate_forests(n)})
