"""The Tamari order on plane forests.

Covers go upward by a left rotation: detach the leftmost child subtree of a
non-leaf node and reinsert it as the sibling immediately to its left (as a
new root immediately to the left when the node is itself a root).  The forest
of singletons is the unique maximum in each degree; the chain forests sit at
the bottom of their fibers.

``upset`` is computed by a product recursion rather than closure of covers:
the upset of a forest is the concatenation of the upsets of its trees, and
the upset of B+(F) collects G1 . B+(G2) over all splits G = G1 G2 (at root
boundaries) of all G in the upset of F.  The two routes are cross-checked in
the test suite.
"""

from __future__ import annotations

from functools import lru_cache

from .forests import (EMPTY_FOREST, Forest, Tree, b_plus, enumerate_forests,
                      forest_size, parse_code, polish_code)


@lru_cache(maxsize=None)
def _up_tree(code: tuple[int, ...]) -> frozenset[Forest]:
    (tree,) = parse_code(code)
    out: set[Forest] = set()
    for g in _up_forest(polish_code(tree)):
        for cut in range(len(g) + 1):
            out.add(g[:cut] + (b_plus(g[cut:]),))
    return frozenset(out)


@lru_cache(maxsize=None)
def _up_forest(code: tuple[int, ...]) -> frozenset[Forest]:
    f = parse_code(code)
    if not f:
        return frozenset({EMPTY_FOREST})
    heads = _up_tree(polish_code((f[0],)))
    tails = _up_forest(polish_code(f[1:]))
    return frozenset(h + t for h in heads for t in tails)


def upset(f: Forest) -> frozenset[Forest]:
    """All forests G >= F in the Tamari order."""
    return _up_forest(polish_code(f))


def leq(f: Forest, g: Forest) -> bool:
    """F <= G in the Tamari order."""
    return g in upset(f)


def downset(f: Forest) -> frozenset[Forest]:
    """All forests G <= F in the Tamari order."""
    return frozenset(g for g in enumerate_forests(forest_size(f))
                     if f in upset(g))


def upset_words(t: Tree) -> tuple[str, ...]:
    """The letter-append process for the up-set of a tree T = B+(F): for
    each G >= F write the reverse Polish code of G and append i for
    i = 0..r(G).  The resulting words enumerate the up-set of T faithfully
    at the level of code-letter multisets and root counts (the last letter
    is the arity of the tree closing the forest); as literal forest codes
    they can permute the letters of the true codes."""
    out = []
    for g in upset(tuple(t)):
        stem = "".join(str(c) for c in reversed(polish_code(g)))
        for i in range(len(g) + 1):
            out.append(stem + str(i))
    return tuple(sorted(out))


def covers(f: Forest) -> frozenset[Forest]:
    """Forests covering F: one left rotation at each non-leaf node."""
    out: set[Forest] = set()

    def tree_moves(t: Tree):
        """All trees obtained by a rotation at a node strictly inside t."""
        # rotation at t itself is handled by the caller (needs the context)
        for i, c in enumerate(t):
            if c:  # non-leaf child: detach its leftmost subtree to its left
                yield t[:i] + (c[0], c[1:]) + t[i + 1:]
            for moved in tree_moves(c):
                yield t[:i] + (moved,) + t[i + 1:]

    for i, t in enumerate(f):
        if t:
            out.add(f[:i] + (t[0], t[1:]) + f[i + 1:])
        for moved in tree_moves(t):
            out.add(f[:i] + (moved,) + f[i + 1:])
    return frozenset(out)
