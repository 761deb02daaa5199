"""Permutation words: inverses, inversions, descent compositions, patterns."""

from __future__ import annotations

from itertools import permutations as _permutations


def all_perms(n: int):
    return (tuple(p) for p in _permutations(range(1, n + 1)))


def inverse(sigma: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for pos, val in enumerate(sigma, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def mirror(sigma: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(sigma))


def inversions(sigma: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    """Value pairs (a, b), a < b, with b appearing before a in the word."""
    out = set()
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                out.add((sigma[j], sigma[i]))
    return frozenset(out)


def weak_leq(tau: tuple[int, ...], sigma: tuple[int, ...]) -> bool:
    """Right weak order: containment of value-inversion sets."""
    return inversions(tau) <= inversions(sigma)


def descent_set(sigma: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def descent_composition(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Ribbon shape of a permutation."""
    from .compositions import from_descent_set

    return from_descent_set(descent_set(sigma), len(sigma))


def standardize(word: tuple[int, ...]) -> tuple[int, ...]:
    """Standardization: relabel by rank, ties broken left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    std = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        std[i] = rank
    return tuple(std)


def contains_132(sigma: tuple[int, ...]) -> bool:
    n = len(sigma)
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[j] <= sigma[i]:
                continue
            for k in range(j + 1, n):
                if sigma[i] < sigma[k] < sigma[j]:
                    return True
    return False


def shifted_shuffle(u: tuple[int, ...], v: tuple[int, ...]):
    """All shuffles of u with v shifted by len(u)."""
    n = len(u)
    vs = tuple(x + n for x in v)

    def rec(a, b):
        if not a:
            yield b
            return
        if not b:
            yield a
            return
        for rest in rec(a[1:], b):
            yield (a[0],) + rest
        for rest in rec(a, b[1:]):
            yield (b[0],) + rest

    return rec(u, vs)
