"""Finite formal linear combinations over an arbitrary hashable basis.

Coefficients may be ints, Fractions, or any of the polynomial types in
:mod:`planehopf.polynomials` / :mod:`planehopf.laurent`; the only requirements
are ``+``, ``-``, ``*`` and truthiness (zero coefficients are dropped).
"""

from __future__ import annotations

from typing import Callable, Iterable


class LinComb:
    """Sparse mapping basis label -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for b, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    self.terms[b] = self.terms[b] + c if b in self.terms else c
                    if not self.terms[b]:
                        del self.terms[b]

    @classmethod
    def monomial(cls, basis, coeff=1) -> "LinComb":
        return cls({basis: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(_coeff_eq(c, other.terms[b]) for b, c in self.terms.items())

    def __hash__(self):
        raise TypeError("LinComb is mutable-by-construction; not hashable")

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for b, c in other.terms.items():
            s = out[b] + c if b in out else c
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        res = LinComb.__new__(LinComb)
        res.terms = out
        return res

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        res = LinComb.__new__(LinComb)
        res.terms = {b: -c for b, c in self.terms.items()}
        return res

    def scale(self, coeff) -> "LinComb":
        if not coeff:
            return LinComb()
        res = LinComb.__new__(LinComb)
        res.terms = {b: _mul(coeff, c) for b, c in self.terms.items()}
        res.terms = {b: c for b, c in res.terms.items() if c}
        return res

    def map_basis(self, fn: Callable) -> "LinComb":
        """Apply ``fn: basis -> LinComb`` linearly."""
        out = LinComb()
        for b, c in self.terms.items():
            out = out + fn(b).scale(c)
        return out

    def coeff(self, basis):
        return self.terms.get(basis, 0)

    def items(self):
        return self.terms.items()

    def support(self):
        return set(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "LinComb(0)"
        bits = [f"{c!r}*{b!r}" for b, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]
        return "LinComb(" + " + ".join(bits) + ")"


def _mul(a, b):
    return a * b


def _coeff_eq(a, b) -> bool:
    # RationalFn defines a semantic __eq__; everything else compares directly.
    return a == b


def tensor(*combs: LinComb) -> LinComb:
    """Tensor product: basis labels become tuples."""
    out = LinComb.monomial(())
    for c in combs:
        nxt = LinComb()
        for b1, c1 in out.items():
            for b2, c2 in c.items():
                nxt = nxt + LinComb.monomial(b1 + (b2,), _mul(c1, c2))
        out = nxt
    return out


def sum_lincombs(combs: Iterable[LinComb]) -> LinComb:
    out = LinComb()
    for c in combs:
        out = out + c
    return out
