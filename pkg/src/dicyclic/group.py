"""Arithmetic in the dicyclic group Dc_n of order 4n.

Elements are kept in the normal form ``y^a x^b`` with ``a in {0, 1}`` and
``0 <= b < 2n``.  The defining relations are ``x^(2n) = 1``, ``y^2 = x^n`` and
``x y = y x^-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Sequence, Union

__all__ = [
    "ParameterError",
    "GroupParams",
    "DicyclicElement",
    "GroupTable",
    "as_params",
    "make_element",
    "identity",
    "multiply",
    "inverse",
    "power",
    "element_order",
    "center",
    "enumerate_group",
    "element_index",
    "cayley_table",
    "parse_element",
]


class ParameterError(ValueError):
    """Bad group parameters, or elements/automorphisms from different groups."""


@dataclass(frozen=True)
class GroupParams:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise ParameterError(f"n must be an integer, got {self.n!r}")
        if self.n < 2:
            raise ParameterError(f"Dc_n needs n >= 2 (Dc_1 is cyclic of order 4), got n={self.n}")

    @property
    def order(self) -> int:
        return 4 * self.n

    @property
    def modulus(self) -> int:
        """Order of the cyclic subgroup <x>."""
        return 2 * self.n


ParamsLike = Union[GroupParams, int]


def as_params(params: ParamsLike) -> GroupParams:
    if isinstance(params, GroupParams):
        return params
    return GroupParams(params)


@dataclass(frozen=True, order=True)
class DicyclicElement:
    """The element ``y^a x^b`` of Dc_n.

    Comparison follows the canonical listing order
    ``1, x, ..., x^(2n-1), y, yx, ..., yx^(2n-1)`` within one group.
    """

    a: int
    b: int
    n: int = field(compare=True)

    def __post_init__(self):
        if self.a not in (0, 1) or not 0 <= self.b < 2 * self.n:
            raise ParameterError(
                f"({self.a}, {self.b}) is not in normal form for n={self.n}; use make_element"
            )

    def __mul__(self, other: DicyclicElement) -> DicyclicElement:
        return multiply(self, other)

    def __pow__(self, k: int) -> DicyclicElement:
        return power(self, k)

    def __str__(self) -> str:
        head = "y" if self.a else ""
        if self.b == 0:
            return head or "1"
        tail = "x" if self.b == 1 else f"x^{self.b}"
        return head + tail

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def in_cyclic_part(self) -> bool:
        """True for powers of x."""
        return self.a == 0

    def inverse(self) -> DicyclicElement:
        return inverse(self)

    def order(self) -> int:
        return element_order(self)


def make_element(a: int, b: int, params: ParamsLike) -> DicyclicElement:
    """Reduce ``y^a x^b`` to normal form.

    Arbitrary integer exponents are accepted: ``y^2`` is rewritten to ``x^n``
    (so negative ``a`` works too, via ``y^-1 = y x^n``).
    """
    n = as_params(params).n
    m = 2 * n
    # y^a = y^(a mod 2) * (y^2)^(a div 2) and y^2 = x^n is central
    q, r = divmod(a, 2)
    return DicyclicElement(r, (b + q * n) % m, n)


def identity(params: ParamsLike) -> DicyclicElement:
    return DicyclicElement(0, 0, as_params(params).n)


def _same_group(g: DicyclicElement, h: DicyclicElement) -> None:
    if g.n != h.n:
        raise ParameterError(f"elements of Dc_{g.n} and Dc_{h.n} cannot be combined")


def multiply(g: DicyclicElement, h: DicyclicElement) -> DicyclicElement:
    _same_group(g, h)
    n = g.n
    m = 2 * n
    # x^b1 y^a2 = y^a2 x^(+-b1)
    c = h.b + (g.b if h.a == 0 else -g.b)
    a = g.a + h.a
    if a == 2:
        a = 0
        c += n
    return DicyclicElement(a, c % m, n)


def inverse(g: DicyclicElement) -> DicyclicElement:
    m = 2 * g.n
    if g.a == 0:
        return DicyclicElement(0, (m - g.b) % m, g.n)
    return DicyclicElement(1, (g.b + g.n) % m, g.n)


def power(g: DicyclicElement, k: int) -> DicyclicElement:
    if k < 0:
        return power(inverse(g), -k)
    result = identity(g.n)
    base = g
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def element_order(g: DicyclicElement) -> int:
    if g.a == 1:
        return 4
    m = 2 * g.n
    return m // math.gcd(g.b, m)


def center(params: ParamsLike) -> tuple[DicyclicElement, ...]:
    n = as_params(params).n
    return (DicyclicElement(0, 0, n), DicyclicElement(0, n, n))


@lru_cache(maxsize=None)
def _elements(n: int) -> tuple[DicyclicElement, ...]:
    m = 2 * n
    return tuple(DicyclicElement(a, b, n) for a in (0, 1) for b in range(m))


def enumerate_group(params: ParamsLike) -> tuple[DicyclicElement, ...]:
    """All 4n elements in canonical order."""
    return _elements(as_params(params).n)


def element_index(g: DicyclicElement) -> int:
    """Position of ``g`` in :func:`enumerate_group`."""
    return g.a * 2 * g.n + g.b


def parse_element(text: str, params: ParamsLike) -> DicyclicElement:
    """Inverse of ``str(element)``; also accepts unreduced exponents like ``x^7``."""
    s = text.strip().replace(" ", "")
    if s == "1":
        return identity(params)
    a = 0
    if s.startswith("y"):
        a, s = 1, s[1:]
    if s == "":
        return make_element(a, 0, params)
    if s == "x":
        return make_element(a, 1, params)
    if s.startswith("x^"):
        try:
            return make_element(a, int(s[2:]), params)
        except ValueError:
            pass
    raise ParameterError(f"cannot parse group element {text!r}")


@dataclass(frozen=True)
class GroupTable:
    """A finite group as an element list plus a Cayley table of indices."""

    elements: tuple[Hashable, ...]
    product: tuple[tuple[int, ...], ...]
    identity_index: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def from_operation(
        cls, elements: Sequence[Hashable], op: Callable[[Hashable, Hashable], Hashable]
    ) -> GroupTable:
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise ParameterError("duplicate elements")
        try:
            product = tuple(tuple(index[op(g, h)] for h in elements) for g in elements)
        except KeyError as exc:
            raise ParameterError(f"operation is not closed: produced {exc.args[0]!r}") from None
        ident = None
        for i in range(len(elements)):
            if all(product[i][j] == j == product[j][i] for j in range(len(elements))):
                ident = i
                break
        if ident is None:
            raise ParameterError("operation has no identity element")
        return cls(elements, product, ident)

    def mul(self, i: int, j: int) -> int:
        return self.product[i][j]

    def inverse(self, i: int) -> int:
        return self.product[i].index(self.identity_index)

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity_index:
            cur = self.product[cur][i]
            k += 1
        return k

    def label(self, i: int) -> str:
        return str(self.elements[i])

    def check_group(self) -> list[str]:
        """Return a list of violated group axioms (empty for a valid group)."""
        problems = []
        size = self.order
        full = set(range(size))
        if any(len(row) != size for row in self.product):
            return ["table is not square"]
        if any(set(row) != full for row in self.product):
            problems.append("a row is not a permutation")
        if any({self.product[i][j] for i in range(size)} != full for j in range(size)):
            problems.append("a column is not a permutation")
        e = self.identity_index
        if any(self.product[e][j] != j or self.product[j][e] != j for j in range(size)):
            problems.append("identity law fails")
        p = self.product
        if any(p[p[i][j]][k] != p[i][p[j][k]] for i in range(size) for j in range(size) for k in range(size)):
            problems.append("not associative")
        return problems

    def is_group(self) -> bool:
        return not self.check_group()


@lru_cache(maxsize=None)
def _cayley_table(n: int) -> GroupTable:
    elements = enumerate_group(n)
    product = tuple(
        tuple(element_index(multiply(g, h)) for h in elements) for g in elements
    )
    return GroupTable(elements, product, 0)


def cayley_table(params: ParamsLike) -> GroupTable:
    return _cayley_table(as_params(params).n)
