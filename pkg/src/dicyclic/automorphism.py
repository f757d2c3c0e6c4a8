"""Automorphisms of Dc_n.

For n >= 3 every automorphism is ``phi_(r,s)``: ``x -> x^r``, ``y -> y x^s``
with ``r`` a unit mod 2n.  Dc_2 (the quaternion group) has 24 automorphisms,
only 8 of which have that shape, so a second representation
(:class:`TableAutomorphism`, an explicit bijection) covers the general case.

Composition ``compose(f, g)`` always means "apply ``g`` first".
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .group import (
    DicyclicElement,
    ParameterError,
    ParamsLike,
    as_params,
    cayley_table,
    element_index,
    element_order,
    enumerate_group,
    identity,
    inverse,
    make_element,
    multiply,
    power,
)

__all__ = [
    "IncompleteFamilyWarning",
    "ClassificationError",
    "RsAutomorphism",
    "TableAutomorphism",
    "Automorphism",
    "IsomorphyWitness",
    "InnerOrderCase",
    "HolomorphElement",
    "make_rs",
    "identity_automorphism",
    "apply",
    "compose",
    "invert",
    "is_identity",
    "same_map",
    "units",
    "is_inner",
    "inner_conjugator",
    "inner_from",
    "conjugation_map",
    "order_divides",
    "exact_order",
    "is_involution",
    "inner_is_involution",
    "classify_inner_order",
    "are_isomorphic",
    "isomorphy_classes",
    "enumerate_rs_automorphisms",
    "enumerate_automorphisms_bruteforce",
    "aut_order",
    "square_roots_of_unity",
    "count_square_roots_of_unity",
    "distinct_prime_factors",
    "holomorph_compose",
    "holomorph_identity",
    "holomorph_inverse",
]


class IncompleteFamilyWarning(UserWarning):
    """The (r, s) family does not exhaust Aut(Dc_2)."""


class ClassificationError(ValueError):
    """Inputs do not satisfy the hypotheses of the inner-order classification."""


@lru_cache(maxsize=None)
def units(m: int) -> tuple[int, ...]:
    return tuple(r for r in range(m) if math.gcd(r, m) == 1)


@dataclass(frozen=True, order=True)
class RsAutomorphism:
    """``phi_(r,s)``: x -> x^r, y -> y x^s, stored with r, s reduced mod 2n."""

    r: int
    s: int
    n: int

    def __post_init__(self):
        as_params(self.n)
        m = 2 * self.n
        if not (0 <= self.r < m and 0 <= self.s < m):
            raise ParameterError(f"(r, s) = ({self.r}, {self.s}) not reduced mod {m}; use make_rs")
        if math.gcd(self.r, m) != 1:
            raise ParameterError(f"r={self.r} is not a unit mod {m}")

    def __call__(self, g: DicyclicElement) -> DicyclicElement:
        return apply(self, g)

    def __str__(self) -> str:
        return f"phi_({self.r},{self.s})"

    @property
    def pair(self) -> tuple[int, int]:
        return (self.r, self.s)

    def to_table(self) -> TableAutomorphism:
        elements = enumerate_group(self.n)
        return TableAutomorphism(self.n, tuple(element_index(apply(self, g)) for g in elements))


@dataclass(frozen=True)
class TableAutomorphism:
    """An automorphism stored as the image index of every canonical element.

    Build with :meth:`from_generators` or :meth:`from_function`, which check
    that the map really is a bijective homomorphism.
    """

    n: int
    images: tuple[int, ...]

    def __call__(self, g: DicyclicElement) -> DicyclicElement:
        if g.n != self.n:
            raise ParameterError(f"automorphism of Dc_{self.n} applied to element of Dc_{g.n}")
        return enumerate_group(self.n)[self.images[element_index(g)]]

    @property
    def x_image(self) -> DicyclicElement:
        return enumerate_group(self.n)[self.images[1]]

    @property
    def y_image(self) -> DicyclicElement:
        return enumerate_group(self.n)[self.images[2 * self.n]]

    def __str__(self) -> str:
        return f"[x->{self.x_image}, y->{self.y_image}]"

    @classmethod
    def from_function(cls, n: int, f) -> TableAutomorphism:
        elements = enumerate_group(n)
        images = tuple(element_index(f(g)) for g in elements)
        auto = cls(n, images)
        auto.validate()
        return auto

    @classmethod
    def from_generators(cls, x_image: DicyclicElement, y_image: DicyclicElement) -> TableAutomorphism:
        """Extend ``x -> x_image, y -> y_image`` to the whole group.

        Raises :class:`ParameterError` if the images violate the defining
        relations or the extension is not bijective.
        """
        if not _satisfies_relations(x_image, y_image):
            raise ParameterError(f"x -> {x_image}, y -> {y_image} violates the Dc_n relations")
        auto = cls(x_image.n, _extend(x_image, y_image))
        auto.validate()
        return auto

    def validate(self) -> None:
        table = cayley_table(self.n)
        f = self.images
        if sorted(f) != list(range(table.order)):
            raise ParameterError(f"{self} is not a bijection")
        prod = table.product
        for i, row in enumerate(prod):
            image_row = prod[f[i]]
            for j, k in enumerate(row):
                if f[k] != image_row[f[j]]:
                    g, h = table.elements[i], table.elements[j]
                    raise ParameterError(f"{self} is not a homomorphism at ({g}, {h})")

    def to_rs(self) -> Optional[RsAutomorphism]:
        """The equal ``phi_(r,s)`` if the generator images have that shape."""
        xi, yi = self.x_image, self.y_image
        if xi.a != 0 or yi.a != 1:
            return None
        return RsAutomorphism(xi.b, yi.b, self.n)

    def to_table(self) -> TableAutomorphism:
        return self


Automorphism = Union[RsAutomorphism, TableAutomorphism]


def _satisfies_relations(xi: DicyclicElement, yi: DicyclicElement) -> bool:
    n = xi.n
    one = identity(n)
    return (
        power(xi, 2 * n) == one
        and multiply(yi, yi) == power(xi, n)
        and multiply(multiply(inverse(yi), xi), yi) == inverse(xi)
    )


def _extend(xi: DicyclicElement, yi: DicyclicElement) -> tuple[int, ...]:
    n = xi.n
    images = []
    for a in (0, 1):
        cur = yi if a else identity(n)
        for _ in range(2 * n):
            images.append(element_index(cur))
            cur = multiply(cur, xi)
    return tuple(images)


def make_rs(r: int, s: int, params: ParamsLike) -> RsAutomorphism:
    p = as_params(params)
    m = p.modulus
    if math.gcd(r % m, m) != 1:
        raise ParameterError(f"r={r} is not a unit mod {m}")
    if p.n == 2:
        warnings.warn(
            "for n = 2 the (r, s) maps are only 8 of the 24 automorphisms",
            IncompleteFamilyWarning,
            stacklevel=2,
        )
    return RsAutomorphism(r % m, s % m, p.n)


def identity_automorphism(params: ParamsLike) -> RsAutomorphism:
    return RsAutomorphism(1, 0, as_params(params).n)


def apply(phi: Automorphism, g: DicyclicElement) -> DicyclicElement:
    if isinstance(phi, TableAutomorphism):
        return phi(g)
    if phi.n != g.n:
        raise ParameterError(f"automorphism of Dc_{phi.n} applied to element of Dc_{g.n}")
    m = 2 * phi.n
    if g.a == 0:
        return DicyclicElement(0, phi.r * g.b % m, g.n)
    return DicyclicElement(1, (phi.s + phi.r * g.b) % m, g.n)


def _check_same(phi: Automorphism, psi: Automorphism) -> None:
    if phi.n != psi.n:
        raise ParameterError(f"automorphisms of Dc_{phi.n} and Dc_{psi.n} cannot be combined")


def compose(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """``phi o psi`` (apply ``psi`` first): ``(r,s)(p,q) = (rp, s + rq)``.

    Mixed or table arguments compose pointwise into a :class:`TableAutomorphism`.
    """
    _check_same(phi, psi)
    if isinstance(phi, RsAutomorphism) and isinstance(psi, RsAutomorphism):
        m = 2 * phi.n
        return RsAutomorphism(phi.r * psi.r % m, (phi.s + phi.r * psi.s) % m, phi.n)
    f, g = phi.to_table().images, psi.to_table().images
    return TableAutomorphism(phi.n, tuple(f[i] for i in g))


def invert(phi: Automorphism) -> Automorphism:
    if isinstance(phi, RsAutomorphism):
        m = 2 * phi.n
        r_inv = pow(phi.r, -1, m)
        return RsAutomorphism(r_inv, -r_inv * phi.s % m, phi.n)
    inv = [0] * len(phi.images)
    for i, j in enumerate(phi.images):
        inv[j] = i
    return TableAutomorphism(phi.n, tuple(inv))


def is_identity(phi: Automorphism) -> bool:
    if isinstance(phi, RsAutomorphism):
        return phi.r == 1 and phi.s == 0
    return all(i == j for i, j in enumerate(phi.images))


def same_map(phi: Automorphism, psi: Automorphism) -> bool:
    """Pointwise equality regardless of representation."""
    return phi.n == psi.n and phi.to_table().images == psi.to_table().images


def conjugation_map(g: DicyclicElement) -> TableAutomorphism:
    """``Inn(g)`` computed pointwise: h -> g h g^-1."""
    g_inv = inverse(g)
    return TableAutomorphism(
        g.n, tuple(element_index(multiply(multiply(g, h), g_inv)) for h in enumerate_group(g.n))
    )


def inner_from(g: DicyclicElement) -> RsAutomorphism:
    """``Inn(g)`` as ``phi_(r,s)``: Inn(x^b) = (1, -2b), Inn(y x^b) = (2n-1, 2b)."""
    m = 2 * g.n
    if g.a == 0:
        return RsAutomorphism(1, -2 * g.b % m, g.n)
    return RsAutomorphism(m - 1, 2 * g.b % m, g.n)


def inner_conjugator(phi: Automorphism) -> Optional[DicyclicElement]:
    """An element ``g`` with ``Inn(g) == phi``, or None when ``phi`` is outer."""
    if isinstance(phi, RsAutomorphism):
        m = 2 * phi.n
        if phi.s % 2:
            return None
        if phi.r == 1:
            return make_element(0, -phi.s // 2, phi.n)
        if phi.r == m - 1:
            return make_element(1, phi.s // 2, phi.n)
        return None
    for g in enumerate_group(phi.n):
        if conjugation_map(g).images == phi.images:
            return g
    return None


def is_inner(phi: Automorphism) -> bool:
    return inner_conjugator(phi) is not None


def order_divides(phi: Automorphism, k: int) -> bool:
    """Whether ``phi^k`` is the identity."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if isinstance(phi, TableAutomorphism):
        cur = phi
        for _ in range(k - 1):
            cur = compose(phi, cur)
        return is_identity(cur)
    m = 2 * phi.n
    # r^k == 1 and s (1 + r + ... + r^(k-1)) == 0
    geometric = sum(pow(phi.r, i, m) for i in range(k)) % m
    return pow(phi.r, k, m) == 1 % m and phi.s * geometric % m == 0


def aut_order(params: ParamsLike) -> int:
    """|Aut(Dc_n)|: 2n * phi(2n) for n >= 3, and 24 for n = 2."""
    p = as_params(params)
    if p.n == 2:
        return 24
    return p.modulus * len(units(p.modulus))


def exact_order(phi: Automorphism) -> int:
    bound = aut_order(phi.n)
    cur = phi
    for k in range(1, bound + 1):
        if is_identity(cur):
            return k
        cur = compose(phi, cur)
    raise AssertionError(f"{phi} has no order <= |Aut| = {bound}")


def is_involution(phi: Automorphism) -> bool:
    if isinstance(phi, RsAutomorphism):
        m = 2 * phi.n
        return (
            phi.r * phi.r % m == 1
            and phi.s * (1 + phi.r) % m == 0
            and not is_identity(phi)
        )
    return not is_identity(phi) and order_divides(phi, 2)


def inner_is_involution(g: DicyclicElement) -> bool:
    """Inn(g) is an involution exactly when g has order 4."""
    return element_order(g) == 4


class InnerOrderCase(enum.Enum):
    POWER_TRIVIAL = "a"  # g = x^b, g^k = 1, bk == 0
    POWER_CENTRAL = "b"  # g = x^b, g^k = x^n, bk == n
    REFLECTION = "c"  # g = y x^b, Inn(g) an involution


def classify_inner_order(g: DicyclicElement, k: int) -> InnerOrderCase:
    """Which type of inner automorphism ``Inn(g)`` with ``Inn(g)^k = id`` is.

    ``k`` is read as a multiple of the order of Inn(g), i.e. the condition is
    ``g^k`` central.  Needs n > 2.
    """
    n = g.n
    m = 2 * n
    if n <= 2:
        raise ClassificationError("classification needs n > 2")
    if k < 1:
        raise ClassificationError(f"k must be >= 1, got {k}")
    if g.a == 1:
        if k % 2:
            raise ClassificationError(f"Inn({g}) has order 2, which does not divide k={k}")
        return InnerOrderCase.REFLECTION
    gk = power(g, k)
    if gk.is_identity:
        assert g.b * k % m == 0
        return InnerOrderCase.POWER_TRIVIAL
    if gk == DicyclicElement(0, n, n):
        assert g.b * k % m == n
        return InnerOrderCase.POWER_CENTRAL
    raise ClassificationError(f"{g}^{k} = {gk} is not central, so Inn({g})^{k} != id")


@dataclass(frozen=True)
class IsomorphyWitness:
    """``sigma = phi_(u,v)`` with ``sigma o theta = phi o sigma``."""

    u: int
    v: int

    def automorphism(self, params: ParamsLike) -> RsAutomorphism:
        return RsAutomorphism(self.u, self.v, as_params(params).n)


def _solve_linear(coeff: int, rhs: int, m: int) -> Optional[int]:
    """Smallest v in [0, m) with coeff * v == rhs (mod m), or None."""
    d = math.gcd(coeff, m)
    if rhs % d:
        return None
    mm = m // d
    if mm == 1:
        return 0
    return (rhs // d) * pow(coeff // d, -1, mm) % mm


def are_isomorphic(phi: RsAutomorphism, theta: RsAutomorphism) -> Optional[IsomorphyWitness]:
    """Witness that ``phi_(r,s) ~ theta = phi_(p,q)``, or None.

    They are isomorphic iff r = p and ``q u - s`` lies in the subgroup
    generated by ``r - 1`` for some unit ``u``; then ``v`` solves
    ``v (r - 1) == q u - s``.
    """
    _check_same(phi, theta)
    if phi.r != theta.r:
        return None
    m = 2 * phi.n
    for u in units(m):
        v = _solve_linear(phi.r - 1, theta.s * u - phi.s, m)
        if v is not None:
            return IsomorphyWitness(u, v)
    return None


def enumerate_rs_automorphisms(params: ParamsLike) -> list[RsAutomorphism]:
    """All ``phi_(r,s)`` in lexicographic (r, s) order; 2n * phi(2n) of them."""
    p = as_params(params)
    m = p.modulus
    return [RsAutomorphism(r, s, p.n) for r in units(m) for s in range(m)]


def isomorphy_classes(params: ParamsLike) -> list[tuple[RsAutomorphism, ...]]:
    """Partition of the (r, s) automorphisms into isomorphy classes.

    Classes are sorted internally and listed by their least member.
    """
    remaining = enumerate_rs_automorphisms(params)
    classes = []
    while remaining:
        rep = remaining[0]
        members = tuple(t for t in remaining if are_isomorphic(rep, t) is not None)
        classes.append(members)
        taken = set(members)
        remaining = [t for t in remaining if t not in taken]
    return classes


def enumerate_automorphisms_bruteforce(params: ParamsLike) -> list[TableAutomorphism]:
    """Every automorphism, found by trying all images of the two generators.

    Ordered by (index of x-image, index of y-image).
    """
    p = as_params(params)
    elements = enumerate_group(p)
    size = len(elements)
    found = []
    for xi in elements:
        if element_order(xi) != 2 * p.n:
            continue
        for yi in elements:
            if not _satisfies_relations(xi, yi):
                continue
            images = _extend(xi, yi)
            if len(set(images)) != size:
                continue
            auto = TableAutomorphism(p.n, images)
            auto.validate()
            found.append(auto)
    return found


def distinct_prime_factors(k: int) -> int:
    count, d = 0, 2
    while d * d <= k:
        if k % d == 0:
            count += 1
            while k % d == 0:
                k //= d
        d += 1
    return count + (k > 1)


def count_square_roots_of_unity(params: ParamsLike) -> int:
    """Number of r mod 2n with r^2 == 1, from the factorisation of n."""
    n = as_params(params).n
    alpha, k = 0, n
    while k % 2 == 0:
        alpha += 1
        k //= 2
    w = distinct_prime_factors(k)
    if alpha == 0:
        return 2 ** w
    if alpha == 1:
        return 2 ** (w + 1)
    return 2 ** (w + 2)


def square_roots_of_unity(m: int) -> list[int]:
    return [r for r in range(m) if r * r % m == 1 % m]


@dataclass(frozen=True)
class HolomorphElement:
    """A pair (phi, g) with product (phi, g)(theta, h) = (phi o theta, g phi(h))."""

    phi: Automorphism
    g: DicyclicElement

    def __mul__(self, other: HolomorphElement) -> HolomorphElement:
        return holomorph_compose(self, other)


def holomorph_compose(e1: HolomorphElement, e2: HolomorphElement) -> HolomorphElement:
    _check_same(e1.phi, e2.phi)
    if e1.g.n != e1.phi.n or e2.g.n != e2.phi.n:
        raise ParameterError("holomorph element mixes groups")
    return HolomorphElement(compose(e1.phi, e2.phi), multiply(e1.g, apply(e1.phi, e2.g)))


def holomorph_identity(params: ParamsLike) -> HolomorphElement:
    return HolomorphElement(identity_automorphism(params), identity(params))


def holomorph_inverse(e: HolomorphElement) -> HolomorphElement:
    phi_inv = invert(e.phi)
    return HolomorphElement(phi_inv, apply(phi_inv, inverse(e.g)))
