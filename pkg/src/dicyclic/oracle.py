"""Brute-force recomputation of everything the closed forms claim.

Nothing here looks at (r, s) parameters.  Automorphisms are only ever called
pointwise, and group structure comes from :mod:`dicyclic.group` arithmetic or
from a :class:`~dicyclic.group.GroupTable`.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Sequence

from .group import (
    DicyclicElement,
    GroupTable,
    ParameterError,
    element_index,
    enumerate_group,
    inverse,
    multiply,
)

__all__ = [
    "ClosureViolation",
    "ActionClosureProblem",
    "images_of",
    "definitional_H",
    "definitional_Q",
    "definitional_R",
    "twisted_action",
    "orbit_closure",
    "orbit_partition",
    "greedy_generators",
    "conjugator_search",
    "pointwise_power_is_identity",
    "pointwise_order",
    "aut_conjugacy_classes",
    "automorphism_group_table",
    "symmetric_group_table",
    "klein_four_table",
    "cyclic_group_table",
    "isomorphism_search",
    "is_isomorphism",
]


class ClosureViolation(ValueError):
    """An action sent a carrier element outside the carrier."""


def images_of(phi) -> tuple[int, ...]:
    """Image index of every canonical element under ``phi``."""
    return tuple(element_index(phi(g)) for g in enumerate_group(phi.n))


def definitional_H(phi) -> tuple[DicyclicElement, ...]:
    return tuple(g for g in enumerate_group(phi.n) if phi(g) == g)


def definitional_Q(phi) -> tuple[DicyclicElement, ...]:
    found = {multiply(g, inverse(phi(g))) for g in enumerate_group(phi.n)}
    return tuple(sorted(found))


def definitional_R(phi) -> tuple[DicyclicElement, ...]:
    return tuple(g for g in enumerate_group(phi.n) if phi(g) == inverse(g))


def twisted_action(phi) -> Callable[[DicyclicElement, DicyclicElement], DicyclicElement]:
    def act(g, q):
        return multiply(multiply(g, q), inverse(phi(g)))

    return act


@dataclass(frozen=True)
class ActionClosureProblem:
    carrier: frozenset
    generators: tuple
    act: Callable[[Hashable, Hashable], Hashable]


def orbit_closure(problem: ActionClosureProblem, seed) -> tuple:
    """Least subset containing ``seed`` that is closed under every generator.

    Breadth first; the result is in visiting order.
    """
    if seed not in problem.carrier:
        raise ClosureViolation(f"seed {seed} is not in the carrier")
    seen = {seed}
    order = [seed]
    queue = deque([seed])
    while queue:
        q = queue.popleft()
        for g in problem.generators:
            image = problem.act(g, q)
            if image not in problem.carrier:
                raise ClosureViolation(f"{g} * {q} = {image} leaves the carrier")
            if image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
    return tuple(order)


def orbit_partition(problem: ActionClosureProblem) -> list[tuple]:
    """Orbits of the carrier, each sorted, listed by least element."""
    remaining = sorted(problem.carrier)
    done = set()
    orbits = []
    for seed in remaining:
        if seed in done:
            continue
        orbit = tuple(sorted(orbit_closure(problem, seed)))
        done.update(orbit)
        orbits.append(orbit)
    return orbits


def greedy_generators(elements: Sequence[DicyclicElement]) -> tuple[DicyclicElement, ...]:
    """A generating set for the subgroup ``elements`` (taken in given order)."""
    elements = list(elements)
    if not elements:
        return ()
    gens = []
    span = {DicyclicElement(0, 0, elements[0].n)}
    for g in elements:
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        while frontier:
            new = []
            for h in frontier:
                for k in gens:
                    p = multiply(h, k)
                    if p not in span:
                        span.add(p)
                        new.append(p)
            frontier = new
    return tuple(gens)


def conjugator_search(phi) -> Optional[DicyclicElement]:
    """Some g with g h g^-1 == phi(h) for every h, by trying all g."""
    elements = enumerate_group(phi.n)
    target = [phi(h) for h in elements]
    for g in elements:
        g_inv = inverse(g)
        if all(multiply(multiply(g, h), g_inv) == t for h, t in zip(elements, target)):
            return g
    return None


def _compose_images(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    return tuple(f[i] for i in g)


def pointwise_power_is_identity(phi, k: int) -> bool:
    f = images_of(phi)
    cur = tuple(range(len(f)))
    for _ in range(k):
        cur = _compose_images(f, cur)
    return cur == tuple(range(len(f)))


def pointwise_order(phi) -> int:
    f = images_of(phi)
    ident = tuple(range(len(f)))
    cur, k = f, 1
    while cur != ident:
        cur = _compose_images(f, cur)
        k += 1
    return k


def aut_conjugacy_classes(automorphisms: Sequence) -> list[list[int]]:
    """Classes of ``theta = sigma phi sigma^-1`` over sigma in the list.

    Returns lists of positions into ``automorphisms``, each ascending, ordered
    by their first position.  The list must be closed under composition.
    """
    tables = [images_of(a) for a in automorphisms]
    position = {t: i for i, t in enumerate(tables)}
    if len(position) != len(tables):
        raise ParameterError("automorphism list contains duplicates")
    for f in tables:
        for g in tables:
            if _compose_images(f, g) not in position:
                raise ParameterError("automorphism list is not closed under composition")
    inverses = []
    for f in tables:
        inv = [0] * len(f)
        for i, j in enumerate(f):
            inv[j] = i
        inverses.append(tuple(inv))
    classes = []
    assigned = set()
    for i, f in enumerate(tables):
        if i in assigned:
            continue
        cls = {position[_compose_images(_compose_images(s, f), s_inv)] for s, s_inv in zip(tables, inverses)}
        assigned |= cls
        classes.append(sorted(cls))
    return classes


def automorphism_group_table(automorphisms: Sequence) -> GroupTable:
    """Cayley table of a list of automorphisms under composition (f o g)."""
    tables = [images_of(a) for a in automorphisms]
    position = {t: i for i, t in enumerate(tables)}
    product = tuple(
        tuple(position[_compose_images(f, g)] for g in tables) for f in tables
    )
    ident = position[tuple(range(len(tables[0])))]
    return GroupTable(tuple(automorphisms), product, ident)


def symmetric_group_table(k: int) -> GroupTable:
    """S_k on {0..k-1}; the product ``p q`` applies ``q`` first."""
    perms = list(itertools.permutations(range(k)))
    return GroupTable.from_operation(perms, lambda p, q: tuple(p[q[i]] for i in range(k)))


def klein_four_table() -> GroupTable:
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return GroupTable.from_operation(elems, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2))


def cyclic_group_table(k: int) -> GroupTable:
    return GroupTable.from_operation(range(k), lambda a, b: (a + b) % k)


def _generators(table: GroupTable) -> list[int]:
    """Greedy generating set, preferring elements of large order."""
    by_order = sorted(range(table.order), key=lambda i: (-table.element_order(i), i))
    gens = []
    span = {table.identity_index}
    for g in by_order:
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        while frontier:
            new = []
            for h in frontier:
                for k in gens:
                    p = table.mul(h, k)
                    if p not in span:
                        span.add(p)
                        new.append(p)
            frontier = new
        if len(span) == table.order:
            break
    return gens


def _extend_hom(g1: GroupTable, g2: GroupTable, gens: Sequence[int], images: Sequence[int]) -> Optional[dict[int, int]]:
    """Extend a generator assignment along the Cayley graph; None on conflict."""
    mapping = {g1.identity_index: g2.identity_index}
    queue = deque([g1.identity_index])
    while queue:
        e = queue.popleft()
        for gen, img in zip(gens, images):
            target = g1.mul(e, gen)
            value = g2.mul(mapping[e], img)
            known = mapping.get(target)
            if known is None:
                mapping[target] = value
                queue.append(target)
            elif known != value:
                return None
    return mapping


def is_isomorphism(g1: GroupTable, g2: GroupTable, mapping: dict[int, int]) -> bool:
    if g1.order != g2.order or len(mapping) != g1.order:
        return False
    if sorted(mapping.values()) != list(range(g2.order)):
        return False
    return all(
        mapping[g1.mul(i, j)] == g2.mul(mapping[i], mapping[j])
        for i in range(g1.order)
        for j in range(g1.order)
    )


def isomorphism_search(g1: GroupTable, g2: GroupTable) -> Optional[dict[int, int]]:
    """An isomorphism ``g1 -> g2`` as an index map, or None.

    Backtracks over images of a generating set of ``g1``; candidate images
    must have the same element order.  The result is fully verified.
    """
    if g1.order != g2.order:
        return None
    profile1 = sorted(g1.element_order(i) for i in range(g1.order))
    orders2 = [g2.element_order(i) for i in range(g2.order)]
    if profile1 != sorted(orders2):
        return None
    gens = _generators(g1)
    candidates = [[j for j in range(g2.order) if orders2[j] == g1.element_order(g)] for g in gens]

    def search(chosen: list[int]) -> Optional[dict[int, int]]:
        depth = len(chosen)
        if depth == len(gens):
            mapping = _extend_hom(g1, g2, gens, chosen)
            if mapping is not None and is_isomorphism(g1, g2, mapping):
                return mapping
            return None
        for c in candidates[depth]:
            if c in chosen:
                continue
            # prune: the partial assignment must already be consistent
            if _extend_hom(g1, g2, gens[: depth + 1], chosen + [c]) is None:
                continue
            found = search(chosen + [c])
            if found is not None:
                return found
        return None

    return search([])
