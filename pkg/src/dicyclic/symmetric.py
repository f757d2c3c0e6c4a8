"""Fixed points, symmetric spaces, split elements and twisted-conjugation orbits.

For ``phi = phi_(r,s)`` on Dc_n (all exponents mod 2n)::

    H = {x^b : b(1-r) == 0}  u  {y x^b : b(1-r) == s}
    Q = {x^(b(1-r))}  u  {x^(s + b(r-1))}
    R = {x^b : b(r+1) == 0}  u  {y x^b : s + rb == n + b}

Every function also accepts a :class:`~dicyclic.automorphism.TableAutomorphism`.
When that map has no (r, s) form (possible only for n = 2) the sets come from
the definitions instead, and orbits use the fact that on Dc_2 every H-orbit
is a single point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import oracle
from .automorphism import (
    Automorphism,
    RsAutomorphism,
    exact_order,
    inner_conjugator,
    is_identity,
    is_involution,
)
from .group import DicyclicElement, ParameterError, enumerate_group, inverse, multiply

__all__ = [
    "ConsistencyError",
    "SpaceReport",
    "rs_form",
    "in_cyclic_subgroup",
    "fixed_point_group",
    "generalized_symmetric_space",
    "inner_QH",
    "split_elements",
    "r_minus_q",
    "twisted_conjugate",
    "h_orbits",
    "g_orbits",
    "coset_bijection_check",
    "build_space_report",
]


class ConsistencyError(AssertionError):
    """Closed-form and brute-force results disagree."""


def rs_form(phi: Automorphism) -> Optional[RsAutomorphism]:
    if isinstance(phi, RsAutomorphism):
        return phi
    return phi.to_rs()


def in_cyclic_subgroup(j: int, generator: int, m: int) -> bool:
    """Whether j lies in the subgroup of Z_m generated by ``generator``."""
    return j % math.gcd(generator, m) == 0


def _x(b: int, n: int) -> DicyclicElement:
    return DicyclicElement(0, b % (2 * n), n)


def _yx(b: int, n: int) -> DicyclicElement:
    return DicyclicElement(1, b % (2 * n), n)


def fixed_point_group(phi: Automorphism) -> tuple[DicyclicElement, ...]:
    rs = rs_form(phi)
    if rs is None:
        return oracle.definitional_H(phi)
    r, s, n = rs.r, rs.s, rs.n
    m = 2 * n
    return tuple(_x(b, n) for b in range(m) if b * (1 - r) % m == 0) + tuple(
        _yx(b, n) for b in range(m) if (b * (1 - r) - s) % m == 0
    )


def generalized_symmetric_space(phi: Automorphism) -> tuple[DicyclicElement, ...]:
    rs = rs_form(phi)
    if rs is None:
        return oracle.definitional_Q(phi)
    r, s, n = rs.r, rs.s, rs.n
    m = 2 * n
    exps = {b * (1 - r) % m for b in range(m)} | {(s + b * (r - 1)) % m for b in range(m)}
    return tuple(_x(j, n) for j in sorted(exps))


def inner_QH(phi: Automorphism) -> tuple[tuple[DicyclicElement, ...], tuple[DicyclicElement, ...]]:
    """(Q, H) for a non-trivial inner automorphism, read off from (r, s) directly."""
    rs = rs_form(phi)
    if rs is None or is_identity(rs) or inner_conjugator(rs) is None:
        raise ParameterError(f"{phi} is not a non-trivial inner automorphism")
    r, s, n = rs.r, rs.s, rs.n
    m = 2 * n
    if r == 1:
        Q = tuple(sorted({_x(0, n), _x(s, n)}))
        H = tuple(_x(b, n) for b in range(m))
    else:
        Q = tuple(_x(b, n) for b in range(0, m, 2))
        H = tuple(sorted({_x(0, n), _x(n, n), _yx(s // 2, n), _yx(s // 2 + n, n)}))
    return Q, H


def split_elements(phi: Automorphism) -> tuple[DicyclicElement, ...]:
    rs = rs_form(phi)
    if rs is None:
        return oracle.definitional_R(phi)
    r, s, n = rs.r, rs.s, rs.n
    m = 2 * n
    return tuple(_x(b, n) for b in range(m) if b * (r + 1) % m == 0) + tuple(
        _yx(b, n) for b in range(m) if (s + r * b - n - b) % m == 0
    )


def r_minus_q(phi: Automorphism) -> tuple[DicyclicElement, ...]:
    """Split elements that are not in Q."""
    rs = rs_form(phi)
    if rs is None:
        Q = set(oracle.definitional_Q(phi))
        return tuple(g for g in oracle.definitional_R(phi) if g not in Q)
    r, s, n = rs.r, rs.s, rs.n
    m = 2 * n
    powers = tuple(
        _x(k, n)
        for k in range(m)
        if k * (r + 1) % m == 0
        and not in_cyclic_subgroup(k, 1 - r, m)
        and not in_cyclic_subgroup(k - s, r - 1, m)
    )
    return powers + tuple(_yx(l, n) for l in range(m) if (s + r * l - n - l) % m == 0)


def twisted_conjugate(g: DicyclicElement, q: DicyclicElement, phi: Automorphism) -> DicyclicElement:
    """``g * q = g q phi(g)^-1``."""
    if not g.n == q.n == phi.n:
        raise ParameterError("twisted conjugation mixes groups")
    return multiply(multiply(g, q), inverse(phi(g)))


def h_orbits(phi: Automorphism) -> list[tuple[DicyclicElement, ...]]:
    """Orbits of H on Q under twisted conjugation.

    Pairs ``{x^j, x^-j}`` when H contains some ``y x^b`` (that is, when s is in
    the subgroup generated by 1 - r), singletons otherwise.
    """
    Q = generalized_symmetric_space(phi)
    rs = rs_form(phi)
    if rs is None:
        # Dc_2 outside the (r, s) family
        return [(q,) for q in Q]
    m = 2 * rs.n
    if not in_cyclic_subgroup(rs.s, 1 - rs.r, m):
        return [(q,) for q in Q]
    orbits = {tuple(sorted({q, inverse(q)})) for q in Q}
    return sorted(orbits)


def g_orbits(phi: Automorphism) -> list[tuple[DicyclicElement, ...]]:
    """G acts transitively on Q."""
    return [generalized_symmetric_space(phi)]


def coset_bijection_check(phi: Automorphism) -> bool:
    """For an involution, whether g -> g phi(g)^-1 identifies G/H with Q.

    Checks that the map is constant on each left coset gH and that distinct
    cosets land on distinct points.
    """
    if not is_involution(phi):
        raise ParameterError(f"{phi} is not an involution")
    H = fixed_point_group(phi)
    Q = set(generalized_symmetric_space(phi))
    elements = enumerate_group(phi.n)
    image_of_coset = {}
    for g in elements:
        coset = frozenset(multiply(g, h) for h in H)
        images = {multiply(c, inverse(phi(c))) for c in coset}
        if len(images) != 1:
            return False
        image_of_coset[coset] = images.pop()
    values = list(image_of_coset.values())
    return len(set(values)) == len(values) and set(values) == Q and len(Q) * len(H) == len(elements)


@dataclass(frozen=True)
class SpaceReport:
    phi: Automorphism
    order: int
    inner: bool
    H: tuple[DicyclicElement, ...]
    Q: tuple[DicyclicElement, ...]
    R: tuple[DicyclicElement, ...]
    R_minus_Q: tuple[DicyclicElement, ...]
    h_orbits: list[tuple[DicyclicElement, ...]]
    g_orbits: list[tuple[DicyclicElement, ...]]
    # which computations produced each set: "closed-form+oracle" or "oracle"
    provenance: dict[str, str] = field(default_factory=dict)

    @property
    def is_involution(self) -> bool:
        return self.order == 2

    @property
    def r_beyond_paper(self) -> bool:
        """R is only tabulated for involutions; flag it for everything else."""
        return not self.is_involution


def _check(name: str, closed, brute) -> None:
    if closed != brute:
        raise ConsistencyError(
            f"{name}: closed form {[str(g) for g in closed]} != brute force {[str(g) for g in brute]}"
        )


def _subgroup_problems(H: tuple[DicyclicElement, ...]) -> Optional[str]:
    Hs = set(H)
    if not H or DicyclicElement(0, 0, H[0].n) not in Hs:
        return "H does not contain 1"
    if any(multiply(a, b) not in Hs for a in H for b in H):
        return "H is not closed under multiplication"
    if any(inverse(a) not in Hs for a in H):
        return "H is not closed under inverses"
    return None


def build_space_report(phi: Automorphism) -> SpaceReport:
    """H, Q, R, R - Q and both orbit partitions, each cross-checked by brute force.

    Raises :class:`ConsistencyError` naming the first set where the closed
    form and the definition disagree, or the first broken invariant.
    """
    n = phi.n
    closed = rs_form(phi) is not None
    H_o = oracle.definitional_H(phi)
    Q_o = oracle.definitional_Q(phi)
    R_o = oracle.definitional_R(phi)
    RmQ_o = tuple(g for g in R_o if g not in set(Q_o))
    act = oracle.twisted_action(phi)
    # closing under generators gives the same orbits as closing under the group
    h_oracle = oracle.orbit_partition(
        oracle.ActionClosureProblem(frozenset(Q_o), oracle.greedy_generators(H_o), act)
    )
    g_gens = (DicyclicElement(0, 1, n), DicyclicElement(1, 0, n))
    g_oracle = oracle.orbit_partition(oracle.ActionClosureProblem(frozenset(Q_o), g_gens, act))

    H = fixed_point_group(phi)
    Q = generalized_symmetric_space(phi)
    R = split_elements(phi)
    RmQ = r_minus_q(phi)
    ho = h_orbits(phi)
    go = g_orbits(phi)
    for name, c, b in (
        ("H", H, H_o),
        ("Q", Q, Q_o),
        ("R", R, R_o),
        ("R-Q", RmQ, RmQ_o),
        ("h_orbits", ho, h_oracle),
        ("g_orbits", go, g_oracle),
    ):
        _check(name, c, b)

    problem = _subgroup_problems(H)
    if problem:
        raise ConsistencyError(problem)
    one = DicyclicElement(0, 0, n)
    if one not in set(Q):
        raise ConsistencyError("1 is not in Q")
    for name, parts in (("h_orbits", ho), ("g_orbits", go)):
        flat = [q for orbit in parts for q in orbit]
        if sorted(flat) != list(Q):
            raise ConsistencyError(f"{name} is not a partition of Q")
    order = exact_order(phi)
    if order == 2 and not set(Q) <= set(R):
        raise ConsistencyError("Q is not contained in R for an involution")

    source = "closed-form+oracle" if closed else "oracle"
    provenance = {key: source for key in ("H", "Q", "R", "R-Q")}
    if closed:
        provenance["h_orbits"] = provenance["g_orbits"] = source
    else:
        # Dc_2 point-orbit and transitivity statements, checked by closure
        provenance["h_orbits"] = provenance["g_orbits"] = "dc2-proposition+oracle"
    return SpaceReport(
        phi=phi,
        order=order,
        inner=inner_conjugator(phi) is not None,
        H=H,
        Q=Q,
        R=R,
        R_minus_Q=RmQ,
        h_orbits=ho,
        g_orbits=go,
        provenance=provenance,
    )
