"""Property sweeps behind ``dicyclic verify``.

Each check takes ``(n, ops)`` and returns how many cases passed plus the
counterexamples it found.  ``ops`` carries the operations under test so a
fault can be swapped in to make sure the sweep notices.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

from . import automorphism as aut
from . import oracle
from . import symmetric as sym
from .group import (
    center,
    element_order,
    enumerate_group,
    identity,
    inverse,
    make_element,
    multiply,
)

EXHAUSTIVE_ASSOC_N = 6
EXHAUSTIVE_COMPOSE_N = 8
EXHAUSTIVE_ORDER_N = 8
INNER_ORACLE_N = 10
ISOMORPHY_ORACLE_N = 10
SAMPLES = 200


@dataclass(frozen=True)
class Ops:
    compose: Callable = aut.compose
    apply: Callable = aut.apply


def _mutated_compose(phi, psi):
    """Deliberately wrong composition law, (r,s)(p,q) = (rp, s + q)."""
    if isinstance(phi, aut.RsAutomorphism) and isinstance(psi, aut.RsAutomorphism):
        m = 2 * phi.n
        return aut.RsAutomorphism(phi.r * psi.r % m, (phi.s + psi.s) % m, phi.n)
    return aut.compose(phi, psi)


FAULTS = {"compose": {"compose": _mutated_compose}}


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(detail)


def _automorphisms(n: int) -> list:
    if n == 2:
        return aut.enumerate_automorphisms_bruteforce(2)
    return aut.enumerate_rs_automorphisms(n)


def check_group_axioms(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("group axioms")
    G = enumerate_group(n)
    one = identity(n)
    if n <= EXHAUSTIVE_ASSOC_N:
        triples = itertools.product(G, repeat=3)
    else:
        rng = random.Random(n)
        triples = ((rng.choice(G), rng.choice(G), rng.choice(G)) for _ in range(SAMPLES))
    for g, h, k in triples:
        res.record(
            multiply(multiply(g, h), k) == multiply(g, multiply(h, k)),
            f"n={n}: ({g}{h}){k} != {g}({h}{k})",
        )
    for g in G:
        res.record(multiply(one, g) == g == multiply(g, one), f"n={n}: identity law fails at {g}")
        res.record(multiply(g, inverse(g)) == one, f"n={n}: {g} * inverse != 1")
    return res


def check_structure(n: int, ops: Ops) -> CheckResult:
    """Normal form, normality of <x>, centre and order profile."""
    res = CheckResult("structure")
    G = enumerate_group(n)
    m = 2 * n
    res.record(len(set(G)) == 4 * n, f"n={n}: {len(set(G))} distinct elements")
    for g in G:
        res.record(make_element(g.a, g.b, n) == g, f"n={n}: make_element not idempotent at {g}")
        for k in range(m):
            c = multiply(multiply(g, make_element(0, k, n)), inverse(g))
            res.record(c.a == 0, f"n={n}: {g} x^{k} {g}^-1 = {c} not in <x>")
    commutant = tuple(g for g in G if all(multiply(g, h) == multiply(h, g) for h in G))
    res.record(commutant == center(n), f"n={n}: centre {commutant}")
    for g in G:
        brute = next(k for k in range(1, 4 * n + 1) if (g ** k).is_identity)
        expected = 4 if g.a else m // math.gcd(g.b, m)
        res.record(element_order(g) == brute == expected, f"n={n}: order of {g}")
    fours = sum(1 for g in G if element_order(g) == 4)
    res.record(fours == (2 * n + 2 if n % 2 == 0 else 2 * n), f"n={n}: {fours} elements of order 4")
    return res


def check_parametrization(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("parametrization completeness")
    brute = {a.images for a in aut.enumerate_automorphisms_bruteforce(n)}
    family = {a.to_table().images for a in aut.enumerate_rs_automorphisms(n)}
    if n == 2:
        res.record(family < brute and len(brute) == 24, f"n=2: family {len(family)}, brute {len(brute)}")
    else:
        res.record(brute == family, f"n={n}: brute force {len(brute)} != family {len(family)}")
        res.record(len(brute) == aut.aut_order(n), f"n={n}: |Aut| = {len(brute)}")
    return res


def check_compose(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("compose coherence")
    autos = aut.enumerate_rs_automorphisms(n)
    G = enumerate_group(n)
    if n <= EXHAUSTIVE_COMPOSE_N:
        pairs = itertools.product(autos, repeat=2)
    else:
        rng = random.Random(n)
        pairs = ((rng.choice(autos), rng.choice(autos)) for _ in range(SAMPLES))
    for phi, psi in pairs:
        c = ops.compose(phi, psi)
        ok = all(ops.apply(c, g) == ops.apply(phi, ops.apply(psi, g)) for g in G)
        ok = ok and aut.same_map(ops.compose(phi, aut.invert(phi)), aut.identity_automorphism(n))
        res.record(ok, f"n={n}: compose({phi}, {psi}) = {c} disagrees pointwise")
    return res


def check_orders(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("order criteria")
    for phi in _automorphisms(n):
        order = oracle.pointwise_order(phi)
        res.record(aut.exact_order(phi) == order, f"n={n}: exact_order({phi})")
        res.record(aut.is_involution(phi) == (order == 2), f"n={n}: is_involution({phi})")
        if n <= EXHAUSTIVE_ORDER_N:
            for k in range(1, 2 * n + 1):
                res.record(
                    aut.order_divides(phi, k) == oracle.pointwise_power_is_identity(phi, k),
                    f"n={n}: order_divides({phi}, {k})",
                )
    return res


def check_inner(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("inner criterion")
    if n > INNER_ORACLE_N:
        return res
    for phi in _automorphisms(n):
        witness = aut.inner_conjugator(phi)
        brute = oracle.conjugator_search(phi)
        ok = (witness is None) == (brute is None)
        if witness is not None:
            ok = ok and aut.same_map(aut.conjugation_map(witness), phi)
        res.record(ok, f"n={n}: is_inner({phi})")
    for g in enumerate_group(n):
        res.record(
            aut.inner_is_involution(g) == (oracle.pointwise_order(aut.conjugation_map(g)) == 2),
            f"n={n}: inner_is_involution({g})",
        )
    return res


def check_isomorphy(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("isomorphy criterion")
    if n == 2 or n > ISOMORPHY_ORACLE_N:
        return res
    autos = aut.enumerate_rs_automorphisms(n)
    brute = [sorted(autos[i] for i in cls) for cls in oracle.aut_conjugacy_classes(autos)]
    classes = [sorted(c) for c in aut.isomorphy_classes(n)]
    res.record(sorted(brute) == sorted(classes), f"n={n}: isomorphy classes differ from Aut-conjugacy")
    for cls in classes:
        res.record(len({aut.exact_order(p) for p in cls}) == 1, f"n={n}: class of {cls[0]} mixes orders")
    return res


def check_square_roots(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("square roots of unity")
    count = len(aut.square_roots_of_unity(2 * n))
    res.record(aut.count_square_roots_of_unity(n) == count, f"n={n}: formula != {count}")
    return res


def check_holomorph(n: int, ops: Ops) -> CheckResult:
    res = CheckResult("holomorph axioms")
    if n == 2:
        return res
    rng = random.Random(n)
    autos = aut.enumerate_rs_automorphisms(n)
    G = enumerate_group(n)
    one = aut.holomorph_identity(n)
    for _ in range(50):
        e1, e2, e3 = (aut.HolomorphElement(rng.choice(autos), rng.choice(G)) for _ in range(3))
        res.record((e1 * e2) * e3 == e1 * (e2 * e3), f"n={n}: holomorph associativity")
        res.record(one * e1 == e1 == e1 * one, f"n={n}: holomorph identity")
        res.record(e1 * aut.holomorph_inverse(e1) == one, f"n={n}: holomorph inverse")
    return res


def check_spaces(n: int, ops: Ops) -> CheckResult:
    """Closed forms against definitions, orbit structure and the coset law."""
    res = CheckResult("symmetric spaces")
    for phi in _automorphisms(n):
        try:
            report = sym.build_space_report(phi)
        except sym.ConsistencyError as exc:
            res.record(False, f"n={n}: {phi}: {exc}")
            continue
        res.record(True, "")
        if report.order == 2:
            res.record(
                len(report.Q) * len(report.H) == 4 * n and sym.coset_bijection_check(phi),
                f"n={n}: coset law fails for {phi}",
            )
    return res


CHECKS = (
    check_group_axioms,
    check_structure,
    check_parametrization,
    check_compose,
    check_orders,
    check_inner,
    check_isomorphy,
    check_square_roots,
    check_holomorph,
    check_spaces,
)


def _run_one(n: int, fault: str | None) -> list[CheckResult]:
    ops = replace(Ops(), **FAULTS[fault]) if fault else Ops()
    return [check(n, ops) for check in CHECKS]


def run_verification(n_min: int, n_max: int, jobs: int = 1, fault: str | None = None) -> list[CheckResult]:
    """Run every check for each n in the range; results merged per check name."""
    ns = list(range(n_min, n_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_n = list(pool.map(_run_one, ns, [fault] * len(ns)))
    else:
        per_n = [_run_one(n, fault) for n in ns]
    merged: dict[str, CheckResult] = {}
    for results in per_n:
        for r in results:
            total = merged.setdefault(r.name, CheckResult(r.name))
            total.passed += r.passed
            total.failures.extend(r.failures)
    return list(merged.values())
