"""The quaternion group Dc_2 and its 24 automorphisms.

Names follow the usual listing: the inner automorphisms id, Inn(x), Inn(y),
Inn(yx), and outer coset representatives phi_1 .. phi_5 given by generator
images.  Composite names such as ``phi_4 o Inn(x)`` apply ``Inn(x)`` first.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .automorphism import TableAutomorphism, compose, enumerate_automorphisms_bruteforce, exact_order
from .group import GroupTable, parse_element

N = 2

# name -> (image of x, image of y)
INNER_IMAGES = {
    "id": ("x", "y"),
    "Inn(x)": ("x", "yx^2"),
    "Inn(y)": ("x^3", "y"),
    "Inn(yx)": ("x^3", "yx^2"),
}

OUTER_REP_IMAGES = {
    "id": ("x", "y"),
    "phi_1": ("x^3", "yx^3"),
    "phi_2": ("yx^2", "x^3"),
    "phi_3": ("yx^3", "yx^2"),
    "phi_4": ("y", "yx"),
    "phi_5": ("yx", "x"),
}

# coset representative -> permutation of {1, 2, 3} in cycle notation
OUT_TO_S3 = {
    "id": "()",
    "phi_1": "(12)",
    "phi_2": "(13)",
    "phi_3": "(23)",
    "phi_4": "(123)",
    "phi_5": "(132)",
}

# row order of the usual summary table of symmetric spaces of Dc_2
SUMMARY_ROWS = (
    "id",
    "Inn(x)",
    "Inn(y)",
    "Inn(yx)",
    "phi_1",
    "phi_2",
    "phi_3",
    "phi_1 o Inn(x)",
    "phi_2 o Inn(yx)",
    "phi_3 o Inn(y)",
    "phi_4",
    "phi_5",
    "phi_4 o Inn(x)",
    "phi_4 o Inn(y)",
    "phi_4 o Inn(yx)",
    "phi_5 o Inn(x)",
    "phi_5 o Inn(y)",
    "phi_5 o Inn(yx)",
    "phi_1 o Inn(y)",
    "phi_1 o Inn(yx)",
    "phi_2 o Inn(x)",
    "phi_2 o Inn(y)",
    "phi_3 o Inn(x)",
    "phi_3 o Inn(yx)",
)


def from_images(x_image: str, y_image: str) -> TableAutomorphism:
    return TableAutomorphism.from_generators(parse_element(x_image, N), parse_element(y_image, N))


def inner_automorphisms() -> dict[str, TableAutomorphism]:
    return {name: from_images(*imgs) for name, imgs in INNER_IMAGES.items()}


def outer_representatives() -> dict[str, TableAutomorphism]:
    return {name: from_images(*imgs) for name, imgs in OUTER_REP_IMAGES.items()}


def named_automorphism(name: str) -> TableAutomorphism:
    """Look up ``id``, ``Inn(g)``, ``phi_k`` or ``phi_k o Inn(g)``."""
    inner = inner_automorphisms()
    outer = outer_representatives()
    parts = [p.strip() for p in name.split(" o ")]
    if len(parts) == 1:
        if name in inner:
            return inner[name]
        if name in outer:
            return outer[name]
    elif len(parts) == 2 and parts[0] in outer and parts[1] in inner:
        return compose(outer[parts[0]], inner[parts[1]])
    raise KeyError(name)


def summary_automorphisms() -> list[tuple[str, TableAutomorphism]]:
    """All 24 automorphisms, labelled, in summary-table order."""
    return [(name, named_automorphism(name)) for name in SUMMARY_ROWS]


def label_of(phi: TableAutomorphism) -> str:
    for name, auto in summary_automorphisms():
        if auto.images == phi.images:
            return name
    raise KeyError(str(phi))


def _parse_cycle(cycle: str) -> tuple[int, int, int]:
    perm = [0, 1, 2]
    digits = [int(c) - 1 for c in cycle.strip("()")]
    for i, d in enumerate(digits):
        perm[d] = digits[(i + 1) % len(digits)]
    return tuple(perm)


@dataclass
class Dc2AutStructure:
    inner: dict[str, TableAutomorphism]
    inner_orders: dict[str, int]
    outer_reps: dict[str, TableAutomorphism]
    outer_orders: dict[str, int]
    automorphisms: list[TableAutomorphism]
    inn_to_klein: dict[int, int] | None
    aut_to_s4: dict[int, int] | None
    out_order: int
    out_abelian: bool
    out_to_s3_is_isomorphism: bool

    @property
    def ok(self) -> bool:
        return (
            len(self.automorphisms) == 24
            and len(self.inner) == 4
            and sorted(self.inner_orders.values()) == [1, 2, 2, 2]
            and self.inn_to_klein is not None
            and self.aut_to_s4 is not None
            and self.out_order == 6
            and not self.out_abelian
            and self.out_to_s3_is_isomorphism
        )


def dc2_aut_structure() -> Dc2AutStructure:
    """Structure of Aut(Dc_2): Inn = V_4, Out = S_3, Aut = S_4.

    The isomorphisms are found by search, not assumed.
    """
    autos = enumerate_automorphisms_bruteforce(N)
    inner = inner_automorphisms()
    outer = outer_representatives()

    inn_table = oracle.automorphism_group_table(list(inner.values()))
    aut_table = oracle.automorphism_group_table(autos)
    inn_iso = oracle.isomorphism_search(inn_table, oracle.klein_four_table())
    aut_iso = oracle.isomorphism_search(aut_table, oracle.symmetric_group_table(4))

    # Aut/Inn as sets of cosets phi o Inn
    def coset(phi):
        return frozenset(compose(phi, i).images for i in inner.values())

    cosets = {coset(a) for a in autos}
    rep_coset = {name: coset(phi) for name, phi in outer.items()}
    coset_name = {c: name for name, c in rep_coset.items()}
    names = list(outer)

    def coset_product(a, b):
        return coset_name[coset(compose(outer[a], outer[b]))]

    abelian = all(coset_product(a, b) == coset_product(b, a) for a in names for b in names)
    perms = {name: _parse_cycle(OUT_TO_S3[name]) for name in names}
    s3_ok = len(set(rep_coset.values())) == len(cosets) == 6 and all(
        perms[coset_product(a, b)] == tuple(perms[a][perms[b][i]] for i in range(3))
        for a in names
        for b in names
    )
    return Dc2AutStructure(
        inner=inner,
        inner_orders={name: exact_order(phi) for name, phi in inner.items()},
        outer_reps=outer,
        outer_orders={name: exact_order(phi) for name, phi in outer.items()},
        automorphisms=autos,
        inn_to_klein=inn_iso,
        aut_to_s4=aut_iso,
        out_order=len(cosets),
        out_abelian=abelian,
        out_to_s3_is_isomorphism=s3_ok,
    )


def aut_table() -> GroupTable:
    return oracle.automorphism_group_table(enumerate_automorphisms_bruteforce(N))
