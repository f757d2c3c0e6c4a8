import pytest

from dicyclic import automorphism as aut
from dicyclic import dc2, oracle
from dicyclic.automorphism import RsAutomorphism
from dicyclic.group import GroupTable, ParameterError, enumerate_group, parse_element
from dicyclic.oracle import ActionClosureProblem, ClosureViolation


def names(elements):
    return {str(g) for g in elements}


class TestDefinitions:
    def test_Q_example(self):
        assert names(oracle.definitional_Q(RsAutomorphism(5, 2, 3))) == {"1", "x^2", "x^4"}

    def test_H_identity(self):
        assert oracle.definitional_H(aut.identity_automorphism(4)) == enumerate_group(4)

    def test_R_phi_1n(self):
        n = 4
        expected = {"1", "x^4"} | {str(parse_element(f"yx^{b}", n)) for b in range(2 * n)}
        assert names(oracle.definitional_R(RsAutomorphism(1, n, n))) == expected


class TestOrbitClosure:
    def test_H_action(self):
        phi = RsAutomorphism(5, 2, 3)
        problem = ActionClosureProblem(
            frozenset(oracle.definitional_Q(phi)), oracle.definitional_H(phi), oracle.twisted_action(phi)
        )
        assert names(oracle.orbit_closure(problem, parse_element("x^2", 3))) == {"x^2", "x^4"}

    @pytest.mark.parametrize("r, s, n", [(5, 2, 3), (3, 1, 4), (1, 0, 5), (9, 3, 5)])
    def test_G_action_from_one(self, r, s, n):
        phi = RsAutomorphism(r, s, n)
        Q = oracle.definitional_Q(phi)
        problem = ActionClosureProblem(frozenset(Q), enumerate_group(n), oracle.twisted_action(phi))
        assert sorted(oracle.orbit_closure(problem, enumerate_group(n)[0])) == list(Q)

    def test_empty_generators(self):
        seed = parse_element("x", 3)
        problem = ActionClosureProblem(frozenset(enumerate_group(3)), (), lambda g, q: q)
        assert oracle.orbit_closure(problem, seed) == (seed,)

    def test_breadth_first_and_deterministic(self):
        problem = ActionClosureProblem(frozenset(range(6)), (1,), lambda g, q: (q + 2 * g) % 6)
        assert oracle.orbit_closure(problem, 0) == (0, 2, 4)
        assert oracle.orbit_partition(problem) == [(0, 2, 4), (1, 3, 5)]

    def test_minimal(self):
        phi = RsAutomorphism(5, 2, 3)
        problem = ActionClosureProblem(
            frozenset(oracle.definitional_Q(phi)), enumerate_group(3), oracle.twisted_action(phi)
        )
        orbit = set(oracle.orbit_closure(problem, enumerate_group(3)[0]))
        seed = enumerate_group(3)[0]
        for drop in orbit - {seed}:
            smaller = orbit - {drop}
            assert any(problem.act(g, q) not in smaller for g in problem.generators for q in smaller)

    def test_violation(self):
        problem = ActionClosureProblem(frozenset({0, 1}), (1,), lambda g, q: q + g)
        with pytest.raises(ClosureViolation, match="leaves the carrier"):
            oracle.orbit_closure(problem, 0)

    def test_seed_outside(self):
        problem = ActionClosureProblem(frozenset({0}), (), lambda g, q: q)
        with pytest.raises(ClosureViolation):
            oracle.orbit_closure(problem, 5)


def test_greedy_generators_span():
    for n in (3, 4, 6):
        for phi in aut.enumerate_rs_automorphisms(n):
            H = oracle.definitional_H(phi)
            gens = oracle.greedy_generators(H)
            span = oracle.orbit_closure(
                ActionClosureProblem(frozenset(H), gens, lambda g, h: g * h), enumerate_group(n)[0]
            )
            assert sorted(span) == list(H)


class TestConjugacyClasses:
    def test_dc3_matches_isomorphy(self):
        autos = aut.enumerate_rs_automorphisms(3)
        classes = [sorted(autos[i] for i in c) for c in oracle.aut_conjugacy_classes(autos)]
        assert sorted(classes) == sorted(list(c) for c in aut.isomorphy_classes(3))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_identity_singleton(self, n):
        autos = aut.enumerate_automorphisms_bruteforce(n)
        ident = next(i for i, a in enumerate(autos) if aut.is_identity(a))
        assert [ident] in oracle.aut_conjugacy_classes(autos)

    def test_dc2_sizes(self):
        classes = oracle.aut_conjugacy_classes(aut.enumerate_automorphisms_bruteforce(2))
        assert sum(map(len, classes)) == 24
        assert sorted(map(len, classes)) == [1, 3, 6, 6, 8]

    def test_not_closed(self):
        autos = aut.enumerate_rs_automorphisms(3)[:3]
        with pytest.raises(ParameterError):
            oracle.aut_conjugacy_classes(autos)


class TestIsomorphismSearch:
    def test_aut_dc2_is_s4(self):
        mapping = oracle.isomorphism_search(dc2.aut_table(), oracle.symmetric_group_table(4))
        assert mapping is not None
        assert oracle.is_isomorphism(dc2.aut_table(), oracle.symmetric_group_table(4), mapping)

    def test_inn_dc2_is_klein(self):
        inner = oracle.automorphism_group_table(list(dc2.inner_automorphisms().values()))
        mapping = oracle.isomorphism_search(inner, oracle.klein_four_table())
        assert mapping is not None and sorted(mapping.values()) == [0, 1, 2, 3]

    def test_c4_not_klein(self):
        assert oracle.isomorphism_search(oracle.cyclic_group_table(4), oracle.klein_four_table()) is None

    def test_size_mismatch(self):
        assert oracle.isomorphism_search(oracle.cyclic_group_table(4), oracle.cyclic_group_table(6)) is None

    def test_s3_not_c6(self):
        assert oracle.isomorphism_search(oracle.symmetric_group_table(3), oracle.cyclic_group_table(6)) is None

    def test_dc2_is_not_d4(self):
        # quaternion vs dihedral of order 8: same size, different order profile
        d4 = GroupTable.from_operation(
            [(a, b) for a in (0, 1) for b in range(4)],
            lambda g, h: ((g[0] + h[0]) % 2, (h[1] + (g[1] if h[0] == 0 else -g[1])) % 4),
        )
        assert d4.is_group()
        from dicyclic.group import cayley_table

        assert oracle.isomorphism_search(cayley_table(2), d4) is None

    def test_is_isomorphism_rejects_bad_map(self):
        c4 = oracle.cyclic_group_table(4)
        assert not oracle.is_isomorphism(c4, c4, {0: 0, 1: 2, 2: 0, 3: 2})
        assert oracle.is_isomorphism(c4, c4, {0: 0, 1: 3, 2: 2, 3: 1})


def test_pointwise_order_and_power():
    phi = RsAutomorphism(3, 0, 4)
    assert oracle.pointwise_order(phi) == 2
    assert oracle.pointwise_power_is_identity(phi, 4)
    assert not oracle.pointwise_power_is_identity(phi, 3)


def test_conjugator_search():
    assert oracle.conjugator_search(RsAutomorphism(3, 0, 4)) is None
    g = oracle.conjugator_search(RsAutomorphism(1, 2, 4))
    assert g is not None and aut.same_map(aut.conjugation_map(g), RsAutomorphism(1, 2, 4))


def test_oracle_has_no_closed_form_dependency():
    import ast
    import inspect

    tree = ast.parse(inspect.getsource(oracle))
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module)
    assert "symmetric" not in imported and "automorphism" not in imported
