import itertools
import math
import random
import warnings

import pytest

from dicyclic import automorphism as aut
from dicyclic import oracle
from dicyclic.automorphism import (
    ClassificationError,
    HolomorphElement,
    IncompleteFamilyWarning,
    InnerOrderCase,
    RsAutomorphism,
    TableAutomorphism,
)
from dicyclic.group import ParameterError, enumerate_group, identity, inverse, parse_element
from matrix_model import MatrixModel


def rs(r, s, n):
    return RsAutomorphism(r % (2 * n), s % (2 * n), n)


def el(text, n):
    return parse_element(text, n)


def totient(m):
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


class TestMakeRs:
    def test_valid(self):
        phi = aut.make_rs(5, 2, 3)
        assert phi.pair == (5, 2)

    def test_reduces(self):
        assert aut.make_rs(11, -1, 3).pair == (5, 5)

    def test_identity(self):
        phi = aut.make_rs(1, 0, 4)
        assert aut.is_identity(phi)
        assert all(phi(g) == g for g in enumerate_group(4))

    def test_non_unit_rejected(self):
        with pytest.raises(ParameterError):
            aut.make_rs(2, 0, 3)
        with pytest.raises(ParameterError):
            RsAutomorphism(2, 0, 3)

    def test_n2_warns(self):
        with pytest.warns(IncompleteFamilyWarning):
            aut.make_rs(1, 0, 2)


class TestApply:
    def test_x_image(self):
        assert aut.make_rs(5, 2, 3)(el("x", 3)) == el("x^5", 3)

    def test_yx_image_by_homomorphism(self):
        # phi(yx) = phi(y) phi(x) = (y x^2)(x^5), evaluated in the matrix model
        model = MatrixModel(3)
        expected = model.identify(model.word([("y", 1), ("x", 2), ("x", 5)]))
        assert aut.make_rs(5, 2, 3)(el("yx", 3)) == expected == el("yx", 3)

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_phi_1n(self, n):
        phi = rs(1, n, n)
        for b in range(2 * n):
            assert phi(el(f"yx^{b}", n)) == el(f"yx^{n + b}", n)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_every_rs_map_is_a_homomorphism(self, n):
        model = MatrixModel(n)
        G = enumerate_group(n)
        for phi in aut.enumerate_rs_automorphisms(n):
            for g, h in itertools.product(G, repeat=2):
                assert phi(model.mul(g, h)) == model.mul(phi(g), phi(h))

    def test_mismatched_group(self):
        with pytest.raises(ParameterError):
            rs(1, 0, 3)(el("x", 4))


class TestCompose:
    def test_law_example(self):
        assert aut.compose(rs(5, 2, 3), rs(5, 1, 3)).pair == (1, 1)

    def test_identity_left(self):
        for phi in aut.enumerate_rs_automorphisms(4):
            assert aut.compose(aut.identity_automorphism(4), phi) == phi

    @pytest.mark.parametrize("n", range(2, 9))
    def test_pointwise_exhaustive(self, n):
        autos = aut.enumerate_rs_automorphisms(n)
        G = enumerate_group(n)
        for phi, psi in itertools.product(autos, repeat=2):
            c = aut.compose(phi, psi)
            assert all(c(g) == phi(psi(g)) for g in G)

    def test_random_pair_n6(self):
        rng = random.Random(6)
        autos = aut.enumerate_rs_automorphisms(6)
        phi, psi = rng.choice(autos), rng.choice(autos)
        c = aut.compose(phi, psi)
        assert [c(g) for g in enumerate_group(6)] == [phi(psi(g)) for g in enumerate_group(6)]

    def test_mixed_representations(self):
        phi, psi = rs(5, 1, 3), rs(1, 2, 3)
        mixed = aut.compose(phi.to_table(), psi)
        assert isinstance(mixed, TableAutomorphism)
        assert aut.same_map(mixed, aut.compose(phi, psi))

    def test_mismatched(self):
        with pytest.raises(ParameterError):
            aut.compose(rs(1, 0, 3), rs(1, 0, 4))

    def test_worked_example_order(self):
        # (5,1)o(5,2) under (rp, s + rq) is (1, 5), and so is (5,0)o(5,1)
        assert aut.compose(rs(5, 1, 3), rs(5, 2, 3)).pair == (1, 5)
        assert aut.compose(rs(5, 0, 3), rs(5, 1, 3)).pair == (1, 5)


class TestInvert:
    def test_search_oracle(self):
        phi = rs(5, 2, 3)
        found = [
            psi for psi in aut.enumerate_rs_automorphisms(3)
            if aut.is_identity(aut.compose(phi, psi))
        ]
        assert found == [aut.invert(phi)] == [rs(5, 2, 3)]

    def test_r_one(self):
        for s in range(8):
            assert aut.invert(rs(1, s, 4)) == rs(1, -s, 4)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_reflections_self_inverse(self, n):
        for s in range(2 * n):
            phi = rs(2 * n - 1, s, n)
            assert aut.is_identity(aut.compose(phi, phi))
            assert aut.invert(phi) == phi

    def test_table_inverse(self):
        for phi in aut.enumerate_automorphisms_bruteforce(2):
            assert aut.is_identity(aut.compose(phi, aut.invert(phi)))


class TestInner:
    def test_examples(self):
        assert aut.inner_conjugator(rs(1, 2, 4)) == el("x^7", 4)  # x^-1
        assert not aut.is_inner(rs(3, 0, 4))
        assert not aut.is_inner(rs(9, 1, 5))

    def test_inner_from(self):
        assert aut.inner_from(el("x", 3)).pair == (1, 4)
        assert aut.inner_from(el("y", 3)).pair == (5, 0)
        assert aut.is_identity(aut.inner_from(el("x^3", 3)))

    @pytest.mark.parametrize("n", range(2, 11))
    def test_inner_from_matches_conjugation(self, n):
        for g in enumerate_group(n):
            assert aut.same_map(aut.inner_from(g), aut.conjugation_map(g))

    @pytest.mark.parametrize("n", range(2, 11))
    def test_criterion_matches_conjugator_search(self, n):
        autos = aut.enumerate_rs_automorphisms(n) if n > 2 else aut.enumerate_automorphisms_bruteforce(2)
        for phi in autos:
            witness = aut.inner_conjugator(phi)
            brute = oracle.conjugator_search(phi)
            assert (witness is None) == (brute is None), phi
            if witness is not None:
                assert aut.same_map(aut.conjugation_map(witness), phi)

    def test_inner_count_n4(self):
        inner = [phi for phi in aut.enumerate_rs_automorphisms(4) if aut.is_inner(phi)]
        assert len(inner) == 8
        assert {phi.r for phi in inner} == {1, 7} and all(phi.s % 2 == 0 for phi in inner)


class TestOrders:
    def test_order_divides_examples(self):
        phi = rs(5, 2, 3)
        assert aut.order_divides(phi, 2)
        assert oracle.pointwise_power_is_identity(phi, 2)
        assert aut.order_divides(aut.identity_automorphism(7), 1)
        assert aut.order_divides(rs(3, 0, 4), 2)

    def test_order_divides_rejects_k(self):
        with pytest.raises(ParameterError):
            aut.order_divides(rs(1, 0, 3), 0)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_order_divides_exhaustive(self, n):
        autos = aut.enumerate_rs_automorphisms(n) if n > 2 else aut.enumerate_automorphisms_bruteforce(2)
        for phi in autos:
            for k in range(1, 2 * n + 1):
                assert aut.order_divides(phi, k) == oracle.pointwise_power_is_identity(phi, k)

    def test_exact_order_examples(self):
        assert aut.exact_order(aut.identity_automorphism(3)) == 1
        assert aut.exact_order(rs(5, 2, 3)) == 2 == oracle.pointwise_order(rs(5, 2, 3))
        phi4 = TableAutomorphism.from_generators(el("y", 2), el("yx", 2))
        assert aut.exact_order(phi4) == 3

    @pytest.mark.parametrize("n", range(2, 13))
    def test_involution_iff_order_two(self, n):
        autos = aut.enumerate_rs_automorphisms(n) if n > 2 else aut.enumerate_automorphisms_bruteforce(2)
        for phi in autos:
            order = aut.exact_order(phi)
            assert order == oracle.pointwise_order(phi)
            assert aut.aut_order(n) % order == 0
            assert aut.is_involution(phi) == (order == 2)

    def test_involution_examples(self):
        for n in (3, 4, 5):
            assert aut.is_involution(rs(1, n, n))
            for s in range(2 * n):
                assert aut.is_involution(rs(2 * n - 1, s, n))
        assert not aut.is_involution(rs(1, 0, 3))


class TestInnerInvolution:
    def test_examples(self):
        assert aut.inner_is_involution(el("yx^3", 5))
        assert not aut.inner_is_involution(el("x^5", 5))
        assert not aut.inner_is_involution(el("x", 4))
        # oracle: conjugating twice by x in Dc_4 is not the identity
        assert not oracle.pointwise_power_is_identity(aut.conjugation_map(el("x", 4)), 2)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_matches_pointwise(self, n):
        for g in enumerate_group(n):
            assert aut.inner_is_involution(g) == (oracle.pointwise_order(aut.conjugation_map(g)) == 2)


class TestClassifyInnerOrder:
    def test_case_a(self):
        g = el("x^2", 4)
        assert oracle.pointwise_power_is_identity(aut.conjugation_map(g), 4)
        assert aut.classify_inner_order(g, 4) is InnerOrderCase.POWER_TRIVIAL

    def test_case_b(self):
        g = el("x", 4)
        assert oracle.pointwise_power_is_identity(aut.conjugation_map(g), 4)
        assert aut.classify_inner_order(g, 4) is InnerOrderCase.POWER_CENTRAL

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_case_c(self, n):
        assert aut.classify_inner_order(el("yx", n), 2) is InnerOrderCase.REFLECTION
        assert aut.is_involution(aut.inner_from(el("yx", n)))

    def test_hypothesis_violations(self):
        with pytest.raises(ClassificationError):
            aut.classify_inner_order(el("x", 4), 3)
        with pytest.raises(ClassificationError):
            aut.classify_inner_order(el("yx", 4), 3)
        with pytest.raises(ClassificationError):
            aut.classify_inner_order(el("x", 2), 2)

    @pytest.mark.parametrize("n", range(3, 11))
    def test_exactly_when_power_is_identity(self, n):
        for g in enumerate_group(n):
            inn = aut.conjugation_map(g)
            for k in range(1, 2 * n + 1):
                holds = oracle.pointwise_power_is_identity(inn, k)
                if holds:
                    case = aut.classify_inner_order(g, k)
                    assert (case is InnerOrderCase.REFLECTION) == (g.a == 1)
                else:
                    with pytest.raises(ClassificationError):
                        aut.classify_inner_order(g, k)


class TestIsomorphy:
    def test_worked_example(self):
        phi, theta = rs(5, 2, 3), rs(5, 0, 3)
        w = aut.are_isomorphic(phi, theta)
        assert w is not None
        sigma = w.automorphism(3)
        assert aut.compose(sigma, theta) == aut.compose(phi, sigma)

    def test_different_r(self):
        assert aut.are_isomorphic(rs(3, 0, 4), rs(7, 0, 4)) is None

    def test_reflexive_witness(self):
        w = aut.are_isomorphic(rs(5, 2, 3), rs(5, 2, 3))
        assert (w.u, w.v) == (1, 0)

    @pytest.mark.parametrize("n", range(3, 11))
    def test_witnesses_and_equivalence(self, n):
        autos = aut.enumerate_rs_automorphisms(n)
        rel = {}
        for phi, theta in itertools.product(autos, repeat=2):
            w = aut.are_isomorphic(phi, theta)
            rel[phi, theta] = w is not None
            if w is not None:
                sigma = w.automorphism(n)
                assert aut.compose(sigma, theta) == aut.compose(phi, sigma)
        for phi, theta in itertools.product(autos, repeat=2):
            assert rel[phi, theta] == rel[theta, phi]
        rng = random.Random(n)
        for _ in range(300):
            a, b, c = (rng.choice(autos) for _ in range(3))
            if rel[a, b] and rel[b, c]:
                assert rel[a, c]

    @pytest.mark.parametrize("n", range(3, 11))
    def test_classes_match_aut_conjugacy(self, n):
        autos = aut.enumerate_rs_automorphisms(n)
        brute = sorted(sorted(autos[i] for i in cls) for cls in oracle.aut_conjugacy_classes(autos))
        classes = aut.isomorphy_classes(n)
        assert sorted(list(c) for c in classes) == brute
        for cls in classes:
            assert len({aut.exact_order(p) for p in cls}) == 1
            assert cls[0] == min(cls)

    def test_partition(self):
        classes = aut.isomorphy_classes(6)
        flat = [p for c in classes for p in c]
        assert sorted(flat) == aut.enumerate_rs_automorphisms(6)
        assert len(flat) == len(set(flat))

    def test_class_of_phi_1n(self):
        n = 3
        cls = next(c for c in aut.isomorphy_classes(n) if rs(1, n, n) in c)
        expected = {rs(1, q, n) for q in range(2 * n) if any((q * u - n) % (2 * n) == 0 for u in aut.units(2 * n))}
        assert set(cls) == expected == {rs(1, 3, 3)}


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(3, 12), (4, 32)])
    def test_counts(self, n, count):
        family = aut.enumerate_rs_automorphisms(n)
        brute = aut.enumerate_automorphisms_bruteforce(n)
        assert len(family) == len(brute) == count
        assert {p.to_table().images for p in family} == {b.images for b in brute}

    def test_dc2_incomplete(self):
        family = aut.enumerate_rs_automorphisms(2)
        brute = aut.enumerate_automorphisms_bruteforce(2)
        assert len(family) == 8 and len(brute) == 24
        assert {p.to_table().images for p in family} < {b.images for b in brute}

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_identity_present(self, n):
        assert any(aut.is_identity(b) for b in aut.enumerate_automorphisms_bruteforce(n))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_aut_order(self, n):
        assert aut.aut_order(n) == 2 * n * totient(2 * n)

    def test_table_automorphism_validation(self):
        with pytest.raises(ParameterError):
            TableAutomorphism.from_generators(el("x^2", 3), el("y", 3))
        with pytest.raises(ParameterError):
            TableAutomorphism.from_function(3, lambda g: identity(3))
        with pytest.raises(ParameterError):
            # a bijection that is not a homomorphism
            TableAutomorphism.from_function(3, lambda g: inverse(g) if g.a == 0 else g)

    def test_to_rs_round_trip(self):
        for phi in aut.enumerate_rs_automorphisms(4):
            assert phi.to_table().to_rs() == phi


class TestSquareRoots:
    def test_examples(self):
        assert aut.square_roots_of_unity(6) == [1, 5]
        assert aut.count_square_roots_of_unity(3) == 2
        assert aut.square_roots_of_unity(4) == [1, 3]
        assert aut.count_square_roots_of_unity(2) == 2
        assert len(aut.square_roots_of_unity(24)) == 8 == aut.count_square_roots_of_unity(12)

    @pytest.mark.parametrize("k, w", [(1, 0), (2, 1), (12, 2), (30, 3), (97, 1), (1024, 1)])
    def test_omega(self, k, w):
        assert aut.distinct_prime_factors(k) == w

    def test_involution_count(self):
        # involutions with r = 1 need 2s == 0; the r^2 = 1 count bounds the distinct r values
        for n in range(3, 15):
            rs_ = {p.r for p in aut.enumerate_rs_automorphisms(n) if aut.order_divides(p, 2)}
            assert len(rs_) == aut.count_square_roots_of_unity(n)


class TestHolomorph:
    def test_identity(self):
        phi, g = rs(5, 1, 4 - 1), el("yx", 3)
        e = HolomorphElement(phi, g)
        one = aut.holomorph_identity(3)
        assert one * e == e == e * one

    def test_inverse(self):
        for phi in aut.enumerate_rs_automorphisms(3):
            for g in enumerate_group(3):
                e = HolomorphElement(phi, g)
                inv = aut.holomorph_inverse(e)
                assert e * inv == aut.holomorph_identity(3)

    def test_associativity(self):
        rng = random.Random(4)
        autos = aut.enumerate_rs_automorphisms(4)
        G = enumerate_group(4)
        for _ in range(300):
            e1, e2, e3 = (HolomorphElement(rng.choice(autos), rng.choice(G)) for _ in range(3))
            assert (e1 * e2) * e3 == e1 * (e2 * e3)

    def test_mismatched(self):
        with pytest.raises(ParameterError):
            aut.holomorph_compose(HolomorphElement(rs(1, 0, 3), el("x", 3)), HolomorphElement(rs(1, 0, 4), el("x", 4)))


def test_no_warning_from_enumeration():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        aut.enumerate_rs_automorphisms(2)
