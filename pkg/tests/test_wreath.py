import random
from math import factorial

import pytest

import oracles as O
from zariskilab import (FiniteMap, InvalidParameter, NotAnEndomorphism, SizeGuardExceeded,
                        WreathElement, automorphisms, c_minus, c_plus, check_wreath_characterization,
                        compose, endomorphisms, gen_G, map_to_wreath, sgn, wreath_count,
                        wreath_to_map)
from zariskilab.errors import CopySplit
from zariskilab.wreath import copy_map, extend_copies, iter_wreath_elements, kmm_endomorphisms


def random_element(rng, n, m):
    comps = kmm_endomorphisms(m)
    tau = list(range(n))
    rng.shuffle(tau)
    return WreathElement(n, m, FiniteMap.of(tau), tuple(rng.choice(comps) for _ in range(n)))


class TestSign:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_constants(self, m):
        assert sgn(c_plus(m), m) == 1
        assert sgn(c_minus(m), m) == -1

    def test_k11(self):
        assert sgn(FiniteMap.identity(2), 1) == 1
        assert sgn(FiniteMap.of([1, 0]), 1) == -1

    def test_multiplicative(self):
        ends = kmm_endomorphisms(2)
        assert len(ends) == 32
        for s in ends:
            for t in ends:
                assert sgn(compose(s, t), 2) == sgn(s, 2) * sgn(t, 2)

    def test_sign_is_part_behaviour(self):
        for f in O.kmm_endos(2):
            expected = 1 if f[0] < 2 else -1
            assert sgn(FiniteMap.of(f), 2) == expected

    def test_non_endomorphism(self):
        with pytest.raises(NotAnEndomorphism):
            sgn(FiniteMap.constant(4, 0), 2)
        with pytest.raises(NotAnEndomorphism):
            sgn(FiniteMap.identity(3), 2)

    def test_constant_maps(self):
        assert c_plus(1).is_identity() and c_minus(1).image == (1, 0)
        assert c_plus(2).image == (0, 0, 2, 2)
        assert c_minus(2).image == (2, 2, 0, 0)


class TestCodec:
    def test_identity(self):
        w = WreathElement(3, 2, FiniteMap.identity(3), (FiniteMap.identity(4),) * 3)
        assert wreath_to_map(w).is_identity()
        assert map_to_wreath(FiniteMap.identity(12), 3, 2) == w

    def test_copy_swap(self):
        w = WreathElement(2, 1, FiniteMap.of([1, 0]), (FiniteMap.identity(2),) * 2)
        assert wreath_to_map(w).image == (2, 3, 0, 1)

    def test_single_copy(self):
        for s in kmm_endomorphisms(2):
            assert wreath_to_map(WreathElement(1, 2, FiniteMap.identity(1), (s,))) == s

    def test_matches_oracle_formula(self):
        rng = random.Random(5)
        for _ in range(30):
            w = random_element(rng, 3, 2)
            expected = O.wreath_map(w.tau.image, [s.image for s in w.components], 2)
            assert wreath_to_map(w).image == expected

    def test_round_trip(self):
        rng = random.Random(0)
        for _ in range(100):
            w = random_element(rng, 3, 2)
            assert map_to_wreath(wreath_to_map(w), 3, 2) == w

    def test_copy_map_is_tau(self):
        for f in endomorphisms(gen_G(2, 2)):
            assert copy_map(f, 2) == map_to_wreath(f, 2, 2, check=False).tau

    def test_copy_split(self):
        # image of copy 0 straddles both copies; skipped homomorphism check to reach the split
        f = FiniteMap.of([0, 2, 2, 3])
        with pytest.raises(CopySplit):
            map_to_wreath(f, 2, 1, check=False)
        with pytest.raises(NotAnEndomorphism):
            map_to_wreath(f, 2, 1)

    def test_invalid_elements(self):
        with pytest.raises(InvalidParameter):
            WreathElement(2, 1, FiniteMap.of([0, 0]), (FiniteMap.identity(2),) * 2)
        with pytest.raises(NotAnEndomorphism):
            WreathElement(1, 1, FiniteMap.identity(1), (FiniteMap.constant(2, 0),))

    def test_composition_homomorphism(self):
        elements = list(iter_wreath_elements(2, 1))
        assert len(elements) == 8
        for a in elements:
            for b in elements:
                assert wreath_to_map(a.then(b)) == compose(wreath_to_map(a), wreath_to_map(b))

    def test_composition_homomorphism_sampled(self):
        rng = random.Random(9)
        for _ in range(200):
            a, b = random_element(rng, 3, 2), random_element(rng, 3, 2)
            assert wreath_to_map(a.then(b)) == compose(wreath_to_map(a), wreath_to_map(b))

    def test_extend_copies(self):
        f = wreath_to_map(WreathElement(2, 1, FiniteMap.of([1, 0]), (c_minus(1), c_plus(1))))
        g = extend_copies(f, 1, 3)
        assert g.image == f.image + (4, 5)
        assert map_to_wreath(g, 3, 1).tau.image == (1, 0, 2)


class TestCharacterization:
    @pytest.mark.parametrize("n, m, count", [(1, 1, 2), (2, 1, 8), (1, 2, 32), (2, 2, 2048)])
    def test_endomorphisms(self, n, m, count):
        assert wreath_count(n, m) == count
        assert len(endomorphisms(gen_G(n, m))) == count
        assert check_wreath_characterization(n, m)

    @pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 2), (2, 2)])
    def test_automorphisms(self, n, m):
        expected = {wreath_to_map(w) for w in iter_wreath_elements(n, m, bijective=True)}
        auts = automorphisms(gen_G(n, m))
        assert set(auts) == expected
        assert len(auts) == factorial(n) * (2 * factorial(m) ** 2) ** n == wreath_count(n, m, True)

    @pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 2)])
    def test_against_brute_force(self, n, m):
        A = gen_G(n, m)
        assert {wreath_to_map(w).image for w in iter_wreath_elements(n, m)} == set(O.morphisms(A, A))

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            check_wreath_characterization(3, 2, guard=1000)
