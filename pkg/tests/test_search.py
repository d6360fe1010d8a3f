import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from zariskilab import (FiniteMap, IncompatibleSignatures, MorphismKind, Structure,
                        automorphisms, check_morphism, compose, endomorphisms,
                        enumerate_morphisms, find_morphism, gen_complete, gen_core_C, gen_G,
                        gen_Kmm, induced_substructure, encode, is_isomorphic)

HOM, EMB, ISO, AUT = MorphismKind.HOM, MorphismKind.EMB, MorphismKind.ISO, MorphismKind.AUT


def random_structure(rng, N, density=0.35, ternary=False, name="R"):
    rels = {"E": (2, [t for t in product(range(N), repeat=2)
                      if rng.random() < density])}
    if ternary:
        rels["T"] = (3, [tuple(rng.randrange(N) for _ in range(3)) for _ in range(rng.randint(0, 3))])
    return Structure.build(name, N, rels)


@st.composite
def small_structures(draw, max_n=4, ternary=False):
    N = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(N) for v in range(N)]
    E = draw(st.sets(st.sampled_from(pairs)))
    rels = {"E": (2, E)}
    if ternary:
        triples = [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]
        rels["T"] = (3, draw(st.sets(st.sampled_from(triples), max_size=3)))
    return Structure.build("S", N, rels)


class TestCheckMorphism:
    def test_identity_is_automorphism(self):
        A = gen_G(2, 1)
        assert check_morphism(A, A, FiniteMap.identity(4), AUT)

    def test_swap_of_an_edge(self):
        A = gen_Kmm(1)
        assert check_morphism(A, A, FiniteMap.of([1, 0]), AUT)

    def test_constant_is_not_hom(self):
        A = gen_Kmm(1)
        assert not check_morphism(A, A, FiniteMap.constant(2, 0), HOM)

    def test_signature_mismatch(self):
        with pytest.raises(IncompatibleSignatures):
            check_morphism(gen_Kmm(1), gen_G(1, 1), FiniteMap.identity(2), HOM)

    def test_embedding_reflects_non_edges(self):
        assert check_morphism(gen_complete(2), gen_complete(3), FiniteMap.of([0, 1], 3), EMB)
        path = Structure.build("P", 3, {"E": (2, [(0, 1), (1, 0), (1, 2), (2, 1)])})
        assert check_morphism(path, gen_complete(3), FiniteMap.of([0, 1, 2]), HOM)
        assert not check_morphism(path, gen_complete(3), FiniteMap.of([0, 1, 2]), EMB)


class TestFind:
    def test_edge_embeds_in_kmm(self):
        with pytest.raises(IncompatibleSignatures):
            find_morphism(gen_core_C(1), gen_Kmm(2), EMB)
        # the in-copy edge of the one-copy core, as a plain graph
        edge = Structure.build("edge", 2, {"E": (2, gen_core_C(1).relation("E2").tuples)})
        f = find_morphism(edge, gen_Kmm(2), EMB)
        assert f is not None and check_morphism(edge, gen_Kmm(2), f, EMB)

    def test_triangle_not_two_colourable(self):
        assert find_morphism(gen_complete(3), gen_complete(2), HOM) is None

    def test_loop_automorphism(self):
        A = gen_complete(1, True)
        assert find_morphism(A, A, AUT) == FiniteMap.identity(1)

    def test_fixed_values(self):
        A = gen_Kmm(2)
        f = find_morphism(A, A, AUT, fixed={0: 3})
        assert f(0) == 3 and check_morphism(A, A, f, AUT)
        assert find_morphism(A, A, AUT, fixed={0: 1, 1: 1}) is None


class TestEnumerate:
    @pytest.mark.parametrize("A, ends, auts", [
        (gen_Kmm(1), 2, 2), (gen_Kmm(2), 32, 8), (gen_G(2, 1), 8, 8), (gen_G(1, 2), 32, 8),
    ])
    def test_counts(self, A, ends, auts):
        assert len(endomorphisms(A)) == ends
        assert len(automorphisms(A)) == auts

    @pytest.mark.parametrize("A", [gen_Kmm(2), gen_G(2, 1), gen_core_C(2), gen_complete(3)])
    def test_matches_oracle_in_order(self, A):
        for kind, name in [(HOM, "hom"), (AUT, "aut")]:
            got = [f.image for f in enumerate_morphisms(A, A, kind)]
            assert got == O.morphisms(A, A, name)

    def test_limit(self):
        A = gen_Kmm(2)
        assert enumerate_morphisms(A, A, HOM, limit=5) == endomorphisms(A)[:5]

    def test_composition_closure(self):
        A = gen_Kmm(2)
        ends = set(endomorphisms(A))
        assert all(compose(f, g) in ends for f in ends for g in ends)

    def test_embeddings_are_injective_homs(self):
        A, B = gen_core_C(2), gen_G(2, 2)
        homs = set(enumerate_morphisms(A, B, HOM))
        for f in enumerate_morphisms(A, B, EMB):
            assert f in homs and f.is_injective()


class TestIsomorphic:
    def test_reflexive(self):
        assert is_isomorphic(gen_G(2, 2), gen_G(2, 2))

    def test_core_inside_g22(self):
        S = [encode(i, e, 0, 2) for i in range(2) for e in (1, -1)]
        assert is_isomorphic(gen_core_C(2), induced_substructure(gen_G(2, 2), S))

    def test_kmm_vs_k4(self):
        assert not is_isomorphic(gen_Kmm(2), gen_complete(4))


@settings(max_examples=60, deadline=None)
@given(small_structures(ternary=True), small_structures(ternary=True),
       st.sampled_from(["hom", "emb"]))
def test_presence_agrees_with_brute_force(A, B, kind):
    found = find_morphism(A, B, HOM if kind == "hom" else EMB)
    assert (found is not None) == bool(O.morphisms(A, B, kind))


@settings(max_examples=40, deadline=None)
@given(small_structures(max_n=4))
def test_endomorphism_enumeration_agrees(A):
    assert [f.image for f in endomorphisms(A)] == O.morphisms(A, A)


def test_seeded_random_pairs_agree():
    rng = random.Random(7)
    for _ in range(40):
        A = random_structure(rng, rng.randint(1, 4), ternary=True)
        B = random_structure(rng, rng.randint(1, 4), ternary=True)
        assert (find_morphism(A, B, HOM) is not None) == bool(O.morphisms(A, B))
