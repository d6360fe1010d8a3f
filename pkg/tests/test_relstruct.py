import pytest
from hypothesis import given, strategies as st

import oracles as O
from zariskilab import (InvalidParameter, Structure, decode, encode, gen_complete, gen_core_C,
                        gen_G, gen_Kmm, induced_substructure, is_isomorphic)


def edges(A, name="E"):
    return A.relation(name).tuples


class TestGenerators:
    def test_kmm_single_edge(self):
        A = gen_Kmm(1)
        assert A.domain_size == 2
        assert edges(A) == {(0, 1), (1, 0)}

    @pytest.mark.parametrize("m, count", [(2, 8), (3, 18)])
    def test_kmm_edge_count(self, m, count):
        E = edges(gen_Kmm(m))
        assert len(E) == count
        assert all((v, u) in E and u != v for u, v in E)

    def test_kmm_rejects_zero(self):
        with pytest.raises(InvalidParameter):
            gen_Kmm(0)

    def test_g_one_copy(self):
        A = gen_G(1, 1)
        assert edges(A, "E1") == frozenset()
        assert edges(A, "E2") == {(0, 1), (1, 0)}

    def test_g_counts(self):
        A = gen_G(2, 1)
        assert (len(edges(A, "E1")), len(edges(A, "E2"))) == (8, 4)
        B = gen_G(2, 2)
        # 2nm * 2(n-1)m cross-copy pairs = 32, plus n * 2m^2 in-copy pairs = 16
        assert (len(edges(B, "E1")), len(edges(B, "E2"))) == (32, 16)

    @pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 2), (1, 3)])
    def test_g_matches_definition(self, n, m):
        verts, e1, e2 = O.g_structure(n, m)
        A = gen_G(n, m)
        assert A.domain_size == len(verts)
        assert edges(A, "E1") == {(O.flat(u, m), O.flat(v, m)) for u, v in e1}
        assert edges(A, "E2") == {(O.flat(u, m), O.flat(v, m)) for u, v in e2}

    def test_g_rejects_zero(self):
        with pytest.raises(InvalidParameter):
            gen_G(2, 0)
        with pytest.raises(InvalidParameter):
            gen_G(0, 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matching_when_m_is_one(self, n):
        E2 = edges(gen_G(n, 1), "E2")
        assert len(E2) == 2 * n
        assert all(sum(1 for u, _ in E2 if u == v) == 1 for v in range(2 * n))

    def test_core_generator(self):
        assert gen_core_C(1).relation("E1").tuples == frozenset()
        assert len(edges(gen_core_C(3), "E2")) == 6
        with pytest.raises(InvalidParameter):
            gen_core_C(0)

    @pytest.mark.parametrize("n, m", [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)])
    def test_core_is_distinguished_points(self, n, m):
        S = [encode(i, e, 0, m) for i in range(n) for e in (1, -1)]
        assert is_isomorphic(gen_core_C(n), induced_substructure(gen_G(n, m), S))

    @pytest.mark.parametrize("n, loops, count", [(1, True, 1), (3, False, 6), (2, True, 4)])
    def test_complete(self, n, loops, count):
        assert len(edges(gen_complete(n, loops))) == count

    def test_complete_single_loop(self):
        assert edges(gen_complete(1, True)) == {(0, 0)}


class TestEncoding:
    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    def test_round_trip(self, n, m, data):
        i = data.draw(st.integers(0, n - 1))
        e = data.draw(st.sampled_from([1, -1]))
        j = data.draw(st.integers(0, m - 1))
        v = encode(i, e, j, m)
        assert 0 <= v < 2 * n * m
        assert decode(v, m) == (i, e, j)

    @pytest.mark.parametrize("n, m", [(2, 3), (3, 1)])
    def test_bijective(self, n, m):
        codes = {encode(i, e, j, m) for i in range(n) for e in (1, -1) for j in range(m)}
        assert codes == set(range(2 * n * m))

    def test_bad_triples(self):
        with pytest.raises(InvalidParameter):
            encode(0, 0, 0, 2)
        with pytest.raises(InvalidParameter):
            encode(0, 1, 2, 2)


class TestStructure:
    def test_validation(self):
        with pytest.raises(InvalidParameter):
            Structure.build("bad", 2, {"E": (2, [(0, 2)])})
        with pytest.raises(InvalidParameter):
            Structure.build("bad", 2, {"E": (2, [(0,)])})
        with pytest.raises(InvalidParameter):
            Structure.build("bad", 2, {"E": (0, [])})

    def test_relation_order_does_not_matter(self):
        a = Structure.build("x", 2, {"R": (1, [(0,)]), "E": (2, [(0, 1)])})
        b = Structure.build("x", 2, {"E": (2, [(0, 1)]), "R": (1, [(0,)])})
        assert a == b and hash(a) == hash(b)
        assert a.signature == (("E", 2), ("R", 1))


class TestInduced:
    def test_full_domain(self):
        A = gen_G(2, 1)
        assert induced_substructure(A, range(4)).same_content(A)

    def test_kmm_pair(self):
        B = induced_substructure(gen_Kmm(2), {0, 2})
        assert edges(B) == {(0, 1), (1, 0)}

    def test_one_copy_loses_cross_edges(self):
        B = induced_substructure(gen_G(2, 1), {2, 3})
        assert B.relation("E1").tuples == frozenset()
        assert B.relation("E2").tuples == {(0, 1), (1, 0)}

    def test_out_of_range(self):
        with pytest.raises(InvalidParameter):
            induced_substructure(gen_Kmm(1), {0, 5})
