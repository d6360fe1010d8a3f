"""Backtracking search for homomorphisms, embeddings, isomorphisms, automorphisms.

Variables are source vertices in ascending order and values are tried in
ascending order, so enumeration yields maps in lexicographic image order.
Binary relations are propagated with arc consistency after every assignment;
relations of other arities are filtered per vertex (unary) or checked once
all their entries are assigned.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from itertools import product
from typing import Iterator, Mapping

from .errors import IncompatibleSignatures, InvalidParameter
from .maps import FiniteMap
from .relstruct import Structure


class MorphismKind(enum.Enum):
    HOM = "hom"
    EMB = "emb"
    ISO = "iso"
    AUT = "aut"

    @property
    def injective(self) -> bool:
        return self is not MorphismKind.HOM


def _check_signatures(A: Structure, B: Structure, kind: MorphismKind):
    if A.signature != B.signature:
        raise IncompatibleSignatures(f"{A.signature} vs {B.signature}")
    if kind is MorphismKind.AUT and A != B:
        raise InvalidParameter("AUT requires source and target to be the same structure")


def check_morphism(A: Structure, B: Structure, f: FiniteMap, kind: MorphismKind) -> bool:
    _check_signatures(A, B, kind)
    if f.source_size != A.domain_size or f.target_size != B.domain_size:
        raise InvalidParameter(
            f"map {f.source_size}->{f.target_size} does not fit {A.domain_size}->{B.domain_size}")
    img = f.image
    for ra, rb in zip(A.relations, B.relations):
        for t in ra.tuples:
            if tuple(img[x] for x in t) not in rb.tuples:
                return False
    if kind is MorphismKind.HOM:
        return True
    if not f.is_injective():
        return False
    inv = {y: x for x, y in enumerate(img)}
    for ra, rb in zip(A.relations, B.relations):
        for t in rb.tuples:
            if all(y in inv for y in t) and tuple(inv[y] for y in t) not in ra.tuples:
                return False
    if kind in (MorphismKind.ISO, MorphismKind.AUT):
        return A.domain_size == B.domain_size
    return True


class _Search:
    """One search problem; holds the precomputed compatibility tables."""

    def __init__(self, A: Structure, B: Structure, kind: MorphismKind,
                 fixed: Mapping[int, int] | None = None):
        _check_signatures(A, B, kind)
        self.A, self.B, self.kind = A, B, kind
        self.n, self.m = A.domain_size, B.domain_size
        self.exact = kind.injective
        self.feasible = not (kind in (MorphismKind.ISO, MorphismKind.AUT) and self.n != self.m) \
            and not (self.exact and self.n > self.m)

        binaries = [(ra, rb) for ra, rb in zip(A.relations, B.relations) if ra.arity == 2]
        unaries = [(ra, rb) for ra, rb in zip(A.relations, B.relations) if ra.arity == 1]
        self.wide = [(ra, rb) for ra, rb in zip(A.relations, B.relations) if ra.arity > 2]

        def pair_type(rels, u, v):
            return tuple(((u, v) in r.tuples, (v, u) in r.tuples) for r in rels)

        def vertex_type(rels_bin, rels_un, u):
            return (tuple((u, u) in r.tuples for r in rels_bin)
                    + tuple((u,) in r.tuples for r in rels_un))

        def fits(ta, tb):
            if self.exact:
                return ta == tb
            return all(tb_bit for ta_bit, tb_bit in zip(_flat(ta), _flat(tb)) if ta_bit)

        a_bin = [ra for ra, _ in binaries]
        b_bin = [rb for _, rb in binaries]
        a_un = [ra for ra, _ in unaries]
        b_un = [rb for _, rb in unaries]

        b_vtypes = [vertex_type(b_bin, b_un, b) for b in range(self.m)]
        self.domains: list[set[int]] = []
        for u in range(self.n):
            ta = vertex_type(a_bin, a_un, u)
            self.domains.append({b for b in range(self.m) if fits(ta, b_vtypes[b])})
        for u, b in (fixed or {}).items():
            if not (0 <= u < self.n and 0 <= b < self.m):
                raise InvalidParameter(f"fixed assignment {u}->{b} out of range")
            self.domains[u] &= {b}

        # allowed[type][b] = set of c such that (u,v) of that type may map to (b,c)
        b_pairs: dict[tuple, list[tuple[int, int]]] = defaultdict(list)
        for b, c in product(range(self.m), repeat=2):
            if b != c:
                b_pairs[pair_type(b_bin, b, c)].append((b, c))
        allowed_cache: dict[tuple, dict[int, frozenset[int]]] = {}

        def allowed_for(ta):
            if ta not in allowed_cache:
                table: dict[int, set[int]] = defaultdict(set)
                for tb, pairs in b_pairs.items():
                    if fits(ta, tb):
                        for b, c in pairs:
                            table[b].add(c)
                if not self.exact:
                    # non-injective maps may send u and v to the same target b
                    for b in range(self.m):
                        if fits(ta, pair_type(b_bin, b, b)):
                            table[b].add(b)
                allowed_cache[ta] = {b: frozenset(cs) for b, cs in table.items()}
            return allowed_cache[ta]

        # neighbours[u] = list of (v, allowed table for the ordered pair (u, v))
        self.neighbours: list[list[tuple[int, dict[int, frozenset[int]]]]] = [
            [] for _ in range(self.n)]
        trivial = tuple((False, False) for _ in a_bin)
        for u in range(self.n):
            for v in range(self.n):
                if u == v:
                    continue
                ta = pair_type(a_bin, u, v)
                if self.exact or ta != trivial:
                    self.neighbours[u].append((v, allowed_for(ta)))

        self.wide_by_last: dict[int, list[tuple]] = defaultdict(list)
        for ra, rb in self.wide:
            for t in ra.tuples:
                self.wide_by_last[max(t)].append((t, rb))

    def _propagate(self, domains, queue) -> bool:
        """AC-3 restricted to the arcs touching changed variables."""
        while queue:
            u = queue.pop()
            du = domains[u]
            for v, allowed in self.neighbours[u]:
                dv = domains[v]
                support = set()
                for b in du:
                    support |= allowed.get(b, frozenset())
                    if len(support) >= len(dv) and dv <= support:
                        break
                new = dv & support
                if len(new) != len(dv):
                    if not new:
                        return False
                    domains[v] = new
                    queue.add(v)
        return True

    def _wide_ok(self, assignment, u) -> bool:
        for t, rb in self.wide_by_last.get(u, ()):
            if tuple(assignment[x] for x in t) not in rb.tuples:
                return False
        return True

    def solutions(self) -> Iterator[FiniteMap]:
        if not self.feasible:
            return
        domains = [set(d) for d in self.domains]
        if any(not d for d in domains):
            return
        if not self._propagate(domains, set(range(self.n))):
            return
        assignment = [0] * self.n
        yield from self._extend(0, domains, assignment)

    def _extend(self, u, domains, assignment):
        if u == self.n:
            f = FiniteMap(self.n, self.m, tuple(assignment))
            if self.exact and self.wide and not check_morphism(self.A, self.B, f, self.kind):
                return
            yield f
            return
        for b in sorted(domains[u]):
            assignment[u] = b
            if not self._wide_ok(assignment, u):
                continue
            child = list(domains)
            child[u] = {b}
            if self._propagate(child, {u}):
                yield from self._extend(u + 1, child, assignment)


def _flat(t):
    for x in t:
        if isinstance(x, tuple):
            yield from x
        else:
            yield x


def iter_morphisms(A: Structure, B: Structure, kind: MorphismKind,
                   fixed: Mapping[int, int] | None = None) -> Iterator[FiniteMap]:
    """Lazily enumerate morphisms of the given kind, optionally with pinned values."""
    return _Search(A, B, kind, fixed).solutions()


def find_morphism(A: Structure, B: Structure, kind: MorphismKind,
                  fixed: Mapping[int, int] | None = None) -> FiniteMap | None:
    return next(iter_morphisms(A, B, kind, fixed), None)


def enumerate_morphisms(A: Structure, B: Structure, kind: MorphismKind,
                        limit: int | None = None,
                        fixed: Mapping[int, int] | None = None) -> list[FiniteMap]:
    """All morphisms of the kind in lexicographic image order, truncated at ``limit``.

    ``limit=None`` enumerates everything; callers are responsible for sizing.
    """
    out = []
    for f in iter_morphisms(A, B, kind, fixed):
        if limit is not None and len(out) >= limit:
            break
        out.append(f)
    return out


def endomorphisms(A: Structure, limit: int | None = None) -> list[FiniteMap]:
    return enumerate_morphisms(A, A, MorphismKind.HOM, limit)


def automorphisms(A: Structure, limit: int | None = None) -> list[FiniteMap]:
    return enumerate_morphisms(A, A, MorphismKind.AUT, limit)


def is_isomorphic(A: Structure, B: Structure) -> bool:
    return find_morphism(A, B, MorphismKind.ISO) is not None
