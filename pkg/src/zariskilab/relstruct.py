"""Finite relational structures and the generators used throughout the package.

Vertices are always the dense range ``0..N-1``.  The copy/part/index view of
the bipartite-copies structure lives only in :func:`encode` / :func:`decode`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameter

Tuple_ = tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    name: str
    arity: int
    tuples: frozenset[Tuple_]

    def __contains__(self, t) -> bool:
        return tuple(t) in self.tuples

    def __len__(self) -> int:
        return len(self.tuples)


@dataclass(frozen=True)
class Structure:
    """A finite relational structure on ``range(domain_size)``.

    Relations are kept as a name-sorted tuple so that equal structures compare
    and hash equal regardless of construction order.
    """

    name: str
    domain_size: int
    relations: tuple[Relation, ...]

    def __post_init__(self):
        if self.domain_size < 0:
            raise InvalidParameter(f"negative domain size {self.domain_size}")
        names = [r.name for r in self.relations]
        if len(set(names)) != len(names):
            raise InvalidParameter(f"duplicate relation names in {names}")
        for rel in self.relations:
            if rel.arity < 1:
                raise InvalidParameter(f"relation {rel.name!r} has arity {rel.arity}")
            for t in rel.tuples:
                if len(t) != rel.arity:
                    raise InvalidParameter(
                        f"tuple {t} in {rel.name!r} does not have arity {rel.arity}")
                for x in t:
                    if not 0 <= x < self.domain_size:
                        raise InvalidParameter(
                            f"tuple {t} in {rel.name!r} leaves [0, {self.domain_size})")
        object.__setattr__(
            self, "relations", tuple(sorted(self.relations, key=lambda r: r.name)))

    @classmethod
    def build(cls, name: str, domain_size: int,
              relations: Mapping[str, tuple[int, Iterable[Sequence[int]]]]) -> "Structure":
        """Construct from ``{relation_name: (arity, tuples)}``."""
        rels = tuple(
            Relation(rname, arity, frozenset(tuple(int(x) for x in t) for t in tuples))
            for rname, (arity, tuples) in relations.items())
        return cls(name, domain_size, rels)

    @property
    def signature(self) -> tuple[tuple[str, int], ...]:
        return tuple((r.name, r.arity) for r in self.relations)

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def same_content(self, other: "Structure") -> bool:
        """Equality ignoring the name label."""
        return self.domain_size == other.domain_size and self.relations == other.relations

    def __repr__(self):
        rels = ", ".join(f"{r.name}/{r.arity}:{len(r)}" for r in self.relations)
        return f"Structure({self.name!r}, N={self.domain_size}, {rels})"


# -- codec for the copies-of-K_{m,m} structure ---------------------------------

def encode(i: int, e: int, j: int, m: int) -> int:
    """Flat vertex of copy ``i``, part ``e`` (+1/-1), index ``j`` within the part."""
    if e not in (1, -1):
        raise InvalidParameter(f"part sign must be +1 or -1, got {e}")
    if not 0 <= j < m:
        raise InvalidParameter(f"part index {j} outside [0, {m})")
    return 2 * m * i + (j if e == 1 else m + j)


def decode(v: int, m: int) -> tuple[int, int, int]:
    i, x = divmod(v, 2 * m)
    if x < m:
        return i, 1, x
    return i, -1, x - m


def _require_positive(**params):
    for key, val in params.items():
        if val < 1:
            raise InvalidParameter(f"{key} must be >= 1, got {val}")


# -- generators ---------------------------------------------------------------

@lru_cache(maxsize=None)
def gen_Kmm(m: int) -> Structure:
    """Complete bipartite graph with two parts of size ``m``; part +1 is ``[0, m)``."""
    _require_positive(m=m)
    edges = [(u, v) for u in range(2 * m) for v in range(2 * m) if (u < m) != (v < m)]
    return Structure.build(f"K{m},{m}", 2 * m, {"E": (2, edges)})


@lru_cache(maxsize=None)
def gen_G(n: int, m: int) -> Structure:
    """``n`` copies of K_{m,m}: E1 joins distinct copies, E2 is the in-copy bipartite edge."""
    _require_positive(n=n, m=m)
    size = 2 * n * m
    e1, e2 = [], []
    for u in range(size):
        iu, pu, _ = decode(u, m)
        for v in range(size):
            iv, pv, _ = decode(v, m)
            if iu != iv:
                e1.append((u, v))
            elif pu != pv:
                e2.append((u, v))
    return Structure.build(f"G{n},{m}", size, {"E1": (2, e1), "E2": (2, e2)})


def gen_core_C(n: int) -> Structure:
    """``n`` single edges pairwise joined by E1; the core of ``gen_G(n, m)``."""
    _require_positive(n=n)
    core = gen_G(n, 1)
    return Structure(f"C{n}", core.domain_size, core.relations)


def gen_complete(n: int, loops: bool = False) -> Structure:
    _require_positive(n=n)
    edges = [(u, v) for u, v in product(range(n), repeat=2) if loops or u != v]
    name = f"K{n}" + ("+loops" if loops else "")
    return Structure.build(name, n, {"E": (2, edges)})


def induced_substructure(A: Structure, S: Iterable[int], name: str | None = None) -> Structure:
    """Restrict ``A`` to ``S``, re-indexing ``S`` order-preservingly onto ``[0, |S|)``."""
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < A.domain_size:
            raise InvalidParameter(f"vertex {v} outside [0, {A.domain_size})")
    index = {v: k for k, v in enumerate(verts)}
    rels = []
    for r in A.relations:
        kept = frozenset(tuple(index[x] for x in t) for t in r.tuples
                         if all(x in index for x in t))
        rels.append(Relation(r.name, r.arity, kept))
    return Structure(name or f"{A.name}[{len(verts)}]", len(verts), tuple(rels))
