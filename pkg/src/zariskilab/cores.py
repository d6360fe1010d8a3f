"""Cores (minimal retracts), homomorphic equivalence, mobile cores and orbit checks."""
from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb
from typing import Iterable, NamedTuple

from .errors import InvalidParameter, SizeGuardExceeded
from .maps import FiniteMap
from .monoid import compose
from .relstruct import Structure, induced_substructure
from .search import MorphismKind, find_morphism, is_isomorphic, iter_morphisms

HOM = MorphismKind.HOM
AUT = MorphismKind.AUT


class CoreResult(NamedTuple):
    structure: Structure
    retraction: FiniteMap
    vertices: tuple[int, ...]


class ImageBound(NamedTuple):
    min_image_size: int
    core_size: int
    holds: bool


def _drop_vertex(A: Structure, v: int) -> tuple[Structure, list[int]]:
    keep = [u for u in range(A.domain_size) if u != v]
    return induced_substructure(A, keep), keep


def shrinking_endomorphism(A: Structure) -> FiniteMap | None:
    """An endomorphism of ``A`` missing at least one vertex, if any exists."""
    for v in range(A.domain_size):
        B, keep = _drop_vertex(A, v)
        h = find_morphism(A, B, HOM)
        if h is not None:
            return FiniteMap.of(keep[x] for x in h.image)
    return None


def is_core(A: Structure) -> bool:
    """Every endomorphism is an automorphism, i.e. none of them misses a vertex."""
    return shrinking_endomorphism(A) is None


def _to_retraction(e: FiniteMap, S: Iterable[int]) -> FiniteMap:
    """Power of ``e`` that fixes ``S`` pointwise (``e`` permutes ``S``)."""
    S = sorted(S)
    p = e
    while any(p(x) != x for x in S):
        p = compose(e, p)
    return p


def compute_core(A: Structure, lex_cap: int = 50_000) -> CoreResult:
    """Core of ``A`` as an induced substructure plus a retraction of ``A`` onto it.

    First shrinks greedily to learn the core size, then picks the
    lexicographically least vertex set of that size onto which ``A`` maps
    (skipped when there are more than ``lex_cap`` candidate sets).
    """
    N = A.domain_size
    if N == 0:
        raise InvalidParameter("the empty structure has no core")
    current = list(range(N))
    acc = FiniteMap.identity(N)
    while True:
        B = induced_substructure(A, current)
        h = shrinking_endomorphism(B)
        if h is None:
            break
        lifted = FiniteMap.of(current[h(current.index(acc(x)))] for x in range(N))
        acc = lifted
        current = sorted(acc.image_set())
    size = len(current)

    if comb(N, size) <= lex_cap:
        for S in combinations(range(N), size):
            target = induced_substructure(A, S)
            r = find_morphism(A, target, HOM)
            if r is not None:
                acc = FiniteMap.of(S[y] for y in r.image)
                current = list(S)
                break

    retraction = _to_retraction(acc, current)
    core = induced_substructure(A, current, name=f"core({A.name})")
    return CoreResult(core, retraction, tuple(current))


def hom_equivalent(A: Structure, B: Structure) -> bool:
    return find_morphism(A, B, HOM) is not None and find_morphism(B, A, HOM) is not None


def min_endomorphism_image(A: Structure, guard: int = 1_000_000) -> int:
    """Smallest image size over End(A), by exhaustive enumeration."""
    best = A.domain_size
    for count, f in enumerate(iter_morphisms(A, A, HOM), 1):
        if count > guard:
            raise SizeGuardExceeded(f"End({A.name}) exceeds guard {guard}")
        best = min(best, len(f.image_set()))
    return best


def check_image_bound(A: Structure, guard: int = 1_000_000) -> ImageBound:
    lo = min_endomorphism_image(A, guard)
    core_size = compute_core(A).structure.domain_size
    return ImageBound(lo, core_size, lo >= core_size)


def mobile_core_witnesses(A: Structure) -> dict[int, FiniteMap | None]:
    """For each vertex, an endomorphism whose image contains it and induces a copy
    of the core (``None`` where there is none).

    Such endomorphisms are exactly ``e . r`` with ``r`` the retraction onto the
    core and ``e`` a homomorphism core -> A, so it suffices to search for ``e``
    with one pinned value.
    """
    core, r, verts = compute_core(A)
    index = {v: k for k, v in enumerate(verts)}
    to_core = FiniteMap(A.domain_size, len(verts), tuple(index[r(x)] for x in range(A.domain_size)))
    found: dict[int, FiniteMap | None] = {}
    for a in range(A.domain_size):
        found[a] = None
        for c in range(core.domain_size):
            e = find_morphism(core, A, HOM, fixed={c: a})
            if e is None:
                continue
            g = compose(e, to_core)
            if is_isomorphic(induced_substructure(A, g.image_set()), core):
                found[a] = g
                break
    return found


def mobile_core_check(A: Structure) -> bool:
    return all(g is not None for g in mobile_core_witnesses(A).values())


def relative_orbit(A: Structure, a: int, Y: Iterable[int] = ()) -> frozenset[int]:
    """Orbit of ``a`` under the automorphisms fixing ``Y`` pointwise."""
    Y = set(Y)
    for v in Y | {a}:
        if not 0 <= v < A.domain_size:
            raise InvalidParameter(f"vertex {v} outside [0, {A.domain_size})")
    if a in Y:
        raise InvalidParameter(f"{a} lies in the fixed set")
    pinned = {y: y for y in Y}
    orbit = set()
    for b in range(A.domain_size):
        if b in Y:
            continue
        if find_morphism(A, A, AUT, fixed={**pinned, a: b}) is not None:
            orbit.add(b)
    return frozenset(orbit)


def is_transitive(A: Structure) -> bool:
    if A.domain_size == 0:
        raise InvalidParameter("transitivity of the empty structure is undefined")
    return len(relative_orbit(A, 0)) == A.domain_size


def is_partial_isomorphism(A: Structure, m: dict[int, int]) -> bool:
    if len(set(m.values())) != len(m):
        return False
    dom = list(m)
    for rel in A.relations:
        for t in product(dom, repeat=rel.arity):
            if (t in rel.tuples) != (tuple(m[x] for x in t) in rel.tuples):
                return False
    return True


def homogeneity_violation(A: Structure, size_cap: int) -> dict[int, int] | None:
    """First partial isomorphism of size <= ``size_cap`` with no automorphic extension."""
    if size_cap < 1:
        raise InvalidParameter(f"size_cap must be >= 1, got {size_cap}")
    N = A.domain_size
    for k in range(1, min(size_cap, N) + 1):
        for dom in combinations(range(N), k):
            for img in permutations(range(N), k):
                m = dict(zip(dom, img))
                if not is_partial_isomorphism(A, m):
                    continue
                if find_morphism(A, A, AUT, fixed=m) is None:
                    return m
    return None


def check_homogeneity(A: Structure, size_cap: int) -> bool:
    return homogeneity_violation(A, size_cap) is None
