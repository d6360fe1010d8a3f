"""Sign calculus on End(K_{m,m}) and the codec between endomorphisms of the
copies structure ``gen_G(n, m)`` and pairs (copy map, per-copy components).

Inside each copy the local vertex ``x`` in ``[0, 2m)`` belongs to part +1 iff
``x < m``.  The distinguished points of the two parts are ``0`` and ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator

from .errors import (CopySplit, InconsistentParts, InvalidParameter, NotAnEndomorphism,
                     SizeGuardExceeded)
from .maps import FiniteMap
from .monoid import compose
from .relstruct import gen_G, gen_Kmm
from .search import MorphismKind, check_morphism, endomorphisms


def a_plus(m: int) -> int:
    return 0


def a_minus(m: int) -> int:
    return m


def _part(x: int, m: int) -> int:
    return 1 if x < m else -1


def sgn(s: FiniteMap, m: int) -> int:
    """+1 if ``s`` keeps the two parts of K_{m,m} in place, -1 if it swaps them."""
    if s.source_size != 2 * m or not check_morphism(gen_Kmm(m), gen_Kmm(m), s, MorphismKind.HOM):
        raise NotAnEndomorphism(f"{s} is not an endomorphism of K_{m},{m}")
    sign = _part(s(0), m)
    for x in range(2 * m):
        if _part(s(x), m) != _part(x, m) * sign:
            raise InconsistentParts(f"{s} splits a part of K_{m},{m}")
    return sign


def c_plus(m: int) -> FiniteMap:
    """Collapse each part onto its own distinguished point (sign +1)."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    return FiniteMap.of([0] * m + [m] * m)


def c_minus(m: int) -> FiniteMap:
    """Collapse each part onto the other part's distinguished point (sign -1)."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    return FiniteMap.of([m] * m + [0] * m)


def part_swap(m: int) -> FiniteMap:
    """The automorphism ``x -> x + m mod 2m`` exchanging the parts index-wise."""
    return FiniteMap.of([(x + m) % (2 * m) for x in range(2 * m)])


def kmm_endomorphisms(m: int) -> list[FiniteMap]:
    return endomorphisms(gen_Kmm(m))


@dataclass(frozen=True)
class WreathElement:
    """``(tau, [s_0, ..., s_{n-1}])`` acting by ``(i, x) -> (tau(i), s_i(x))``."""

    n: int
    m: int
    tau: FiniteMap
    components: tuple[FiniteMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.tau.source_size != self.n or self.tau.target_size != self.n:
            raise InvalidParameter(f"copy map {self.tau} is not a map on [0, {self.n})")
        if not self.tau.is_injective():
            raise InvalidParameter(f"copy map {self.tau} is not injective")
        if len(self.components) != self.n:
            raise InvalidParameter(f"expected {self.n} components, got {len(self.components)}")
        K = gen_Kmm(self.m)
        for s in self.components:
            if s.source_size != 2 * self.m or not check_morphism(K, K, s, MorphismKind.HOM):
                raise NotAnEndomorphism(f"component {s} is not an endomorphism of K_{self.m},{self.m}")

    @classmethod
    def uniform(cls, tau: FiniteMap, s: FiniteMap) -> "WreathElement":
        """``tau`` acting on copies with the same component ``s`` everywhere."""
        m = s.source_size // 2
        return cls(tau.source_size, m, tau, (s,) * tau.source_size)

    def then(self, other: "WreathElement") -> "WreathElement":
        """``self . other`` in wreath coordinates (``other`` applied first)."""
        tau = compose(self.tau, other.tau)
        comps = tuple(compose(self.components[other.tau(i)], other.components[i])
                      for i in range(self.n))
        return WreathElement(self.n, self.m, tau, comps)


def wreath_to_map(w: WreathElement) -> FiniteMap:
    size2 = 2 * w.m
    image = []
    for i in range(w.n):
        base = size2 * w.tau(i)
        comp = w.components[i].image
        image.extend(base + comp[x] for x in range(size2))
    return FiniteMap.of(image)


def map_to_wreath(f: FiniteMap, n: int, m: int, check: bool = True) -> WreathElement:
    """Decompose an endomorphism of ``gen_G(n, m)`` into copy map and components."""
    size2 = 2 * m
    if f.source_size != n * size2 or not f.is_square:
        raise NotAnEndomorphism(f"map on {f.source_size} points, expected {n * size2}")
    if check and not check_morphism(gen_G(n, m), gen_G(n, m), f, MorphismKind.HOM):
        raise NotAnEndomorphism(f"{f} is not an endomorphism of G_{n},{m}")
    tau, comps = [], []
    for i in range(n):
        block = f.image[i * size2:(i + 1) * size2]
        copies = {v // size2 for v in block}
        if len(copies) != 1:
            raise CopySplit(f"copy {i} is spread over copies {sorted(copies)}")
        tau.append(copies.pop())
        comps.append(FiniteMap.of(v % size2 for v in block))
    return WreathElement(n, m, FiniteMap.of(tau), tuple(comps))


def copy_map(f: FiniteMap, m: int) -> FiniteMap:
    """The induced map on copy indices (no endomorphism check)."""
    size2 = 2 * m
    n = f.source_size // size2
    return FiniteMap.of(f.image[i * size2] // size2 for i in range(n))


def id_ltimes(n: int, s: FiniteMap) -> FiniteMap:
    return wreath_to_map(WreathElement.uniform(FiniteMap.identity(n), s))


def ltimes(tau: FiniteMap, s: FiniteMap) -> FiniteMap:
    """``tau`` acting on copies with the uniform component ``s``."""
    return wreath_to_map(WreathElement.uniform(tau, s))


def iter_wreath_elements(n: int, m: int, bijective: bool = False) -> Iterator[WreathElement]:
    comps = kmm_endomorphisms(m)
    if bijective:
        comps = [s for s in comps if s.is_injective()]
    for perm in permutations(range(n)):
        tau = FiniteMap.of(perm)
        for choice in product(comps, repeat=n):
            yield WreathElement(n, m, tau, choice)


def wreath_count(n: int, m: int, bijective: bool = False) -> int:
    per_copy = 2 * factorial(m) ** 2 if bijective else 2 * m ** (2 * m)
    return factorial(n) * per_copy ** n


def check_wreath_characterization(n: int, m: int, guard: int = 200_000) -> bool:
    """Brute-force End(gen_G(n, m)) coincides with the set of all wreath elements."""
    if wreath_count(n, m) > guard:
        raise SizeGuardExceeded(f"{wreath_count(n, m)} wreath elements exceed guard {guard}")
    brute = endomorphisms(gen_G(n, m), limit=guard + 1)
    if len(brute) > guard:
        raise SizeGuardExceeded(f"End(G_{n},{m}) exceeds guard {guard}")
    return set(brute) == {wreath_to_map(w) for w in iter_wreath_elements(n, m)}


def extend_copies(f: FiniteMap, m: int, n_new: int) -> FiniteMap:
    """Extend an endomorphism of ``gen_G(n, m)`` to ``gen_G(n_new, m)``, acting as the
    identity on the added copies."""
    size2 = 2 * m
    n = f.source_size // size2
    if n_new < n:
        raise InvalidParameter(f"cannot shrink {n} copies to {n_new}")
    return FiniteMap.of(list(f.image) + list(range(n * size2, n_new * size2)))

