"""Transformation-monoid algebra: composition, word terms and Zariski basic sets.

A word stores its coefficients in application order: ``coefficients[0]`` is the
innermost map, applied first.  So ``Word([p0, p1, p2])`` evaluates to
``p2 . s . p1 . s . p0`` at ``s``.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, DimensionMismatch, InvalidParameter
from .maps import FiniteMap, PartialInjection, check_same_size

__all__ = [
    "Word", "WordPair", "Side", "PartialInjection",
    "compose", "eval_word", "member_M", "translate_wordpair", "closure", "pointwise_basic",
]


def compose(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """``f . g``, i.e. ``a -> f(g(a))``."""
    if g.target_size != f.source_size:
        raise DimensionMismatch(
            f"cannot compose {f.source_size}->{f.target_size} after {g.source_size}->{g.target_size}")
    fi = f.image
    return FiniteMap(g.source_size, f.target_size, tuple(fi[x] for x in g.image))


@dataclass(frozen=True)
class Word:
    coefficients: tuple[FiniteMap, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise InvalidParameter("a word needs at least one coefficient")
        check_same_size(*coeffs)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, *coefficients: FiniteMap) -> "Word":
        return cls(tuple(coefficients))

    @property
    def length(self) -> int:
        """Number of variable slots ``k``."""
        return len(self.coefficients) - 1

    @property
    def size(self) -> int:
        return self.coefficients[0].source_size

    def __repr__(self):
        return f"Word(k={self.length}, {list(self.coefficients)})"


@dataclass(frozen=True)
class WordPair:
    phi: Word
    psi: Word

    def __post_init__(self):
        if self.phi.size != self.psi.size:
            raise DimensionMismatch(f"phi acts on {self.phi.size} points, psi on {self.psi.size}")

    @property
    def size(self) -> int:
        return self.phi.size

    def swapped(self) -> "WordPair":
        return WordPair(self.psi, self.phi)


def eval_word(w: Word, s: FiniteMap) -> FiniteMap:
    if s.source_size != w.size or not s.is_square:
        raise DimensionMismatch(f"word on {w.size} points evaluated at a {s.source_size}-point map")
    coeffs = w.coefficients
    out = coeffs[0]
    for p in coeffs[1:]:
        out = compose(p, compose(s, out))
    return out


def member_M(pair: WordPair, s: FiniteMap) -> bool:
    """Whether ``s`` lies in the basic set where the two words disagree."""
    return eval_word(pair.phi, s) != eval_word(pair.psi, s)


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def _translate_word(w: Word, t: FiniteMap, side: Side) -> Word:
    cs = list(w.coefficients)
    if side is Side.LEFT:
        # every slot now sees t.s: fold t into the coefficient after each slot
        cs = [cs[0]] + [compose(p, t) for p in cs[1:]]
    else:
        # every slot now sees s.t: fold t into the coefficient before each slot
        cs = [compose(t, p) for p in cs[:-1]] + [cs[-1]]
    return Word(tuple(cs))


def translate_wordpair(pair: WordPair, t: FiniteMap, side: Side) -> WordPair:
    """Word pair whose basic set is the preimage of ``pair``'s under translation by ``t``.

    LEFT: member at ``s`` iff ``pair`` is member at ``t.s``.
    RIGHT: member at ``s`` iff ``pair`` is member at ``s.t``.
    """
    if t.source_size != pair.size or not t.is_square:
        raise DimensionMismatch(f"translation by a {t.source_size}-point map on {pair.size} points")
    return WordPair(_translate_word(pair.phi, t, side), _translate_word(pair.psi, t, side))


def closure(generators: Iterable[FiniteMap], cap: int = 100_000) -> frozenset[FiniteMap]:
    """Submonoid generated by ``generators`` (identity included), breadth first."""
    gens = list(generators)
    if not gens:
        raise InvalidParameter("closure needs at least one generator to fix the point count")
    n = check_same_size(*gens)
    ident = FiniteMap.identity(n)
    seen = {ident}
    frontier = deque([ident])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeded {cap} elements")
                frontier.append(y)
    return frozenset(seen)


def pointwise_basic(a: Sequence[int], b: Sequence[int], S: Iterable[FiniteMap]) -> list[FiniteMap]:
    """Members of ``S`` sending the tuple ``a`` to the tuple ``b`` pointwise."""
    if len(a) != len(b):
        raise InvalidParameter(f"tuples of lengths {len(a)} and {len(b)}")
    return [s for s in S if all(s(x) == y for x, y in zip(a, b))]
