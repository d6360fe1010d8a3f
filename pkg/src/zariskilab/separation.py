"""Witness synthesis on the copies structure ``gen_G(n, m)``.

Given finitely many basic sets ``M(phi, psi)`` that all contain
``id ⋉ c_plus``, build a permutation ``tau`` of copy indices such that
``tau ⋉ c_minus`` lies in every one of them.  Each pair is handled by one of
three constructions, recorded in reports under the labels ``DISAGREE``,
``SIGN_FLIP`` and ``FRESH_START``:

* equal lengths, copy words disagree at the identity: fix every copy index the
  copy words visit at a disagreeing index;
* equal lengths, copy words agree at the identity: ``id ⋉ c_minus`` is already a
  member; fix every copy index visited while evaluating at a disagreeing vertex;
* different lengths: extend the accumulated constraint so the two copy words
  are forced apart at a fresh start index.

The window ``[0, U)`` of copy indices stands in for the naturals.  Finite
windows admit no proper injections, so fresh-element moves need headroom:
when the given ``n`` is too small, the synthesis runs on ``gen_G(U, m)`` with
every coefficient extended by the identity on the added copies.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidParameter, LabError, PreconditionViolated, WindowTooSmall
from .maps import FiniteMap, PartialInjection, check_same_size
from .monoid import Word, WordPair, member_M
from .wreath import (WreathElement, c_minus, c_plus, copy_map, extend_copies, id_ltimes,
                     ltimes, map_to_wreath, part_swap, sgn, wreath_to_map)

Constraint = PartialInjection

DISAGREE = "4.5"
SIGN_FLIP = "4.6"
FRESH_START = "4.8"


class ConstructionFailure(LabError, AssertionError):
    """A construction produced a result contradicting what it guarantees."""


# -- index words ---------------------------------------------------------------

@dataclass(frozen=True)
class IndexWord:
    """Copy-level word ``xi_k . tau . ... . tau . xi_0``; ``coefficients[0]`` applies first."""

    coefficients: tuple[FiniteMap, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise InvalidParameter("an index word needs at least one coefficient")
        check_same_size(*coeffs)
        for c in coeffs:
            if not c.is_injective():
                raise InvalidParameter(f"index word coefficient {c} is not injective")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, *coefficients: FiniteMap) -> "IndexWord":
        return cls(tuple(coefficients))

    @property
    def length(self) -> int:
        return len(self.coefficients) - 1

    @property
    def window(self) -> int:
        return self.coefficients[0].source_size

    def widened(self, window: int) -> "IndexWord":
        """Same word on a larger window, coefficients fixing the new indices."""
        return IndexWord(tuple(
            FiniteMap.of(list(c.image) + list(range(c.source_size, window)))
            for c in self.coefficients))


@dataclass(frozen=True)
class IndexPair:
    phi: IndexWord
    psi: IndexWord


def _lookup(tau):
    if isinstance(tau, PartialInjection):
        return tau.get
    return lambda x: tau.image[x]


def trace_index_word(w: IndexWord, tau, x: int) -> tuple[int | None, list[int]]:
    """Value of the word at ``x`` together with the points where ``tau`` was applied.

    The value is ``None`` as soon as ``tau`` is undefined at an application point.
    """
    apply = _lookup(tau)
    coeffs = w.coefficients
    y = coeffs[0](x)
    visited = []
    for c in coeffs[1:]:
        visited.append(y)
        t = apply(y)
        if t is None:
            return None, visited
        y = c(t)
    return y, visited


def eval_index_word(w: IndexWord, tau, x: int) -> int | None:
    if not 0 <= x < w.window:
        raise InvalidParameter(f"index {x} outside window [0, {w.window})")
    return trace_index_word(w, tau, x)[0]


def index_word(w: Word, m: int) -> IndexWord:
    """Copy maps of the coefficients of a word over ``gen_G(n, m)``."""
    return IndexWord(tuple(copy_map(p, m) for p in w.coefficients))


# -- neighbourhoods from instrumented evaluation ---------------------------------

class Neighborhood(NamedTuple):
    constraint: Constraint
    witness_index: int
    support: tuple[int, ...]


def _fix(points: Iterable[int], size: int) -> Constraint:
    return PartialInjection(size, {p: p for p in points})


def disagreement_neighborhood(phi: IndexWord, psi: IndexWord) -> Neighborhood:
    """Identity-fixing constraint on which the two copy words keep disagreeing.

    Every total injection extending the returned constraint separates the words
    at ``witness_index``, because it agrees with the identity at every point the
    two evaluations pass through.
    """
    if phi.length != psi.length:
        raise PreconditionViolated(f"lengths {phi.length} and {psi.length} differ")
    U = phi.window
    if psi.window != U:
        raise InvalidParameter(f"windows {U} and {psi.window} differ")
    ident = FiniteMap.identity(U)
    for h in range(U):
        a, sa = trace_index_word(phi, ident, h)
        b, sb = trace_index_word(psi, ident, h)
        if a != b:
            support = tuple(sorted(set(sa) | set(sb)))
            return Neighborhood(_fix(support, U), h, support)
    raise PreconditionViolated("the copy words agree at the identity")


def _copy_of(v: int, m: int) -> int:
    return v // (2 * m)


def trace_word_at(w: Word, s: FiniteMap, v: int, m: int) -> tuple[int, list[int]]:
    """Value of ``w(s)`` at vertex ``v`` and the copy indices where ``s`` was applied."""
    coeffs = w.coefficients
    y = coeffs[0](v)
    copies = []
    for p in coeffs[1:]:
        copies.append(_copy_of(y, m))
        y = p(s(y))
    return y, copies


def _instrumented_neighborhood(pair: WordPair, s: FiniteMap, n: int, m: int) -> Neighborhood:
    for v in range(s.source_size):
        a, ca = trace_word_at(pair.phi, s, v, m)
        b, cb = trace_word_at(pair.psi, s, v, m)
        if a != b:
            support = tuple(sorted(set(ca) | set(cb)))
            return Neighborhood(_fix(support, n), _copy_of(v, m), support)
    raise PreconditionViolated("the words agree at the anchor map")


def _check_g_pair(pair: WordPair, n: int, m: int):
    if pair.size != 2 * n * m:
        raise InvalidParameter(f"pair acts on {pair.size} points, G_{n},{m} has {2 * n * m}")


def sign_flip_neighborhood(pair: WordPair, n: int, m: int) -> Neighborhood:
    """Equal-length pair whose copy words agree at the identity while the pair
    separates ``id ⋉ c_plus``.

    Confirms ``id ⋉ c_minus`` is a member by direct evaluation, then returns the
    identity-fixing constraint on the copy indices visited at a disagreeing
    vertex of ``phi(id ⋉ c_minus)`` and ``psi(id ⋉ c_minus)``.
    """
    _check_g_pair(pair, n, m)
    if pair.phi.length != pair.psi.length:
        raise PreconditionViolated("lengths differ")
    plus, minus = id_ltimes(n, c_plus(m)), id_ltimes(n, c_minus(m))
    if not member_M(pair, plus):
        raise PreconditionViolated("the pair does not separate id ⋉ c_plus")
    phi_t, psi_t = index_word(pair.phi, m), index_word(pair.psi, m)
    ident = FiniteMap.identity(n)
    if any(eval_index_word(phi_t, ident, h) != eval_index_word(psi_t, ident, h) for h in range(n)):
        raise PreconditionViolated("the copy words disagree at the identity; use disagreement_neighborhood")
    if not member_M(pair, minus):
        raise ConstructionFailure(f"id ⋉ c_minus is not separated by {pair}")
    return _instrumented_neighborhood(pair, minus, n, m)


class SignTrace(NamedTuple):
    phi_sign: int
    psi_sign: int
    phi_hat: tuple[int, int]
    psi_hat: tuple[int, int]
    delta: int


def compute_sign_trace(pair: WordPair, n: int, m: int, h: int) -> SignTrace:
    """Sign products and outermost components along copy ``h`` under ``id ⋉ c``.

    ``phi_sign`` multiplies the signs of the components of ``p_0 .. p_{k-1}``
    met along the copy path of ``h``; ``phi_hat`` is the pair of images of the
    two distinguished points under the outermost component on that path.
    """
    _check_g_pair(pair, n, m)
    if pair.phi.length != pair.psi.length:
        raise PreconditionViolated("lengths differ")
    if not 0 <= h < n:
        raise InvalidParameter(f"copy {h} outside [0, {n})")

    def walk(word):
        comps = [map_to_wreath(p, n, m, check=False) for p in word.coefficients]
        copy, sign = h, 1
        for w in comps[:-1]:
            sign *= sgn(w.components[copy], m)
            copy = w.tau(copy)
        last = comps[-1]
        hat = last.components[copy]
        return sign, (hat(0), hat(m)), last.tau(copy)

    ps, ph, d1 = walk(pair.phi)
    qs, qh, d2 = walk(pair.psi)
    if d1 != d2:
        raise PreconditionViolated("the copy words disagree at the identity on copy h")
    return SignTrace(ps, qs, ph, qh, d1)


def predict_value(trace: SignTrace, k: int, m: int, side: str, anchor: int, part: int) -> int:
    """Vertex ``[w(id ⋉ c_anchor)](h, x)`` for ``x`` in part ``part``, read off a sign trace.

    Starting in part ``e``, the point reaches the distinguished point of part
    ``e * sign * anchor**k`` before the outermost component acts.
    """
    sign, hat = (trace.phi_sign, trace.phi_hat) if side == "phi" else (trace.psi_sign, trace.psi_hat)
    target = part * sign * anchor ** k
    local = hat[0] if target == 1 else hat[1]
    return 2 * m * trace.delta + local


# -- different lengths ------------------------------------------------------------

@dataclass(frozen=True)
class FreshStartWitness:
    tau_hat: PartialInjection
    x: tuple[int, ...]
    x_prime: tuple[int, ...]
    y: tuple[int, ...]
    y_prime: tuple[int, ...]
    links: tuple[tuple[int, int], ...] = field(default=())

    @property
    def start(self) -> int:
        return self.x[0]


def fresh_start_witness(phi: IndexWord, psi: IndexWord, constraint: Constraint,
                        budget: int = 200_000) -> FreshStartWitness:
    """Extend ``constraint`` so that the longer word ``phi`` and the shorter ``psi``
    are defined and differ at a start index, for every total extension.

    Builds ``x_0..x_k`` with ``x'_j = xi_j(x_j)`` and ``y_0..y_l`` with
    ``y'_j = theta_j(y_j)`` from ``x_0 = y_0``, linking ``x'_j -> x_{j+1}`` and
    ``y'_j -> y_{j+1}``.  Plain values avoid the constraint's range and earlier
    plain values, primed values avoid its domain and earlier primed values, and
    ``x_i = y_i`` exactly when ``x'_{i-1} = y'_{i-1}``.

    Candidates are tried smallest first.  A finite window can run out of
    admissible values after an early choice, so dead ends backtrack; when the
    greedy choices all succeed the result is the greedy one.
    """
    k, l = phi.length, psi.length
    if not l < k:
        raise PreconditionViolated(f"need the second word shorter, got lengths {k} and {l}")
    U = phi.window
    if psi.window != U or constraint.size != U:
        raise InvalidParameter("words and constraint must share one window")
    xi, th = phi.coefficients, psi.coefficients
    z, w = constraint.domain, constraint.range
    nodes = 0

    def options(i, X, Xp, Y, Yp):
        plain = w | set(X) | set(Y)
        primed = z | set(Xp) | set(Yp)
        ok_x = [c for c in range(U) if c not in plain and xi[i](c) not in primed]
        if i > l:
            return [(c, None) for c in ok_x]
        ok_y = [c for c in range(U) if c not in plain and th[i](c) not in primed]
        if Xp[-1] == Yp[-1]:
            shared = set(ok_y)
            return [(c, c) for c in ok_x if c in shared]
        return [(a, b) for a in ok_x for b in ok_y if a != b]

    def grow(i, X, Xp, Y, Yp):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise WindowTooSmall(f"search budget exhausted in window [0, {U})")
        if i > k:
            return X, Xp, Y, Yp
        for a, b in options(i, X, Xp, Y, Yp):
            nX, nXp = X + (a,), Xp + (xi[i](a),)
            nY, nYp = (Y + (b,), Yp + (th[i](b),)) if b is not None else (Y, Yp)
            done = grow(i + 1, nX, nXp, nY, nYp)
            if done is not None:
                return done
        return None

    found = None
    for x0 in range(U):
        if xi[0](x0) in z or th[0](x0) in z:
            continue
        found = grow(1, (x0,), (xi[0](x0),), (x0,), (th[0](x0),))
        if found is not None:
            break
    if found is None:
        raise WindowTooSmall(f"no admissible choice sequence in window [0, {U})")
    X, Xp, Y, Yp = found
    links = tuple((Xp[j], X[j + 1]) for j in range(k)) + tuple((Yp[j], Y[j + 1]) for j in range(l))
    tau_hat = constraint.extend(links)
    return FreshStartWitness(tau_hat, X, Xp, Y, Yp, links)


def fresh_start_properties(wit: FreshStartWitness, phi: IndexWord, psi: IndexWord,
                           constraint: Constraint) -> dict[str, bool]:
    """Independent check of the five construction properties of a witness."""
    k, l = phi.length, psi.length
    xi, th = phi.coefficients, psi.coefficients
    t = wit.tau_hat
    p4 = (len(wit.x) == k + 1 and len(wit.y) == l + 1
          and all(t.get(a) == b for a, b in constraint.items())
          and all(t.get(wit.x_prime[j]) == wit.x[j + 1] for j in range(k))
          and all(t.get(wit.y_prime[j]) == wit.y[j + 1] for j in range(l)))
    return {
        "1": wit.x[0] == wit.y[0],
        "2": all(wit.x_prime[j] == xi[j](wit.x[j]) for j in range(k + 1)),
        "3": all(wit.y_prime[j] == th[j](wit.y[j]) for j in range(l + 1)),
        "4": p4,
        "5": wit.x_prime[k] != wit.y_prime[l],
    }


def required_window(pairs: Sequence, constraint: Constraint | None = None) -> int:
    """Window size covering the fresh indices the different-length construction may use."""
    base = len(constraint) if constraint is not None else 0
    return base + sum(2 * (p.phi.length + p.psi.length + 2) for p in pairs)


# -- synthesis ------------------------------------------------------------------

@dataclass(frozen=True)
class PairEvidence:
    lemma: str
    witness_index: int
    support: tuple[int, ...]
    member: bool
    family: str = "plus"


@dataclass(frozen=True)
class SeparationReport:
    n: int
    m: int
    window: int
    tau: FiniteMap
    pairs: tuple[PairEvidence, ...]
    verified: bool

    def to_json(self) -> dict:
        return {
            "window": self.window,
            "tau": list(self.tau.image),
            "pairs": [{"lemma": p.lemma, "witness_index": p.witness_index,
                       "support": list(p.support), "member": p.member} for p in self.pairs],
            "verified": self.verified,
        }


def _widen_pair(pair: WordPair, m: int, window: int) -> WordPair:
    def widen(word):
        return Word(tuple(extend_copies(p, m, window) for p in word.coefficients))
    return WordPair(widen(pair.phi), widen(pair.psi))


def classify(pair: WordPair, m: int) -> str:
    """Which construction handles the pair: DISAGREE, SIGN_FLIP or FRESH_START."""
    if pair.phi.length != pair.psi.length:
        return FRESH_START
    phi_t, psi_t = index_word(pair.phi, m), index_word(pair.psi, m)
    ident = FiniteMap.identity(phi_t.window)
    for h in range(phi_t.window):
        if eval_index_word(phi_t, ident, h) != eval_index_word(psi_t, ident, h):
            return DISAGREE
    return SIGN_FLIP


def _synthesize(items: list[tuple[WordPair, int, str]], n: int, m: int,
                allow_enlarge: bool) -> SeparationReport:
    anchors = {1: id_ltimes(n, c_plus(m)), -1: id_ltimes(n, c_minus(m))}
    for pair, anchor, family in items:
        _check_g_pair(pair, n, m)
        if not member_M(pair, anchors[anchor]):
            name = "c_plus" if anchor == 1 else "c_minus"
            raise PreconditionViolated(f"a {family} pair does not separate id ⋉ {name}")

    evidence: list[dict | None] = [None] * len(items)
    fixed: set[int] = set()
    deferred: list[tuple[int, IndexPair]] = []
    for idx, (pair, anchor, family) in enumerate(items):
        kind = classify(pair, m)
        if kind == DISAGREE:
            nb = disagreement_neighborhood(index_word(pair.phi, m), index_word(pair.psi, m))
        elif kind == SIGN_FLIP:
            if anchor == 1:
                nb = sign_flip_neighborhood(pair, n, m)
            else:
                nb = _instrumented_neighborhood(pair, anchors[-1], n, m)
        else:
            phi_t, psi_t = index_word(pair.phi, m), index_word(pair.psi, m)
            if phi_t.length < psi_t.length:
                phi_t, psi_t = psi_t, phi_t
            deferred.append((idx, IndexPair(phi_t, psi_t)))
            continue
        fixed.update(nb.support)
        evidence[idx] = dict(lemma=kind, witness_index=nb.witness_index,
                             support=nb.support, family=family)

    base = _fix(fixed, n)
    window = n
    need = required_window([p for _, p in deferred], base)
    if need > window:
        if not allow_enlarge:
            raise WindowTooSmall(f"{n} copies given, the construction asks for {need}")
        window = need

    while True:
        acc = base.resized(window)
        found = {}
        try:
            for idx, ip in deferred:
                wit = fresh_start_witness(ip.phi.widened(window), ip.psi.widened(window), acc)
                acc = wit.tau_hat
                found[idx] = wit
            break
        except WindowTooSmall:
            if not allow_enlarge:
                raise
            window *= 2

    for idx, wit in found.items():
        support = tuple(sorted({a for a, _ in wit.links}))
        evidence[idx] = dict(lemma=FRESH_START, witness_index=wit.start, support=support,
                             family=items[idx][2])

    tau = acc.complete()
    s = ltimes(tau, c_minus(m))
    pairs_out = []
    for (pair, _, _), ev in zip(items, evidence):
        wide = _widen_pair(pair, m, window) if window != n else pair
        pairs_out.append(PairEvidence(member=member_M(wide, s), **ev))
    verified = all(p.member for p in pairs_out)
    return SeparationReport(n, m, window, tau, tuple(pairs_out), verified)


def separate(pairs: Sequence[WordPair], n: int, m: int, allow_enlarge: bool = True) -> SeparationReport:
    """A copy permutation ``tau`` with ``tau ⋉ c_minus`` in every basic set of ``pairs``.

    Every pair must separate ``id ⋉ c_plus``.  The returned report records the
    window actually used and re-evaluates membership for each pair.
    """
    return _synthesize([(p, 1, "plus") for p in pairs], n, m, allow_enlarge)


def non_hausdorff_witness(pairs_plus: Sequence[WordPair], pairs_minus: Sequence[WordPair],
                          n: int, m: int, allow_enlarge: bool = True) -> SeparationReport:
    """A common ``tau ⋉ c_minus`` in basic sets around ``id ⋉ c_plus`` and ``id ⋉ c_minus``."""
    items = [(p, 1, "plus") for p in pairs_plus] + [(p, -1, "minus") for p in pairs_minus]
    return _synthesize(items, n, m, allow_enlarge)


# -- random families -------------------------------------------------------------

def default_generators(n: int, m: int) -> list[FiniteMap]:
    """A small fixed set of endomorphisms of ``gen_G(n, m)`` used to draw coefficients."""
    ident = FiniteMap.identity(n)
    cycle = FiniteMap.of([(i + 1) % n for i in range(n)])
    swap = FiniteMap.of([1, 0] + list(range(2, n))) if n >= 2 else ident
    mixed = tuple(c_plus(m) if i % 3 == 0 else part_swap(m) if i % 3 == 1 else FiniteMap.identity(2 * m)
                  for i in range(n))
    gens = [
        ltimes(ident, FiniteMap.identity(2 * m)),
        ltimes(ident, part_swap(m)),
        ltimes(ident, c_plus(m)),
        ltimes(ident, c_minus(m)),
        ltimes(swap, FiniteMap.identity(2 * m)),
        ltimes(cycle, c_plus(m)),
        ltimes(swap, c_minus(m)),
        wreath_to_map(WreathElement(n, m, swap, mixed)),
    ]
    return list(dict.fromkeys(gens))


def random_pair(rng: random.Random, generators: Sequence[FiniteMap], max_len: int = 2) -> WordPair:
    k = rng.randint(0, max_len)
    l = rng.randint(0, max_len)
    phi = Word(tuple(rng.choice(generators) for _ in range(k + 1)))
    psi = Word(tuple(rng.choice(generators) for _ in range(l + 1)))
    return WordPair(phi, psi)


def random_family(rng: random.Random, n: int, m: int, anchor: int = 1, max_pairs: int = 3,
                  max_len: int = 2, generators: Sequence[FiniteMap] | None = None,
                  max_tries: int = 10_000) -> list[WordPair]:
    """Between one and ``max_pairs`` random pairs, each separating ``id ⋉ c_anchor``."""
    gens = list(generators) if generators is not None else default_generators(n, m)
    s = id_ltimes(n, c_plus(m) if anchor == 1 else c_minus(m))
    family = []
    target = rng.randint(1, max_pairs)
    for _ in range(max_tries):
        if len(family) == target:
            break
        pair = random_pair(rng, gens, max_len)
        if member_M(pair, s):
            family.append(pair)
    return family


def agreeing_copy_word_pairs(n: int, m: int, endos: Sequence[FiniteMap]):
    """All length-one word pairs over ``endos`` meeting the equal-copy-word preconditions."""
    plus = id_ltimes(n, c_plus(m))
    ident = FiniteMap.identity(n)
    for p0, p1, q0, q1 in product(endos, repeat=4):
        pair = WordPair(Word((p0, p1)), Word((q0, q1)))
        if not member_M(pair, plus):
            continue
        phi_t, psi_t = index_word(pair.phi, m), index_word(pair.psi, m)
        if all(eval_index_word(phi_t, ident, h) == eval_index_word(psi_t, ident, h) for h in range(n)):
            yield pair

