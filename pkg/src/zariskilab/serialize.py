"""JSON codecs for the package's value types.

Encoders return plain dicts; :func:`dumps` renders them byte-stably (sorted
keys, fixed separators, trailing newline).  Decoders validate through the
constructors, so malformed input surfaces as :class:`InvalidParameter`.
"""
from __future__ import annotations

import json
from typing import Any

from .errors import InvalidParameter
from .maps import FiniteMap
from .monoid import Word, WordPair
from .relstruct import Relation, Structure
from .separation import SeparationReport
from .wreath import WreathElement


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _field(d: dict, key: str):
    try:
        return d[key]
    except (KeyError, TypeError):
        raise InvalidParameter(f"missing field {key!r}") from None


def structure_to_json(A: Structure) -> dict:
    return {
        "name": A.name,
        "domain_size": A.domain_size,
        "relations": [{"name": r.name, "arity": r.arity,
                       "tuples": [list(t) for t in sorted(r.tuples)]}
                      for r in A.relations],
    }


def structure_from_json(d: dict) -> Structure:
    rels = []
    for r in _field(d, "relations"):
        tuples = frozenset(tuple(int(x) for x in t) for t in _field(r, "tuples"))
        rels.append(Relation(str(_field(r, "name")), int(_field(r, "arity")), tuples))
    return Structure(str(_field(d, "name")), int(_field(d, "domain_size")), tuple(rels))


def map_to_json(f: FiniteMap) -> dict:
    return {"source_size": f.source_size, "target_size": f.target_size, "image": list(f.image)}


def map_from_json(d: dict) -> FiniteMap:
    image = tuple(int(x) for x in _field(d, "image"))
    f = FiniteMap(int(_field(d, "source_size")), int(_field(d, "target_size")), image)
    return f


def word_to_json(w: Word) -> dict:
    return {"coefficients": [map_to_json(p) for p in w.coefficients]}


def word_from_json(d: dict) -> Word:
    return Word(tuple(map_from_json(p) for p in _field(d, "coefficients")))


def wordpair_to_json(pair: WordPair) -> dict:
    return {"phi": word_to_json(pair.phi), "psi": word_to_json(pair.psi)}


def wordpair_from_json(d: dict) -> WordPair:
    return WordPair(word_from_json(_field(d, "phi")), word_from_json(_field(d, "psi")))


def wreath_to_json(w: WreathElement) -> dict:
    return {"n": w.n, "m": w.m, "tau": list(w.tau.image),
            "components": [map_to_json(s) for s in w.components]}


def wreath_from_json(d: dict) -> WreathElement:
    return WreathElement(int(_field(d, "n")), int(_field(d, "m")),
                         FiniteMap.of(int(x) for x in _field(d, "tau")),
                         tuple(map_from_json(s) for s in _field(d, "components")))


def report_to_json(report: SeparationReport) -> dict:
    return report.to_json()


def check_report(check: str, structure: Structure, result: bool, witness=None) -> dict:
    """Report for a structure check; ``witness`` is a map, a vertex collection or absent."""
    if isinstance(witness, FiniteMap):
        witness = map_to_json(witness)
    elif witness is not None:
        witness = sorted(witness)
    return {"check": check, "structure": structure.name, "result": bool(result), "witness": witness}
