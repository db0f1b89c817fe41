"""JSON space files and map files.

Space file::

    {"name": "S3xS2",
     "odd_generators": [{"name": "x3", "degree": 3}],
     "even_basis": [{"name": "y2", "degree": 2}],
     "even_products": [{"left": "y2", "right": "y2", "result": []}],
     "odd_products_vanish": false,          # optional
     "odd_basis": [...],                    # optional, only with the flag
     "betti_only": [1, 0, 1]}               # optional, recognizer-only files

Map file::

    {"images": {"x3": [{"monomial": ["x3"], "coeff": "2"}],
                "y2": [{"monomial": [], "even": "y2", "coeff": "-1"}]}}

Rationals are written as strings ``"p/q"`` (or ``"p"``); plain JSON integers
are accepted on input.  Unlisted even products are zero.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .endomorphism import GradedLinearMap, RingEndomorphism, from_generator_images
from .graded_algebra import AlgebraElement, BasisElement, EvenAlgebraTable, GeneratorSpec, RingPresentation
from .polynomial import fraction_str
from .spaces import BettiProfile


class FormatError(ValueError):
    """Malformed space or map file."""


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise FormatError(f"rational must be a string 'p/q' or an integer, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {x!r}") from None


def _get(obj, key, kind, default=None, required=True):
    if key not in obj:
        if required:
            raise FormatError(f"missing key {key!r}")
        return default
    value = obj[key]
    if not isinstance(value, kind):
        raise FormatError(f"key {key!r} has the wrong type")
    return value


def _gens(items, what):
    out = []
    for item in items:
        if not isinstance(item, dict):
            raise FormatError(f"{what} entries must be objects")
        name = _get(item, "name", str)
        degree = _get(item, "degree", int)
        out.append((name, degree))
    return out


def presentation_from_dict(data: dict) -> RingPresentation | BettiProfile:
    """Parse a space document.  Betti-only files give a :class:`BettiProfile`.

    The result is not validated; call ``.check()`` (or
    :func:`~lefschetz.graded_algebra.validate_presentation`).
    """
    if not isinstance(data, dict):
        raise FormatError("space file must hold a JSON object")
    if "betti_only" in data:
        betti = _get(data, "betti_only", list)
        if not all(isinstance(b, int) and not isinstance(b, bool) and b >= 0 for b in betti):
            raise FormatError("betti_only must list nonnegative integers")
        return BettiProfile(betti, _get(data, "name", str, "", required=False))
    name = _get(data, "name", str, "", required=False)
    odd = _gens(_get(data, "odd_generators", list, [], required=False), "odd_generators")
    flag = _get(data, "odd_products_vanish", bool, False, required=False)
    basis = _gens(_get(data, "even_basis", list, [], required=False), "even_basis")
    odd_basis = _gens(_get(data, "odd_basis", list, [], required=False), "odd_basis")
    if odd_basis and not flag:
        raise FormatError("odd_basis needs odd_products_vanish")
    entries = []
    for item in _get(data, "even_products", list, [], required=False):
        if not isinstance(item, dict):
            raise FormatError("even_products entries must be objects")
        left, right = _get(item, "left", str), _get(item, "right", str)
        result = {}
        for term in _get(item, "result", list):
            if not isinstance(term, dict):
                raise FormatError("product result terms must be objects")
            basis_name = _get(term, "basis", str)
            result[basis_name] = result.get(basis_name, 0) + parse_rational(_get(term, "coeff", (str, int)))
        entries.append((left, right, result))
    try:
        table = EvenAlgebraTable.build(basis + odd_basis, entries)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return RingPresentation(tuple(GeneratorSpec(n, d) for n, d in odd), table, name, flag)


def presentation_to_dict(p: RingPresentation | BettiProfile) -> dict:
    if isinstance(p, tuple):
        return {"name": getattr(p, "name", ""), "betti_only": list(p)}
    t = p.even
    out = {
        "name": p.name,
        "odd_generators": [{"name": g.name, "degree": g.degree} for g in p.odd_generators],
        "even_basis": [{"name": n, "degree": d} for n, d in t.basis if d % 2 == 0],
        "even_products": [
            {"left": t.name(i), "right": t.name(j),
             "result": [{"basis": t.name(k), "coeff": fraction_str(c)} for k, c in res]}
            for (i, j), res in t.products
        ],
    }
    if p.odd_products_vanish:
        out["odd_products_vanish"] = True
        out["odd_basis"] = [{"name": n, "degree": d} for n, d in t.basis if d % 2]
    return out


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def load_space(path):
    return presentation_from_dict(_load_json(path))


def save_space(p, path, name: str | None = None) -> None:
    data = presentation_to_dict(p)
    if name is not None:
        data["name"] = name
    Path(path).write_text(dumps(data), encoding="utf-8")


def images_from_dict(p: RingPresentation, data: dict) -> dict[str, AlgebraElement]:
    if not isinstance(data, dict):
        raise FormatError("map file must hold a JSON object")
    images = _get(data, "images", dict)
    known = {g.name for g in p.odd_generators} | {n for n, _ in p.even.basis}
    out = {}
    for name, terms in images.items():
        if name not in known:
            raise FormatError(f"map names unknown generator {name!r}")
        if not isinstance(terms, list):
            raise FormatError(f"image of {name} must be a list of terms")
        elem = AlgebraElement(p, {})
        for term in terms:
            if not isinstance(term, dict):
                raise FormatError(f"terms of {name} must be objects")
            mono = _get(term, "monomial", list, [], required=False)
            even = _get(term, "even", str, None, required=False)
            coeff = parse_rational(_get(term, "coeff", (str, int)))
            try:
                elem = elem + p.monomial(mono, even, coeff)
            except KeyError as exc:
                raise FormatError(f"image of {name}: {exc.args[0]}") from None
        out[name] = elem
    return out


def load_map(p: RingPresentation, path) -> RingEndomorphism:
    """Parse a map file and extend it to a ring endomorphism of ``p``."""
    return from_generator_images(p, images_from_dict(p, _load_json(path)))


def element_to_terms(a: AlgebraElement) -> list[dict]:
    p = a.presentation
    out = []
    for b in sorted(a.terms, key=lambda b: (p.degree_of(b), b)):
        term = {"monomial": [p.odd_generators[i].name for i in b.odd_part]}
        if b.even_part:
            term["even"] = p.even.name(b.even_part)
        term["coeff"] = fraction_str(a.terms[b])
        out.append(term)
    return out


def map_to_dict(f: GradedLinearMap) -> dict:
    """Images of every odd generator and every table class."""
    p = f.presentation
    images = {}
    for i, g in enumerate(p.odd_generators):
        images[g.name] = element_to_terms(f.image(BasisElement((i,), 0)))
    for j in range(1, p.even.size + 1):
        images[p.even.name(j)] = element_to_terms(f.image(BasisElement((), j)))
    return {"images": images}


def save_map(f: GradedLinearMap, path) -> None:
    Path(path).write_text(dumps(map_to_dict(f)), encoding="utf-8")
