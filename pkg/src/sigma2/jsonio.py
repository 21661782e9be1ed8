"""JSON encodings for every value that crosses the command line.

Formats:

  * KClass        {"surface": "sigma2"|"quadric", "rank": int,
                   "c1": [int, int], "chi": int}
  * PicClass      [int, int] (the surface comes from context)
  * collection    list of KClass objects; collection axioms are checked
                  on parse and violations name the offending slot pair
  * twist word    [{"T": 0}, {"T'": 3}, {"OC": 1}, {"Sh": 1}]
  * group word    "s1,-s2,f3"  (sigma_1, sigma_2 inverse, flip slot 3)
  * normal form   {"m": int, "odd": bool, "anchor": int,
                   "squares": [[a, 2], [a, -2], ...], "shift_parity": 0|1}

Parsing is strict: unknown keys, non-integers and booleans are rejected.
"""

from __future__ import annotations

from typing import Any

from .lattice import KClass, PicClass, SURFACES, Surface, pic
from .mutations import (
    CollectionError,
    GroupLetter,
    GroupWord,
    NumCollection,
    flip,
    sigma,
)
from .twists import (
    NormalForm,
    SHIFT,
    TENSOR_OC,
    TWIST,
    TwistGenerator,
    TwistWord,
    shift,
    tensor_oc,
    twist,
)


class SchemaError(ValueError):
    """Raised when a JSON value does not match the expected schema."""


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{what} must be an integer, got {value!r}")
    return value


def parse_surface(name: Any) -> Surface:
    if name not in SURFACES:
        raise SchemaError(f"unknown surface {name!r}")
    return SURFACES[name]


def parse_pic(data: Any, surface: Surface) -> PicClass:
    if not isinstance(data, (list, tuple)) or len(data) != 2:
        raise SchemaError(f"divisor must be a pair of integers, got {data!r}")
    return pic(surface, _int(data[0], "divisor entry"), _int(data[1], "divisor entry"))


def pic_to_json(d: PicClass) -> list[int]:
    return [d.a, d.b]


def parse_kclass(data: Any) -> KClass:
    if not isinstance(data, dict):
        raise SchemaError("class must be a JSON object")
    extra = set(data) - {"surface", "rank", "c1", "chi"}
    if extra:
        raise SchemaError(f"unexpected keys in class: {sorted(extra)}")
    try:
        surface = parse_surface(data["surface"])
        rank = _int(data["rank"], "rank")
        c1 = parse_pic(data["c1"], surface)
        chi = _int(data["chi"], "chi")
    except KeyError as missing:
        raise SchemaError(f"class is missing key {missing}") from None
    return KClass(surface, rank, c1, chi)


def kclass_to_json(v: KClass) -> dict[str, Any]:
    return {
        "surface": v.surface.kind,
        "rank": v.rank,
        "c1": pic_to_json(v.c1),
        "chi": v.chi,
    }


def parse_collection(data: Any) -> NumCollection:
    if not isinstance(data, list) or not data:
        raise SchemaError("collection must be a non-empty JSON list of classes")
    classes = tuple(parse_kclass(item) for item in data)
    try:
        return NumCollection(classes)
    except CollectionError as err:
        raise SchemaError(f"invalid collection: {err}") from err


def collection_to_json(col: NumCollection) -> list[dict[str, Any]]:
    return [kclass_to_json(v) for v in col.classes]


_GEN_KEYS = {"T": (TWIST, 1), "T'": (TWIST, -1), "OC": (TENSOR_OC, 1), "Sh": (SHIFT, 1)}


def parse_twist_word(data: Any) -> TwistWord:
    if not isinstance(data, list):
        raise SchemaError("twist word must be a JSON list")
    gens: list[TwistGenerator] = []
    for item in data:
        if not isinstance(item, dict) or len(item) != 1:
            raise SchemaError(f"twist letter must be a single-key object, got {item!r}")
        (key, value), = item.items()
        if key not in _GEN_KEYS:
            raise SchemaError(f"unknown twist letter {key!r}")
        arg = _int(value, f"argument of {key!r}")
        kind, sign = _GEN_KEYS[key]
        if kind == TWIST:
            gens.append(twist(arg, sign))
        elif kind == TENSOR_OC:
            gens.append(tensor_oc(arg))
        else:
            gens.append(shift(arg))
    return TwistWord(tuple(gens))


def twist_word_to_json(w: TwistWord) -> list[dict[str, int]]:
    out = []
    for g in w.gens:
        if g.kind == TWIST:
            out.append({"T" if g.sign == 1 else "T'": g.arg})
        elif g.kind == TENSOR_OC:
            out.append({"OC": g.arg})
        else:
            out.append({"Sh": g.arg})
    return out


def parse_group_word(text: Any) -> GroupWord:
    if not isinstance(text, str):
        raise SchemaError("group word must be a string like 's1,-s2,f3'")
    text = text.strip()
    if not text:
        return GroupWord()
    letters: list[GroupLetter] = []
    for atom in text.split(","):
        atom = atom.strip()
        inverse = atom.startswith("-")
        body = atom[1:] if inverse else atom
        if len(body) < 2 or body[0] not in "sf" or not body[1:].isdigit():
            raise SchemaError(f"bad group letter {atom!r}")
        index = int(body[1:])
        if body[0] == "f":
            if inverse:
                raise SchemaError(f"flips are self-inverse: {atom!r}")
            letters.append(flip(index))
        else:
            letters.append(sigma(index, inverse))
    return GroupWord(tuple(letters))


def group_word_to_str(g: GroupWord) -> str:
    return str(g)


def normal_form_to_json(nf: NormalForm) -> dict[str, Any]:
    return {
        "m": nf.tensor_exp,
        "odd": nf.has_odd_twist,
        "anchor": nf.odd_anchor,
        "squares": [[a, exp] for a, exp in nf.squares],
        "shift_parity": nf.shift_parity,
    }


def parse_normal_form(data: Any) -> NormalForm:
    if not isinstance(data, dict):
        raise SchemaError("normal form must be a JSON object")
    extra = set(data) - {"m", "odd", "anchor", "squares", "shift_parity"}
    if extra:
        raise SchemaError(f"unexpected keys in normal form: {sorted(extra)}")
    try:
        squares = []
        for item in data["squares"]:
            if not isinstance(item, list) or len(item) != 2:
                raise SchemaError(f"bad square entry {item!r}")
            a, exp = _int(item[0], "square index"), _int(item[1], "square exponent")
            if exp not in (2, -2):
                raise SchemaError(f"square exponent must be +-2, got {exp}")
            squares.append((a, exp))
        if not isinstance(data["odd"], bool):
            raise SchemaError("'odd' must be a boolean")
        return NormalForm(
            tensor_exp=_int(data["m"], "m"),
            has_odd_twist=data["odd"],
            squares=tuple(squares),
            shift_parity=_int(data["shift_parity"], "shift_parity") % 2,
            odd_anchor=_int(data["anchor"], "anchor"),
        )
    except KeyError as missing:
        raise SchemaError(f"normal form is missing key {missing}") from None
