"""JSON forms of every structure.

==================  ====================================================
CountSeq            ``["1","1","4","30"]`` (decimal strings)
block               sorted integer array
set partition       array of blocks, by ascending minimum
OrderedPartition    array of blocks
CyclicPartition     ``{"cyc": [block, ...]}`` in canonical rotation
SetOfCycles         array of cyclic partitions, by ascending minimum
LabelledAtom        ``{"atom": payload, "labels": [...]}``
AtomSequence        array of atoms
AtomNecklace        ``{"cyc": [atom, ...]}``
AtomJewellery       array of necklaces
RootedTreeRr        ``{"label": int, "children": [...]}``
PlaneTreeR          ``{"label": null, "children": [...]}``
Forest              array of rooted trees
Windmill            ``{"label": int, "children": [...], "cyclic": true}``
NestedDiscs         ``{"label": int, "children": [...]}``
==================  ====================================================

Tree atoms inside necklaces and jewellery boxes are written as plain trees.
"""

from __future__ import annotations

import json
from functools import singledispatch
from typing import Any, Callable

from .egf import CountSeq
from .partitions import CyclicPartition, OrderedPartition, SetOfCycles
from .seqcyc import AtomJewellery, AtomNecklace, AtomSequence, LabelledAtom
from .trees import Forest, NestedDiscs, PlaneTreeR, RootedTreeRr, Windmill


def dumps(obj) -> str:
    return json.dumps(to_json(obj), separators=(",", ":"), ensure_ascii=False)


def _block(b) -> list[int]:
    return sorted(b)


@singledispatch
def to_json(obj) -> Any:
    if isinstance(obj, frozenset):
        return _block(obj)
    if isinstance(obj, (tuple, list)):
        # bare set partitions and lists of structures
        return [to_json(x) for x in obj]
    if isinstance(obj, (int, str)) or obj is None:
        return obj
    raise TypeError(f"no JSON form for {type(obj).__name__}")


@to_json.register
def _(obj: CountSeq):
    return obj.to_json()


@to_json.register
def _(obj: OrderedPartition):
    return [_block(b) for b in obj.blocks]


@to_json.register
def _(obj: CyclicPartition):
    return {"cyc": [_block(b) for b in obj.blocks]}


@to_json.register
def _(obj: SetOfCycles):
    return [to_json(c) for c in obj.cycles]


@to_json.register
def _(obj: LabelledAtom):
    return {"atom": obj.payload, "labels": _block(obj.labels)}


@to_json.register
def _(obj: AtomSequence):
    return [to_json(a) for a in obj.atoms]


@to_json.register
def _(obj: AtomNecklace):
    return {"cyc": [to_json(a) for a in obj.atoms]}


@to_json.register
def _(obj: AtomJewellery):
    return [to_json(nk) for nk in obj.necklaces]


@to_json.register
def _(obj: RootedTreeRr):
    return {"label": obj.label, "children": [to_json(c) for c in obj.children]}


@to_json.register
def _(obj: PlaneTreeR):
    return {"label": None, "children": [to_json(c) for c in obj.children]}


@to_json.register
def _(obj: Forest):
    return [to_json(t) for t in obj.trees]


@to_json.register
def _(obj: Windmill):
    return {"label": obj.label, "children": [to_json(c) for c in obj.children], "cyclic": True}


@to_json.register
def _(obj: NestedDiscs):
    return {"label": obj.label, "children": [to_json(c) for c in obj.children]}


# --- decoding ----------------------------------------------------------------


def _expect(cond: bool, what: str):
    if not cond:
        raise ValueError(f"malformed {what}")


def block_from_json(data) -> frozenset[int]:
    _expect(isinstance(data, list) and all(isinstance(x, int) for x in data), "block")
    return frozenset(data)


def _cyc_items(data, what: str) -> list:
    _expect(isinstance(data, dict) and isinstance(data.get("cyc"), list), what)
    return data["cyc"]


def op_from_json(data) -> OrderedPartition:
    _expect(isinstance(data, list), "ordered partition")
    return OrderedPartition(tuple(block_from_json(b) for b in data))


def sp_from_json(data) -> tuple[frozenset[int], ...]:
    _expect(isinstance(data, list), "set partition")
    blocks = tuple(sorted((block_from_json(b) for b in data), key=min))
    OrderedPartition(blocks)  # validates disjointness and 1..n
    return blocks


def cp_from_json(data) -> CyclicPartition:
    return CyclicPartition(tuple(block_from_json(b) for b in _cyc_items(data, "cyclic partition")))


def soc_from_json(data) -> SetOfCycles:
    _expect(isinstance(data, list), "set of cycles")
    return SetOfCycles(tuple(cp_from_json(c) for c in data))


def rr_from_json(data) -> RootedTreeRr:
    _expect(
        isinstance(data, dict)
        and isinstance(data.get("label"), int)
        and isinstance(data.get("children", []), list),
        "rooted tree",
    )
    return RootedTreeRr(data["label"], tuple(rr_from_json(c) for c in data.get("children", [])))


def r_from_json(data) -> PlaneTreeR:
    _expect(
        isinstance(data, dict) and data.get("label") is None and isinstance(data.get("children", []), list),
        "tree with unlabelled root",
    )
    return PlaneTreeR(tuple(rr_from_json(c) for c in data.get("children", [])))


def forest_from_json(data) -> Forest:
    _expect(isinstance(data, list), "forest")
    return Forest(tuple(rr_from_json(t) for t in data))


def atom_from_json(data):
    """A generic labelled atom, or a rooted tree when the object has a label."""
    if isinstance(data, dict) and "atom" in data:
        _expect(isinstance(data.get("labels"), list), "atom")
        return LabelledAtom(data["atom"], block_from_json(data["labels"]))
    return rr_from_json(data)


def atomseq_from_json(data) -> AtomSequence:
    _expect(isinstance(data, list), "atom sequence")
    return AtomSequence(tuple(atom_from_json(a) for a in data))


def necklace_from_json(data) -> AtomNecklace:
    return AtomNecklace(tuple(atom_from_json(a) for a in _cyc_items(data, "necklace")))


def jewellery_from_json(data) -> AtomJewellery:
    _expect(isinstance(data, list), "jewellery box")
    return AtomJewellery(tuple(necklace_from_json(nk) for nk in data))


def windmill_from_json(data) -> Windmill:
    _expect(isinstance(data, dict) and isinstance(data.get("label"), int), "windmill")
    return Windmill(data["label"], tuple(windmill_from_json(c) for c in data.get("children", [])))


def nested_from_json(data) -> NestedDiscs:
    _expect(isinstance(data, dict) and isinstance(data.get("label"), int), "nested discs")
    return NestedDiscs(data["label"], tuple(nested_from_json(c) for c in data.get("children", [])))


DECODERS: dict[str, Callable[[Any], Any]] = {
    "sp": sp_from_json,
    "op": op_from_json,
    "cp": cp_from_json,
    "soc": soc_from_json,
    "r": r_from_json,
    "rr": rr_from_json,
    "forest": forest_from_json,
    "necklace": necklace_from_json,
    "jewellery": jewellery_from_json,
    "windmill": windmill_from_json,
    "nested": nested_from_json,
    "seq": atomseq_from_json,
    "counts": CountSeq.from_json,
}


def loads(kind: str, text: str):
    return DECODERS[kind](json.loads(text))
