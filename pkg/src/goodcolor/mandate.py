"""Label sets and mandatory triple sets.

A mandatory set is a subset of L^3 stored as a boolean cube indexed by label
ids.  Triples are read as ``(c(xy), c(xz), c(yz))`` for an edge ``xy`` and a
third vertex ``z``: the second coordinate is the colour towards the first
endpoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np


@dataclass(frozen=True)
class Label:
    id: int
    name: str

    def __str__(self) -> str:
        return self.name


class Need(NamedTuple):
    """A triple (c1, c2, c3) of label ids; an edge coloured c1 needs a z with c(xz)=c2, c(yz)=c3."""

    c1: int
    c2: int
    c3: int


ColorTriple = Need


class MandatorySet:
    def __init__(self, labels: Sequence[str], member: np.ndarray):
        self.labels = tuple(Label(i, name) for i, name in enumerate(labels))
        if len({lab.name for lab in self.labels}) != len(self.labels):
            raise ValueError("label names must be distinct")
        n = len(self.labels)
        member = np.asarray(member, dtype=bool)
        if member.shape != (n, n, n):
            raise ValueError(f"membership cube must have shape {(n, n, n)}, got {member.shape}")
        self.member = member
        self.member.setflags(write=False)
        self._ids = {lab.name: lab.id for lab in self.labels}

    @classmethod
    def from_triples(cls, labels: Sequence[str], triples: Iterable[Sequence]) -> "MandatorySet":
        """Build from explicit triples of label names (or ids)."""
        ids = {name: i for i, name in enumerate(labels)}
        n = len(labels)
        member = np.zeros((n, n, n), dtype=bool)
        for t in triples:
            if len(t) != 3:
                raise ValueError(f"triple {t!r} does not have three entries")
            try:
                idx = tuple(ids[c] if isinstance(c, str) else int(c) for c in t)
            except KeyError as exc:
                raise ValueError(f"unknown label {exc.args[0]!r} in triple {t!r}") from None
            if not all(0 <= i < n for i in idx):
                raise ValueError(f"label id out of range in triple {t!r}")
            member[idx] = True
        return cls(labels, member)

    def __len__(self) -> int:
        return int(self.member.sum())

    def __repr__(self) -> str:
        names = ",".join(lab.name for lab in self.labels)
        return f"MandatorySet(labels=[{names}], size={len(self)})"

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(lab.name for lab in self.labels)

    def label_id(self, label: int | str | Label) -> int:
        if isinstance(label, Label):
            return label.id
        if isinstance(label, str):
            try:
                return self._ids[label]
            except KeyError:
                raise ValueError(f"unknown label {label!r}") from None
        if not 0 <= label < len(self.labels):
            raise ValueError(f"label id {label} out of range")
        return int(label)

    def contains(self, triple: Sequence) -> bool:
        return bool(self.member[tuple(self.label_id(c) for c in triple)])

    def __contains__(self, triple) -> bool:
        return self.contains(triple)

    def needs_of(self, c1: int | str | Label) -> list[Need]:
        """All members (c1, j, k), ordered by (j, k) ids."""
        c1 = self.label_id(c1)
        js, ks = np.nonzero(self.member[c1])
        return [Need(c1, int(j), int(k)) for j, k in zip(js, ks)]

    def triples(self) -> list[Need]:
        return [Need(*map(int, t)) for t in zip(*np.nonzero(self.member))]

    def is_permutation_closed(self) -> bool:
        return all(np.array_equal(self.member, self.member.transpose(p))
                   for p in permutations(range(3)))

    def format(self, triple: Sequence[int]) -> str:
        return "(" + ",".join(self.labels[i].name for i in triple) + ")"

    def to_dict(self) -> dict:
        return {"labels": list(self.names),
                "triples": [[self.labels[i].name for i in t] for t in self.triples()]}


def mandatory_mn(n: int) -> MandatorySet:
    """Labels r, b0..b{n-1}; a triple is allowed iff some coordinate is r."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    labels = ["r"] + [f"b{i}" for i in range(n)]
    size = n + 1
    member = np.ones((size, size, size), dtype=bool)
    member[1:, 1:, 1:] = False
    return MandatorySet(labels, member)


def mandatory_lyndon(l: int) -> MandatorySet:
    """Labels r1..rl; (ri, rj, rk) allowed iff |{i, j, k}| is 1 or 3."""
    if l < 1:
        raise ValueError(f"l must be at least 1, got {l}")
    member = np.zeros((l, l, l), dtype=bool)
    for i, j, k in product(range(l), repeat=3):
        member[i, j, k] = len({i, j, k}) in (1, 3)
    return MandatorySet([f"r{i + 1}" for i in range(l)], member)


def mandate_from_dict(spec: dict) -> MandatorySet:
    if "builtin" in spec:
        kind = spec["builtin"]
        if kind == "mn":
            return mandatory_mn(int(spec["n"]))
        if kind == "lyndon":
            return mandatory_lyndon(int(spec["l"]))
        raise ValueError(f"unknown builtin mandatory set {kind!r}")
    if set(spec) != {"labels", "triples"}:
        raise ValueError("mandatory-set spec needs keys {labels, triples} or {builtin, ...}")
    return MandatorySet.from_triples(spec["labels"], spec["triples"])


def load_mandate(path: str | Path) -> MandatorySet:
    with open(path, encoding="utf-8") as fh:
        return mandate_from_dict(json.load(fh))


def parse_mandate(text: str) -> MandatorySet:
    """``m2`` / ``mn:2``, ``lyndon:4``, or a path to a JSON file."""
    lowered = text.lower()
    if lowered.startswith("lyndon:"):
        return mandatory_lyndon(int(lowered.split(":", 1)[1]))
    if lowered.startswith("mn:"):
        return mandatory_mn(int(lowered.split(":", 1)[1]))
    if lowered[:1] == "m" and lowered[1:].isdigit():
        return mandatory_mn(int(lowered[1:]))
    return load_mandate(text)
