"""Text formats: cycle notation, rows, and the JSON method/composition files."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from os import PathLike
from typing import IO, Iterable, Sequence, Union

from .errors import CycleError, FormatError, NotationSyntaxError, PointError, RowError
from .perm import Perm, Row, rounds

PathOrFile = Union[str, PathLike, IO[str]]

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")

LEAD_LABELS = ("P", "B")
_SCHEME_RE = re.compile(r"^[a-z][a-z-]*-\d+$")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse ``"(1 2)(3 4)"`` style text into a degree-``n`` permutation.

    Cycles need not be disjoint; they are multiplied left to right.
    ``"()"`` is the identity.
    """
    cycles: list[list[int]] = []
    current: list[int] | None = None
    pos = 0
    text = text.strip()
    if not text:
        raise NotationSyntaxError("empty cycle text; use '()' for the identity")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        lpar, rpar, num, comma, junk = m.groups()
        if junk is not None:
            raise NotationSyntaxError(f"unexpected {junk!r} at offset {m.start(5)} in {text!r}")
        if lpar:
            if current is not None:
                raise NotationSyntaxError(f"nested '(' in {text!r}")
            current = []
        elif rpar:
            if current is None:
                raise NotationSyntaxError(f"unbalanced ')' in {text!r}")
            cycles.append(current)
            current = None
        elif num:
            if current is None:
                raise NotationSyntaxError(f"point outside parentheses in {text!r}")
            k = int(num)
            if not 1 <= k <= n:
                raise PointError(f"point {k} outside 1..{n} in {text!r}")
            if k in current:
                raise CycleError(f"point {k} repeated within one cycle in {text!r}")
            current.append(k)
        # commas are accepted as separators: "(n-1, n)"
    if current is not None:
        raise NotationSyntaxError(f"unclosed '(' in {text!r}")
    return Perm.from_cycles([c for c in cycles if len(c) > 1], n)


def format_cycles(p: Perm) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_row(text: str) -> Row:
    """Parse ``"1 2 3 4 5"`` (or ``"12345"`` when every bell is a single digit)."""
    text = text.strip()
    if re.search(r"[\s,]", text):
        tokens = re.split(r"[\s,]+", text)
    else:
        tokens = list(text)
    try:
        bells = [int(t) for t in tokens if t]
    except ValueError as exc:
        raise RowError(f"bad row {text!r}: {exc}") from None
    if not bells:
        raise RowError("empty row")
    seen = set()
    for b in bells:
        if b in seen:
            raise RowError(f"bell {b} repeated in row {text!r}")
        seen.add(b)
    missing = set(range(1, len(bells) + 1)) - seen
    if missing:
        raise RowError(f"row {text!r} is missing bell(s) {sorted(missing)}")
    return Row._trusted(tuple(bells))


def format_row(row: Sequence[int]) -> str:
    return " ".join(map(str, row))


def format_rows(rows: Iterable[Sequence[int]]) -> str:
    return "".join(format_row(r) + "\n" for r in rows)


@dataclass
class MethodFile:
    stage: int
    name: str
    transitions: list[str]
    start_row: str | None = None

    def __post_init__(self):
        _validate_method(self.to_json())

    def perms(self) -> list[Perm]:
        return [parse_cycles(t, self.stage) for t in self.transitions]

    def start(self) -> Row:
        return rounds(self.stage) if self.start_row is None else parse_row(self.start_row)

    def to_json(self) -> dict:
        d = {"stage": self.stage, "name": self.name, "transitions": list(self.transitions)}
        if self.start_row is not None:
            d["start_row"] = self.start_row
        return d


@dataclass
class CompositionFile:
    scheme: str
    leads: list[str] = field(default_factory=list)

    def __post_init__(self):
        _validate_composition(self.to_json())

    def to_json(self) -> dict:
        return {"scheme": self.scheme, "leads": list(self.leads)}


def _require(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise FormatError(message, path)


def _validate_method(d: object) -> None:
    _require(isinstance(d, dict), "expected a JSON object", "$")
    assert isinstance(d, dict)
    unknown = set(d) - {"stage", "name", "transitions", "start_row"}
    _require(not unknown, f"unknown field(s) {sorted(unknown)}", "$")
    for key in ("stage", "name", "transitions"):
        _require(key in d, "missing required field", key)
    stage = d["stage"]
    _require(isinstance(stage, int) and not isinstance(stage, bool) and stage >= 1,
             "must be a positive integer", "stage")
    _require(isinstance(d["name"], str) and d["name"].strip() != "", "must be a non-empty string", "name")
    trans = d["transitions"]
    _require(isinstance(trans, list), "must be a list", "transitions")
    for i, t in enumerate(trans):
        path = f"transitions[{i}]"
        _require(isinstance(t, str), "must be a cycle-notation string", path)
        try:
            parse_cycles(t, stage)
        except (NotationSyntaxError, PointError, CycleError) as exc:
            raise FormatError(str(exc), path) from None
    if d.get("start_row") is not None:
        _require(isinstance(d["start_row"], str), "must be a row string", "start_row")
        try:
            row = parse_row(d["start_row"])
        except RowError as exc:
            raise FormatError(str(exc), "start_row") from None
        _require(len(row) == stage, f"row has {len(row)} bells, stage is {stage}", "start_row")


def _validate_composition(d: object) -> None:
    _require(isinstance(d, dict), "expected a JSON object", "$")
    assert isinstance(d, dict)
    unknown = set(d) - {"scheme", "leads"}
    _require(not unknown, f"unknown field(s) {sorted(unknown)}", "$")
    for key in ("scheme", "leads"):
        _require(key in d, "missing required field", key)
    _require(isinstance(d["scheme"], str) and bool(_SCHEME_RE.match(d["scheme"])),
             "must look like '<family>-<stage>'", "scheme")
    leads = d["leads"]
    _require(isinstance(leads, list) and len(leads) > 0, "must be a non-empty list", "leads")
    for i, lab in enumerate(leads):
        _require(lab in LEAD_LABELS, f"label {lab!r} not in {LEAD_LABELS}", f"leads[{i}]")


def _load(source: PathOrFile) -> object:
    try:
        if hasattr(source, "read"):
            return json.load(source)  # type: ignore[arg-type]
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}", "$") from None


def _dump(obj: dict, dest: PathOrFile) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)  # type: ignore[union-attr]
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def read_method_file(source: PathOrFile) -> MethodFile:
    d = _load(source)
    _validate_method(d)
    assert isinstance(d, dict)
    return MethodFile(d["stage"], d["name"], list(d["transitions"]), d.get("start_row"))


def write_method_file(mf: MethodFile, dest: PathOrFile) -> None:
    _dump(mf.to_json(), dest)


def read_composition_file(source: PathOrFile) -> CompositionFile:
    d = _load(source)
    _validate_composition(d)
    assert isinstance(d, dict)
    return CompositionFile(d["scheme"], list(d["leads"]))


def write_composition_file(cf: CompositionFile, dest: PathOrFile) -> None:
    _dump(cf.to_json(), dest)


def parse_generators(text: str, n: int | None = None) -> list[Perm]:
    """Semicolon-separated cycle strings; degree defaults to the largest point named."""
    parts = [p.strip() for p in text.split(";") if p.strip()]
    if not parts:
        raise NotationSyntaxError("no generators given")
    if n is None:
        points = [int(x) for x in re.findall(r"\d+", text)]
        n = max(points, default=1)
    return [parse_cycles(p, n) for p in parts]


def parse_word(text: str) -> list[str]:
    """Split ``"B,A,B"`` / ``"B A B"`` / ``"BAB"`` into single labels."""
    text = text.strip()
    if re.search(r"[\s,]", text):
        return [t for t in re.split(r"[\s,]+", text) if t]
    return list(text)


__all__ = [
    "parse_cycles", "format_cycles", "parse_row", "format_row", "format_rows",
    "MethodFile", "CompositionFile", "read_method_file", "write_method_file",
    "read_composition_file", "write_composition_file", "parse_generators",
    "parse_word",
]
