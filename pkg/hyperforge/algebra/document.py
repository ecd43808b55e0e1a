"""
Input documents: an algebroid plus a named list of 2-forms

    base:      {dim: n, vars: [x, y, ...]}
    rank:      d
    anchor:    n x d grid of coefficient expressions (omitted when n = 0)
    structure: [{a, b, c, coeff}, ...] 1-based with a < b, meaning c^c_{ab}
    forms:     {name: d x d grid of coefficient expressions}

JSON documents are read with the YAML loader, so .json, .yaml and .yml all work.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import yaml

from ..common.config import INPUT_SUFFIXES
from ..common.errors import InputDocumentError, UnknownFormError
from .algebroid import AlgebroidSpec
from .coeff import poly_parse
from .matrix import CoeffMatrix

Grid = List[List[object]]


@dataclass
class InputDocument:
    dim: int
    variables: Tuple[str, ...]
    rank: int
    anchor: Optional[Grid] = None
    structure: List[Dict[str, object]] = field(default_factory=list)
    forms: "OrderedDict[str, Grid]" = field(default_factory=OrderedDict)
    source: str = ""

    def __post_init__(self):
        self._matrices: Optional["OrderedDict[str, CoeffMatrix]"] = None
        self.validate()

    # Validation

    def validate(self):
        if not isinstance(self.dim, int) or self.dim < 0:
            raise InputDocumentError(f"base.dim must be a non-negative integer, got {self.dim!r}")
        if len(self.variables) != self.dim:
            raise InputDocumentError(f"base.vars lists {len(self.variables)} names for dim {self.dim}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InputDocumentError(f"rank must be a positive integer, got {self.rank!r}")
        if self.dim:
            if self.anchor is None:
                raise InputDocumentError("anchor is required when base.dim > 0")
            _check_grid("anchor", self.anchor, self.dim, self.rank)
        elif self.anchor not in (None, []):
            raise InputDocumentError("anchor must be omitted when base.dim = 0")

        seen = set()
        for position, entry in enumerate(self.structure, start=1):
            if not isinstance(entry, Mapping) or not {"a", "b", "c", "coeff"} <= set(entry):
                raise InputDocumentError(f"structure entry {position} needs keys a, b, c, coeff")
            a, b, c = entry["a"], entry["b"], entry["c"]
            if not all(isinstance(v, int) for v in (a, b, c)):
                raise InputDocumentError(f"structure entry {position}: a, b, c must be integers")
            if not (1 <= a < b <= self.rank and 1 <= c <= self.rank):
                raise InputDocumentError(
                    f"structure entry {position}: need 1 <= a < b <= {self.rank} and 1 <= c <= {self.rank}"
                )
            if (a, b, c) in seen:
                raise InputDocumentError(f"structure entry {position} repeats ({a}, {b}, {c})")
            seen.add((a, b, c))

        for name, grid in self.forms.items():
            _check_grid(f"form '{name}'", grid, self.rank, self.rank)

    # Conversion

    def to_spec(self) -> AlgebroidSpec:
        anchor = CoeffMatrix.parse(self.anchor, self.variables) if self.dim else None
        structure = {
            (entry["a"] - 1, entry["b"] - 1, entry["c"] - 1): poly_parse(str(entry["coeff"]), self.variables)
            for entry in self.structure
        }
        return AlgebroidSpec(self.dim, self.rank, self.variables, anchor, structure, name=self.source)

    def form_matrices(self) -> "OrderedDict[str, CoeffMatrix]":
        """Parsed forms in declaration order"""
        if self._matrices is None:
            matrices = OrderedDict()
            for name, grid in self.forms.items():
                W = CoeffMatrix.parse(grid, self.variables)
                if not W.is_antisymmetric():
                    raise InputDocumentError(f"form '{name}' is not antisymmetric")
                matrices[name] = W
            self._matrices = matrices
        return self._matrices

    def form(self, name: str) -> CoeffMatrix:
        matrices = self.form_matrices()
        if name not in matrices:
            raise UnknownFormError(f"unknown form '{name}' (declared: {', '.join(matrices) or 'none'})")
        return matrices[name]

    @property
    def form_names(self) -> List[str]:
        return list(self.forms)

    def resolve_triple(self, text: Union[str, Sequence[str]]) -> Tuple[str, str, str]:
        """'a,b,c' -> three declared form names, order kept"""
        names = [part.strip() for part in text.split(",")] if isinstance(text, str) else list(text)
        if len(names) != 3 or not all(names):
            raise InputDocumentError(f"a triple needs exactly three form names, got {text!r}")
        for name in names:
            self.form(name)
        return tuple(names)

    def to_dict(self) -> Dict[str, object]:
        return {
            "file": self.source,
            "forms": self.form_names,
        }


def _check_grid(label: str, grid, rows: int, cols: int):
    if not isinstance(grid, list) or len(grid) != rows:
        raise InputDocumentError(f"{label} must have {rows} rows")
    for r, row in enumerate(grid, start=1):
        if not isinstance(row, list) or len(row) != cols:
            raise InputDocumentError(f"{label} row {r} must have {cols} entries")
        for cell in row:
            if isinstance(cell, bool) or not isinstance(cell, (int, float, str)):
                raise InputDocumentError(f"{label} row {r} holds {cell!r}, expected an expression")
            if isinstance(cell, float):
                raise InputDocumentError(f"{label} row {r} holds the decimal {cell!r}; write it as a fraction")


def parse_document(data: object, source: str = "") -> InputDocument:
    """Build an InputDocument from already-decoded data"""
    if not isinstance(data, Mapping):
        raise InputDocumentError("the document must be a single object")
    missing = [key for key in ("base", "rank", "forms") if key not in data]
    if missing:
        raise InputDocumentError(f"missing required field(s): {', '.join(missing)}")
    base = data["base"]
    if not isinstance(base, Mapping) or "dim" not in base:
        raise InputDocumentError("base must be an object with dim and vars")
    variables = base.get("vars") or []
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise InputDocumentError("base.vars must be a list of names")
    forms = data["forms"]
    if not isinstance(forms, Mapping):
        raise InputDocumentError("forms must map names to matrices")
    structure = data.get("structure") or []
    if not isinstance(structure, list):
        raise InputDocumentError("structure must be a list")
    return InputDocument(
        dim=base["dim"],
        variables=tuple(variables),
        rank=data["rank"],
        anchor=data.get("anchor"),
        structure=list(structure),
        forms=OrderedDict((str(name), grid) for name, grid in forms.items()),
        source=source,
    )


def load_document(path: Union[str, Path]) -> InputDocument:
    path = Path(path)
    if path.suffix.lower() not in INPUT_SUFFIXES:
        raise InputDocumentError(f"{path.name}: expected one of {', '.join(INPUT_SUFFIXES)}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputDocumentError(f"cannot read {path}: {e.strerror or e}")
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise InputDocumentError(f"{path.name} is not a valid document: {e}")
    return parse_document(data, source=path.name)
