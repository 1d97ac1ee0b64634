# apps/monoid/eggbox.py
"""Eggbox picture of the 0-minimal ideal: rows are R-classes, columns L-classes."""
from dataclasses import dataclass
from typing import Dict, List, Tuple

import pandas as pd

from apps.automata.models import format_word
from apps.monoid.models import GreenStructure


@dataclass(frozen=True)
class EggboxCell:
    witness: str
    idempotent: bool

    def render(self) -> str:
        return ('*' if self.idempotent else '') + format_word(self.witness)


@dataclass(frozen=True)
class Eggbox:
    rows: Tuple[str, ...]
    columns: Tuple[str, ...]
    cells: Dict[Tuple[str, str], EggboxCell]
    # element id -> (row label, column label)
    positions: Dict[int, Tuple[str, str]]

    def cell_of(self, g: GreenStructure, word: str) -> Tuple[str, str]:
        """Row and column labels of the cell holding φ(word)."""
        return self.positions[g.element_of(word)]

    def to_frame(self) -> pd.DataFrame:
        data = [[self.cells[(r, c)].render() if (r, c) in self.cells else '' for c in self.columns]
                for r in self.rows]
        return pd.DataFrame(data, index=list(self.rows), columns=list(self.columns))


def _label(sets: List[Tuple[str, ...]]) -> str:
    return '/'.join(','.join(s) for s in sets)


def build_eggbox(g: GreenStructure) -> Eggbox:
    """
    Eggbox of the elements of minimal nonzero rank.

    Rows are labelled by kernels (column sets of matrices) and columns by
    images (row sets); each cell shows the least witness of its H-class
    and a star when the H-class holds an idempotent.
    """
    row_of: Dict[int, str] = {}
    col_of: Dict[int, str] = {}
    rows: List[str] = []
    columns: List[str] = []
    for i in g.ideal:
        if g.r_class[i] not in row_of:
            row_of[g.r_class[i]] = _label(g.kernel_labels(i))
            rows.append(row_of[g.r_class[i]])
        if g.l_class[i] not in col_of:
            col_of[g.l_class[i]] = _label(g.image_labels(i))
            columns.append(col_of[g.l_class[i]])
    idempotent = set(g.idempotents)
    cells: Dict[Tuple[str, str], EggboxCell] = {}
    positions = {}
    for i in g.ideal:
        position = (row_of[g.r_class[i]], col_of[g.l_class[i]])
        positions[i] = position
        if position not in cells:
            starred = any(m in idempotent for m in g.h_members(g.h_class[i]))
            cells[position] = EggboxCell(g.elements[i].witness, starred)
    return Eggbox(tuple(rows), tuple(columns), cells, positions)


def eggbox_render(g: GreenStructure) -> str:
    if not g.ideal:
        return '(no element of nonzero rank)'
    return build_eggbox(g).to_frame().to_string()
