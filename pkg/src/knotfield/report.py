"""Side-by-side counts of normal subgroups and ideal norms.

For a braid that carries a field invariant, list for each index m up to a
bound how many normal subgroups of index m the closure's fundamental group
has, next to how many ideals of norm m the field's ring of integers has.
The two columns are reported together and nothing is asserted about their
relation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artin import link_group_presentation
from .braid import BraidWord
from .invariant import FieldInvariant, field_of
from .numfield import ideals_of_norm
from .subgroups import low_index_subgroups


@dataclass(frozen=True)
class CorrespondenceRow:
    index: int
    normal_subgroups: int
    ideals_of_norm: int

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "normal_subgroups": self.normal_subgroups,
            "ideals_of_norm": self.ideals_of_norm,
        }


@dataclass(frozen=True)
class CorrespondenceReport:
    invariant: FieldInvariant
    rows: tuple[CorrespondenceRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "field": self.invariant.field.field_str(),
            "rows": [row.to_json_dict() for row in self.rows],
        }


def correspondence_report(word: BraidWord, max_index: int) -> CorrespondenceReport:
    invariant = field_of(word)
    presentation = link_group_presentation(word)
    records = low_index_subgroups(presentation, max_index)
    rows = []
    for m in range(1, max_index + 1):
        normal = sum(1 for r in records if r.index == m and r.is_normal)
        ideals = ideals_of_norm(invariant.field, m)
        rows.append(CorrespondenceRow(m, normal, ideals))
    return CorrespondenceReport(invariant, tuple(rows))
