"""Tabular pass/fail reports for the verification commands."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReportRow:
    index: int
    computed: str
    expected: str
    match: bool


class VerificationReport:
    """Rows of (index, computed, expected, match) plus aggregate helpers.

    When ``match`` is omitted the row passes iff the two value strings are
    equal, so exact arithmetic shows up as exact text equality.
    """

    def __init__(self, columns=("n", "computed", "formula", "match")):
        self.columns = tuple(columns)
        self.rows: list[ReportRow] = []

    def add(self, index, computed, expected, match=None) -> bool:
        computed = str(computed)
        expected = str(expected)
        if match is None:
            match = computed == expected
        self.rows.append(ReportRow(index, computed, expected, bool(match)))
        return bool(match)

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def matches(self) -> int:
        return sum(1 for r in self.rows if r.match)

    @property
    def all_match(self) -> bool:
        return self.matches == self.total

    def first_failure(self) -> ReportRow | None:
        for r in self.rows:
            if not r.match:
                return r
        return None

    @property
    def exit_code(self) -> int:
        return 0 if self.all_match else 1

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for r in self.rows:
            flag = "yes" if r.match else "no"
            lines.append(f"{r.index},{r.computed},{r.expected},{flag}")
        return "\n".join(lines)

    def summary(self) -> str:
        return f"{self.matches}/{self.total} rows match"
