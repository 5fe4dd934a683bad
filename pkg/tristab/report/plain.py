# Copyright (C) 2025 Juraj Marcin <juraj@jurajmarcin.com>
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

from collections.abc import Iterable
from logging import getLogger
from typing import Any

from tristab.report.common import (
    ChowReportFormatter,
    CodimensionReportFormatter,
    ConfspaceReportFormatter,
    E1PageReportFormatter,
    PairedFiberReportFormatter,
    StableReportFormatter,
    StratumReportFormatter,
    relative,
)
from tristab.types.graded import format_twist

_logger = getLogger(__name__)


def _indent(string: str | Any, size: int) -> str:
    return "    " * size + str(string)


def _grid(header: list[str], rows: list[list[str]]) -> Iterable[str]:
    widths = [
        max(len(row[column]) for row in [header, *rows]) for column in range(len(header))
    ]
    for row in [header, *rows]:
        yield "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()


def _page_twist(weight: int, mult: int) -> str:
    prefix = str(mult) if mult != 1 else ""
    return f"{prefix}Q({relative(weight, 'v')})"


def _summary_lines(title: str, summary: list[tuple[str, str]]) -> Iterable[str]:
    yield title
    for key, value in summary:
        yield _indent(f"{key}: {value}", 1)


def _assumption_lines(assumptions: list[str]) -> Iterable[str]:
    if not assumptions:
        return
    yield "Assumptions:"
    yield from (_indent(assumption, 1) for assumption in assumptions)


class PlainStableReportFormatter(StableReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield from _summary_lines(self._title, self._summary)
        yield ""
        columns = range(len(self._document.table.columns))
        rows = [
            [str(q)]
            + [
                " + ".join(
                    format_twist(entry.weight, entry.mult) + ("" if entry.known else "?")
                    for entry in self._cell(index, q)
                )
                for index in columns
            ]
            for q in self._rows
        ]
        yield from _grid(["q", *(self._column_label(index) for index in columns)], rows)
        if self._document.pairs:
            yield ""
            yield "Cancelled pairs:"
            for pair in self._document.pairs:
                yield _indent(f"{pair.source} -> {pair.target}", 1)
        yield ""
        yield from _assumption_lines(self._assumptions)


class PlainStratumReportFormatter(StratumReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield from _summary_lines(self._title, self._summary)
        for scenario in self._document.scenarios:
            status = "accepted" if scenario.accepted else "rejected"
            yield ""
            yield f"Scenario {scenario.label} ({status}): {scenario.ranks}"
            if scenario.reason:
                yield _indent(scenario.reason, 1)
            if scenario.base is None:
                continue
            yield _indent(f"base: {scenario.base.describe()}", 1)
            for degree, weight, rank in scenario.arrows:
                yield _indent(
                    f"{format_twist(weight, 1)} in {degree} -> "
                    f"{format_twist(weight - 1, 1)} in {degree + 2}: rank {rank}",
                    1,
                )
        yield ""
        yield from _assumption_lines(self._assumptions)


class PlainE1PageReportFormatter(E1PageReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield self._title
        yield ""
        rows = [
            [relative(offset, "2v")]
            + [
                " + ".join(
                    _page_twist(weight, mult)
                    for weight, mult in self._cell(p, offset)
                )
                for p in self._columns
            ]
            for offset in self.ROW_OFFSETS
        ]
        yield from _grid(["q", *(str(p) for p in self._columns)], rows)
        yield ""
        yield from _summary_lines("Stable cohomology of the sections", self._summary)
        yield ""
        yield from _assumption_lines(self._assumptions)


class PlainCodimensionReportFormatter(CodimensionReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield from _summary_lines(self._title, self._summary)
        yield _indent("PASSED" if self._document.report.passed else "FAILED", 1)


class PlainPairedFiberReportFormatter(PairedFiberReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield from _summary_lines(self._title, self._summary)


class PlainChowReportFormatter(ChowReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield from _summary_lines(self._title, self._summary)
        yield ""
        yield from _assumption_lines(self._assumptions)


class PlainConfspaceReportFormatter(ConfspaceReportFormatter):
    def formatted_lines(self) -> Iterable[str]:
        yield self._document.classes.describe()
        if self._document.grassmannian is not None:
            yield f"Grassmannian: {self._document.grassmannian.describe()}"
