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
from typing import TextIO

from tristab.types.documents import (
    BaseDocument,
    ChowDocument,
    CodimensionDocument,
    ConfspaceDocument,
    E1PageDocument,
    PairedFiberDocument,
    StableDocument,
    StratumDocument,
)
from tristab.types.graded import GradedTate
from tristab.types.sequences import MaroniEntry

_logger = getLogger(__name__)


def relative(offset: int, symbol: str) -> str:
    if offset == 0:
        return symbol
    return f"{symbol}{'+' if offset > 0 else '-'}{abs(offset)}"


class BaseReportFormatter[DocumentT: BaseDocument]:
    def __init__(self, document: "DocumentT", pretty: bool = False) -> None:
        self._document = document
        self._pretty = pretty

    def formatted_lines(self) -> Iterable[str]:
        return ()

    def format_report(self, file: TextIO) -> None:
        _logger.debug("Formatting the report using formatted_lines from %r", self)
        file.writelines(line + "\n" for line in self.formatted_lines())

    @property
    def _title(self) -> str:
        return ""

    @property
    def _summary(self) -> list[tuple[str, str]]:
        return []

    @property
    def _assumptions(self) -> list[str]:
        return [str(assumption) for assumption in self._document.assumptions]


class StableReportFormatter(BaseReportFormatter[StableDocument]):
    @property
    def _space(self) -> str:
        return "T_g^dagger" if self._document.framed else "T_g"

    @property
    def _range(self) -> str:
        relation = "<" if self._document.strict else "<="
        return f"i {relation} {self._document.bound}"

    @property
    def _title(self) -> str:
        return f"Stable cohomology of {self._space} for g={self._document.genus}"

    @property
    def _summary(self) -> list[tuple[str, str]]:
        return [
            ("genus", str(self._document.genus)),
            ("range", self._range),
            ("cohomology", self._document.classes.describe()),
        ]

    @property
    def _rows(self) -> list[int]:
        return sorted({entry.q for entry in self._document.table.entries()}, reverse=True)

    def _cell(self, index: int, q: int) -> list[MaroniEntry]:
        return [
            entry
            for entry in self._document.table.columns[index].entries
            if entry.q == q
        ]

    def _column_label(self, index: int) -> str:
        label = self._document.table.columns[index].label
        return f"{label}+" if self._document.framed else label


class StratumReportFormatter(BaseReportFormatter[StratumDocument]):
    @property
    def _title(self) -> str:
        cover = " (SL2-cover)" if self._document.framed else ""
        return f"Cohomology of N_{self._document.n}{cover} for g={self._document.genus}"

    @property
    def _summary(self) -> list[tuple[str, str]]:
        summary = [
            ("pattern", self._document.classes.describe()),
            ("valid in degree", f"i <= {self._document.max_degree}"),
            ("in range", self._document.in_range.describe()),
        ]
        if self._document.euler_ranks is not None:
            summary.append(("Euler class ranks", str(self._document.euler_ranks)))
        return summary

    @property
    def _gysin_columns(self) -> list[int]:
        top = max(
            (
                scenario.base.top_degree or 0
                for scenario in self._document.scenarios
                if scenario.base is not None
            ),
            default=0,
        )
        return list(range(top + 3))


class E1PageReportFormatter(BaseReportFormatter[E1PageDocument]):
    ROW_OFFSETS = range(-3, -19, -1)

    @property
    def _title(self) -> str:
        page = self._document.page
        return f"E1 page for {page.spec} (v={page.v}, N={page.cutoff_n})"

    @property
    def _columns(self) -> list[int]:
        return sorted(self._document.page.columns)

    def _cell(self, p: int, q_offset: int) -> list[tuple[int, int]]:
        page = self._document.page
        total = 2 * page.v + q_offset + p
        return sorted(
            ((weight - page.v, mult) for weight, mult in page.entry(p, total).items()),
            reverse=True,
        )

    @property
    def _summary(self) -> list[tuple[str, str]]:
        return [
            ("sections", self._document.sections.describe()),
            ("valid in degree", f"i <= {self._document.max_degree}"),
            ("valid from BM degree", str(self._document.page.valid_bm_degree_from)),
        ]


class CodimensionReportFormatter(BaseReportFormatter[CodimensionDocument]):
    @property
    def _title(self) -> str:
        report = self._document.report
        return f"Codimension check ({report.mode}) for {report.spec}, N={report.N}"

    @property
    def _summary(self) -> list[tuple[str, str]]:
        report = self._document.report
        summary = [
            ("field", report.ground_field),
            ("trials", str(report.trials)),
            ("expected rank", str(report.expected_rank)),
            ("ranks", ", ".join(str(rank) for rank in sorted(set(report.ranks)))),
            ("failures", str(report.failures)),
            ("escalations", str(report.escalations)),
        ]
        if report.seeds_of_failures:
            summary.append(("failing seeds", ", ".join(report.seeds_of_failures)))
        if report.witness_rank is not None:
            summary.append(("witness rank", str(report.witness_rank)))
        if report.elapsed is not None:
            summary.append(("elapsed", f"{report.elapsed:.3f}s"))
        return summary


class PairedFiberReportFormatter(BaseReportFormatter[PairedFiberDocument]):
    @property
    def _title(self) -> str:
        report = self._document.report
        return f"Paired fibers on {report.spec}: k={report.k}, singles={report.singles}"

    @property
    def _summary(self) -> list[tuple[str, str]]:
        report = self._document.report
        return [
            ("field", report.ground_field),
            ("codimension", f"{report.codimension} (expected {report.expected_codimension})"),
            (
                "kernel dimension",
                f"{report.kernel_dimension} (expected {report.expected_kernel_dimension})",
            ),
        ]


class ChowReportFormatter(BaseReportFormatter[ChowDocument]):
    @property
    def _title(self) -> str:
        ideal = self._document.ideal
        return f"Relations on N_{ideal.n} for g={ideal.g}, splitting type ({ideal.a}, {ideal.b})"

    @property
    def _summary(self) -> list[tuple[str, str]]:
        return [
            *(
                (f"generator {index}", str(generator))
                for index, generator in enumerate(self._document.ideal.generators, 1)
            ),
            ("dimensions", ", ".join(str(dim) for dim in self._document.dims)),
            ("Euler class ranks", str(self._document.euler_ranks)),
        ]


class ConfspaceReportFormatter(BaseReportFormatter[ConfspaceDocument]):
    @property
    def _title(self) -> str:
        cells = ",".join(str(cell) for cell in self._document.cells)
        return f"B(Z, {self._document.k}) for cells {cells}"

    @property
    def _summary(self) -> list[tuple[str, str]]:
        summary = [("classes", self._document.classes.describe())]
        if self._document.grassmannian is not None:
            summary.append(("Grassmannian", self._document.grassmannian.describe()))
        return summary


class TateFormatter:
    """Formats a bare graded space, outside of any document."""

    def __init__(self, space: GradedTate) -> None:
        self._space = space

    def formatted_lines(self) -> Iterable[str]:
        yield self._space.describe()

    def format_report(self, file: TextIO) -> None:
        file.writelines(line + "\n" for line in self.formatted_lines())

