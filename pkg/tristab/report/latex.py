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

from logging import getLogger
from typing import Any, TextIO

from jinja2 import Environment, PackageLoader

from tristab.report.common import (
    ChowReportFormatter,
    CodimensionReportFormatter,
    ConfspaceReportFormatter,
    E1PageReportFormatter,
    PairedFiberReportFormatter,
    StableReportFormatter,
    StratumReportFormatter,
    TateFormatter,
    relative,
)
from tristab.types.graded import GradedTate

_logger = getLogger(__name__)

_template_env = Environment(
    loader=PackageLoader("tristab", "report/templates/"),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)

_TEX_SPECIALS = str.maketrans({"_": r"\_", "&": r"\&", "%": r"\%", "#": r"\#"})


def tex_escape(value: object) -> str:
    return str(value).translate(_TEX_SPECIALS)


_template_env.filters["tex"] = tex_escape


def tex_twist(weight: int | str, mult: int) -> str:
    prefix = str(mult) if mult != 1 else ""
    if weight == 0:
        return f"{prefix}\\mathbf{{Q}}"
    return f"{prefix}\\mathbf{{Q}}({weight})"


def tex_space(space: GradedTate) -> str:
    if not space:
        return "0"
    return ", ".join(
        f"H^{{{degree}}} \\ni {tex_twist(weight, mult)}" for degree, weight, mult in space
    )


class _LaTeXMixin:
    _template_name: str

    def _context(self) -> dict[str, Any]:
        raise NotImplementedError()

    def format_report(self, file: TextIO) -> None:
        _logger.info("Generating LaTeX report from %s", self._template_name)
        template = _template_env.get_template(self._template_name)
        file.write(template.render(**self._context()))


class _LaTeXSummaryMixin(_LaTeXMixin):
    _template_name = "summary.tex.jinja"

    def _context(self) -> dict[str, Any]:
        return {
            "title": self._title,
            "summary": self._summary,
            "assumptions": self._assumptions,
        }


class LaTeXStableReportFormatter(_LaTeXMixin, StableReportFormatter):
    _template_name = "maroni.tex.jinja"

    def _context(self) -> dict[str, Any]:
        columns = range(len(self._document.table.columns))
        return {
            "title": self._title,
            "headers": [
                f"\\mathcal{{N}}_{{{self._document.table.columns[index].stratum.n}}}"
                + ("^\\dagger" if self._document.framed else "")
                for index in columns
            ],
            "rows": [
                (
                    q,
                    [
                        [
                            tex_twist(entry.weight, entry.mult)
                            + ("" if entry.known else "^{?}")
                            for entry in self._cell(index, q)
                        ]
                        for index in columns
                    ],
                )
                for q in self._rows
            ],
            "summary": self._summary,
            "classes": tex_space(self._document.classes),
            "assumptions": self._assumptions,
        }


class LaTeXStratumReportFormatter(_LaTeXMixin, StratumReportFormatter):
    _template_name = "gysin.tex.jinja"

    def _context(self) -> dict[str, Any]:
        columns = self._gysin_columns if self._document.scenarios else []
        scenarios = []
        for scenario in self._document.scenarios:
            if scenario.base is None:
                continue
            scenarios.append(
                {
                    "label": scenario.label,
                    "accepted": scenario.accepted,
                    "ranks": str(scenario.ranks),
                    "top": [
                        ", ".join(
                            tex_twist(weight - 1, mult)
                            for weight, mult in scenario.base.in_degree(degree).items()
                        )
                        for degree in columns
                    ],
                    "bottom": [
                        ", ".join(
                            tex_twist(weight, mult)
                            for weight, mult in scenario.base.in_degree(degree).items()
                        )
                        for degree in columns
                    ],
                    "arrows": [
                        (degree, degree + 2, rank)
                        for degree, _, rank in scenario.arrows
                        if rank
                    ],
                }
            )
        return {
            "title": self._title,
            "columns": columns,
            "scenarios": scenarios,
            "summary": self._summary,
            "assumptions": self._assumptions,
        }


class LaTeXE1PageReportFormatter(_LaTeXMixin, E1PageReportFormatter):
    _template_name = "e1_page.tex.jinja"

    def _context(self) -> dict[str, Any]:
        return {
            "title": self._title,
            "columns": self._columns,
            "rows": [
                (
                    relative(offset, "2v"),
                    [
                        [
                            tex_twist(relative(weight, "v"), mult)
                            for weight, mult in self._cell(p, offset)
                        ]
                        for p in self._columns
                    ],
                )
                for offset in self.ROW_OFFSETS
            ],
            "summary": self._summary,
            "assumptions": self._assumptions,
        }


class LaTeXCodimensionReportFormatter(_LaTeXSummaryMixin, CodimensionReportFormatter):
    pass


class LaTeXPairedFiberReportFormatter(_LaTeXSummaryMixin, PairedFiberReportFormatter):
    pass


class LaTeXChowReportFormatter(_LaTeXSummaryMixin, ChowReportFormatter):
    pass


class LaTeXConfspaceReportFormatter(_LaTeXSummaryMixin, ConfspaceReportFormatter):
    pass


class LaTeXTateFormatter(TateFormatter):
    def format_report(self, file: TextIO) -> None:
        file.write(f"${tex_space(self._space)}$\n")
