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

from io import StringIO
from logging import getLogger

from pydantic import TypeAdapter

from tristab.report.common import BaseReportFormatter, TateFormatter
from tristab.report.json import JSONReportFormatter
from tristab.report.latex import (
    LaTeXChowReportFormatter,
    LaTeXCodimensionReportFormatter,
    LaTeXConfspaceReportFormatter,
    LaTeXE1PageReportFormatter,
    LaTeXPairedFiberReportFormatter,
    LaTeXStableReportFormatter,
    LaTeXStratumReportFormatter,
    LaTeXTateFormatter,
)
from tristab.report.plain import (
    PlainChowReportFormatter,
    PlainCodimensionReportFormatter,
    PlainConfspaceReportFormatter,
    PlainE1PageReportFormatter,
    PlainPairedFiberReportFormatter,
    PlainStableReportFormatter,
    PlainStratumReportFormatter,
)
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
from tristab.types.reports import ReportFormat

_logger = getLogger(__name__)

_PLAIN_FORMATTERS: dict[type[BaseDocument], type[BaseReportFormatter]] = {
    StableDocument: PlainStableReportFormatter,
    StratumDocument: PlainStratumReportFormatter,
    E1PageDocument: PlainE1PageReportFormatter,
    CodimensionDocument: PlainCodimensionReportFormatter,
    PairedFiberDocument: PlainPairedFiberReportFormatter,
    ChowDocument: PlainChowReportFormatter,
    ConfspaceDocument: PlainConfspaceReportFormatter,
}

_LATEX_FORMATTERS: dict[type[BaseDocument], type[BaseReportFormatter]] = {
    StableDocument: LaTeXStableReportFormatter,
    StratumDocument: LaTeXStratumReportFormatter,
    E1PageDocument: LaTeXE1PageReportFormatter,
    CodimensionDocument: LaTeXCodimensionReportFormatter,
    PairedFiberDocument: LaTeXPairedFiberReportFormatter,
    ChowDocument: LaTeXChowReportFormatter,
    ConfspaceDocument: LaTeXConfspaceReportFormatter,
}

_graded_adapter: TypeAdapter[GradedTate] = TypeAdapter(GradedTate)


def formatter_factory(
    report_format: ReportFormat, document: BaseDocument, pretty: bool = False
) -> BaseReportFormatter:
    _logger.debug(
        "Creating the %s formatter for %s", report_format, type(document).__name__
    )
    match report_format:
        case ReportFormat.TEXT:
            return _PLAIN_FORMATTERS[type(document)](document, pretty)
        case ReportFormat.JSON:
            return JSONReportFormatter(document, pretty)
        case ReportFormat.LATEX:
            return _LATEX_FORMATTERS[type(document)](document, pretty)


def emit(document: BaseDocument | GradedTate, report_format: ReportFormat) -> bytes:
    """Render a document, or a bare graded space, as UTF-8 bytes."""
    if isinstance(document, GradedTate):
        match report_format:
            case ReportFormat.JSON:
                return _graded_adapter.dump_json(document)
            case ReportFormat.TEXT:
                formatter = TateFormatter(document)
            case ReportFormat.LATEX:
                formatter = LaTeXTateFormatter(document)
    else:
        formatter = formatter_factory(report_format, document)
    output = StringIO()
    formatter.format_report(output)
    return output.getvalue().encode()
