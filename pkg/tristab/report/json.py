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
from typing import TextIO

from pydantic import ValidationError

from tristab.errors import InvalidSpec
from tristab.report.common import BaseReportFormatter
from tristab.types.documents import BaseDocument, Document, load_document

_logger = getLogger(__name__)


class JSONReportFormatter(BaseReportFormatter[BaseDocument]):
    def format_report(self, file: TextIO) -> None:
        _logger.info("Generating JSON report")
        file.write(
            self._document.model_dump_json(
                indent=4 if self._pretty else None,
                by_alias=True,
            )
        )
        file.write("\n")

    @staticmethod
    def load_report(file: TextIO) -> Document:
        _logger.info("Loading JSON report")
        try:
            return load_document(file.read())
        except ValidationError as ex:
            raise InvalidSpec(f"Not a tristab report: {ex.error_count()} errors") from ex
