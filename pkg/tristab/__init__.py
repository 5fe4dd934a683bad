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

from collections.abc import Sequence
from logging import DEBUG, basicConfig, getLogger
from sys import stderr

from tristab.commands import CommandRunner
from tristab.config import CommandName, Config
from tristab.errors import ConsistencyError, InputError, VerificationFailed
from tristab.report import formatter_factory
from tristab.report.json import JSONReportFormatter

__version__ = "0.1"

_logger = getLogger(__name__)


def run(config: Config) -> int:
    try:
        if config.command == CommandName.LOAD:
            assert config.input is not None
            document = JSONReportFormatter.load_report(config.input)
        else:
            document = CommandRunner(config).run_command()
        formatter = formatter_factory(
            config.report_format, document, pretty=config.log_level == DEBUG
        )
        formatter.format_report(config.output)
        config.output.flush()
        if (failure := document.failure) is not None:
            raise VerificationFailed(failure)
    except (InputError, ConsistencyError) as ex:
        _logger.error("%s: %s", type(ex).__name__, ex)
        return ex.exit_status
    return 0


def main(argv: Sequence[str] | None = None) -> None:
    config = Config.parse_args(__version__, argv)
    basicConfig(level=config.log_level, stream=stderr)
    for vf, level in config.log_levels.items():
        getLogger(vf).setLevel(level)
    _logger.debug("%r", config)
    raise SystemExit(run(config))
