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
from time import perf_counter

from tristab.commands.common import Command
from tristab.commands.theorems import FramedCommand, StableCommand, StratumCommand
from tristab.commands.verification import (
    ChowCommand,
    ConfspaceCommand,
    E1PageCommand,
    VerifyCodimCommand,
)
from tristab.config import Config
from tristab.types.documents import (
    BaseDocument,
    CodimensionDocument,
    PairedFiberDocument,
)

_logger = getLogger(__name__)


class CommandRunner:
    _registered_commands: tuple[type[Command], ...] = (
        StableCommand,
        FramedCommand,
        StratumCommand,
        E1PageCommand,
        VerifyCodimCommand,
        ChowCommand,
        ConfspaceCommand,
    )

    def __init__(self, config: Config) -> None:
        self._config = config
        self._commands = {
            command_cls.name: command_cls for command_cls in self._registered_commands
        }

    def run_command(self) -> BaseDocument:
        command = self._commands[self._config.command](self._config)
        _logger.info("Running command %s", command.name)
        command.validate()
        started = perf_counter()
        document = command.run()
        if self._config.timings:
            document.elapsed = perf_counter() - started
        elif isinstance(document, CodimensionDocument | PairedFiberDocument):
            document.report.elapsed = None
        return document
