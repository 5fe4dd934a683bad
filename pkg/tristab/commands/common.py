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

from tristab.config import CommandName, Config
from tristab.errors import InvalidSpec
from tristab.types.documents import BaseDocument


class Command[DocumentT: BaseDocument]:
    name: CommandName

    def __init__(self, config: Config) -> None:
        self._config = config

    def validate(self) -> None:
        pass

    def run(self) -> "DocumentT":
        raise NotImplementedError()

    def _require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self._config, name) is None]
        if missing:
            raise InvalidSpec(
                f"Command {self.name} needs {', '.join('--' + name for name in missing)}"
            )
