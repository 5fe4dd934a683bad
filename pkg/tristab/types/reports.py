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

from dataclasses import dataclass, field
from enum import StrEnum

from tristab.types.surface import SurfaceSpec


class ReportFormat(StrEnum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


class VerificationMode(StrEnum):
    GENERIC = "generic"
    SHARPNESS = "sharpness"


@dataclass(kw_only=True)
class CodimensionReport:
    spec: SurfaceSpec
    N: int
    mode: VerificationMode
    ground_field: str
    trials: int
    expected_rank: int
    ranks: list[int] = field(default_factory=list)
    failures: int = 0
    seeds_of_failures: list[str] = field(default_factory=list)
    escalations: int = 0
    witness_rank: int | None = None
    elapsed: float | None = None

    @property
    def passed(self) -> bool:
        if self.mode == VerificationMode.SHARPNESS:
            return self.witness_rank is not None
        return self.failures == 0


@dataclass(kw_only=True)
class PairedFiberReport:
    spec: SurfaceSpec
    k: int
    singles: int
    ground_field: str
    seed: int
    rank: int
    kernel_dimension: int
    expected_codimension: int
    expected_kernel_dimension: int
    escalated: bool = False
    elapsed: float | None = None

    @property
    def codimension(self) -> int:
        return self.rank
