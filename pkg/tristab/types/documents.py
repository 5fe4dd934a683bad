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

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Discriminator, Field, TypeAdapter

from tristab.types.chow import TschirnhausenIdeal
from tristab.types.graded import GradedTate
from tristab.types.reports import CodimensionReport, PairedFiberReport, VerificationMode
from tristab.types.sequences import (
    Assumption,
    CancellationPair,
    EulerRanks,
    GysinScenario,
    MaroniTable,
    VassilievPage,
)


class BaseDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    assumptions: list[Assumption] = Field(default_factory=list)
    elapsed: float | None = None

    @property
    def failure(self) -> str | None:
        return None


class StableDocument(BaseDocument):
    kind: Literal["stable"] = "stable"
    genus: int
    framed: bool
    classes: GradedTate
    bound: int
    strict: bool
    pairs: list[CancellationPair] = Field(default_factory=list)
    table: MaroniTable


class StratumDocument(BaseDocument):
    kind: Literal["stratum"] = "stratum"
    n: int
    genus: int
    framed: bool
    classes: GradedTate
    max_degree: int = Field(alias="maxDegree")
    euler_ranks: EulerRanks | None = None
    scenarios: list[GysinScenario] = Field(default_factory=list)

    @property
    def in_range(self) -> GradedTate:
        return self.classes.truncate(self.max_degree)


class E1PageDocument(BaseDocument):
    kind: Literal["e1-page"] = "e1-page"
    page: VassilievPage
    sections: GradedTate
    max_degree: int = Field(alias="maxDegree")


class CodimensionDocument(BaseDocument):
    kind: Literal["verify-codim"] = "verify-codim"
    report: CodimensionReport

    @property
    def failure(self) -> str | None:
        if self.report.passed:
            return None
        if self.report.mode == VerificationMode.SHARPNESS:
            return f"No configuration on E witnessed sharpness for {self.report.spec}"
        return (
            f"Codimension check failed for {self.report.spec} in "
            f"{self.report.failures} of {self.report.trials} trials"
        )


class PairedFiberDocument(BaseDocument):
    kind: Literal["paired-fibers"] = "paired-fibers"
    report: PairedFiberReport


class ChowDocument(BaseDocument):
    kind: Literal["chow"] = "chow"
    ideal: TschirnhausenIdeal
    dims: list[int]
    euler_ranks: EulerRanks


class ConfspaceDocument(BaseDocument):
    kind: Literal["confspace"] = "confspace"
    cells: list[int]
    k: int
    classes: GradedTate
    grassmannian: GradedTate | None = None


Document = Annotated[
    StableDocument
    | StratumDocument
    | E1PageDocument
    | CodimensionDocument
    | PairedFiberDocument
    | ChowDocument
    | ConfspaceDocument,
    Discriminator("kind"),
]

_document_adapter: TypeAdapter[Document] = TypeAdapter(Document)


def load_document(data: str | bytes) -> Document:
    return _document_adapter.validate_json(data)
