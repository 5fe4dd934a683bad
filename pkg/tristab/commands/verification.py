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

from tristab.algebra.chow import (
    ideal_generators,
    ranks_from_dims,
    truncated_quotient_dims,
)
from tristab.commands.common import Command
from tristab.config import CommandName
from tristab.errors import InvalidSpec
from tristab.geometry.confspace import (
    CellStratification,
    grassmannian_bm,
    twisted_bm_config,
)
from tristab.geometry.evalmap import paired_fiber_codimension, verify_codimension
from tristab.sequences.vassiliev import e1_page, stable_cohomology_sections
from tristab.types.documents import (
    ChowDocument,
    CodimensionDocument,
    ConfspaceDocument,
    E1PageDocument,
    PairedFiberDocument,
)
from tristab.types.sequences import Assumption
from tristab.types.surface import SurfaceSpec

_logger = getLogger(__name__)


class E1PageCommand(Command[E1PageDocument]):
    name = CommandName.E1_PAGE

    def validate(self) -> None:
        self._require("n", "d")

    def run(self) -> E1PageDocument:
        assert self._config.n is not None and self._config.d is not None
        spec = SurfaceSpec(n=self._config.n, h=self._config.h, d=self._config.d)
        sections, max_degree = stable_cohomology_sections(spec)
        return E1PageDocument(
            page=e1_page(spec),
            sections=sections,
            max_degree=max_degree,
            assumptions=[Assumption.E1_DEGENERATION],
        )


class VerifyCodimCommand(Command[CodimensionDocument | PairedFiberDocument]):
    name = CommandName.VERIFY_CODIM

    def validate(self) -> None:
        self._require("n", "d")
        if (self._config.N is None) == (self._config.k is None):
            raise InvalidSpec("Command verify-codim needs exactly one of --N and --k")

    def run(self) -> CodimensionDocument | PairedFiberDocument:
        assert self._config.n is not None and self._config.d is not None
        spec = SurfaceSpec(n=self._config.n, h=self._config.h, d=self._config.d)
        if self._config.k is not None:
            return PairedFiberDocument(
                report=paired_fiber_codimension(
                    spec,
                    self._config.k,
                    seed=self._config.seed,
                    singles=self._config.singles,
                    prime=self._config.prime,
                )
            )
        assert self._config.N is not None
        report = verify_codimension(
            spec,
            self._config.N,
            trials=self._config.trials,
            seed=self._config.seed,
            mode=self._config.mode,
            prime=self._config.prime,
            force_on_e=self._config.on_e,
        )
        _logger.debug("Codimension check for %s passed: %r", report.spec, report.passed)
        return CodimensionDocument(report=report)


class ChowCommand(Command[ChowDocument]):
    name = CommandName.CHOW

    def validate(self) -> None:
        self._require("genus", "n")
        if self._config.up_to < 2:
            raise InvalidSpec("Command chow needs --up-to >= 2 to determine the Euler ranks")

    def run(self) -> ChowDocument:
        assert self._config.genus is not None and self._config.n is not None
        ideal = ideal_generators(self._config.genus, self._config.n)
        dims = truncated_quotient_dims(ideal, self._config.up_to, self._config.prime)
        return ChowDocument(
            ideal=ideal,
            dims=dims,
            euler_ranks=ranks_from_dims(dims),
            assumptions=[Assumption.KAPPA1_SQUARED_VANISHES],
        )


class ConfspaceCommand(Command[ConfspaceDocument]):
    name = CommandName.CONFSPACE

    def validate(self) -> None:
        self._require("k")
        if not self._config.cells:
            raise InvalidSpec("Command confspace needs --cells")

    def run(self) -> ConfspaceDocument:
        assert self._config.k is not None
        cells = CellStratification(self._config.cells)
        top = cells.cells[0]
        projective = cells == CellStratification.projective_space(top)
        return ConfspaceDocument(
            cells=list(cells.cells),
            k=self._config.k,
            classes=twisted_bm_config(cells, self._config.k),
            grassmannian=grassmannian_bm(self._config.k, top + 1) if projective else None,
        )
