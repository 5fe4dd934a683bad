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
from tristab.sequences.assembler import (
    build_maroni_table,
    cancel_and_extract,
    surviving_cohomology,
)
from tristab.sequences.quotient import (
    circle_gysin_scenarios,
    stable_pattern,
    stable_spec,
    x_mod_gl2,
)
from tristab.sequences.vassiliev import stable_max_degree
from tristab.types.documents import StableDocument, StratumDocument
from tristab.types.sequences import Assumption

_logger = getLogger(__name__)


class StableCommand(Command[StableDocument]):
    name = CommandName.STABLE

    def validate(self) -> None:
        self._require("genus")

    def run(self) -> StableDocument:
        assert self._config.genus is not None
        table = build_maroni_table(self._config.genus, self._config.framed)
        report = cancel_and_extract(table)
        return StableDocument(
            genus=self._config.genus,
            framed=self._config.framed,
            classes=surviving_cohomology(report),
            bound=report.bound,
            strict=report.strict,
            pairs=report.pairs,
            table=table,
            assumptions=table.assumptions,
        )


class FramedCommand(StableCommand):
    name = CommandName.FRAMED


class StratumCommand(Command[StratumDocument]):
    name = CommandName.STRATUM

    def validate(self) -> None:
        self._require("n", "genus")

    def run(self) -> StratumDocument:
        n, g = self._config.n, self._config.genus
        assert n is not None and g is not None
        pattern = stable_pattern(n, g, self._config.framed)
        document = StratumDocument(
            n=n,
            genus=g,
            framed=self._config.framed,
            classes=pattern.classes,
            max_degree=pattern.max_degree,
            assumptions=[Assumption.E1_DEGENERATION, Assumption.LERAY_HIRSCH],
        )
        if n >= 1:
            dims = truncated_quotient_dims(ideal_generators(g, n), 2, self._config.prime)
            spec = stable_spec(n)
            scenarios = circle_gysin_scenarios(
                x_mod_gl2(spec),
                ranks_from_dims(dims),
                stable_max_degree(spec),
                dims[2],
            )
            _logger.debug("Circle bundle scenarios: %r", scenarios)
            document.euler_ranks = scenarios[0].ranks
            document.scenarios = scenarios
            document.assumptions.append(Assumption.KAPPA1_SQUARED_VANISHES)
        return document

