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

from tristab.algebra.graded import twist_shift
from tristab.errors import RangeViolation
from tristab.geometry.confspace import CellStratification, twisted_bm_config
from tristab.geometry.surface import section_dimension
from tristab.types.graded import GradedTate, sum_counts
from tristab.types.sequences import VassilievPage
from tristab.types.surface import SurfaceSpec

_logger = getLogger(__name__)

# columns beyond this one vanish in the stable range
LAST_COLUMN = 4
MIN_CUTOFF = 5


def vanishing_cutoff(spec: SurfaceSpec) -> int:
    return (spec.d - spec.h * spec.n + 1) // 2


def stable_max_degree(spec: SurfaceSpec) -> int:
    return (spec.d - spec.h * spec.n) // 2


def e1_page(spec: SurfaceSpec) -> VassilievPage:
    spec.validate()
    cutoff = vanishing_cutoff(spec)
    if cutoff < MIN_CUTOFF:
        raise RangeViolation(
            f"{spec} gives N={cutoff}, columns 1..{LAST_COLUMN} are only "
            f"controlled for N >= {MIN_CUTOFF}"
        )
    _logger.info("Assembling the E1 page for %s", spec)
    v = section_dimension(spec)
    cells = CellStratification.hirzebruch()
    columns = {
        i: twist_shift(twisted_bm_config(cells, i), 2 * (v - 3 * i) + i - 1, v - 3 * i)
        for i in range(1, LAST_COLUMN + 1)
    }
    for p, column in columns.items():
        _logger.debug("Column %d: %s", p, column.describe())
    return VassilievPage(spec=spec, v=v, columns=columns, cutoff_n=cutoff)


def alexander_dual(page: VassilievPage) -> GradedTate:
    """Cohomology of the complement of the discriminant read off the E1 page."""
    dual = sum_counts(
        GradedTate.of(
            *(
                (2 * page.v - 1 - total, weight - page.v, mult)
                for total, weight, mult in column
            )
        )
        for column in page.columns.values()
    )
    return sum_counts((GradedTate.unit(), dual))


def stable_cohomology_sections(spec: SurfaceSpec) -> tuple[GradedTate, int]:
    """Stable cohomology of the space of smooth sections and the last degree it is valid in."""
    page = e1_page(spec)
    max_degree = stable_max_degree(spec)
    cohomology = alexander_dual(page).truncate(max_degree)
    _logger.debug("Stable cohomology of smooth sections of %s: %s", spec, cohomology.describe())
    return cohomology, max_degree
