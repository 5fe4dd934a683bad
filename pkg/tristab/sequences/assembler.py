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

"""Spectral sequence of the Maroni stratification of the trigonal locus.

The stratum of Maroni invariant n (the k-th in ascending order, of
codimension c) contributes its cohomology to column p = -k; a class in
degree j of weight w sits at q = k - (j + 2c) with weight w - c, so the total
degree p + q is minus the cohomological degree j + 2c of the class in the
whole space.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger

from tristab.errors import InvalidSpec, MatchingFailure
from tristab.geometry.surface import maroni_strata
from tristab.sequences.quotient import stable_pattern
from tristab.types.graded import GradedTate
from tristab.types.sequences import (
    CancellationPair,
    CancellationReport,
    MaroniColumn,
    MaroniEntry,
    MaroniTable,
)

_logger = getLogger(__name__)

MIN_GENUS = 8


def build_maroni_table(g: int, framed: bool = False) -> MaroniTable:
    if g < MIN_GENUS:
        raise InvalidSpec(f"The Maroni stratification is assembled for g >= {MIN_GENUS}, got g={g}")
    _logger.info("Building the %s Maroni table for g=%d", "framed" if framed else "unframed", g)
    table = MaroniTable(g=g, framed=framed)
    for index, info in enumerate(maroni_strata(g)):
        pattern = stable_pattern(info.n, g, framed)
        column = MaroniColumn(stratum=info, index=index, window=pattern.max_degree)
        for degree, weight, mult in pattern.classes:
            column.entries.append(
                MaroniEntry(
                    p=-index,
                    q=index - (degree + 2 * info.codim),
                    weight=weight - info.codim,
                    mult=mult,
                    known=degree <= pattern.max_degree,
                )
            )
        _logger.debug("Column %s: %r", column.label, column.entries)
        table.columns.append(column)
    return table


def stable_range(g: int, framed: bool = False) -> tuple[int, bool]:
    """Bound on the cohomological degree below which the strata determine T_g.

    Returns the bound and whether it is strict.
    """
    if g < MIN_GENUS:
        raise InvalidSpec(f"The stable range is computed for g >= {MIN_GENUS}, got g={g}")
    if framed:
        return g // 4, True
    minimum = min(
        2 * info.codim + Fraction(info.d - 3 * info.n + 1, 2) for info in maroni_strata(g)
    )
    bound = minimum - 1
    expected = Fraction(g, 4) if g % 2 == 0 else Fraction(g - 3, 4)
    assert bound == expected, f"stable range {bound} differs from {expected}"
    if bound.denominator == 1:
        return int(bound), True
    if g % 2 == 0:
        return int(bound), False
    return g // 4, True


@dataclass(frozen=True)
class _Node:
    column: int
    degree: int
    weight: int
    copy: int
    known: bool

    @property
    def key(self) -> tuple[int, int]:
        return (self.degree, self.weight)


def _nodes(table: MaroniTable, top: int) -> list[_Node]:
    return [
        _Node(-entry.p, entry.cohomological_degree, entry.weight, copy, entry.known)
        for entry in table.entries()
        if entry.cohomological_degree <= top + 1
        for copy in range(entry.mult)
    ]


def _adjacent(source: _Node, target: _Node) -> bool:
    return (
        source.weight == target.weight
        and target.degree == source.degree + 1
        and source.column < target.column
    )


def _maximum_matching(
    sources: list[_Node], edges: dict[_Node, list[_Node]]
) -> dict[_Node, _Node]:
    """Kuhn's augmenting paths; the matching is keyed by the nodes not in `sources`."""
    match: dict[_Node, _Node] = {}

    def augment(source: _Node, seen: set[_Node]) -> bool:
        for target in edges[source]:
            if target in seen:
                continue
            seen.add(target)
            if target not in match or augment(match[target], seen):
                match[target] = source
                return True
        return False

    for source in sources:
        augment(source, set())
    return match


def cancel_and_extract(table: MaroniTable) -> CancellationReport:
    """Cancel classes in pairs along rank-1 differentials and read off the survivors."""
    bound, strict = stable_range(table.g, table.framed)
    top = bound - 1 if strict else bound
    nodes = _nodes(table, top)
    window = [node for node in nodes if node.degree <= top]
    for node in window:
        if not node.known:
            raise MatchingFailure(
                f"Class in degree {node.degree} of column {node.column} lies outside "
                f"its stratum's stable range"
            )
    neighbours: dict[_Node, list[_Node]] = {node: [] for node in nodes}
    for source in nodes:
        for target in nodes:
            if _adjacent(source, target):
                if not (source.known and target.known):
                    if source.degree <= top or target.degree <= top:
                        raise MatchingFailure(
                            f"Differential between degrees {source.degree} and "
                            f"{target.degree} meets a class of unknown cohomology"
                        )
                    continue
                neighbours[source].append(target)
                neighbours[target].append(source)
    # edges join adjacent degrees, so the graph is bipartite by parity
    even = [node for node in nodes if node.degree % 2 == 0]
    match = _maximum_matching(even, neighbours)
    partner: dict[_Node, _Node] = {}
    for odd, even_node in match.items():
        partner[odd] = even_node
        partner[even_node] = odd
    _check_unique_survivors(nodes, neighbours, partner, top)
    pairs = sorted(
        (
            CancellationPair(
                source=(-source.column, source.column - source.degree, source.weight),
                target=(-target.column, target.column - target.degree, target.weight),
            )
            for source, target in (
                sorted((odd, even_node), key=lambda node: node.degree)
                for odd, even_node in match.items()
            )
        ),
        key=lambda pair: (pair.source, pair.target),
    )
    survivors = Counter(
        (-node.degree, node.weight) for node in window if node not in partner
    )
    report = CancellationReport(
        g=table.g,
        framed=table.framed,
        pairs=pairs,
        survivors=GradedTate.from_counts(survivors),
        bound=bound,
        strict=strict,
    )
    _logger.info("Survivors for g=%d: %s", table.g, report.survivors.describe())
    return report


def _check_unique_survivors(
    nodes: list[_Node],
    neighbours: dict[_Node, list[_Node]],
    partner: dict[_Node, _Node],
    top: int,
) -> None:
    """Every maximum matching must leave the same survivors by degree and weight.

    Maximum matchings differ by even alternating paths starting at an
    unmatched class; such a path frees its endpoint instead of its start.
    """

    def signature(node: _Node) -> tuple[int, int, bool]:
        return (node.degree, node.weight, node.degree <= top)

    for start in nodes:
        if start in partner or not start.known:
            continue
        frontier = [start]
        visited = {start}
        while frontier:
            node = frontier.pop()
            for neighbour in neighbours[node]:
                mate = partner.get(neighbour)
                if mate is None or mate in visited:
                    continue
                visited.add(mate)
                if signature(mate) != signature(start) and (
                    mate.degree <= top or start.degree <= top
                ):
                    raise MatchingFailure(
                        f"Cancellation is ambiguous: class {start.key} or {mate.key} "
                        f"may survive"
                    )
                frontier.append(mate)


def surviving_cohomology(report: CancellationReport) -> GradedTate:
    return GradedTate.of(
        *((-total, weight, mult) for total, weight, mult in report.survivors)
    )


def stable_cohomology(g: int, framed: bool = False) -> tuple[GradedTate, int, bool]:
    """Stable cohomology of the trigonal locus (or its framed cover) in its stable range."""
    report = cancel_and_extract(build_maroni_table(g, framed))
    return surviving_cohomology(report), report.bound, report.strict
