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

"""Evaluation of the 1-jets of sections of O(hE + dF) at points of F_n.

A section is singular at a point exactly when three linear conditions on its
coefficients vanish; stacking them for N points gives a 3N x v matrix whose
kernel consists of the sections singular at every point.
"""

from logging import getLogger
from random import Random
from time import perf_counter

from tristab.algebra.linalg import (
    DEFAULT_PRIME,
    ExactMatrix,
    certified_rank,
    exact_rank,
)
from tristab.errors import (
    BadChart,
    CharTooSmall,
    Inconsistent,
    InvalidSpec,
    RangeViolation,
)
from tristab.geometry.surface import monomial_basis, row_lengths
from tristab.types.points import (
    PQ,
    Admissibility,
    OffE,
    OnE,
    PointConfiguration,
    SurfacePoint,
    fiber_coordinate,
)
from tristab.types.reports import CodimensionReport, PairedFiberReport, VerificationMode
from tristab.types.surface import Monomial, SurfaceSpec, WeightedMonomial

_logger = getLogger(__name__)


def _point_rows(point: SurfacePoint, spec: SurfaceSpec, basis: list[Monomial]) -> list[list[int]]:
    match point:
        case OffE(x, y, z) if spec.n >= 1:
            return [
                [monomial.partial_at(variable, (x, y, z)) for monomial in basis]
                for variable in range(3)
            ]
        case OnE(x0, y0) if spec.n >= 1:
            # alpha collects the z^h coefficients, beta the z^(h-1) ones;
            # Euler's relation recovers the other partial of alpha from these two
            alpha_rows = [
                [
                    (
                        monomial.value_at((x0, y0, 1))
                        if variable is None
                        else monomial.partial_at(variable, (x0, y0, 1))
                    )
                    if isinstance(monomial, WeightedMonomial) and monomial.c == spec.h
                    else 0
                    for monomial in basis
                ]
                for variable in (None, 0 if y0 else 1)
            ]
            beta_row = [
                monomial.value_at((x0, y0, 1))
                if isinstance(monomial, WeightedMonomial) and monomial.c == spec.h - 1
                else 0
                for monomial in basis
            ]
            return [*alpha_rows, beta_row]
        case PQ(X0, X1, Y0, Y1) if spec.n == 0:
            coordinates = (X0, X1, Y0, Y1)
            y_variable = 2 if Y1 else 3
            return [
                [monomial.partial_at(variable, coordinates) for monomial in basis]
                for variable in (0, 1, y_variable)
            ]
    raise BadChart(f"{point!r} is not a point of the chart used for {spec}")


def evaluation_matrix(
    config: PointConfiguration, spec: SurfaceSpec, prime: int | None = DEFAULT_PRIME
) -> ExactMatrix:
    """The 3N x v matrix of singularity conditions, read over F_prime or QQ (`prime` None)."""
    spec.validate()
    if prime is not None and prime <= max(spec.h, spec.d):
        raise CharTooSmall(
            f"Characteristic {prime} divides exponents of sections of {spec}"
        )
    config.validate()
    basis = monomial_basis(spec)
    rows = [row for point in config.points for row in _point_rows(point, spec, basis)]
    return ExactMatrix.from_rows(rows, len(basis), prime)


def _nonzero_pair(rng: Random, modulus: int) -> tuple[int, int]:
    while True:
        pair = (rng.randrange(modulus), rng.randrange(modulus))
        if any(pair):
            return pair


def sample_point(
    spec: SurfaceSpec, rng: Random, modulus: int, on_e: bool = False
) -> SurfacePoint:
    if spec.n == 0:
        return PQ(*_nonzero_pair(rng, modulus), *_nonzero_pair(rng, modulus))
    if on_e:
        return OnE(*_nonzero_pair(rng, modulus))
    return OffE(*_nonzero_pair(rng, modulus), rng.randrange(modulus))


def sample_configuration(
    spec: SurfaceSpec,
    N: int,
    rng: Random,
    modulus: int = DEFAULT_PRIME,
    force_on_e: bool = False,
) -> PointConfiguration:
    """N points on N distinct fibers, resampling on collisions.

    Points land on E_n with probability 1/modulus unless `force_on_e` is set.
    """
    points: list[SurfacePoint] = []
    used: set[int] = set()
    while len(points) < N:
        on_e = spec.n >= 1 and (force_on_e or rng.randrange(modulus) == 0)
        point = sample_point(spec, rng, modulus, on_e)
        if (line := fiber_coordinate(point, modulus)) in used:
            continue
        used.add(line)
        points.append(point)
    return PointConfiguration(tuple(points), modulus)


def verify_codimension(
    spec: SurfaceSpec,
    N: int,
    trials: int = 50,
    seed: int = 0,
    mode: VerificationMode = VerificationMode.GENERIC,
    prime: int = DEFAULT_PRIME,
    force_on_e: bool = False,
) -> CodimensionReport:
    spec.validate()
    if N < 0 or trials < 1:
        raise InvalidSpec(f"Need N >= 0 and at least one trial, got N={N}, trials={trials}")
    if mode == VerificationMode.SHARPNESS:
        return _probe_sharpness(spec, N, trials, seed, prime)
    if spec.d < 2 * N + spec.h * spec.n - 1:
        raise RangeViolation(
            f"{spec} is below the bound d >= 2N + hn - 1 = {2 * N + spec.h * spec.n - 1}"
        )
    _logger.info("Verifying codimension %d for %s over %d trials", 3 * N, spec, trials)
    started = perf_counter()
    report = CodimensionReport(
        spec=spec,
        N=N,
        mode=mode,
        ground_field=f"GF({prime})",
        trials=trials,
        expected_rank=3 * N,
    )
    for trial in range(trials):
        trial_seed = f"{seed}/{trial}"
        config = sample_configuration(spec, N, Random(trial_seed), prime, force_on_e)
        rank, escalated = certified_rank(evaluation_matrix(config, spec, prime), 3 * N)
        report.ranks.append(rank)
        report.escalations += escalated
        if rank < 3 * N:
            _logger.warning("Trial %s has rank %d < %d: %r", trial_seed, rank, 3 * N, config)
            report.failures += 1
            report.seeds_of_failures.append(trial_seed)
    report.elapsed = perf_counter() - started
    _logger.debug("Ranks for %s: %r", spec, report.ranks)
    return report


def _probe_sharpness(
    spec: SurfaceSpec, N: int, trials: int, seed: int, prime: int
) -> CodimensionReport:
    if spec.n < 1 or N < 1:
        raise InvalidSpec("The sharpness probe needs n >= 1 and N >= 1")
    sharp_spec = spec.with_degree(2 * N + spec.h * spec.n - 2).validate()
    _logger.info("Probing sharpness of the degree bound at %s with N=%d", sharp_spec, N)
    started = perf_counter()
    report = CodimensionReport(
        spec=sharp_spec,
        N=N,
        mode=VerificationMode.SHARPNESS,
        ground_field=f"GF({prime})",
        trials=trials,
        expected_rank=3 * N,
    )
    for trial in range(trials):
        trial_seed = f"{seed}/{trial}"
        config = sample_configuration(
            sharp_spec, N, Random(trial_seed), prime, force_on_e=True
        )
        matrix = evaluation_matrix(config, sharp_spec, prime)
        rank = exact_rank(matrix)
        report.ranks.append(rank)
        if rank >= 3 * N:
            continue
        # a deficient rank over F_p only counts once confirmed over QQ
        rational_rank = exact_rank(matrix.over(None))
        report.escalations += 1
        if rational_rank < 3 * N:
            report.failures += 1
            report.seeds_of_failures.append(trial_seed)
            if report.witness_rank is None or rational_rank < report.witness_rank:
                report.witness_rank = rational_rank
    report.elapsed = perf_counter() - started
    return report


def _paired_configuration(
    spec: SurfaceSpec, k: int, singles: int, rng: Random, modulus: int
) -> PointConfiguration:
    points: list[SurfacePoint] = []
    used: set[int] = set()
    while len(points) < 2 * k:
        if spec.n == 0:
            y0, y1 = _nonzero_pair(rng, modulus)
            first, second = _nonzero_pair(rng, modulus), _nonzero_pair(rng, modulus)
            if (first[0] * second[1] - first[1] * second[0]) % modulus == 0:
                continue
            pair: tuple[SurfacePoint, SurfacePoint] = (
                PQ(*first, y0, y1),
                PQ(*second, y0, y1),
            )
        else:
            x, y = _nonzero_pair(rng, modulus)
            z1, z2 = rng.randrange(modulus), rng.randrange(modulus)
            if z1 == z2:
                continue
            pair = (OffE(x, y, z1), OffE(x, y, z2))
        if (line := fiber_coordinate(pair[0], modulus)) in used:
            continue
        used.add(line)
        points.extend(pair)
    while len(points) < 2 * k + singles:
        point = sample_point(spec, rng, modulus)
        if (line := fiber_coordinate(point, modulus)) in used:
            continue
        used.add(line)
        points.append(point)
    return PointConfiguration(tuple(points), modulus, Admissibility.PAIRED)


def paired_fiber_codimension(
    spec: SurfaceSpec,
    k: int,
    seed: int = 0,
    singles: int = 0,
    prime: int = DEFAULT_PRIME,
) -> PairedFiberReport:
    """Codimension of the sections singular at k pairs of points sharing a fiber.

    Such sections are products of the k fiber equations with a section of
    degree d - k through the 2k points, so the kernel dimension is known in
    closed form and compared against the rank.
    """
    spec.validate()
    if spec.h != 3:
        raise InvalidSpec(f"Paired fibers are only treated for trigonal curves, got h={spec.h}")
    if k < 0 or singles < 0:
        raise InvalidSpec(f"Need k >= 0 and singles >= 0, got k={k}, singles={singles}")
    if 2 * spec.d < 3 * (k + spec.n) - 2:
        raise RangeViolation(
            f"{spec} is below the bound d >= 3(k + n)/2 - 1 for k={k} paired fibers"
        )
    _logger.info("Checking %d paired fibers and %d single points on %s", k, singles, spec)
    started = perf_counter()
    config = _paired_configuration(spec, k, singles, Random(f"{seed}/paired"), prime)
    matrix = evaluation_matrix(config, spec, prime)
    expected_codimension = 6 * k + 3 * singles
    rank, escalated = certified_rank(matrix, expected_codimension)
    kernel = matrix.cols - rank
    expected_kernel = sum(row_lengths(spec.n, spec.h, spec.d - k)) - 2 * k - 3 * singles
    if rank != expected_codimension or kernel != expected_kernel:
        raise Inconsistent(
            f"Paired-fiber conditions on {spec} have rank {rank} and kernel {kernel}, "
            f"expected {expected_codimension} and {expected_kernel}"
        )
    return PairedFiberReport(
        spec=spec,
        k=k,
        singles=singles,
        ground_field="QQ" if escalated else matrix.field_name,
        seed=seed,
        rank=rank,
        kernel_dimension=kernel,
        expected_codimension=expected_codimension,
        expected_kernel_dimension=expected_kernel,
        escalated=escalated,
        elapsed=perf_counter() - started,
    )
