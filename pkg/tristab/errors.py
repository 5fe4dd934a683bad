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

class TristabError(Exception):
    exit_status = 1


class InputError(TristabError):
    """The request lies outside the range where a computation is valid."""

    exit_status = 2


class InvalidSpec(InputError):
    pass


class RangeViolation(InputError):
    pass


class InvalidStratum(InputError):
    pass


class BadChart(InputError):
    pass


class CharTooSmall(InputError):
    pass


class ConsistencyError(TristabError):
    """A mathematical cross-check failed, which points to a defect."""

    exit_status = 3


class NotDivisible(ConsistencyError):
    pass


class Inconsistent(ConsistencyError):
    pass


class MatchingFailure(ConsistencyError):
    pass


class VerificationFailed(ConsistencyError):
    pass
