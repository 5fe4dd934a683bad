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

from argparse import ArgumentParser, FileType, RawTextHelpFormatter
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from logging import DEBUG, INFO
from sys import stdout
from typing import TextIO

from tristab.algebra.linalg import DEFAULT_PRIME
from tristab.types.reports import ReportFormat, VerificationMode


class CommandName(StrEnum):
    STABLE = "stable"
    FRAMED = "framed"
    STRATUM = "stratum"
    E1_PAGE = "e1-page"
    VERIFY_CODIM = "verify-codim"
    CHOW = "chow"
    CONFSPACE = "confspace"
    LOAD = "load"


@dataclass(kw_only=True, frozen=True)
class Config:
    log_level: int
    log_levels: dict[str, int]

    command: CommandName
    genus: int | None = None
    n: int | None = None
    h: int = 3
    d: int | None = None
    N: int | None = None
    k: int | None = None
    singles: int = 0
    trials: int = 50
    seed: int = 0
    mode: VerificationMode = VerificationMode.GENERIC
    on_e: bool = False
    framed: bool = False
    up_to: int = 3
    cells: tuple[int, ...] = ()

    prime: int = DEFAULT_PRIME
    timings: bool = False
    input: TextIO | None = None
    report_format: ReportFormat = ReportFormat.TEXT
    output: TextIO = stdout

    @staticmethod
    def _common_options() -> ArgumentParser:
        common = ArgumentParser(add_help=False)
        common.add_argument(
            "-v",
            "--verbose",
            action="store_true",
            default=False,
            help="Verbose program output",
        )
        common.add_argument(
            "--verbose-filter",
            action="extend",
            type=lambda string: string.split(","),
            default=[],
            help="Comma-separated logger names to switch to debug output.",
        )
        report_options = common.add_argument_group("Report options")
        report_options.add_argument(
            "--output",
            "--format",
            dest="format",
            action="store",
            type=ReportFormat,
            default=ReportFormat.TEXT,
            help="Report format, possible values: text, json, latex\nDefault: text",
        )
        report_options.add_argument(
            "--output-file",
            action="store",
            type=FileType("w", encoding="utf-8"),
            default="-",
            help="Write the report to this file.\nDefault: stdout",
        )
        report_options.add_argument(
            "--timings",
            action="store_true",
            default=False,
            help="Include elapsed time in reports. Reports are no longer byte-identical.",
        )
        field_options = common.add_argument_group("Field options")
        field_options.add_argument(
            "--prime",
            action="store",
            type=int,
            default=DEFAULT_PRIME,
            help=f"Characteristic of the finite field used before escalating to QQ.\n"
            f"Default: {DEFAULT_PRIME}",
        )
        return common

    @staticmethod
    def parse_args(version: str, argv: Sequence[str] | None = None) -> "Config":
        parser = ArgumentParser(
            description="tristab - exact stable cohomology of the trigonal locus "
            "and its Maroni strata",
            formatter_class=RawTextHelpFormatter,
        )
        parser.add_argument(
            "-V", "--version", action="version", version=version, help="Show version"
        )
        common = Config._common_options()
        subparsers = parser.add_subparsers(dest="command", required=True)

        def add_command(name: CommandName, help_text: str) -> ArgumentParser:
            return subparsers.add_parser(
                name,
                parents=[common],
                help=help_text,
                formatter_class=RawTextHelpFormatter,
            )

        for name, help_text in (
            (CommandName.STABLE, "Stable cohomology of the trigonal locus T_g."),
            (CommandName.FRAMED, "Stable cohomology of the framed trigonal locus."),
        ):
            command = add_command(name, help_text)
            command.add_argument("--genus", type=int, required=True, help="Genus g >= 8.")

        stratum = add_command(CommandName.STRATUM, "Stable cohomology of a Maroni stratum.")
        stratum.add_argument("--n", type=int, required=True, help="Maroni invariant.")
        stratum.add_argument("--genus", type=int, required=True, help="Genus.")
        stratum.add_argument(
            "--framed", action="store_true", default=False, help="Use the SL2-cover."
        )

        e1_page = add_command(CommandName.E1_PAGE, "E1 page of the discriminant.")
        e1_page.add_argument("--n", type=int, required=True, help="Hirzebruch degree.")
        e1_page.add_argument("--h", type=int, default=3, help="Coefficient of E.\nDefault: 3")
        e1_page.add_argument("--d", type=int, required=True, help="Coefficient of F.")

        codim = add_command(
            CommandName.VERIFY_CODIM,
            "Randomized exact check of the codimension of singular sections.",
        )
        codim.add_argument("--n", type=int, required=True, help="Hirzebruch degree.")
        codim.add_argument("--h", type=int, default=3, help="Coefficient of E.\nDefault: 3")
        codim.add_argument("--d", type=int, required=True, help="Coefficient of F.")
        codim.add_argument("--N", type=int, default=None, help="Number of points.")
        codim.add_argument(
            "--k",
            type=int,
            default=None,
            help="Check k fibers carrying two points each instead of N generic points.",
        )
        codim.add_argument(
            "--singles",
            type=int,
            default=0,
            help="Extra single points next to the paired fibers.\nDefault: 0",
        )
        codim.add_argument("--trials", type=int, default=50, help="Default: 50")
        codim.add_argument("--seed", type=int, default=0, help="Default: 0")
        codim.add_argument(
            "--mode",
            type=VerificationMode,
            default=VerificationMode.GENERIC,
            help="generic - sample points in the proven range,\n"
            "sharpness - one degree below the range with all points on E.\n"
            "Default: generic",
        )
        codim.add_argument(
            "--on-e",
            action="store_true",
            default=False,
            help="Sample every point on the exceptional section.",
        )

        chow = add_command(CommandName.CHOW, "Graded pieces of the Chow ring of a stratum.")
        chow.add_argument("--genus", type=int, required=True, help="Genus.")
        chow.add_argument("--n", type=int, required=True, help="Maroni invariant, n >= 1.")
        chow.add_argument("--up-to", type=int, default=3, help="Last degree.\nDefault: 3")

        confspace = add_command(
            CommandName.CONFSPACE, "Borel-Moore homology of B(Z, k) with sign coefficients."
        )
        confspace.add_argument(
            "--cells",
            type=lambda string: tuple(int(cell) for cell in string.split(",")),
            required=True,
            help="Comma-separated dimensions of the affine cells of Z.",
        )
        confspace.add_argument("--k", type=int, required=True, help="Number of points.")

        load = add_command(
            CommandName.LOAD, "Load a JSON report and output it in another format."
        )
        load.add_argument(
            "--input",
            action="store",
            type=FileType("r", encoding="utf-8"),
            required=True,
            help="JSON report written by another tristab command.",
        )

        parsed_args = parser.parse_args(argv)
        arguments = vars(parsed_args)
        return Config(
            log_level=DEBUG if parsed_args.verbose else INFO,
            log_levels=dict((f, DEBUG) for f in parsed_args.verbose_filter),
            command=CommandName(parsed_args.command),
            genus=arguments.get("genus"),
            n=arguments.get("n"),
            h=arguments.get("h", 3),
            d=arguments.get("d"),
            N=arguments.get("N"),
            k=arguments.get("k"),
            singles=arguments.get("singles", 0),
            trials=arguments.get("trials", 50),
            seed=arguments.get("seed", 0),
            mode=arguments.get("mode", VerificationMode.GENERIC),
            on_e=arguments.get("on_e", False),
            framed=arguments.get("framed", False)
            or parsed_args.command == CommandName.FRAMED,
            up_to=arguments.get("up_to", 3),
            cells=arguments.get("cells", ()),
            prime=parsed_args.prime,
            timings=parsed_args.timings,
            input=arguments.get("input"),
            report_format=parsed_args.format,
            output=parsed_args.output_file,
        )
