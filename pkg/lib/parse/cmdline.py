# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.

import sys

from optparse import OptionParser, OptionGroup

from lib.core.settings import OUTPUT_FORMATS, SUBCOMMANDS, VERSION
from lib.utils.common import get_config_file


def _general_options(parser):
    general = OptionGroup(parser, "General Settings")
    general.add_option(
        "--config",
        action="store",
        dest="config",
        metavar="PATH",
        help="Path to configuration file (Default: 'QUADRILIFT_CONFIG' environment variable, otherwise 'config.ini')",
        default=get_config_file(),
    )
    general.add_option(
        "--seed",
        action="store",
        type="int",
        dest="seed",
        help="Seed for every random choice (Default: 'QUADRILIFT_SEED' environment variable, otherwise the config)",
    )

    output = OptionGroup(parser, "Output Settings")
    output.add_option(
        "--format",
        action="store",
        dest="output_format",
        metavar="FORMAT",
        help=f"Report format (Available: {', '.join(OUTPUT_FORMATS)})",
    )
    output.add_option(
        "-o",
        "--output",
        action="store",
        dest="output_file",
        metavar="PATH",
        help="Write the report to a file instead of the standard output",
    )
    output.add_option("--log", action="store", dest="log_file", metavar="PATH", help="Log file")
    output.add_option(
        "--no-color", action="store_false", dest="color", help="No colored output"
    )
    output.add_option(
        "-q", "--quiet-mode", action="store_true", dest="quiet", help="Quiet mode"
    )

    parser.add_option_group(general)
    parser.add_option_group(output)


def _form_options(group, *names):
    labels = {
        "q": "Quadratic form as JSON, e.g. '{\"diag\": [\"1\", \"1\", \"1\"]}'",
        "qp": "Second quadratic form as JSON",
    }

    for name in names:
        group.add_option(f"--{name}", action="store", dest=name, metavar="FORM", help=labels[name])


def _place_option(group, help="Place: 'real' or 'p:<prime>'"):
    group.add_option("--place", action="store", dest="place", metavar="PLACE", help=help)


def _command_options(command, parser):
    group = OptionGroup(parser, "Command Settings")

    if command == "hilbert":
        group.add_option("-a", action="store", dest="a", metavar="RATIONAL", help="First argument")
        group.add_option("-b", action="store", dest="b", metavar="RATIONAL", help="Second argument")
        _place_option(group, help="Place (omit to list every place where the symbol is -1)")
        group.add_option(
            "--oracle", action="store_true", dest="oracle", help="Also decide the symbol by solution search"
        )
    elif command in ("invariants", "isotropy"):
        _form_options(group, "q")
        _place_option(group, help="Restrict to one place (omit for all relevant places)")
    elif command == "isometric":
        _form_options(group, "q", "qp")
        _place_option(group)
    elif command == "represents":
        _form_options(group, "q")
        group.add_option(
            "--beta",
            action="store",
            dest="beta",
            metavar="VALUE",
            help="A rational or a symmetric Gram matrix as a JSON array",
        )
        _place_option(group)
        group.add_option(
            "--oracle", action="store_true", dest="oracle", help="Cross-check a value by solution search"
        )
    elif command in ("spinor-norm", "character-eval"):
        _form_options(group, "q")
        group.add_option(
            "--matrix", action="store", dest="matrix", metavar="JSON", help="Orthogonal matrix, row-major"
        )

        if command == "character-eval":
            group.add_option(
                "--character",
                action="store",
                dest="character",
                metavar="JSON",
                help="Character as JSON, e.g. '{\"lambda\": \"-1\", \"eps\": 1, \"dim\": 3}'",
            )
            _place_option(group)
    elif command == "admissible":
        _form_options(group, "q", "qp")
        _place_option(group)
        group.add_option(
            "--global", action="store_true", dest="global_check", help="Check every bad place"
        )
        group.add_option("--n", action="store", type="int", dest="n", default=1, help="Symplectic rank")
        group.add_option("--character", action="store", dest="character", metavar="JSON")
        group.add_option("--character-prime", action="store", dest="character_prime", metavar="JSON")
    elif command == "weil-check":
        group.add_option("--p", action="store", type="int", dest="p", help="Odd prime at most 7")
        group.add_option("--diag", action="store", dest="diag", default="1", help="Diagonal units, e.g. 1,1,1")
        group.add_option("--n", action="store", type="int", dest="n", default=1, help="Rank 1 or 2")
    elif command == "unramified-factor":
        group.add_option("--p", action="store", type="int", dest="p", help="Odd prime")
        group.add_option("--m", action="store", type="int", dest="m", default=3)
        group.add_option("--mp", action="store", type="int", dest="m_prime", default=1)
        group.add_option("--d", action="store", dest="d", default="1", help="Discriminant of the first side")
        group.add_option("--dp", action="store", dest="d_prime", default="1", help="Discriminant of the second side")
        group.add_option("--truncation", action="store", type="int", dest="truncation", default=30)
        group.add_option("--s", action="store", dest="s", help="Evaluate the factor at this s")
    elif command == "euler":
        group.add_option("--exclude", action="store", dest="exclude", help="Excluded primes, e.g. 2,3")
        group.add_option("--bound", action="store", type="int", dest="bound")
        group.add_option("--s", action="store", dest="s")
        group.add_option(
            "--residue", action="store_true", dest="residue", help="Also check the residue at s = 1"
        )
    elif command == "verdict":
        group.add_option(
            "--quadruple", action="store", dest="quadruple", metavar="PATH", help="Quadruple JSON file"
        )
    elif command == "selftest":
        group.add_option("--fast", action="store_true", dest="fast", help="Skip the slowest suites")

    parser.add_option_group(group)


def parse_arguments(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    usage = f"Usage: %prog <{'|'.join(SUBCOMMANDS)}> [options]"
    epilog = "See 'config.ini' for the example configuration file"

    if not argv or argv[0] not in SUBCOMMANDS:
        parser = OptionParser(usage=usage, epilog=epilog, version=f"quadrilift v{VERSION}")
        _general_options(parser)
        parser.parse_args(argv)
        parser.error("A subcommand is required")

    command = argv[0]
    parser = OptionParser(
        usage=f"Usage: %prog {command} [options]", epilog=epilog, version=f"quadrilift v{VERSION}"
    )
    _command_options(command, parser)
    _general_options(parser)
    options, arguments = parser.parse_args(argv[1:])

    if arguments:
        parser.error(f"Unexpected arguments: {' '.join(arguments)}")

    options.command = command

    return options
