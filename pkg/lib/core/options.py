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

from lib.core.exceptions import InputError
from lib.core.settings import DEFAULT_SEED, LOG_LEVELS, OUTPUT_FORMATS
from lib.parse.cmdline import parse_arguments
from lib.parse.config import ConfigParser
from lib.parse.values import (
    parse_character,
    parse_form,
    parse_integer_list,
    parse_matrix,
    parse_place,
    parse_quadruple,
    parse_rational,
    parse_real,
)
from lib.utils.common import get_env_seed
from lib.utils.file import FileUtils, read_json


def parse_options(argv=None):
    opt = parse_config(parse_arguments(argv))

    if opt.output_format not in OUTPUT_FORMATS:
        raise InputError(
            "Select one of the following output formats: "
            f"{', '.join(OUTPUT_FORMATS)}"
        )

    if opt.output_file and not FileUtils.can_write(FileUtils.get_abs_path(opt.output_file)):
        raise InputError(f"Cannot write the report to {opt.output_file}")

    opt.arguments = _parse_command(opt)

    return vars(opt)


def _required(opt, name, flag=None):
    value = getattr(opt, name, None)

    if value is None:
        raise InputError(f"Missing {flag or '--' + name.replace('_', '-')}")

    return value


def _optional_place(opt):
    return parse_place(opt.place) if getattr(opt, "place", None) else None


def _parse_beta(text):
    text = text.strip()

    if text.startswith("["):
        return parse_matrix(text)

    return parse_rational(text)


def _parse_command(opt):
    command = opt.command

    if command == "hilbert":
        return {
            "a": parse_rational(_required(opt, "a", "-a")),
            "b": parse_rational(_required(opt, "b", "-b")),
            "place": _optional_place(opt),
            "oracle": bool(opt.oracle),
        }

    if command in ("invariants", "isotropy"):
        return {"q": parse_form(_required(opt, "q")), "place": _optional_place(opt)}

    if command == "isometric":
        return {
            "q": parse_form(_required(opt, "q")),
            "qp": parse_form(_required(opt, "qp")),
            "place": parse_place(_required(opt, "place")),
        }

    if command == "represents":
        return {
            "q": parse_form(_required(opt, "q")),
            "beta": _parse_beta(_required(opt, "beta")),
            "place": parse_place(_required(opt, "place")),
            "oracle": bool(opt.oracle),
        }

    if command == "spinor-norm":
        return {
            "q": parse_form(_required(opt, "q")),
            "matrix": parse_matrix(_required(opt, "matrix")),
        }

    if command == "character-eval":
        q = parse_form(_required(opt, "q"))

        return {
            "q": q,
            "matrix": parse_matrix(_required(opt, "matrix")),
            "character": parse_character(_required(opt, "character"), q.dim),
            "place": parse_place(_required(opt, "place")),
        }

    if command == "admissible":
        data = {"q": _required(opt, "q"), "qp": _required(opt, "qp"), "n": opt.n}

        if opt.character:
            data["character"] = opt.character
        if opt.character_prime:
            data["character_prime"] = opt.character_prime

        if not opt.global_check:
            _required(opt, "place")

        return {
            "quadruple": parse_quadruple(data),
            "place": _optional_place(opt),
            "global": bool(opt.global_check),
        }

    if command == "weil-check":
        return {
            "p": _required(opt, "p"),
            "diag": parse_integer_list(opt.diag),
            "n": opt.n,
        }

    if command == "unramified-factor":
        return {
            "p": _required(opt, "p"),
            "m": opt.m,
            "m_prime": opt.m_prime,
            "d": parse_rational(opt.d),
            "d_prime": parse_rational(opt.d_prime),
            "truncation": opt.truncation,
            "s": parse_real(opt.s) if opt.s else None,
        }

    if command == "euler":
        return {
            "exclude": tuple(sorted(set(parse_integer_list(opt.exclude)))) if opt.exclude else opt.euler_exclude,
            "bound": opt.bound or opt.euler_bound,
            "s": float(parse_real(opt.s) if opt.s else opt.euler_s),
            "residue": bool(opt.residue),
        }

    if command == "verdict":
        return {"quadruple": parse_quadruple(read_json(_required(opt, "quadruple")))}

    if command == "selftest":
        return {"fast": bool(opt.fast)}

    return {}


def parse_config(opt):
    config = ConfigParser()
    config.read(opt.config)

    # General
    if opt.seed is None:
        opt.seed = get_env_seed()
    if opt.seed is None:
        opt.seed = config.safe_getint("general", "seed", DEFAULT_SEED)

    # Oracle
    opt.oracle_depth_slack = config.safe_getint("oracle", "depth-slack", 5)

    # Weil
    opt.weil_max_states = config.safe_getint("weil", "max-states", 7 ** 4)
    opt.weil_group_cap = config.safe_getint("weil", "group-cap", 10 ** 6)
    opt.weil_tolerance = config.safe_getfloat("weil", "tolerance", 1e-9)
    opt.weil_samples = config.safe_getint("weil", "samples", 20)

    # Euler
    opt.euler_bound = config.safe_getint("euler", "bound", 10 ** 6)
    opt.euler_s = config.safe_getreal("euler", "s", 2)
    opt.euler_exclude = config.safe_getprimes("euler", "exclude")
    opt.eta_terms = config.safe_getint("euler", "eta-terms", 10 ** 4)
    opt.residue_offset = config.safe_getfloat("euler", "residue-offset", 1e-3)
    opt.residue_tolerance = config.safe_getfloat("euler", "residue-tolerance", 5e-3)

    # Output
    opt.color = opt.color if opt.color is not None else config.safe_getboolean("output", "color", True)
    opt.log_file_size = config.safe_getint("output", "log-file-size")
    opt.log_file = opt.log_file or config.safe_get("output", "log-file")
    opt.log_level = config.safe_get("output", "log-level", "DEBUG", LOG_LEVELS)
    opt.output_format = opt.output_format or config.safe_get(
        "output", "report-format", "json", OUTPUT_FORMATS
    )

    return opt
