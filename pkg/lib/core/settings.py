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

import os
import sys

from lib.utils.file import FileUtils

# Version format: <major version>.<minor version>.<revision>
VERSION = "0.1.0"

BANNER = f"""
  __ _ _  _ __ _ ___  _ _ _ _ ___ _
 / _` | || / _` |   \\| '_| | | | |  _|  v{VERSION}
 \\__, |\\_,_\\__,_|___/|_| |_|_|_|_|\\__|
    |_|
"""

SCRIPT_PATH = FileUtils.parent(__file__, 3)

IS_WINDOWS = sys.platform in ("win32", "msys")

NEW_LINE = os.linesep

CONFIG_ENV_VAR = "QUADRILIFT_CONFIG"

SEED_ENV_VAR = "QUADRILIFT_SEED"

DEFAULT_SEED = 20240601

OUTPUT_FORMATS = ("json", "plain", "md", "html")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

SUBCOMMANDS = (
    "hilbert",
    "invariants",
    "isometric",
    "isotropy",
    "represents",
    "spinor-norm",
    "character-eval",
    "admissible",
    "weil-check",
    "unramified-factor",
    "euler",
    "verdict",
    "selftest",
)

# Exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NEGATIVE = 3

REAL_PLACE_NAME = "real"

FINITE_PLACE_PREFIX = "p:"

# Oracle depth is 2 * (|v_p(a)| + |v_p(b)|) + ORACLE_DEPTH_SLACK
ORACLE_DEPTH_SLACK = 5

# Small multipliers tried when a sum of two basis vectors is isotropic
AUXILIARY_COEFFICIENTS = (1, 2, 3, 5, 7)

# Finite Weil model bounds
MAX_WEIL_PRIME = 7
MAX_WEIL_DIMENSION = 3
MAX_WEIL_RANK = 2
MAX_WEIL_STATES = 7 ** 4
MAX_GROUP_ELEMENTS = 10 ** 6
WEIL_TOLERANCE = 1e-9
WEIL_SAMPLES = 20

# Euler products and the residue at s = 1
ETA_TERMS = 10 ** 4
EULER_TRANSFORM_LEVELS = 12
RESIDUE_OFFSET = 1e-3
RESIDUE_TOLERANCE = 5e-3
MAX_SHELL_TRUNCATION = 64

VERDICT_ISOMORPHIC = "isomorphic"
VERDICT_NOT_ADMISSIBLE = "not-admissible"
VERDICT_CONJECTURAL = "conjectural"

TMP_PATH = "/tmp/quadrilift"
