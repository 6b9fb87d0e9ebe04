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

from lib.core.exceptions import InputError
from lib.core.settings import CONFIG_ENV_VAR, SCRIPT_PATH, SEED_ENV_VAR
from lib.utils.file import FileUtils


def get_config_file():
    return os.environ.get(CONFIG_ENV_VAR) or FileUtils.build_path(SCRIPT_PATH, "config.ini")


def get_env_seed():
    value = os.environ.get(SEED_ENV_VAR)

    if not value:
        return None

    try:
        return int(value)
    except ValueError:
        raise InputError(f"{SEED_ENV_VAR} must be an integer, got {value!r}")


def flatten(data, prefix=""):
    """Flatten nested dicts and lists into (dotted key, scalar) pairs, keys sorted."""

    if isinstance(data, dict):
        items = sorted(data.items(), key=lambda item: str(item[0]))
    elif isinstance(data, (list, tuple)) and any(isinstance(v, (dict, list, tuple)) for v in data):
        items = enumerate(data)
    else:
        return [(prefix, data)]

    pairs = []

    for key, value in items:
        pairs.extend(flatten(value, f"{prefix}.{key}" if prefix else str(key)))

    return pairs


def format_value(value):
    if isinstance(value, bool):
        return "yes" if value else "no"

    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value) or "-"

    if value is None:
        return "-"

    return str(value)
