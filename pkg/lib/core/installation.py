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


import re

from importlib.metadata import PackageNotFoundError, version

from lib.core.exceptions import MissingDependency
from lib.core.settings import SCRIPT_PATH
from lib.utils.file import FileUtils

REQUIREMENTS_FILE = f"{SCRIPT_PATH}/requirements.txt"

_distribution_name = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.\-]*")


def get_dependencies():
    try:
        lines = FileUtils.get_lines(REQUIREMENTS_FILE)
    except FileNotFoundError:
        print("Can't find requirements.txt")
        exit(1)

    return [line.strip() for line in lines]


def missing_dependencies():
    missing = []

    for requirement in get_dependencies():
        name = _distribution_name.match(requirement).group()

        try:
            version(name)
        except PackageNotFoundError:
            missing.append(name)

    return missing


def check_dependencies():
    # an installed copy may ship without requirements.txt
    if not FileUtils.exists(REQUIREMENTS_FILE):
        return

    missing = missing_dependencies()

    if missing:
        raise MissingDependency(
            f"Missing dependencies: {', '.join(missing)} (pip install -r {REQUIREMENTS_FILE})"
        )
