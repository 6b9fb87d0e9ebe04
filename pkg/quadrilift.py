#!/usr/bin/env python3
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

from lib.core.data import options
from lib.core.exceptions import QuadriliftError
from lib.core.settings import EXIT_INPUT_ERROR

if sys.version_info < (3, 8):
    sys.stderr.write("Sorry, quadrilift requires Python 3.8 or higher\n")
    sys.exit(1)


def main(argv=None):
    from lib.core.options import parse_options

    try:
        options.update(parse_options(argv))
    except QuadriliftError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_INPUT_ERROR

    from lib.controller.controller import Controller

    return Controller().run()


if __name__ == "__main__":
    from lib.core.installation import check_dependencies

    try:
        check_dependencies()
    except QuadriliftError as e:
        sys.stderr.write(f"{e}\n")
        sys.exit(EXIT_INPUT_ERROR)

    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.exit(130)
