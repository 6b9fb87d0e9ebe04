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
from lib.core.decorators import locked
from lib.core.settings import BANNER
from lib.view.colors import (
    clean_color,
    disable_color,
    set_color,
    status_color,
    verdict_color,
)


class CLI:
    def __init__(self):
        if not options["color"]:
            disable_color()

    @locked
    def new_line(self, string=""):
        if not sys.stderr.isatty():
            string = clean_color(string)

        sys.stderr.write(string + "\n")
        sys.stderr.flush()

    def banner(self):
        self.new_line(set_color(BANNER, fore="cyan", style="bright"))

    def error(self, reason):
        self.new_line(set_color(reason, fore="white", back="red", style="bright"))

    def warning(self, message):
        self.new_line(set_color(message, fore="yellow", style="bright"))

    def header(self, message):
        self.new_line(set_color(message, fore="magenta", style="bright"))

    def suite(self, name, passed):
        label = status_color("PASS" if passed else "FAIL", passed)
        self.new_line(f"[{label}] {name}")

    def verdict(self, command, positive, label=None):
        if label:
            self.new_line(f"{command}: " + verdict_color(label))
        else:
            self.new_line(f"{command}: " + status_color("ok" if positive else "negative", positive))

    def output_location(self, file):
        self.new_line(f"Output: {file}")

    def log_file(self, file):
        self.new_line(f"Log File: {file}")


class QuietCLI(CLI):
    def banner(*args):
        pass

    def warning(*args, **kwargs):
        pass

    def header(*args):
        pass

    def suite(*args):
        pass

    def verdict(*args):
        pass

    def output_location(*args):
        pass

    def log_file(*args):
        pass


interface = QuietCLI() if options["quiet"] else CLI()
