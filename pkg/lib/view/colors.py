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


import string

from colorama import Back, Fore, Style, init
from pyparsing import Combine, Literal, Optional, Suppress, Word, delimitedList, oneOf

from lib.core.settings import (
    VERDICT_CONJECTURAL,
    VERDICT_ISOMORPHIC,
    VERDICT_NOT_ADMISSIBLE,
)

BACK_COLORS = {
    "red": Back.RED,
    "none": "",
}

FORE_COLORS = {
    "red": Fore.RED,
    "green": Fore.GREEN,
    "yellow": Fore.YELLOW,
    "magenta": Fore.MAGENTA,
    "cyan": Fore.CYAN,
    "white": Fore.WHITE,
    "none": "",
}

STYLES = {
    "bright": Style.BRIGHT,
    "normal": "",
}

VERDICT_COLORS = {
    VERDICT_ISOMORPHIC: "green",
    VERDICT_NOT_ADMISSIBLE: "red",
    VERDICT_CONJECTURAL: "yellow",
}

# CSI sequences such as "\x1b[1;32m"
_escape_seq = Combine(
    Literal("\x1b")
    + "["
    + Optional(delimitedList(Word(string.digits), ";"))
    + oneOf(list(string.ascii_letters))
)

init()

_reset = Style.RESET_ALL


def disable_color():
    global _reset

    _reset = ""

    for table in (STYLES, FORE_COLORS, BACK_COLORS):
        for key in table:
            table[key] = ""


def set_color(msg, fore="none", back="none", style="normal"):
    return STYLES[style] + FORE_COLORS[fore] + BACK_COLORS[back] + msg + _reset


def status_color(msg, positive):
    return set_color(msg, fore="green" if positive else "red", style="bright")


def verdict_color(label):
    return set_color(label, fore=VERDICT_COLORS.get(label, "white"), style="bright")


def clean_color(msg):
    return Suppress(_escape_seq).transformString(msg)
