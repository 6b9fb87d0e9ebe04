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

from dataclasses import dataclass, field
from typing import Any, Dict

from lib.core.settings import EXIT_NEGATIVE, EXIT_OK


@dataclass(frozen=True)
class CommandRequest:
    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CommandResponse:
    command: str
    payload: Dict[str, Any]
    # False for a negative verdict or a failed check
    positive: bool = True

    @property
    def exit_code(self):
        return EXIT_OK if self.positive else EXIT_NEGATIVE

    def to_dict(self):
        return {
            "command": self.command,
            "status": "ok" if self.positive else "negative",
            "result": self.payload,
        }
