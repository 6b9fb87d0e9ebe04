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

from lib.core.settings import NEW_LINE
from lib.reports.base import FileBaseReport
from lib.utils.common import format_value


class PlainTextReport(FileBaseReport):
    def get_header(self, response):
        status = "ok" if response.positive else "negative"
        return f"# quadrilift {response.command}: {status}" + NEW_LINE * 2

    def generate(self, response):
        output = self.get_header(response)
        rows = self.rows(response)
        width = max((len(key) for key, _ in rows), default=0)

        for key, value in rows:
            output += f"{key.ljust(width)}  {format_value(value)}" + NEW_LINE

        return output
