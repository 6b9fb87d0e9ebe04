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

from jinja2 import Environment, FileSystemLoader, select_autoescape

from lib.core.settings import VERSION
from lib.reports.base import FileBaseReport
from lib.utils.common import format_value


class HTMLReport(FileBaseReport):
    def generate(self, response):
        file_loader = FileSystemLoader(
            os.path.dirname(os.path.realpath(__file__)) + "/templates/"
        )
        env = Environment(loader=file_loader, autoescape=select_autoescape(["html"]))
        template = env.get_template("html_report_template.html")
        metadata = {
            "command": response.command,
            "status": "ok" if response.positive else "negative",
            "version": VERSION,
        }
        results = []

        for key, value in self.rows(response):
            color_class = ""

            if value is True:
                color_class = "text-success"
            elif value is False:
                color_class = "text-danger"

            results.append({"key": key, "value": format_value(value), "colorClass": color_class})

        return template.render(metadata=metadata, results=results)
