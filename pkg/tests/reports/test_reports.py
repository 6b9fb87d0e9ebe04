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


import json

from unittest import TestCase

from lib.core.settings import NEW_LINE, TMP_PATH
from lib.core.structures import CommandResponse
from lib.reports.html_report import HTMLReport
from lib.reports.json_report import JSONReport
from lib.reports.markdown_report import MarkdownReport
from lib.reports.plain_text_report import PlainTextReport

test_response = CommandResponse(
    "hilbert",
    {"symbol": -1, "place": "p:2", "checks": {"oracle": True, "closed": False}, "places": ["real", "p:2"]},
)


class TestReports(TestCase):
    def test_json_report(self):
        output = JSONReport().generate(test_response)
        self.assertEqual(
            json.loads(output),
            {"command": "hilbert", "status": "ok", "result": test_response.payload},
            "JSON report is unintended",
        )
        self.assertEqual(output, JSONReport().generate(test_response), "JSON report is not deterministic")
        self.assertLess(output.index('"command"'), output.index('"result"'))

    def test_markdown_report(self):
        expected_table = "Key | Value" + NEW_LINE
        expected_table += "----|------" + NEW_LINE
        expected_table += "checks.closed | no" + NEW_LINE
        expected_table += "checks.oracle | yes" + NEW_LINE
        expected_table += "place | p:2" + NEW_LINE
        expected_table += "places | real, p:2" + NEW_LINE
        expected_table += "symbol | -1" + NEW_LINE
        self.assertTrue(MarkdownReport().generate(test_response).endswith(expected_table))

    def test_plain_text_report(self):
        output = PlainTextReport().generate(test_response)
        self.assertTrue(output.startswith("# quadrilift hilbert: ok"))
        self.assertTrue(output.endswith("symbol         -1" + NEW_LINE))

    def test_html_report(self):
        output = HTMLReport().generate(test_response)
        self.assertIn('<td class="text-success">yes</td>', output)
        self.assertIn("<td>checks.closed</td>", output)

    def test_save(self):
        report = JSONReport(TMP_PATH)
        report.save(test_response)

        with open(TMP_PATH) as fd:
            self.assertEqual(fd.read(), report.generate(test_response))

    def test_exit_code(self):
        self.assertEqual(test_response.exit_code, 0)
        self.assertEqual(CommandResponse("verdict", {}, False).exit_code, 3)
