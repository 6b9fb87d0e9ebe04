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


from unittest import TestCase

from lib.parse.cmdline import parse_arguments


class TestCommandLine(TestCase):
    def test_subcommand(self):
        options = parse_arguments(["hilbert", "-a", "-1", "-b", "-1", "--place", "p:2", "--oracle"])
        self.assertEqual(options.command, "hilbert")
        self.assertEqual((options.a, options.b, options.place), ("-1", "-1", "p:2"))
        self.assertTrue(options.oracle)
        self.assertIsNone(options.color)

    def test_general_options(self):
        options = parse_arguments(["selftest", "--fast", "--seed", "7", "--format", "md", "--no-color"])
        self.assertEqual(options.seed, 7)
        self.assertEqual(options.output_format, "md")
        self.assertFalse(options.color)
        self.assertTrue(options.fast)

    def test_defaults(self):
        options = parse_arguments(["unramified-factor", "--p", "5"])
        self.assertEqual((options.m, options.m_prime, options.truncation), (3, 1, 30))

    def test_decimal_exponent(self):
        options = parse_arguments(["euler", "--exclude", "2,3", "--bound", "1000000", "--s", "2.0"])
        self.assertEqual((options.command, options.exclude, options.bound, options.s), ("euler", "2,3", 1000000, "2.0"))

    def test_usage_errors(self):
        for argv in ([], ["bogus"], ["hilbert", "extra"], ["weil-check", "--p", "x"]):
            with self.assertRaises(SystemExit) as context:
                parse_arguments(argv)

            self.assertEqual(context.exception.code, 2, f"{argv} should be a usage error")
