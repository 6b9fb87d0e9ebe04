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

options = {
    "command": None,
    "config": None,
    "seed": None,
    "output_format": "json",
    "output_file": None,
    "color": True,
    "quiet": False,
    "log_file": None,
    "log_file_size": 0,
    "log_level": "DEBUG",
    "oracle_depth_slack": 5,
    "weil_max_states": 7 ** 4,
    "weil_group_cap": 10 ** 6,
    "weil_tolerance": 1e-9,
    "weil_samples": 20,
    "euler_bound": 10 ** 6,
    "eta_terms": 10 ** 4,
    "residue_offset": 1e-3,
    "residue_tolerance": 5e-3,
    "arguments": {},
}
