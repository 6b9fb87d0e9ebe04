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

from lib.core.decorators import locked
from lib.core.settings import IS_WINDOWS
from lib.utils.common import flatten
from lib.utils.file import FileUtils


class FileBaseReport:
    def __init__(self, output_file=None):
        if IS_WINDOWS and output_file:
            from os.path import normpath

            output_file = normpath(output_file)

        self.output_file = output_file

    def generate(self, response):
        raise NotImplementedError

    @staticmethod
    def rows(response):
        return flatten(response.payload)

    @locked
    def save(self, response):
        FileUtils.create_dir(FileUtils.parent(FileUtils.get_abs_path(self.output_file)))
        FileUtils.write(self.output_file, self.generate(response))
