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
import os
import os.path

from lib.core.exceptions import InputError


class FileUtils:
    @staticmethod
    def build_path(*path_components):
        if path_components:
            return os.path.join(*path_components)

        return ""

    @staticmethod
    def get_abs_path(file_name):
        return os.path.abspath(file_name)

    @staticmethod
    def exists(file_name):
        return os.access(file_name, os.F_OK)

    @staticmethod
    def is_file(file_name):
        return os.path.isfile(file_name)

    @staticmethod
    def can_read(file_name):
        try:
            with open(file_name):
                pass
        except OSError:
            return False

        return True

    @classmethod
    def can_write(cls, path):
        while not cls.exists(path):
            path = cls.parent(path)

        return os.access(path, os.W_OK)

    @staticmethod
    def read(file_name):
        with open(file_name, "r") as fd:
            return fd.read()

    @classmethod
    def get_lines(cls, file_name):
        return [
            line for line in cls.read(file_name).splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]

    @staticmethod
    def parent(path, depth=1):
        for _ in range(depth):
            path = os.path.dirname(path)

        return path

    @staticmethod
    def create_dir(directory):
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)

    @staticmethod
    def write(file_name, content):
        with open(file_name, "w") as fd:
            fd.write(content)
            fd.flush()


def read_json(path):
    if not FileUtils.is_file(path):
        raise InputError(f"{path} does not exist or is not a file")

    if not FileUtils.can_read(path):
        raise InputError(f"{path} cannot be read")

    try:
        return json.loads(FileUtils.read(path))
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}")
