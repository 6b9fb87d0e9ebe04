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

import configparser
import json

from sympy import isprime

from lib.core.exceptions import InputError
from lib.parse.values import parse_integer_list, parse_real


class ConfigParser(configparser.ConfigParser):
    def _safe(self, getter, section, option, default, allowed):
        try:
            value = getter(section, option)
        except (configparser.NoSectionError, configparser.NoOptionError):
            return default
        except ValueError:
            raise InputError(f"Invalid value for '{option}' in [{section}]")

        if allowed and value not in allowed:
            return default

        return value

    def safe_get(self, section, option, default=None, allowed=None):
        return self._safe(super().get, section, option, default, allowed)

    def safe_getfloat(self, section, option, default=0, allowed=None):
        return self._safe(super().getfloat, section, option, default, allowed)

    def safe_getboolean(self, section, option, default=False, allowed=None):
        return self._safe(super().getboolean, section, option, default, allowed)

    def safe_getint(self, section, option, default=0, allowed=None):
        return self._safe(super().getint, section, option, default, allowed)

    def safe_getlist(self, section, option, default=[], allowed=None):
        try:
            try:
                value = json.loads(super().get(section, option))
            except json.decoder.JSONDecodeError:
                value = [super().get(section, option)]

            if allowed and set(value) - set(allowed):
                return default

            return value
        except (configparser.NoSectionError, configparser.NoOptionError):
            return default

    def safe_getreal(self, section, option, default=None):
        value = self.safe_get(section, option)

        return default if value is None else parse_real(value)

    def safe_getprimes(self, section, option, default=()):
        value = self.safe_get(section, option)

        if not value:
            return default

        primes = parse_integer_list(value)

        if not all(isprime(p) for p in primes):
            raise InputError(f"'{option}' in [{section}] must list primes")

        return tuple(sorted(set(primes)))
