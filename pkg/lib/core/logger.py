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


import logging
import os

from logging.handlers import RotatingFileHandler

from lib.core.data import options

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(module)s: %(message)s"

logger = logging.getLogger("quadrilift")
logger.setLevel(logging.DEBUG)
logger.disabled = True


def enable_logging():
    logger.disabled = False
    path = os.path.abspath(options["log_file"])

    # repeated runs in one process share the handler
    for handler in logger.handlers:
        if getattr(handler, "baseFilename", None) == path:
            handler.setLevel(options["log_level"])
            return

    handler = RotatingFileHandler(path, maxBytes=options["log_file_size"], backupCount=1)
    handler.setLevel(options["log_level"])
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
