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


import unittest

from tests.controller.test_controller import TestController  # noqa: F401
from tests.core.test_admissibility import TestAdmissibility  # noqa: F401
from tests.core.test_installation import TestInstallation  # noqa: F401
from tests.core.test_localfactors import TestLocalFactors  # noqa: F401
from tests.core.test_localfields import TestLocalFields  # noqa: F401
from tests.core.test_orthogroup import TestOrthogonalGroup  # noqa: F401
from tests.core.test_quadforms import TestQuadForms  # noqa: F401
from tests.core.test_weil_finite import TestFiniteWeil  # noqa: F401
from tests.parse.test_cmdline import TestCommandLine  # noqa: F401
from tests.parse.test_config import TestConfigParser  # noqa: F401
from tests.parse.test_values import TestValueParsers  # noqa: F401
from tests.reports.test_reports import TestReports  # noqa: F401
from tests.utils.test_common import TestCommonUtils  # noqa: F401
from tests.utils.test_random import TestRandom  # noqa: F401
from tests.view.test_colors import TestColors  # noqa: F401


if __name__ == "__main__":
    unittest.main()
