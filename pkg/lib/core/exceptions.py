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


class QuadriliftError(Exception):
    pass


class InputError(QuadriliftError):
    pass


class DomainError(QuadriliftError):
    pass


class UndefinedValuation(DomainError):
    pass


class IsotropicVector(DomainError):
    pass


class NotOrthogonal(DomainError):
    pass


class DegenerateGram(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class Divergence(DomainError):
    pass


class UnsupportedError(QuadriliftError):
    pass


class NoAdmissibleData(QuadriliftError):
    pass


class ModelTooLarge(QuadriliftError):
    pass


class GroupTooLarge(QuadriliftError):
    pass


class MissingDependency(QuadriliftError):
    pass
