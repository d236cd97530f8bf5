#!/usr/bin/env python
# -*- coding: utf-8 -*-

__author__ = 'primexp developers'
__email__ = 'primexp@users.noreply.github.com'
__version__ = '0.1.0'

from .matrix import BoolMatrix, multiply, parse_matrix, power, serialize_matrix
from .digraph import Digraph, cycle_profile, from_matrix, girth, is_primitive, to_matrix
from .exponent import c_walk_distances, exponent
from .families import FamilySpec, parse_family_spec
