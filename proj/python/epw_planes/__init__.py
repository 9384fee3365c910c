"""Python access to the epw library.

Families, Lagrangians and reports are plain dicts in the same JSON layout the
``epwtool`` command writes; rationals are strings such as ``"-3/4"``.
"""

import json

from . import _core
from ._core import MathError

__all__ = [
    "MathError",
    "fano_family",
    "fano_four_planes",
    "random_family",
    "family_report",
    "enumerate_planes_modp",
    "enumerate_lines_modp",
    "completeness_certificate",
    "random_lagrangian",
    "random_curve_lagrangian",
    "build_a_plus",
    "epw_equation",
    "curve_equation",
    "roncisvalle_check",
    "bound_audit",
    "bound_maximize",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def fano_family():
    return json.loads(_core.fano_family())


def fano_four_planes():
    return json.loads(_core.fano_four_planes())


def random_family(seed, k, mode):
    """mode 1..5: common point, witness plane, 4-space, quadric ruling, point sharing."""
    return json.loads(_core.random_family(seed, k, mode))


def family_report(family):
    return json.loads(_core.family_report(_text(family)))


def enumerate_planes_modp(family, p, threads=1):
    """Planes over F_p meeting every member, as RREF bases with entries in 0..p-1."""
    return _core.enumerate_planes_modp(_text(family), p, threads)


def enumerate_lines_modp(family, p, threads=1):
    return _core.enumerate_lines_modp(_text(family), p, threads)


def completeness_certificate(family, primes, seed=1, threads=1):
    return json.loads(_core.completeness_certificate(_text(family), list(primes), seed, threads))


def random_lagrangian(seed):
    return json.loads(_core.random_lagrangian(seed))


def random_curve_lagrangian(seed):
    """A Lagrangian with two incident members of its plane set listed under "planes"."""
    return json.loads(_core.random_curve_lagrangian(seed))


def build_a_plus():
    return json.loads(_core.build_a_plus())


def epw_equation(lagrangian, threads=1):
    return json.loads(_core.epw_equation(_text(lagrangian), threads))


def curve_equation(lagrangian, member):
    return json.loads(_core.curve_equation(_text(lagrangian), member))


def roncisvalle_check(seed, p):
    return json.loads(_core.roncisvalle_check(seed, p))


def bound_audit(l1, l2, l3, l4, s):
    return json.loads(_core.bound_audit(l1, l2, l3, l4, s))


def bound_maximize(s=None, l34=None):
    return json.loads(_core.bound_maximize(s, l34))
