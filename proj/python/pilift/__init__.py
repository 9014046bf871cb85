"""Character theory of pi-separable groups: partial characters, lifts and towers."""

import json

from . import _core
from ._core import AnomalyError, GroupError, builtin_names

__all__ = ["AnomalyError", "Group", "GroupError", "builtin_names", "section4", "verify"]


class Group:
    """A permutation group together with its cached character data."""

    def __init__(self, ctx):
        self._ctx = ctx

    @classmethod
    def builtin(cls, name):
        return cls(_core.Context.builtin(name))

    @classmethod
    def from_perm_text(cls, text):
        return cls(_core.Context.from_perm_text(text))

    @property
    def order(self):
        return self._ctx.order

    @property
    def degree(self):
        return self._ctx.degree

    @property
    def class_count(self):
        return self._ctx.class_count

    def character_table(self):
        return json.loads(self._ctx.character_table())

    def ipi(self, pi):
        return json.loads(self._ctx.ipi(_pi_text(pi)))

    def lifts(self, pi, member):
        return list(self._ctx.lifts(_pi_text(pi), member))

    def pi_separable(self, pi):
        return self._ctx.pi_separable(_pi_text(pi))


def section4():
    return json.loads(_core.section4())


def verify(groups=None, pi=None, jobs=1, series_cap=64, frobenius_triples=8, seed=1):
    pi = None if pi is None else _pi_text(pi)
    return json.loads(_core.verify(groups, pi, jobs, series_cap, frobenius_triples, seed))


def _pi_text(pi):
    if isinstance(pi, str):
        return pi
    if isinstance(pi, int):
        return str(pi)
    return ",".join(str(p) for p in pi)
