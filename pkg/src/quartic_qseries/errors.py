"""Exception hierarchy shared by every evaluation layer."""

from __future__ import annotations


class QSeriesError(Exception):
    """Base class for all package errors."""


class MissingBinding(QSeriesError):
    """A symbol or meta-variable has no value in the current binding."""


class NonRationalPower(QSeriesError):
    """Exact mode asked for a power that is not a rational number."""


class Pole(QSeriesError):
    """A denominator vanished.

    Raised instead of returning a value so that sweep drivers can resample
    the offending binding.
    """

    def __init__(self, where: str):
        super().__init__(where)
        self.where = where


class PoleAtExtension(Pole):
    """Negative-length shifted factorial hit its pole."""


class DivergentBase(QSeriesError):
    """Infinite product requested with |base| >= 1."""


class NoDecay(QSeriesError):
    """An infinite series failed to show decaying terms."""

    def __init__(self, msg: str, terms: int):
        super().__init__(msg)
        self.terms = terms


class ZeroArgument(QSeriesError):
    """theta(x; p) requested at x = 0."""


class UnknownSeries(QSeriesError, KeyError):
    pass


class UnknownIdentity(QSeriesError, KeyError):
    pass
