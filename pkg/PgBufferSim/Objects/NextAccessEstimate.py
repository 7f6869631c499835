# -*- coding: utf-8 -*-

from typing import Union


class _NotRequested:
    """ Marker for "no active scan will reach this block"

    Compares greater than any finite estimate so it never wins a min and always wins a max.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_NotRequested, cls).__new__(cls)
        return cls._instance

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __reduce__(self):
        return _NotRequested, ()

    def __repr__(self):
        return "NOT_REQUESTED"


NOT_REQUESTED = _NotRequested()

# time-to-next-access in request ticks, or NOT_REQUESTED
NextAccessEstimate = Union[float, _NotRequested]


def is_requested(estimate: NextAccessEstimate) -> bool:
    return estimate is not NOT_REQUESTED
