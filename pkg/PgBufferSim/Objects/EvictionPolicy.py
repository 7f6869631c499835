# -*- coding: utf-8 -*-

from typing import Callable


class EvictionPolicy:
    """ A named victim selector bound to its configuration

    select_victim(state, estimator, rng) -> slot index
    """

    CLOCK = "clock"
    PBM_SAMPLING = "pbm-sampling"
    EVOLVED = "evolved"
    COMBINED = "combined"
    BELADY = "belady"

    NAMES = (CLOCK, PBM_SAMPLING, EVOLVED, COMBINED, BELADY)

    def __init__(self, name: str, selector: Callable, offline: bool = False):
        self._name = name
        self._selector = selector
        self._offline = offline

    @property
    def name(self) -> str:
        return self._name

    @property
    def offline(self) -> bool:
        """ True for oracles that need the future of the trace and ignore pins
        """
        return self._offline

    def select_victim(self, state, estimator, rng) -> int:
        return self._selector(state, estimator, rng)

    def __repr__(self):
        return f"EvictionPolicy({self._name})"
