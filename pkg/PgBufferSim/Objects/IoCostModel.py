# -*- coding: utf-8 -*-

import collections
from typing import Dict, Union

from PgBufferSim.Exceptions.Exceptions import InvalidParameterException
from PgBufferSim.Objects.SimObject import SimObject
from PgBufferSim.Utils import require_non_negative, require_count

Number = Union[int, float]


class IoCostModel(SimObject):
    """ Microsecond cost of every I/O event, calibrated on NVMe latencies

    """

    FIELDS = ("seq_read_us", "rand_read_us", "dirty_writeback_us", "hit_us", "page_size_bytes")

    def __init__(self, seq_read_us: Number = 20, rand_read_us: Number = 100, dirty_writeback_us: Number = 200,
                 hit_us: Number = 0, page_size_bytes: int = 8192):
        self._seq_read_us = require_non_negative("seq_read_us", seq_read_us)
        self._rand_read_us = require_non_negative("rand_read_us", rand_read_us)
        self._dirty_writeback_us = require_non_negative("dirty_writeback_us", dirty_writeback_us)
        self._hit_us = require_non_negative("hit_us", hit_us)
        self._page_size_bytes = require_count("page_size_bytes", page_size_bytes)
        if rand_read_us < seq_read_us:
            raise InvalidParameterException(
                "rand_read_us", rand_read_us, f"random reads must not be cheaper than sequential ({seq_read_us})")
        if dirty_writeback_us < rand_read_us:
            raise InvalidParameterException(
                "dirty_writeback_us", dirty_writeback_us,
                f"dirty write-back must not be cheaper than random reads ({rand_read_us})")

    @classmethod
    def from_dict(cls, cost_model_as_dict: Dict) -> 'IoCostModel':
        return cls(**{key: value for key, value in cost_model_as_dict.items() if key in cls.FIELDS})

    @property
    def seq_read_us(self) -> Number:
        return self._seq_read_us

    @property
    def rand_read_us(self) -> Number:
        return self._rand_read_us

    @property
    def dirty_writeback_us(self) -> Number:
        return self._dirty_writeback_us

    @property
    def hit_us(self) -> Number:
        return self._hit_us

    @property
    def page_size_bytes(self) -> int:
        return self._page_size_bytes

    @property
    def body_as_dict(self) -> Dict:
        body_as_dict = collections.OrderedDict()
        for field in self.FIELDS:
            body_as_dict[field] = getattr(self, "_" + field)
        return body_as_dict
