# -*- coding: utf-8 -*-

import collections
from typing import Dict

from PgBufferSim.Objects.SimObject import SimObject


class RunMetrics(SimObject):
    """ Event counters and I/O totals of one run

    Plain counters, bumped in place by CostService.accumulate.
    """

    FIELDS = ("requests", "hits", "seq_misses", "rand_misses", "dirty_evictions", "total_io_wait_us",
              "io_volume_bytes", "background_writes")

    def __init__(self, requests: int = 0, hits: int = 0, seq_misses: int = 0, rand_misses: int = 0,
                 dirty_evictions: int = 0, total_io_wait_us=0, io_volume_bytes: int = 0,
                 background_writes: int = 0):
        self.requests = requests
        self.hits = hits
        self.seq_misses = seq_misses
        self.rand_misses = rand_misses
        self.dirty_evictions = dirty_evictions
        self.total_io_wait_us = total_io_wait_us
        self.io_volume_bytes = io_volume_bytes
        self.background_writes = background_writes

    @classmethod
    def from_dict(cls, metrics_as_dict: Dict) -> 'RunMetrics':
        return cls(**{key: value for key, value in metrics_as_dict.items() if key in cls.FIELDS})

    @property
    def misses(self) -> int:
        return self.seq_misses + self.rand_misses

    def copy(self) -> 'RunMetrics':
        return RunMetrics.from_dict(self.body_as_dict)

    def __add__(self, other: 'RunMetrics') -> 'RunMetrics':
        return RunMetrics(**{field: getattr(self, field) + getattr(other, field) for field in self.FIELDS})

    @property
    def body_as_dict(self) -> Dict:
        body_as_dict = collections.OrderedDict()
        for field in self.FIELDS:
            body_as_dict[field] = getattr(self, field)
        return body_as_dict
