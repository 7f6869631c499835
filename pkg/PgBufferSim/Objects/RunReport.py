# -*- coding: utf-8 -*-

import collections
import json
from typing import Dict

from PgBufferSim.Objects.RunMetrics import RunMetrics
from PgBufferSim.Objects.SimConfig import SimConfig
from PgBufferSim.Objects.SimObject import SimObject


class RunReport(SimObject):
    """ Outcome of one simulation run: config echo, metrics, derived scores and timing

    """

    def __init__(self, trace_name: str, seed: int, config: SimConfig, metrics: RunMetrics, hit_rate: float,
                 avg_io_wait: float, latency_score: float, wall_time_ms: float = 0.0):
        self._trace_name = trace_name
        self._seed = seed
        self._config = config
        self._metrics = metrics
        self._hit_rate = hit_rate
        self._avg_io_wait = avg_io_wait
        self._latency_score = latency_score
        self._wall_time_ms = wall_time_ms

    @classmethod
    def from_json(cls, report_as_json: str) -> 'RunReport':
        return cls.from_dict(json.loads(report_as_json))

    @classmethod
    def from_dict(cls, report_as_dict: Dict) -> 'RunReport':
        derived = report_as_dict["derived"]
        return cls(trace_name=report_as_dict["trace"],
                   seed=report_as_dict["seed"],
                   config=SimConfig.from_dict(report_as_dict["config"]),
                   metrics=RunMetrics.from_dict(report_as_dict["metrics"]),
                   hit_rate=derived["hit_rate"],
                   avg_io_wait=derived["avg_io_wait_us"],
                   latency_score=derived["latency_score"],
                   wall_time_ms=report_as_dict.get("wall_time_ms", 0.0))

    @property
    def trace_name(self) -> str:
        return self._trace_name

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def config(self) -> SimConfig:
        return self._config

    @property
    def policy(self) -> str:
        return self._config.policy

    @property
    def metrics(self) -> RunMetrics:
        return self._metrics

    @property
    def hit_rate(self) -> float:
        return self._hit_rate

    @property
    def avg_io_wait(self) -> float:
        return self._avg_io_wait

    @property
    def latency_score(self) -> float:
        return self._latency_score

    @property
    def wall_time_ms(self) -> float:
        return self._wall_time_ms

    def to_dict(self, include_wall_time: bool = True) -> Dict:
        body_as_dict = collections.OrderedDict()
        body_as_dict["trace"] = self._trace_name
        body_as_dict["seed"] = self._seed
        body_as_dict["config"] = self._config.body_as_dict
        body_as_dict["metrics"] = self._metrics.body_as_dict
        body_as_dict["derived"] = {
            "hit_rate": self._hit_rate,
            "avg_io_wait_us": self._avg_io_wait,
            "latency_score": self._latency_score}
        if include_wall_time:
            body_as_dict["wall_time_ms"] = self._wall_time_ms
        return body_as_dict

    def to_json(self, include_wall_time: bool = True, indent: int = None) -> str:
        return json.dumps(self.to_dict(include_wall_time), sort_keys=True, indent=indent)

    @property
    def body_as_dict(self) -> Dict:
        return self.to_dict(include_wall_time=True)
