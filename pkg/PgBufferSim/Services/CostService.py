# -*- coding: utf-8 -*-

from typing import Iterable, Optional

from PgBufferSim.Objects import AccessKind, AccessOutcome, IoCostModel, RunMetrics
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.SeedService import SeedService

LATENCY_SCORE_SCALE = 1000.0


class CostService(ObjectService):
    """ Service to price access outcomes in microseconds and to fold them into run metrics

    """

    def __init__(self, seeds: SeedService = None, model: Optional[IoCostModel] = None):
        super().__init__(seeds)
        self._model = model or IoCostModel()

    @property
    def model(self) -> IoCostModel:
        return self._model

    def cost_of(self, outcome: AccessOutcome, model: Optional[IoCostModel] = None):
        """ hit_us for hits, else the read cost of the fault kind plus dirty_writeback_us for a dirty victim
        """
        model = model or self._model
        if outcome.is_hit:
            return model.hit_us
        if outcome.estimated_fault_kind is AccessKind.SEQUENTIAL:
            cost = model.seq_read_us
        else:
            cost = model.rand_read_us
        if outcome.victim_was_dirty:
            cost += model.dirty_writeback_us
        return cost

    def accumulate(self, metrics: RunMetrics, outcome: AccessOutcome, model: Optional[IoCostModel] = None
                   ) -> RunMetrics:
        """ Count outcome into metrics in place

        :return: the same metrics object
        """
        model = model or self._model
        metrics.requests += 1
        if outcome.is_hit:
            metrics.hits += 1
        else:
            if outcome.estimated_fault_kind is AccessKind.SEQUENTIAL:
                metrics.seq_misses += 1
            else:
                metrics.rand_misses += 1
            metrics.io_volume_bytes += model.page_size_bytes
            if outcome.victim_was_dirty:
                metrics.dirty_evictions += 1
                metrics.io_volume_bytes += model.page_size_bytes
        metrics.total_io_wait_us += self.cost_of(outcome, model)
        return metrics

    def fold(self, outcomes: Iterable[AccessOutcome], model: Optional[IoCostModel] = None) -> RunMetrics:
        metrics = RunMetrics()
        for outcome in outcomes:
            self.accumulate(metrics, outcome, model)
        return metrics

    @staticmethod
    def hit_rate(metrics: RunMetrics) -> float:
        if metrics.requests == 0:
            return 0.0
        return metrics.hits / metrics.requests

    @staticmethod
    def avg_io_wait(metrics: RunMetrics) -> float:
        if metrics.requests == 0:
            return 0.0
        return metrics.total_io_wait_us / metrics.requests

    @classmethod
    def latency_score(cls, metrics: RunMetrics) -> float:
        """ 1000 / (1 + average wait in microseconds), strictly decreasing in the wait
        """
        return LATENCY_SCORE_SCALE / (1.0 + cls.avg_io_wait(metrics))

    @staticmethod
    def merge(first: RunMetrics, second: RunMetrics) -> RunMetrics:
        return first + second
