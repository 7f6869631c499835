from typing import Optional

from PgBufferSim.Objects import IoCostModel
from PgBufferSim.Services import BufferPoolService, CostService, ExperimentService, PolicyService, ScanService, \
    SeedService, TraceService


class SimulatorService:
    """ All features of PgBufferSim are exposed through this service

    Services share one SeedService, so every random stream derives from the same master seed.
    """

    def __init__(self, seed: int = 0, cost_model: Optional[IoCostModel] = None):
        self._seeds = SeedService(seed)

        # instantiate all Services
        self.traces = TraceService(self._seeds)
        self.pool = BufferPoolService(self._seeds)
        self.scans = ScanService(self._seeds)
        self.policies = PolicyService(self._seeds)
        self.costs = CostService(self._seeds, cost_model)
        self.experiments = ExperimentService(self._seeds, self.pool, self.scans, self.policies, self.costs)

    @property
    def seeds(self) -> SeedService:
        return self._seeds

    @property
    def seed(self) -> int:
        return self._seeds.seed

    def __enter__(self):
        return self

    def __exit__(self, exception_type, exception_value, traceback):
        pass
