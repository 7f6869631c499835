from PgBufferSim.Services.SeedService import SeedService
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.TraceService import TraceService
from PgBufferSim.Services.ScanService import ScanService, NextAccessEstimator
from PgBufferSim.Services.BufferPoolService import BufferPoolService
from PgBufferSim.Services.PolicyService import PolicyService
from PgBufferSim.Services.CostService import CostService
from PgBufferSim.Services.ExperimentService import ExperimentService
from PgBufferSim.Services.SimulatorService import SimulatorService
