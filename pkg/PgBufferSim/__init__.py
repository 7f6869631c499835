"""
A trace-driven buffer pool simulator for PostgreSQL-style eviction policies.

PgBufferSim replays page-request traces against a fixed-size pool of buffer descriptors, prices every
miss and dirty eviction with an NVMe-calibrated I/O cost model and ranks eviction policies by a latency
score.

Usage:
# >>> with SimulatorService(seed=7) as sim:
# >>>     trace = sim.traces.generate_scan_workload(num_relations=2, relation_blocks=1000, num_streams=4,
# >>>                                               scans_per_stream=3, seed=1)
# >>>     config = SimConfig(capacity_pages=500, policy='pbm-sampling')
# >>>     report = sim.experiments.run_simulation(trace, config, trace_name='scan')
# >>>     print(report.hit_rate, report.latency_score)

"""

# __init__ can hoist attributes from submodules into higher namespaces for convenience

from PgBufferSim.Objects.AccessOutcome import AccessOutcome, OutcomeKind
from PgBufferSim.Objects.BlockGroup import BlockGroup
from PgBufferSim.Objects.BufferDescriptor import BufferDescriptor, MAX_USAGE
from PgBufferSim.Objects.CacheState import CacheState
from PgBufferSim.Objects.ComparisonReport import ComparisonReport
from PgBufferSim.Objects.EvictionPolicy import EvictionPolicy
from PgBufferSim.Objects.FutureIndex import FutureIndex
from PgBufferSim.Objects.IoCostModel import IoCostModel
from PgBufferSim.Objects.NextAccessEstimate import NOT_REQUESTED, is_requested
from PgBufferSim.Objects.PageRequest import PageRequest, Operation, AccessKind
from PgBufferSim.Objects.PageTag import PageTag
from PgBufferSim.Objects.PolicyConfig import PolicyConfig
from PgBufferSim.Objects.RingBuffer import RingBuffer
from PgBufferSim.Objects.RunMetrics import RunMetrics
from PgBufferSim.Objects.RunReport import RunReport
from PgBufferSim.Objects.ScanContext import ScanContext
from PgBufferSim.Objects.ScanRegistry import ScanRegistry
from PgBufferSim.Objects.SimConfig import SimConfig
from PgBufferSim.Objects.Trace import Trace
from PgBufferSim.Services.BufferPoolService import BufferPoolService
from PgBufferSim.Services.CostService import CostService
from PgBufferSim.Services.ExperimentService import ExperimentService
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.PolicyService import PolicyService
from PgBufferSim.Services.ScanService import ScanService, NextAccessEstimator
from PgBufferSim.Services.SeedService import SeedService
from PgBufferSim.Services.SimulatorService import SimulatorService
from PgBufferSim.Services.TraceService import TraceService
from PgBufferSim.Utils import Utils
