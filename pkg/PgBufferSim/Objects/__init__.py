from PgBufferSim.Objects.SimObject import SimObject
from PgBufferSim.Objects.PageTag import PageTag
from PgBufferSim.Objects.PageRequest import PageRequest, Operation, AccessKind
from PgBufferSim.Objects.Trace import Trace
from PgBufferSim.Objects.BufferDescriptor import BufferDescriptor, MAX_USAGE
from PgBufferSim.Objects.CacheState import CacheState
from PgBufferSim.Objects.AccessOutcome import AccessOutcome, OutcomeKind
from PgBufferSim.Objects.NextAccessEstimate import NOT_REQUESTED, NextAccessEstimate, is_requested
from PgBufferSim.Objects.ScanContext import ScanContext
from PgBufferSim.Objects.BlockGroup import BlockGroup
from PgBufferSim.Objects.ScanRegistry import ScanRegistry, DEFAULT_GROUP_SIZE
from PgBufferSim.Objects.RingBuffer import RingBuffer
from PgBufferSim.Objects.FutureIndex import FutureIndex
from PgBufferSim.Objects.EvictionPolicy import EvictionPolicy
from PgBufferSim.Objects.PolicyConfig import PolicyConfig
from PgBufferSim.Objects.IoCostModel import IoCostModel
from PgBufferSim.Objects.RunMetrics import RunMetrics
from PgBufferSim.Objects.SimConfig import SimConfig
from PgBufferSim.Objects.RunReport import RunReport
from PgBufferSim.Objects.ComparisonReport import ComparisonReport
