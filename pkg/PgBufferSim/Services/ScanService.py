# -*- coding: utf-8 -*-

import logging
from typing import Optional

from PgBufferSim.Exceptions import InvalidStateException
from PgBufferSim.Objects import BlockGroup, NOT_REQUESTED, NextAccessEstimate, PageTag, ScanContext, ScanRegistry
from PgBufferSim.Objects.ScanRegistry import DEFAULT_GROUP_SIZE
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.SeedService import SeedService
from PgBufferSim.Utils import require_count

logger = logging.getLogger(__name__)

# weight of the newest blocks-per-tick observation in the speed average
SPEED_SMOOTHING = 0.25


class NextAccessEstimator:
    """ Read-only view on a scan registry at a given tick, handed to eviction policies

    calls counts estimate() invocations, block_group() is free.
    """

    def __init__(self, registry: ScanRegistry, now: int = 0):
        self._registry = registry
        self.now = now
        self.calls = 0

    @property
    def registry(self) -> ScanRegistry:
        return self._registry

    def estimate(self, tag: PageTag) -> NextAccessEstimate:
        self.calls += 1
        return ScanService.estimate(self._registry, tag)

    def block_group(self, tag: PageTag) -> Optional[BlockGroup]:
        return self._registry.group_of(tag)


class ScanService(ObjectService):
    """ Service to track sequential scan progress and predict when scans will reach a page

    """

    def __init__(self, seeds: SeedService = None):
        super().__init__(seeds)

    @staticmethod
    def create_registry(group_size: int = DEFAULT_GROUP_SIZE, per_group_estimates: bool = False) -> ScanRegistry:
        return ScanRegistry(group_size=group_size, per_group_estimates=per_group_estimates)

    def register_scan(self, registry: ScanRegistry, scan_id: int, relation: int, start_block: int, length: int,
                      now: Optional[int] = None):
        """ Start tracking a scan positioned on start_block

        :param registry: ScanRegistry
        :param scan_id: unused scan id
        :param relation: relation scanned
        :param start_block: first block of the scan, already consumed
        :param length: blocks the scan will read, start_block included
        :param now: tick of registration; the first speed observation is measured from it
        """
        require_count("length", length)
        require_count("start_block", start_block, minimum=0)
        if scan_id in registry.scans:
            raise InvalidStateException(f"Scan {scan_id} is already registered")

        scan = ScanContext(scan_id, relation, start_block, length, now)
        registry.scans[scan_id] = scan
        group_size = registry.group_size
        for group_index in range(start_block // group_size, scan.last_block // group_size + 1):
            registry.ensure_group(relation, group_index).interested_scans.add(scan_id)

        if scan.position == scan.last_block:
            self._finish(registry, scan)
        logger.debug("Registered %r", scan)

    def advance_scan(self, registry: ScanRegistry, scan_id: int, block: int, now: int):
        """ Move a scan forward to block at tick now

        Speed is an exponentially weighted average of blocks per tick. Groups the scan has left
        behind forget it; reaching the last block completes the scan.
        """
        scan = registry.get_scan(scan_id)
        if scan is None:
            raise InvalidStateException(f"Scan {scan_id} is not registered")
        if not scan.active:
            raise InvalidStateException(f"Scan {scan_id} has already completed")
        if block < scan.position:
            raise InvalidStateException(
                f"Scan {scan_id} cannot move backwards from block {scan.position} to {block}")
        if block > scan.last_block:
            raise InvalidStateException(
                f"Scan {scan_id} cannot move past its last block {scan.last_block} to {block}")

        if scan.last_tick is not None and now > scan.last_tick:
            observed = (block - scan.position) / (now - scan.last_tick)
            if observed > 0:
                scan.speed = SPEED_SMOOTHING * observed + (1 - SPEED_SMOOTHING) * scan.speed
            scan.observations += 1
        scan.last_tick = now

        previous = scan.position
        scan.position = block
        group_size = registry.group_size
        for group_index in range(previous // group_size, (block + 1) // group_size):
            group = registry.groups.get((scan.relation, group_index))
            if group is not None:
                group.interested_scans.discard(scan_id)

        if block == scan.last_block:
            self._finish(registry, scan)

    @staticmethod
    def _finish(registry: ScanRegistry, scan: ScanContext):
        scan.active = False
        group_size = registry.group_size
        for group_index in range(scan.start_block // group_size, scan.last_block // group_size + 1):
            group = registry.groups.get((scan.relation, group_index))
            if group is not None:
                group.interested_scans.discard(scan.scan_id)
        logger.debug("Scan %d completed at block %d", scan.scan_id, scan.position)

    @staticmethod
    def estimate(registry: ScanRegistry, tag: PageTag) -> NextAccessEstimate:
        """ Ticks until the nearest active scan reaches tag.block, or NOT_REQUESTED

        Per block: (block - position) / speed. With per-group estimates the distance is measured
        to the first block of the page's group instead.
        """
        group = registry.group_of(tag)
        if group is None or not group.interested_scans:
            return NOT_REQUESTED

        best = NOT_REQUESTED
        block = tag.block
        group_first_block = group.first_block(registry.group_size)
        for scan_id in group.interested_scans:
            scan = registry.scans[scan_id]
            if not scan.covers_ahead(block):
                continue
            if registry.per_group_estimates:
                ticks = max(0, group_first_block - scan.position) / scan.speed
            else:
                ticks = (block - scan.position) / scan.speed
            if ticks < best:
                best = ticks
        return best

    def estimate_next_access(self, registry: ScanRegistry, tag: PageTag, now: Optional[int] = None
                             ) -> NextAccessEstimate:
        """ Pure query, the registry is not touched

        :param registry: ScanRegistry
        :param tag: page
        :param now: current tick; estimates are relative to the last observed scan positions
        :return: ticks or NOT_REQUESTED
        """
        return self.estimate(registry, tag)

    @staticmethod
    def estimator(registry: ScanRegistry, now: int = 0) -> NextAccessEstimator:
        return NextAccessEstimator(registry, now)
