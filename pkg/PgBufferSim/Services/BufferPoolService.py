# -*- coding: utf-8 -*-

import heapq
import logging
import random
from typing import Optional, Tuple

from PgBufferSim.Exceptions import InvalidStateException, NoVictimException, PinUnderflowException, \
    PolicyContractViolation
from PgBufferSim.Objects import AccessOutcome, CacheState, EvictionPolicy, MAX_USAGE, PageRequest, PageTag, \
    RingBuffer, ScanRegistry
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.ScanService import NextAccessEstimator
from PgBufferSim.Services.SeedService import SeedService

logger = logging.getLogger(__name__)


class BufferPoolService(ObjectService):
    """ Service for the buffer pool state machine: lookup, access, pins and background cleaning

    """

    def __init__(self, seeds: SeedService = None):
        super().__init__(seeds)

    @staticmethod
    def create_pool(capacity: int) -> CacheState:
        return CacheState(capacity)

    @staticmethod
    def lookup(state: CacheState, tag: PageTag) -> Optional[int]:
        return state.page_table.get(tag)

    def access(self, state: CacheState, request: PageRequest, policy: EvictionPolicy,
               estimator: Optional[NextAccessEstimator] = None, rng: Optional[random.Random] = None,
               ring: Optional[RingBuffer] = None) -> AccessOutcome:
        """ Serve one request

        Hits bump the usage count and dirty flag. Misses take the lowest empty slot if there is
        one, otherwise the policy's victim. With a ring the miss is served from the scan's private
        slots once the ring is full.
        :param state: CacheState
        :param request: PageRequest
        :param policy: EvictionPolicy consulted on misses into a full pool
        :param estimator: NextAccessEstimator passed to the policy, also links pages to block groups
        :param rng: per-run random stream of the policy
        :param ring: RingBuffer of the request's scan, if it runs through one
        :return: AccessOutcome
        """
        tag = request.tag
        block_group = estimator.block_group(tag) if estimator is not None else None
        slot_id = state.page_table.get(tag)
        if slot_id is not None:
            state.slots[slot_id].touch(request.is_write, block_group, request.seq)
            return AccessOutcome.hit(slot_id, request.access)

        if ring is not None and ring.is_full:
            slot_id = self._reuse_ring_slot(ring, state)
            if slot_id is None:
                slot_id, victim = self._acquire_slot(state, request, policy, estimator, rng)
                if slot_id not in ring.slots:
                    ring.add(slot_id)
            else:
                victim = slot_id
        else:
            slot_id, victim = self._acquire_slot(state, request, policy, estimator, rng)
            if ring is not None and slot_id not in ring.slots:
                ring.add(slot_id)

        buf = state.slots[slot_id]
        victim_was_dirty = False
        if victim is not None:
            victim_was_dirty = buf.is_dirty
            state.uninstall(buf.tag)
            buf.clear()
        buf.load(tag, request.is_write, block_group, request.seq)
        state.install(slot_id, tag)
        return AccessOutcome.miss(request.access, victim_was_dirty=victim_was_dirty, slot=slot_id, victim=victim)

    def _acquire_slot(self, state: CacheState, request: PageRequest, policy: EvictionPolicy,
                      estimator: Optional[NextAccessEstimator], rng: Optional[random.Random]
                      ) -> Tuple[int, Optional[int]]:
        free_slot = state.take_free_slot()
        if free_slot is not None:
            return free_slot, None
        rng = self._rng_or_default(rng, policy.name)
        try:
            victim = policy.select_victim(state, estimator, rng)
        except NoVictimException as e:
            raise e.with_seq(request.seq)
        self._check_victim(state, victim, policy, request.seq)
        return victim, victim

    @staticmethod
    def link_block_groups(state: CacheState, registry: ScanRegistry, relation: int, first_block: int,
                          last_block: int) -> int:
        """ Link resident, unlinked pages of relation to their block groups

        Covers every block of the groups spanning first_block..last_block.
        :return: number of descriptors linked
        """
        group_size = registry.group_size
        low = first_block // group_size * group_size
        high = (last_block // group_size + 1) * group_size
        if len(state.page_table) < high - low:
            slot_ids = [slot_id for tag, slot_id in state.page_table.items()
                        if tag.relation == relation and low <= tag.block < high]
        else:
            slot_ids = [slot_id for slot_id in (state.page_table.get(PageTag(relation, block))
                                                for block in range(low, high)) if slot_id is not None]
        linked = 0
        for slot_id in slot_ids:
            buf = state.slots[slot_id]
            if buf.block_group is None:
                buf.block_group = registry.group_of(buf.tag)
                linked += buf.block_group is not None
        return linked

    @staticmethod
    def _reuse_ring_slot(ring: RingBuffer, state: CacheState) -> Optional[int]:
        """ Oldest ring slot, if still reusable: unpinned and not promoted by other readers

        An unusable slot leaves the ring and None is returned.
        """
        slot_id = ring.slots.popleft()
        buf = state.slots[slot_id]
        if buf.tag is not None and buf.refcount == 0 and buf.usage_count <= 1:
            ring.slots.append(slot_id)
            return slot_id
        return None

    @staticmethod
    def _check_victim(state: CacheState, victim, policy: EvictionPolicy, seq: int):
        if isinstance(victim, bool) or not isinstance(victim, int) or not 0 <= victim < state.capacity:
            raise PolicyContractViolation(policy.name, victim, "slot out of range", seq)
        buf = state.slots[victim]
        if buf.tag is None:
            raise PolicyContractViolation(policy.name, victim, "slot is empty", seq)
        if buf.refcount > 0:
            raise PolicyContractViolation(policy.name, victim, f"slot is pinned (refcount {buf.refcount})", seq)

    @staticmethod
    def pin(state: CacheState, slot_id: int):
        buf = state.slots[slot_id]
        if buf.tag is None:
            raise InvalidStateException(f"Cannot pin empty slot {slot_id}")
        buf.refcount += 1

    @staticmethod
    def unpin(state: CacheState, slot_id: int):
        buf = state.slots[slot_id]
        if buf.refcount <= 0:
            raise PinUnderflowException(slot_id)
        buf.refcount -= 1

    @staticmethod
    def background_clean(state: CacheState, pages: int) -> int:
        """ Write back up to pages dirty unpinned slots, least recently accessed first

        :return: number of slots cleaned
        """
        if pages <= 0:
            return 0
        dirty = (buf for buf in state.slots if buf.is_dirty and buf.refcount == 0)
        cleaned = heapq.nsmallest(pages, dirty, key=lambda buf: (buf.last_access, buf.id))
        for buf in cleaned:
            buf.is_dirty = False
        return len(cleaned)

    @staticmethod
    def audit(state: CacheState) -> bool:
        """ Walk all descriptors and the page table, raise InvalidStateException on the first broken invariant
        """
        occupied = 0
        for buf in state.slots:
            if buf.tag is None:
                if buf.refcount or buf.usage_count or buf.is_dirty or buf.block_group is not None:
                    raise InvalidStateException(f"Empty slot {buf.id} carries metadata: {buf!r}")
                continue
            occupied += 1
            if state.page_table.get(buf.tag) != buf.id:
                raise InvalidStateException(f"Page table does not map {buf.tag!r} to slot {buf.id}")
            if not 0 <= buf.usage_count <= MAX_USAGE:
                raise InvalidStateException(f"Slot {buf.id} has usage_count {buf.usage_count}")
            if buf.refcount < 0:
                raise InvalidStateException(f"Slot {buf.id} has refcount {buf.refcount}")
        if occupied != len(state.page_table):
            raise InvalidStateException(
                f"Page table holds {len(state.page_table)} entries for {occupied} occupied slots")
        return True
