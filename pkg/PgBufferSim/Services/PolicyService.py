# -*- coding: utf-8 -*-

import functools
import random
from typing import Optional

from PgBufferSim.Exceptions import InvalidParameterException, NoVictimException
from PgBufferSim.Objects import BufferDescriptor, CacheState, EvictionPolicy, FutureIndex, MAX_USAGE, \
    NOT_REQUESTED, PolicyConfig
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.ScanService import NextAccessEstimator
from PgBufferSim.Services.SeedService import SeedService


class PolicyService(ObjectService):
    """ Service holding the victim selection algorithms

    Every selector expects a full pool and returns an occupied, unpinned slot. Sampling draws
    slots with replacement; ties resolve to the lowest slot index.
    """

    def __init__(self, seeds: SeedService = None):
        super().__init__(seeds)

    def get(self, name: str, cfg: Optional[PolicyConfig] = None, future: Optional[FutureIndex] = None
            ) -> EvictionPolicy:
        """ Named victim selector bound to its configuration

        :param name: one of EvictionPolicy.NAMES
        :param cfg: PolicyConfig for the sampling policies
        :param future: FutureIndex of the trace, required by belady
        :return: EvictionPolicy
        """
        cfg = cfg or PolicyConfig()
        if name == EvictionPolicy.CLOCK:
            return EvictionPolicy(name, lambda state, estimator, rng: self.clock_select_victim(state))
        if name == EvictionPolicy.PBM_SAMPLING:
            return EvictionPolicy(name, functools.partial(self._bind, self.pbm_sampling_select_victim, cfg))
        if name == EvictionPolicy.EVOLVED:
            return EvictionPolicy(name, functools.partial(self._bind, self.evolved_select_victim, cfg))
        if name == EvictionPolicy.COMBINED:
            return EvictionPolicy(name, functools.partial(self._bind, self.combined_select_victim, cfg))
        if name == EvictionPolicy.BELADY:
            if future is None:
                raise InvalidParameterException("future", future, "belady needs the future of the trace")
            return EvictionPolicy(
                name, lambda state, estimator, rng: self.belady_select_victim(state, future), offline=True)
        raise InvalidParameterException("policy", name, "valid policies are: " + ", ".join(EvictionPolicy.NAMES))

    @staticmethod
    def _bind(selector, cfg, state, estimator, rng):
        return selector(state, estimator, cfg, rng)

    @staticmethod
    def _require_unpinned(state: CacheState, policy: str):
        if not state.has_unpinned():
            raise NoVictimException(policy)

    @staticmethod
    def _random_buffer(state: CacheState, rng: random.Random) -> BufferDescriptor:
        return state.slots[rng.randrange(state.capacity)]

    @staticmethod
    def _random_unpinned_buffer(state: CacheState, rng: random.Random) -> BufferDescriptor:
        slots = state.slots
        capacity = state.capacity
        while True:
            buf = slots[rng.randrange(capacity)]
            if buf.refcount == 0 and buf.tag is not None:
                return buf

    @staticmethod
    def _evictable(buf: BufferDescriptor) -> bool:
        return buf.refcount == 0 and buf.tag is not None

    def clock_select_victim(self, state: CacheState) -> int:
        """ Clock sweep: decrement usage counts under the hand until an unpinned slot is at zero

        The hand is left on the slot after the victim.
        """
        self._require_unpinned(state, EvictionPolicy.CLOCK)
        slots = state.slots
        capacity = state.capacity
        while True:
            slot_id = state.clock_hand
            state.clock_hand = (slot_id + 1) % capacity
            buf = slots[slot_id]
            if not self._evictable(buf):
                continue
            if buf.usage_count > 0:
                buf.usage_count -= 1
                continue
            return slot_id

    def pbm_sampling_select_victim(self, state: CacheState, estimator: NextAccessEstimator,
                                   cfg: Optional[PolicyConfig] = None, rng: Optional[random.Random] = None) -> int:
        """ Evict the sampled page whose next scan access lies furthest ahead

        A sampled page no scan will request is evicted at once.
        """
        cfg = cfg or PolicyConfig()
        rng = self._rng_or_default(rng, EvictionPolicy.PBM_SAMPLING)
        self._require_unpinned(state, EvictionPolicy.PBM_SAMPLING)

        best = None
        for _ in range(cfg.sample_size_pbm):
            buf = self._random_unpinned_buffer(state, rng)
            next_access = estimator.estimate(buf.tag)
            if next_access is NOT_REQUESTED:
                return buf.id
            candidate = (next_access, -buf.id)
            if best is None or candidate > best:
                best = candidate

        victim = -best[1]
        if self._evictable(state.slots[victim]):
            return victim
        return self._random_unpinned_buffer(state, rng).id

    def evolved_select_victim(self, state: CacheState, estimator: NextAccessEstimator,
                              cfg: Optional[PolicyConfig] = None, rng: Optional[random.Random] = None) -> int:
        """ Fast path for untracked pages, then multi-factor scoring with clean pages preferred

        score = estimate (dirty_not_requested_score for dirty pages no scan needs)
              + clean_bonus when clean + cold_bonus when usage_count is 0
        """
        cfg = cfg or PolicyConfig()
        rng = self._rng_or_default(rng, EvictionPolicy.EVOLVED)
        self._require_unpinned(state, EvictionPolicy.EVOLVED)

        for _ in range(cfg.fast_path_probes):
            buf = self._random_buffer(state, rng)
            if self._evictable(buf) and buf.block_group is None:
                return buf.id

        best_clean = best_dirty = None
        for _ in range(cfg.sample_size_evolved):
            buf = self._random_unpinned_buffer(state, rng)
            next_access = estimator.estimate(buf.tag)
            if next_access is NOT_REQUESTED:
                if not buf.is_dirty:
                    return buf.id
                score = cfg.dirty_not_requested_score
            else:
                score = next_access
            if not buf.is_dirty:
                score += cfg.clean_bonus
            if buf.usage_count == 0:
                score += cfg.cold_bonus

            candidate = (score, -buf.id)
            if buf.is_dirty:
                if best_dirty is None or candidate > best_dirty:
                    best_dirty = candidate
            elif best_clean is None or candidate > best_clean:
                best_clean = candidate

        return -(best_clean or best_dirty)[1]

    def combined_select_victim(self, state: CacheState, estimator: NextAccessEstimator,
                               cfg: Optional[PolicyConfig] = None, rng: Optional[random.Random] = None) -> int:
        """ Scan resistance plus frequency protection

        Three probing fast paths (untracked, cold and clean, clean in a group no scan is heading
        to), then cost-aware scoring: pages a scan will refetch cheaply are divided by 1, others
        by 5; cold pages gain, pages shared by several scans and dirty pages lose.
        """
        cfg = cfg or PolicyConfig()
        rng = self._rng_or_default(rng, EvictionPolicy.COMBINED)
        self._require_unpinned(state, EvictionPolicy.COMBINED)

        for _ in range(cfg.fast_path_probes):
            buf = self._random_buffer(state, rng)
            if self._evictable(buf) and buf.block_group is None:
                return buf.id
        for _ in range(cfg.cold_clean_probes):
            buf = self._random_buffer(state, rng)
            if self._evictable(buf) and buf.usage_count == 0 and not buf.is_dirty:
                return buf.id
        for _ in range(cfg.orphan_probes):
            buf = self._random_buffer(state, rng)
            if self._evictable(buf) and not buf.is_dirty \
                    and (buf.block_group is None or not buf.block_group.has_scans()):
                return buf.id

        best_clean = best_dirty = None
        for _ in range(cfg.combined_sample_size):
            buf = self._random_unpinned_buffer(state, rng)
            next_access = estimator.estimate(buf.tag)
            if next_access is NOT_REQUESTED:
                next_access = cfg.not_requested_horizon
            scan_count = buf.block_group.scan_count if buf.block_group is not None else 0

            score = next_access / (1.0 if scan_count > 0 else 5.0)
            score += (MAX_USAGE - buf.usage_count) * 5.0
            if scan_count > 1:
                score -= (scan_count - 1) * 5.0
            if buf.is_dirty:
                score -= 20.0

            candidate = (score, -buf.id)
            if buf.is_dirty:
                if best_dirty is None or candidate > best_dirty:
                    best_dirty = candidate
            elif best_clean is None or candidate > best_clean:
                best_clean = candidate

        return -(best_clean or best_dirty)[1]

    @staticmethod
    def belady_select_victim(state: CacheState, future: FutureIndex) -> int:
        """ Offline optimum: evict the resident page requested again latest, pins ignored
        """
        return future.furthest_slot(state)
