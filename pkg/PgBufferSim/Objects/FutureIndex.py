# -*- coding: utf-8 -*-

import heapq
from typing import Dict, Iterable, List, Tuple

from PgBufferSim.Objects.CacheState import CacheState
from PgBufferSim.Objects.PageTag import PageTag


class FutureIndex:
    """ Offline next-use index over a request sequence, the foresight of the Belady oracle

    next_use[i] is the position of the next request for the same page after position i, or
    `never` (len(tags)) when the page is not requested again. Resident slots are kept in a
    lazily invalidated max-heap keyed by their next use, ties resolved to the lowest slot.
    """

    def __init__(self, tags: Iterable[PageTag]):
        tags = list(tags)
        self._never = len(tags)
        self._next_use = [self._never] * len(tags)  # type: List[int]
        self._first_use = dict()  # type: Dict[PageTag, int]
        for position in range(len(tags) - 1, -1, -1):
            tag = tags[position]
            self._next_use[position] = self._first_use.get(tag, self._never)
            self._first_use[tag] = position
        self._slot_next = dict()  # type: Dict[int, int]
        self._slot_version = dict()  # type: Dict[int, int]
        self._heap = []  # type: List[Tuple[int, int, int]]

    @classmethod
    def from_trace(cls, trace) -> 'FutureIndex':
        return cls(request.tag for request in trace.requests)

    @property
    def never(self) -> int:
        return self._never

    def next_use_after(self, position: int) -> int:
        return self._next_use[position]

    def observe(self, slot_id: int, position: int):
        """ Record that slot_id now holds the page requested at position
        """
        self._set(slot_id, self._next_use[position])

    def _set(self, slot_id: int, next_use: int):
        version = self._slot_version.get(slot_id, 0) + 1
        self._slot_version[slot_id] = version
        self._slot_next[slot_id] = next_use
        heapq.heappush(self._heap, (-next_use, slot_id, version))

    def prime(self, state: CacheState):
        """ Resident slots never observed get their first occurrence in the sequence
        """
        for buf in state.occupied_slots():
            if buf.id not in self._slot_next:
                self._set(buf.id, self._first_use.get(buf.tag, self._never))

    def furthest_slot(self, state: CacheState) -> int:
        """ Resident slot whose page is requested again latest; never-again beats everything
        """
        if len(self._slot_next) < state.occupied:
            self.prime(state)
        heap = self._heap
        while heap:
            negative_next, slot_id, version = heap[0]
            if self._slot_version.get(slot_id) == version and state.slot(slot_id).tag is not None:
                return slot_id
            heapq.heappop(heap)
        raise ValueError("Future index tracks no resident slot")

    def __repr__(self):
        return f"FutureIndex(requests={self._never}, tracked_slots={len(self._slot_next)})"
