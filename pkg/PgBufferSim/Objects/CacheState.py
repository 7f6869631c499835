# -*- coding: utf-8 -*-

from collections import deque
from typing import Dict, Iterator, List, Optional

from PgBufferSim.Objects.BufferDescriptor import BufferDescriptor
from PgBufferSim.Objects.PageTag import PageTag
from PgBufferSim.Utils import require_count


class CacheState:
    """ Fixed-capacity pool of buffer descriptors with its page table and clock hand

    Owned and mutated by exactly one simulation loop.
    """

    def __init__(self, capacity: int):
        self._capacity = require_count("capacity", capacity)
        self._slots = [BufferDescriptor(slot_id) for slot_id in range(capacity)]
        self._page_table = dict()  # type: Dict[PageTag, int]
        self._free = deque(range(capacity))
        self.clock_hand = 0

    @property
    def capacity(self) -> int:
        return self._capacity

    @property
    def slots(self) -> List[BufferDescriptor]:
        return self._slots

    @property
    def page_table(self) -> Dict[PageTag, int]:
        return self._page_table

    @property
    def occupied(self) -> int:
        return len(self._page_table)

    @property
    def is_full(self) -> bool:
        return not self._free

    def slot(self, slot_id: int) -> BufferDescriptor:
        return self._slots[slot_id]

    def occupied_slots(self) -> Iterator[BufferDescriptor]:
        return (buf for buf in self._slots if buf.tag is not None)

    def has_unpinned(self) -> bool:
        """ True when at least one occupied slot could be evicted
        """
        return any(buf.refcount == 0 and buf.tag is not None for buf in self._slots)

    def take_free_slot(self) -> Optional[int]:
        """ Lowest-numbered empty slot, or None when the pool is full
        """
        if self._free:
            return self._free.popleft()
        return None

    def install(self, slot_id: int, tag: PageTag):
        self._page_table[tag] = slot_id

    def uninstall(self, tag: PageTag):
        del self._page_table[tag]

    def __len__(self):
        return self._capacity

    def __repr__(self):
        return f"CacheState(capacity={self._capacity}, occupied={self.occupied}, clock_hand={self.clock_hand})"
