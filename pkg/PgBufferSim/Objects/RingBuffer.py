# -*- coding: utf-8 -*-

from collections import deque
from typing import Deque

from PgBufferSim.Utils import require_count


class RingBuffer:
    """ Small private slot set of one large sequential scan, reused round-robin

    """

    def __init__(self, scan_id: int, size: int):
        self._scan_id = scan_id
        self._size = require_count("ring_buffer_pages", size)
        self._slots = deque()  # type: Deque[int]

    @property
    def scan_id(self) -> int:
        return self._scan_id

    @property
    def size(self) -> int:
        return self._size

    @property
    def slots(self) -> Deque[int]:
        return self._slots

    @property
    def is_full(self) -> bool:
        return len(self._slots) >= self._size

    def add(self, slot_id: int):
        self._slots.append(slot_id)

    def __repr__(self):
        return f"RingBuffer(scan_id={self._scan_id}, size={self._size}, slots={list(self._slots)})"
