# -*- coding: utf-8 -*-

from typing import Optional


class ScanContext:
    """ Progress of one sequential scan: where it is and how fast it moves

    """

    def __init__(self, scan_id: int, relation: int, start_block: int, length: int, now: Optional[int] = None):
        self._scan_id = scan_id
        self._relation = relation
        self._start_block = start_block
        self._length = length
        self.position = start_block
        self.speed = 1.0
        self.active = True
        self.last_tick = now
        self.observations = 0

    @property
    def scan_id(self) -> int:
        return self._scan_id

    @property
    def relation(self) -> int:
        return self._relation

    @property
    def start_block(self) -> int:
        return self._start_block

    @property
    def length(self) -> int:
        return self._length

    @property
    def last_block(self) -> int:
        return self._start_block + self._length - 1

    def covers_ahead(self, block: int) -> bool:
        """ True when the scan has yet to reach block
        """
        return self.active and self.position < block <= self.last_block

    def __repr__(self):
        return "ScanContext(scan_id={}, relation={}, span=[{}, {}], position={}, speed={:.4f}, active={})".format(
            self._scan_id, self._relation, self._start_block, self.last_block, self.position, self.speed,
            self.active)
