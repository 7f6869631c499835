# -*- coding: utf-8 -*-

from typing import Set


class BlockGroup:
    """ Fixed-size range of consecutive blocks of one relation and the scans still heading into it

    """
    __slots__ = ("_relation", "_group_index", "interested_scans")

    def __init__(self, relation: int, group_index: int):
        self._relation = relation
        self._group_index = group_index
        self.interested_scans = set()  # type: Set[int]

    @property
    def relation(self) -> int:
        return self._relation

    @property
    def group_index(self) -> int:
        return self._group_index

    @property
    def scan_count(self) -> int:
        return len(self.interested_scans)

    def has_scans(self) -> bool:
        return bool(self.interested_scans)

    def first_block(self, group_size: int) -> int:
        return self._group_index * group_size

    def last_block(self, group_size: int) -> int:
        return (self._group_index + 1) * group_size - 1

    def __repr__(self):
        return "BlockGroup(relation={}, group_index={}, interested_scans={})".format(
            self._relation, self._group_index, sorted(self.interested_scans))
