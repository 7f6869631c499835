# -*- coding: utf-8 -*-

from typing import Optional

from PgBufferSim.Objects.PageTag import PageTag

MAX_USAGE = 5


class BufferDescriptor:
    """ One pool slot and its metadata

    Plain attributes rather than properties: descriptors sit on the replay hot path and policies
    read them the way the buffer manager reads its descriptor array.
    """
    __slots__ = ("id", "tag", "refcount", "usage_count", "is_dirty", "block_group", "last_access")

    def __init__(self, slot_id: int):
        self.id = slot_id
        self.tag = None  # type: Optional[PageTag]
        self.refcount = 0
        self.usage_count = 0
        self.is_dirty = False
        self.block_group = None
        self.last_access = -1

    @property
    def is_empty(self) -> bool:
        return self.tag is None

    def load(self, tag: PageTag, dirty: bool, block_group, now: int):
        self.tag = tag
        self.usage_count = 1
        self.is_dirty = dirty
        self.block_group = block_group
        self.last_access = now

    def touch(self, dirty: bool, block_group, now: int):
        if self.usage_count < MAX_USAGE:
            self.usage_count += 1
        if dirty:
            self.is_dirty = True
        self.block_group = block_group
        self.last_access = now

    def clear(self):
        self.tag = None
        self.refcount = 0
        self.usage_count = 0
        self.is_dirty = False
        self.block_group = None
        self.last_access = -1

    def __repr__(self):
        return "BufferDescriptor(id={}, tag={!r}, refcount={}, usage_count={}, is_dirty={}, tracked={})".format(
            self.id, self.tag, self.refcount, self.usage_count, self.is_dirty, self.block_group is not None)
