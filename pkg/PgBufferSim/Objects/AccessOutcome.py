# -*- coding: utf-8 -*-

from enum import Enum
from typing import Optional

from PgBufferSim.Objects.PageRequest import AccessKind


class OutcomeKind(Enum):
    HIT = "hit"
    MISS_FILLED_EMPTY = "miss-filled-empty"
    MISS_EVICTED = "miss-evicted"

    def __str__(self):
        return self.value


class AccessOutcome:
    """ Result of one access: what happened, which slot holds the page now, what was displaced

    """
    __slots__ = ("_kind", "_slot", "_victim", "_victim_was_dirty", "_estimated_fault_kind")

    def __init__(self, kind: OutcomeKind, slot: Optional[int] = None, victim: Optional[int] = None,
                 victim_was_dirty: bool = False, estimated_fault_kind: AccessKind = AccessKind.RANDOM):
        if kind is OutcomeKind.HIT and (victim is not None or victim_was_dirty):
            raise ValueError("A hit displaces no victim")
        self._kind = kind
        self._slot = slot
        self._victim = victim
        self._victim_was_dirty = victim_was_dirty
        self._estimated_fault_kind = estimated_fault_kind

    @classmethod
    def hit(cls, slot: Optional[int] = None, access: AccessKind = AccessKind.RANDOM) -> 'AccessOutcome':
        return cls(OutcomeKind.HIT, slot=slot, estimated_fault_kind=access)

    @classmethod
    def miss(cls, access: AccessKind, victim_was_dirty: bool = False, slot: Optional[int] = None,
             victim: Optional[int] = None) -> 'AccessOutcome':
        kind = OutcomeKind.MISS_FILLED_EMPTY if victim is None and not victim_was_dirty else OutcomeKind.MISS_EVICTED
        return cls(kind, slot=slot, victim=victim, victim_was_dirty=victim_was_dirty, estimated_fault_kind=access)

    @property
    def kind(self) -> OutcomeKind:
        return self._kind

    @property
    def slot(self) -> Optional[int]:
        return self._slot

    @property
    def victim(self) -> Optional[int]:
        return self._victim

    @property
    def victim_was_dirty(self) -> bool:
        return self._victim_was_dirty

    @property
    def estimated_fault_kind(self) -> AccessKind:
        return self._estimated_fault_kind

    @property
    def is_hit(self) -> bool:
        return self._kind is OutcomeKind.HIT

    def __eq__(self, other):
        return isinstance(other, AccessOutcome) and all([
            self._kind is other._kind,
            self._slot == other._slot,
            self._victim == other._victim,
            self._victim_was_dirty == other._victim_was_dirty,
            self._estimated_fault_kind is other._estimated_fault_kind])

    def __hash__(self):
        return hash((self._kind, self._slot, self._victim, self._victim_was_dirty, self._estimated_fault_kind))

    def __repr__(self):
        return "AccessOutcome(kind={}, slot={}, victim={}, victim_was_dirty={}, fault={})".format(
            self._kind, self._slot, self._victim, self._victim_was_dirty, self._estimated_fault_kind)
