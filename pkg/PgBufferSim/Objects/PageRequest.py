# -*- coding: utf-8 -*-

from enum import Enum
from typing import Optional

from PgBufferSim.Objects.PageTag import PageTag


class Operation(Enum):
    READ = "R"
    WRITE = "W"

    def __str__(self):
        return self.value

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for member in cls:
                if value.strip().lower() in (member.name.lower(), member.value.lower()):
                    return member
        raise ValueError(f"Invalid operation: '{value}'")


class AccessKind(Enum):
    SEQUENTIAL = "SEQ"
    RANDOM = "RAND"

    def __str__(self):
        return self.value

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for member in cls:
                if value.strip().lower() in (member.name.lower(), member.value.lower()):
                    return member
        raise ValueError(f"Invalid access kind: '{value}'")


class PageRequest:
    """ One trace event: which stream touches which page, how, and under which scan

    """
    __slots__ = ("_seq", "_tag", "_op", "_access", "_scan", "_stream")

    def __init__(self, seq: int, tag: PageTag, op: Operation = Operation.READ,
                 access: AccessKind = AccessKind.RANDOM, scan: Optional[int] = None, stream: int = 0):
        self._seq = seq
        self._tag = tag
        self._op = Operation(op)
        self._access = AccessKind(access)
        self._scan = scan
        self._stream = stream

    @property
    def seq(self) -> int:
        return self._seq

    @property
    def tag(self) -> PageTag:
        return self._tag

    @property
    def op(self) -> Operation:
        return self._op

    @property
    def access(self) -> AccessKind:
        return self._access

    @property
    def scan(self) -> Optional[int]:
        return self._scan

    @property
    def stream(self) -> int:
        return self._stream

    @property
    def is_write(self) -> bool:
        return self._op is Operation.WRITE

    @property
    def is_sequential(self) -> bool:
        return self._access is AccessKind.SEQUENTIAL

    def renumbered(self, seq: int, stream: Optional[int] = None) -> 'PageRequest':
        return PageRequest(
            seq=seq,
            tag=self._tag,
            op=self._op,
            access=self._access,
            scan=self._scan,
            stream=self._stream if stream is None else stream)

    def _key(self):
        return self._seq, self._tag, self._op, self._access, self._scan, self._stream

    def __eq__(self, other):
        return isinstance(other, PageRequest) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "PageRequest(seq={}, tag={!r}, op={}, access={}, scan={}, stream={})".format(
            self._seq, self._tag, self._op, self._access, self._scan, self._stream)
