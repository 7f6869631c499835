# -*- coding: utf-8 -*-


class PageTag:
    """ Identifies one page: block number within a relation

    """
    __slots__ = ("_relation", "_block", "_key")

    def __init__(self, relation: int, block: int):
        self._relation = relation
        self._block = block
        self._key = (relation, block)

    @property
    def relation(self) -> int:
        return self._relation

    @property
    def block(self) -> int:
        return self._block

    def __eq__(self, other):
        return isinstance(other, PageTag) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other: 'PageTag'):
        return self._key < other._key

    def __repr__(self):
        return f"PageTag({self._relation}, {self._block})"
