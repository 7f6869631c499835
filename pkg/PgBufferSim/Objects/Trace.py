# -*- coding: utf-8 -*-

from typing import Dict, Iterable, Mapping, Set, Tuple

from PgBufferSim.Exceptions.Exceptions import TraceValidationException
from PgBufferSim.Objects.PageRequest import PageRequest, AccessKind
from PgBufferSim.Objects.PageTag import PageTag


class Trace:
    """ Ordered list of page requests plus the length of every relation they touch

    Immutable after construction, safe to share read-only across threads.
    """

    def __init__(self, requests: Iterable[PageRequest], relations: Mapping[int, int]):
        self._requests = tuple(requests)
        self._relations = dict(sorted(relations.items()))

    @property
    def requests(self) -> Tuple[PageRequest, ...]:
        return self._requests

    @property
    def relations(self) -> Dict[int, int]:
        return dict(self._relations)

    def relation_length(self, relation: int) -> int:
        return self._relations[relation]

    @property
    def footprint(self) -> int:
        """ Number of pages over all declared relations
        """
        return sum(self._relations.values())

    def distinct_tags(self) -> Set[PageTag]:
        return {request.tag for request in self._requests}

    def validate(self) -> 'Trace':
        """ Check seq contiguity, block bounds and scan-flag consistency

        :return: self, to allow chaining
        """
        for position, request in enumerate(self._requests):
            if request.seq != position:
                raise TraceValidationException(
                    f"Request at position {position} has seq {request.seq}, expected {position}")
            relation = request.tag.relation
            if relation not in self._relations:
                raise TraceValidationException(
                    f"Request seq {request.seq} touches undeclared relation {relation}")
            if not 0 <= request.tag.block < self._relations[relation]:
                raise TraceValidationException(
                    f"Request seq {request.seq}: block {request.tag.block} outside relation {relation} "
                    f"of length {self._relations[relation]}")
            if request.access is AccessKind.RANDOM and request.scan is not None:
                raise TraceValidationException(
                    f"Request seq {request.seq} is a random access but carries scan id {request.scan}")
        return self

    def __len__(self):
        return len(self._requests)

    def __iter__(self):
        return iter(self._requests)

    def __eq__(self, other):
        return isinstance(other, Trace) \
               and self._relations == other._relations \
               and self._requests == other._requests

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return f"Trace(requests={len(self._requests)}, relations={self._relations})"
