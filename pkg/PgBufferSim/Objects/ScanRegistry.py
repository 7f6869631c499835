# -*- coding: utf-8 -*-

from typing import Dict, Optional, Tuple

from PgBufferSim.Objects.BlockGroup import BlockGroup
from PgBufferSim.Objects.PageTag import PageTag
from PgBufferSim.Objects.ScanContext import ScanContext
from PgBufferSim.Utils import require_count

DEFAULT_GROUP_SIZE = 128


class ScanRegistry:
    """ Active-scan state and block-group bookkeeping of one simulation

    Mutated by ScanService only; read-only while a policy selects a victim.
    """

    def __init__(self, group_size: int = DEFAULT_GROUP_SIZE, per_group_estimates: bool = False):
        self._group_size = require_count("group_size", group_size)
        self._per_group_estimates = per_group_estimates
        self._scans = dict()  # type: Dict[int, ScanContext]
        self._groups = dict()  # type: Dict[Tuple[int, int], BlockGroup]

    @property
    def group_size(self) -> int:
        return self._group_size

    @property
    def per_group_estimates(self) -> bool:
        return self._per_group_estimates

    @property
    def scans(self) -> Dict[int, ScanContext]:
        return self._scans

    @property
    def groups(self) -> Dict[Tuple[int, int], BlockGroup]:
        return self._groups

    def get_scan(self, scan_id: int) -> Optional[ScanContext]:
        return self._scans.get(scan_id)

    def active_scans(self):
        return [scan for scan in self._scans.values() if scan.active]

    def group_of(self, tag: PageTag) -> Optional[BlockGroup]:
        return self._groups.get((tag.relation, tag.block // self._group_size))

    def ensure_group(self, relation: int, group_index: int) -> BlockGroup:
        key = (relation, group_index)
        group = self._groups.get(key)
        if group is None:
            group = BlockGroup(relation, group_index)
            self._groups[key] = group
        return group

    def __repr__(self):
        return "ScanRegistry(group_size={}, scans={}, active={}, groups={})".format(
            self._group_size, len(self._scans), len(self.active_scans()), len(self._groups))
