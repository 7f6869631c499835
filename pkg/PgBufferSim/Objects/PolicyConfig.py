# -*- coding: utf-8 -*-

import collections
from typing import Dict, Optional, Union

from PgBufferSim.Objects.SimObject import SimObject
from PgBufferSim.Utils import require_count, require_non_negative


class PolicyConfig(SimObject):
    """ Sample sizes, probe counts and scoring bonuses of the sampling policies

    Bonuses are expressed in request ticks, the unit of the next-access estimate.
    """

    FIELDS = ("sample_size_pbm", "sample_size_evolved", "fast_path_probes", "clean_bonus", "cold_bonus",
              "dirty_score_for_not_requested", "combined_sample_size", "cold_clean_probes", "orphan_probes",
              "not_requested_horizon")

    def __init__(self, sample_size_pbm: int = 20, sample_size_evolved: int = 30, fast_path_probes: int = 3,
                 clean_bonus: Union[int, float] = 64, cold_bonus: Union[int, float] = 32,
                 dirty_score_for_not_requested: Optional[float] = None, combined_sample_size: int = 16,
                 cold_clean_probes: int = 5, orphan_probes: int = 4, not_requested_horizon: int = 1_000_000):
        """

        :param sample_size_pbm: candidates examined by PBM-Sampling
        :param sample_size_evolved: candidates examined by the evolved policy
        :param fast_path_probes: untracked-slot probes before the evolved policy samples
        :param clean_bonus: score added to clean candidates
        :param cold_bonus: score added to candidates with usage_count 0
        :param dirty_score_for_not_requested: score of dirty, unrequested candidates. None: +inf
        :param combined_sample_size: candidates examined by the combined policy
        :param cold_clean_probes: combined policy, cold and clean probes
        :param orphan_probes: combined policy, probes for clean pages whose block group lost its scans
        :param not_requested_horizon: combined policy, ticks assumed for unrequested pages
        """
        self._sample_size_pbm = require_count("sample_size_pbm", sample_size_pbm)
        self._sample_size_evolved = require_count("sample_size_evolved", sample_size_evolved)
        self._fast_path_probes = require_count("fast_path_probes", fast_path_probes)
        self._clean_bonus = require_non_negative("clean_bonus", clean_bonus)
        self._cold_bonus = require_non_negative("cold_bonus", cold_bonus)
        if dirty_score_for_not_requested is not None:
            require_non_negative("dirty_score_for_not_requested", dirty_score_for_not_requested)
        self._dirty_score_for_not_requested = dirty_score_for_not_requested
        self._combined_sample_size = require_count("combined_sample_size", combined_sample_size)
        self._cold_clean_probes = require_count("cold_clean_probes", cold_clean_probes)
        self._orphan_probes = require_count("orphan_probes", orphan_probes)
        self._not_requested_horizon = require_count("not_requested_horizon", not_requested_horizon)

    @classmethod
    def from_dict(cls, policy_config_as_dict: Dict) -> 'PolicyConfig':
        return cls(**{key: value for key, value in policy_config_as_dict.items() if key in cls.FIELDS})

    @property
    def sample_size_pbm(self) -> int:
        return self._sample_size_pbm

    @property
    def sample_size_evolved(self) -> int:
        return self._sample_size_evolved

    @property
    def fast_path_probes(self) -> int:
        return self._fast_path_probes

    @property
    def clean_bonus(self) -> Union[int, float]:
        return self._clean_bonus

    @property
    def cold_bonus(self) -> Union[int, float]:
        return self._cold_bonus

    @property
    def dirty_score_for_not_requested(self) -> Optional[float]:
        return self._dirty_score_for_not_requested

    @property
    def dirty_not_requested_score(self) -> float:
        """ Effective score; larger than any finite estimate unless configured
        """
        if self._dirty_score_for_not_requested is None:
            return float("inf")
        return self._dirty_score_for_not_requested

    @property
    def combined_sample_size(self) -> int:
        return self._combined_sample_size

    @property
    def cold_clean_probes(self) -> int:
        return self._cold_clean_probes

    @property
    def orphan_probes(self) -> int:
        return self._orphan_probes

    @property
    def not_requested_horizon(self) -> int:
        return self._not_requested_horizon

    @property
    def body_as_dict(self) -> Dict:
        body_as_dict = collections.OrderedDict()
        for field in self.FIELDS:
            body_as_dict[field] = getattr(self, "_" + field)
        return body_as_dict
