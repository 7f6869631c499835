# -*- coding: utf-8 -*-

import collections
import json
from typing import Dict, Iterable, List

from PgBufferSim.Objects.RunReport import RunReport
from PgBufferSim.Objects.SimObject import SimObject
from PgBufferSim.Utils import build_pandas_dataframe_from_reports, require_pandas


class ComparisonReport(SimObject):
    """ Runs of several policies over a shared trace set, ranked by mean latency score

    ranking entries: {'policy', 'mean_latency_score', 'mean_hit_rate', 'runs'}, best first
    delta entries: {'policy_a', 'policy_b', 'hit_rate_delta', 'latency_score_delta'}, a minus b,
    for every pair with a ranked above b
    """

    def __init__(self, runs: Iterable[RunReport], ranking: List[Dict], deltas: List[Dict]):
        self._runs = list(runs)
        self._ranking = [dict(entry) for entry in ranking]
        self._deltas = [dict(entry) for entry in deltas]

    @classmethod
    def from_json(cls, report_as_json: str) -> 'ComparisonReport':
        return cls.from_dict(json.loads(report_as_json))

    @classmethod
    def from_dict(cls, report_as_dict: Dict) -> 'ComparisonReport':
        return cls(runs=[RunReport.from_dict(run) for run in report_as_dict["runs"]],
                   ranking=report_as_dict["ranking"],
                   deltas=report_as_dict["deltas"])

    @property
    def runs(self) -> List[RunReport]:
        return self._runs

    @property
    def ranking(self) -> List[Dict]:
        return self._ranking

    @property
    def deltas(self) -> List[Dict]:
        return self._deltas

    @property
    def ranked_policies(self) -> List[str]:
        return [entry["policy"] for entry in self._ranking]

    def runs_of(self, policy: str) -> List[RunReport]:
        return [run for run in self._runs if run.policy == policy]

    def to_dict(self, include_wall_time: bool = True) -> Dict:
        body_as_dict = collections.OrderedDict()
        body_as_dict["runs"] = [run.to_dict(include_wall_time) for run in self._runs]
        body_as_dict["ranking"] = self._ranking
        body_as_dict["deltas"] = self._deltas
        return body_as_dict

    def to_json(self, include_wall_time: bool = True, indent: int = None) -> str:
        return json.dumps(self.to_dict(include_wall_time), sort_keys=True, indent=indent)

    @require_pandas
    def to_dataframe(self):
        return build_pandas_dataframe_from_reports(self._runs)

    @property
    def body_as_dict(self) -> Dict:
        return self.to_dict(include_wall_time=True)
