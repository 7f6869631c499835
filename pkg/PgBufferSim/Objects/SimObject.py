import json
from abc import abstractmethod
from typing import Dict


class SimObject:
    """ Parent Class for all serializable PgBufferSim Objects e.g. SimConfig, RunMetrics, RunReport.

    """

    @property
    @abstractmethod
    def body_as_dict(self) -> Dict:
        pass

    @property
    def body(self) -> str:
        return json.dumps(self.body_as_dict, sort_keys=True)

    def __hash__(self):
        return hash(self.body)

    def __str__(self):
        return self.body

    def __repr__(self):
        return "{}:{}".format(self.__class__.__name__, self.body)

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.body == other.body

    def __ne__(self, other):
        return not self.__eq__(other)
