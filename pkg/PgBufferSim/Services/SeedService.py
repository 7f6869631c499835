# -*- coding: utf-8 -*-

import random
from typing import Any

import numpy as np

from PgBufferSim.Utils import stable_seed


class SeedService:
    """ Deterministic randomness shared by all services

        One master seed; independent streams are derived from it by hashing the master seed
        with stream components (e.g. trace name and policy name), so adding a run never
        perturbs the streams of the others.
    """

    def __init__(self, seed: int = 0):
        """ Create an instance of SeedService

        :param seed: master seed
        """
        self._seed = seed

    @property
    def seed(self) -> int:
        return self._seed

    def derive(self, *components: Any) -> int:
        """ Seed of the stream named by components
        """
        return stable_seed(self._seed, *components)

    def rng(self, *components: Any) -> random.Random:
        """ Python RNG for per-decision sampling (victim selection)
        """
        return random.Random(self.derive(*components))

    def numpy_rng(self, *components: Any) -> np.random.Generator:
        """ numpy Generator for bulk draws (trace generation)
        """
        return np.random.default_rng(self.derive(*components))

    def __repr__(self):
        return f"SeedService(seed={self._seed})"
