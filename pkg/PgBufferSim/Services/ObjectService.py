# -*- coding: utf-8 -*-

import random
from typing import Optional

from PgBufferSim.Services.SeedService import SeedService


class ObjectService:
    """ Parent class for all Object Services

    """

    def __init__(self, seeds: Optional[SeedService] = None):
        """ Constructor, Create an instance of ObjectService

        :param seeds: shared SeedService, a fresh one with master seed 0 if None
        """
        self._seeds = seeds or SeedService()

    def _rng_or_default(self, rng: Optional[random.Random], *components) -> random.Random:
        """ Caller's rng, or a stream derived from the master seed
        """
        if rng is not None:
            return rng
        return self._seeds.rng(self.__class__.__name__, *components)

    @property
    def seeds(self) -> SeedService:
        return self._seeds
