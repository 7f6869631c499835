# -*- coding: utf-8 -*-

import collections
from typing import Dict, Mapping, Optional, Union

from PgBufferSim.Exceptions.Exceptions import ConfigException, InvalidParameterException
from PgBufferSim.Objects.EvictionPolicy import EvictionPolicy
from PgBufferSim.Objects.IoCostModel import IoCostModel
from PgBufferSim.Objects.PolicyConfig import PolicyConfig
from PgBufferSim.Objects.ScanRegistry import DEFAULT_GROUP_SIZE
from PgBufferSim.Objects.SimObject import SimObject
from PgBufferSim.Utils import require_count, require_non_negative, parse_number, translate_to_boolean


class SimConfig(SimObject):
    """ Everything that determines one simulation run besides the trace

    """

    FIELDS = ("capacity_pages", "policy", "seed", "pin_hold_window", "ring_buffer_enabled", "ring_buffer_pages",
              "background_writer_enabled", "background_writer_pages_per_tick", "group_size",
              "per_group_estimates", "max_workers")
    BOOLEAN_FIELDS = ("ring_buffer_enabled", "background_writer_enabled", "per_group_estimates")
    STRING_FIELDS = ("policy",)

    def __init__(self, capacity_pages: int, policy: str = EvictionPolicy.CLOCK,
                 policy_config: Optional[PolicyConfig] = None, cost_model: Optional[IoCostModel] = None,
                 seed: int = 0, pin_hold_window: int = 1, ring_buffer_enabled: bool = False,
                 ring_buffer_pages: int = 32, background_writer_enabled: bool = False,
                 background_writer_pages_per_tick: Union[int, float] = 0.1, group_size: int = DEFAULT_GROUP_SIZE,
                 per_group_estimates: bool = False, max_workers: int = 1):
        """

        :param capacity_pages: slot count of the pool
        :param policy: one of EvictionPolicy.NAMES
        :param policy_config: PolicyConfig, defaults if None
        :param cost_model: IoCostModel, defaults if None
        :param seed: master seed
        :param pin_hold_window: pages each stream keeps pinned after access. 0: pin-free
        :param ring_buffer_enabled: route large scans through private rings
        :param ring_buffer_pages: ring size per scan
        :param background_writer_enabled: clean dirty pages between requests
        :param background_writer_pages_per_tick: cleaning rate, fractional rates accumulate
        :param group_size: blocks per block group
        :param per_group_estimates: estimate next access per block group instead of per block
        :param max_workers: threads used by compare runs
        """
        self._capacity_pages = require_count("capacity_pages", capacity_pages)
        if policy not in EvictionPolicy.NAMES:
            raise InvalidParameterException(
                "policy", policy, "valid policies are: " + ", ".join(EvictionPolicy.NAMES))
        self._policy = policy
        self._policy_config = policy_config or PolicyConfig()
        self._cost_model = cost_model or IoCostModel()
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise InvalidParameterException("seed", seed, "must be an integer")
        self._seed = seed
        self._pin_hold_window = require_count("pin_hold_window", pin_hold_window, minimum=0)
        self._ring_buffer_enabled = bool(ring_buffer_enabled)
        self._ring_buffer_pages = require_count("ring_buffer_pages", ring_buffer_pages)
        if self._ring_buffer_enabled and ring_buffer_pages >= capacity_pages:
            raise InvalidParameterException(
                "ring_buffer_pages", ring_buffer_pages, f"must be smaller than capacity_pages ({capacity_pages})")
        self._background_writer_enabled = bool(background_writer_enabled)
        self._background_writer_pages_per_tick = require_non_negative(
            "background_writer_pages_per_tick", background_writer_pages_per_tick)
        self._group_size = require_count("group_size", group_size)
        self._per_group_estimates = bool(per_group_estimates)
        self._max_workers = require_count("max_workers", max_workers)

    @classmethod
    def from_dict(cls, config_as_dict: Dict) -> 'SimConfig':
        kwargs = {key: value for key, value in config_as_dict.items() if key in cls.FIELDS}
        if "policy_config" in config_as_dict:
            kwargs["policy_config"] = PolicyConfig.from_dict(config_as_dict["policy_config"])
        if "cost_model" in config_as_dict:
            kwargs["cost_model"] = IoCostModel.from_dict(config_as_dict["cost_model"])
        return cls(**kwargs)

    @classmethod
    def from_flat_dict(cls, flat: Mapping[str, str], **overrides) -> 'SimConfig':
        """ Alternative constructor from a flat key=value mapping (config file)

        Keys may name fields of SimConfig, PolicyConfig or IoCostModel. Values are strings.
        :param flat: e.g. {'capacity_pages': '1024', 'policy': 'clock', 'rand_read_us': '100'}
        :param overrides: already typed values that take precedence, e.g. from CLI flags
        :return: SimConfig
        """
        sim_kwargs, policy_kwargs, cost_kwargs = dict(), dict(), dict()
        for key, raw in flat.items():
            try:
                if key in cls.BOOLEAN_FIELDS:
                    value = translate_to_boolean(raw)
                elif key in cls.STRING_FIELDS:
                    value = raw.strip()
                elif key == "dirty_score_for_not_requested" and raw.strip().lower() in ("", "none", "inf"):
                    value = None
                else:
                    value = parse_number(raw.strip())
            except ValueError:
                raise ConfigException(f"Invalid value '{raw}' for key '{key}'")
            if key in cls.FIELDS:
                sim_kwargs[key] = value
            elif key in PolicyConfig.FIELDS:
                policy_kwargs[key] = value
            elif key in IoCostModel.FIELDS:
                cost_kwargs[key] = value
            else:
                raise ConfigException(f"Unknown config key '{key}'")

        for key, value in overrides.items():
            if value is None:
                continue
            if key in cls.FIELDS:
                sim_kwargs[key] = value
            elif key in PolicyConfig.FIELDS:
                policy_kwargs[key] = value
            elif key in IoCostModel.FIELDS:
                cost_kwargs[key] = value
            else:
                raise ConfigException(f"Unknown config key '{key}'")

        if "capacity_pages" not in sim_kwargs:
            raise ConfigException("Missing required key 'capacity_pages'")
        return cls(policy_config=PolicyConfig(**policy_kwargs), cost_model=IoCostModel(**cost_kwargs), **sim_kwargs)

    def replace(self, **changes) -> 'SimConfig':
        """ Copy with some fields changed, e.g. config.replace(policy='belady')
        """
        kwargs = {field: getattr(self, "_" + field) for field in self.FIELDS}
        kwargs["policy_config"] = self._policy_config
        kwargs["cost_model"] = self._cost_model
        kwargs.update(changes)
        return SimConfig(**kwargs)

    @property
    def capacity_pages(self) -> int:
        return self._capacity_pages

    @property
    def policy(self) -> str:
        return self._policy

    @property
    def policy_config(self) -> PolicyConfig:
        return self._policy_config

    @property
    def cost_model(self) -> IoCostModel:
        return self._cost_model

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def pin_hold_window(self) -> int:
        return self._pin_hold_window

    @property
    def ring_buffer_enabled(self) -> bool:
        return self._ring_buffer_enabled

    @property
    def ring_buffer_pages(self) -> int:
        return self._ring_buffer_pages

    @property
    def background_writer_enabled(self) -> bool:
        return self._background_writer_enabled

    @property
    def background_writer_pages_per_tick(self) -> Union[int, float]:
        return self._background_writer_pages_per_tick

    @property
    def group_size(self) -> int:
        return self._group_size

    @property
    def per_group_estimates(self) -> bool:
        return self._per_group_estimates

    @property
    def max_workers(self) -> int:
        return self._max_workers

    @property
    def body_as_dict(self) -> Dict:
        body_as_dict = collections.OrderedDict()
        for field in self.FIELDS:
            body_as_dict[field] = getattr(self, "_" + field)
        body_as_dict["policy_config"] = self._policy_config.body_as_dict
        body_as_dict["cost_model"] = self._cost_model.body_as_dict
        return body_as_dict
