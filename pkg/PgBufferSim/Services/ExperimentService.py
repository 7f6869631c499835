# -*- coding: utf-8 -*-

import collections
import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from PgBufferSim.Exceptions import InvalidParameterException, PgBufferSimException, \
    PgBufferSimValidationException, SimulationException
from PgBufferSim.Objects import ComparisonReport, EvictionPolicy, FutureIndex, RingBuffer, RunMetrics, \
    RunReport, SimConfig, Trace
from PgBufferSim.Services.BufferPoolService import BufferPoolService
from PgBufferSim.Services.CostService import CostService
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.PolicyService import PolicyService
from PgBufferSim.Services.ScanService import ScanService
from PgBufferSim.Services.SeedService import SeedService

logger = logging.getLogger(__name__)

Traces = Union[Mapping[str, Trace], Sequence[Trace]]


class ExperimentService(ObjectService):
    """ Service to replay traces against the pool and compare policies

    """

    def __init__(self, seeds: SeedService = None, pool: BufferPoolService = None, scans: ScanService = None,
                 policies: PolicyService = None, costs: CostService = None):
        super().__init__(seeds)
        self._pool = pool or BufferPoolService(self._seeds)
        self._scans = scans or ScanService(self._seeds)
        self._policies = policies or PolicyService(self._seeds)
        self._costs = costs or CostService(self._seeds)

    def run_simulation(self, trace: Trace, config: SimConfig, trace_name: str = "trace") -> RunReport:
        """ Replay trace against a fresh pool under config

        The policy's random stream is seeded from (config.seed, trace_name, policy), so the report is
        a pure function of its inputs apart from wall_time_ms.
        :param trace: validated Trace
        :param config: SimConfig
        :param trace_name: name of the trace in reports and seed derivation
        :return: RunReport
        """
        started = time.perf_counter()
        trace.validate()

        if config.policy == EvictionPolicy.BELADY and config.pin_hold_window > 0:
            logger.warning("Policy '%s' ignores pins, running '%s' with pin_hold_window=0",
                           config.policy, trace_name)
            config = config.replace(pin_hold_window=0)

        run_seeds = SeedService(config.seed)
        seed = run_seeds.derive(trace_name, config.policy)
        rng = run_seeds.rng(trace_name, config.policy)

        state = self._pool.create_pool(config.capacity_pages)
        registry = self._scans.create_registry(config.group_size, config.per_group_estimates)
        estimator = self._scans.estimator(registry)
        future = FutureIndex.from_trace(trace) if config.policy == EvictionPolicy.BELADY else None
        policy = self._policies.get(config.policy, config.policy_config, future)
        model = config.cost_model

        metrics = RunMetrics()
        pin_window = config.pin_hold_window
        held_pins = collections.defaultdict(collections.deque)
        rings = dict()  # type: Dict[int, RingBuffer]
        ring_threshold = config.capacity_pages / 4
        writer_credit = 0.0
        skipped_progress = 0

        for request in trace.requests:
            seq = request.seq
            estimator.now = seq
            scan = None
            if request.is_sequential and request.scan is not None:
                scan, tracked = self._track_scan(state, registry, request, trace)
                if not tracked:
                    skipped_progress += 1

            ring = None
            if config.ring_buffer_enabled and scan is not None \
                    and trace.relation_length(request.tag.relation) > ring_threshold:
                ring = rings.get(request.scan)
                if ring is None:
                    ring = rings[request.scan] = RingBuffer(request.scan, config.ring_buffer_pages)

            # the window counts the page being accessed
            held = held_pins[request.stream] if pin_window else None
            if held is not None and len(held) == pin_window:
                self._pool.unpin(state, held.popleft())

            outcome = self._pool.access(state, request, policy, estimator, rng, ring)
            if future is not None:
                future.observe(outcome.slot, seq)
            self._costs.accumulate(metrics, outcome, model)

            if held is not None:
                self._pool.pin(state, outcome.slot)
                held.append(outcome.slot)

            if ring is not None and not scan.active:
                del rings[request.scan]

            if config.background_writer_enabled:
                writer_credit += config.background_writer_pages_per_tick
                pages = int(writer_credit)
                if pages:
                    writer_credit -= pages
                    metrics.background_writes += self._pool.background_clean(state, pages)

        if skipped_progress:
            logger.warning("Trace '%s': ignored %d out-of-order scan progress updates", trace_name, skipped_progress)

        wall_time_ms = (time.perf_counter() - started) * 1000.0
        report = RunReport(
            trace_name=trace_name,
            seed=seed,
            config=config,
            metrics=metrics,
            hit_rate=self._costs.hit_rate(metrics),
            avg_io_wait=self._costs.avg_io_wait(metrics),
            latency_score=self._costs.latency_score(metrics),
            wall_time_ms=wall_time_ms)
        logger.info("Run %s/%s: hit_rate=%.4f latency_score=%.4f in %.1f ms",
                    trace_name, config.policy, report.hit_rate, report.latency_score, wall_time_ms)
        return report

    def _track_scan(self, state, registry, request, trace: Trace):
        """ Register a scan on first sight, advance it afterwards

        Resident pages the new scan covers are linked to their block groups.
        :return: (ScanContext, whether the request was applied to it)
        """
        tag = request.tag
        scan = registry.get_scan(request.scan)
        if scan is None:
            self._scans.register_scan(
                registry, request.scan, tag.relation, tag.block,
                trace.relation_length(tag.relation) - tag.block, now=request.seq)
            scan = registry.get_scan(request.scan)
            self._pool.link_block_groups(state, registry, scan.relation, scan.start_block, scan.last_block)
            return scan, True
        if scan.active and scan.relation == tag.relation and tag.block >= scan.position:
            self._scans.advance_scan(registry, request.scan, tag.block, request.seq)
            return scan, True
        return scan, False

    def _run_tagged(self, trace: Trace, config: SimConfig, trace_name: str) -> RunReport:
        try:
            return self.run_simulation(trace, config, trace_name)
        except PgBufferSimValidationException:
            raise
        except PgBufferSimException as e:
            raise SimulationException(trace_name, config.policy, e) from e

    @staticmethod
    def _named_traces(traces: Traces) -> List[Tuple[str, Trace]]:
        if isinstance(traces, Mapping):
            return list(traces.items())
        return [(f"trace-{position}", trace) for position, trace in enumerate(traces)]

    def _run_all(self, jobs: List[Tuple[str, Trace, SimConfig]], max_workers: int) -> List[RunReport]:
        if max_workers <= 1 or len(jobs) <= 1:
            return [self._run_tagged(trace, config, name) for name, trace, config in jobs]
        with ThreadPoolExecutor(max_workers) as executor:
            futures = [executor.submit(self._run_tagged, trace, config, name) for name, trace, config in jobs]
            return [future.result() for future in futures]

    def compare_policies(self, traces: Traces, policies: Iterable[str], base_config: SimConfig
                         ) -> ComparisonReport:
        """ Run every policy on every trace and rank the policies by mean latency score

        :param traces: dict of name -> Trace, or a list of Traces named trace-0, trace-1, ...
        :param policies: policy names
        :param base_config: SimConfig whose policy field is replaced per run
        :return: ComparisonReport with runs ordered by (trace, policy)
        """
        named_traces = self._named_traces(traces)
        policies = list(policies)
        if not named_traces:
            raise InvalidParameterException("traces", [], "at least one trace is required")
        if not policies:
            raise InvalidParameterException("policies", [], "at least one policy is required")
        if len(set(policies)) != len(policies):
            raise InvalidParameterException("policies", policies, "policies must be unique")
        configs = [base_config.replace(policy=policy) for policy in policies]

        jobs = [(name, trace, config) for (name, trace), config in itertools.product(named_traces, configs)]
        runs = self._run_all(jobs, base_config.max_workers)
        ranking, deltas = self.rank(runs, policies)
        logger.info("Compared %d policies on %d traces, best: %s", len(policies), len(named_traces),
                    ranking[0]["policy"])
        return ComparisonReport(runs, ranking, deltas)

    @staticmethod
    def rank(runs: Sequence[RunReport], policies: Sequence[str]) -> Tuple[List[Dict], List[Dict]]:
        """ Ranking by mean latency score, best first and ties by name, plus pairwise deltas

        :return: ranking entries, deltas for every pair with policy_a ranked above policy_b
        """
        ranking = []
        for policy in policies:
            policy_runs = [run for run in runs if run.policy == policy]
            ranking.append({
                "policy": policy,
                "mean_latency_score": sum(run.latency_score for run in policy_runs) / len(policy_runs),
                "mean_hit_rate": sum(run.hit_rate for run in policy_runs) / len(policy_runs),
                "runs": len(policy_runs)})
        ranking.sort(key=lambda entry: (-entry["mean_latency_score"], entry["policy"]))

        deltas = []
        for better, worse in itertools.combinations(ranking, 2):
            deltas.append({
                "policy_a": better["policy"],
                "policy_b": worse["policy"],
                "hit_rate_delta": better["mean_hit_rate"] - worse["mean_hit_rate"],
                "latency_score_delta": better["mean_latency_score"] - worse["mean_latency_score"]})
        return ranking, deltas

    def sweep_capacities(self, trace: Trace, policies: Iterable[str], capacities: Iterable[int],
                         base_config: SimConfig, trace_name: str = "trace") -> List[RunReport]:
        """ Hit rate and latency curves over pool sizes

        :return: RunReports ordered by (capacity, policy)
        """
        policies = list(policies)
        capacities = list(capacities)
        if not policies:
            raise InvalidParameterException("policies", [], "at least one policy is required")
        if not capacities:
            raise InvalidParameterException("capacities", [], "at least one capacity is required")
        jobs = [(trace_name, trace, base_config.replace(capacity_pages=capacity, policy=policy))
                for capacity, policy in itertools.product(capacities, policies)]
        return self._run_all(jobs, base_config.max_workers)
