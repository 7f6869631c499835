import json
import unittest

from PgBufferSim.Exceptions import ConfigException, InvalidParameterException
from PgBufferSim.Objects import ComparisonReport, EvictionPolicy, IoCostModel, PolicyConfig, RunMetrics, \
    RunReport, SimConfig


class TestSimConfig(unittest.TestCase):

    def test_defaults(self):
        config = SimConfig(1024)
        self.assertEqual(config.policy, EvictionPolicy.CLOCK)
        self.assertEqual(config.seed, 0)
        self.assertEqual(config.pin_hold_window, 1)
        self.assertFalse(config.ring_buffer_enabled)
        self.assertEqual(config.policy_config, PolicyConfig())
        self.assertEqual(config.cost_model, IoCostModel())

    def test_invalid_policy_lists_valid_names(self):
        with self.assertRaises(InvalidParameterException) as context:
            SimConfig(16, policy="lru")
        for name in EvictionPolicy.NAMES:
            self.assertIn(name, str(context.exception))

    def test_invalid_capacity(self):
        for capacity in (0, -4, 2.5):
            with self.assertRaises(InvalidParameterException):
                SimConfig(capacity)

    def test_ring_must_be_smaller_than_pool(self):
        with self.assertRaises(InvalidParameterException):
            SimConfig(32, ring_buffer_enabled=True, ring_buffer_pages=32)
        SimConfig(32, ring_buffer_enabled=False, ring_buffer_pages=32)

    def test_negative_pin_window(self):
        with self.assertRaises(InvalidParameterException):
            SimConfig(16, pin_hold_window=-1)

    def test_replace(self):
        config = SimConfig(16, seed=3, ring_buffer_enabled=True, ring_buffer_pages=4)
        replaced = config.replace(policy=EvictionPolicy.EVOLVED)
        self.assertEqual(replaced.policy, EvictionPolicy.EVOLVED)
        self.assertEqual(replaced.seed, 3)
        self.assertTrue(replaced.ring_buffer_enabled)
        self.assertEqual(config.policy, EvictionPolicy.CLOCK)

    def test_from_flat_dict_types(self):
        config = SimConfig.from_flat_dict({
            "capacity_pages": "1024", "policy": " evolved ", "ring_buffer_enabled": "yes", "ring_buffer_pages": "8",
            "background_writer_pages_per_tick": "0.5", "clean_bonus": "10", "rand_read_us": "150",
            "dirty_writeback_us": "300", "dirty_score_for_not_requested": "inf"})
        self.assertEqual(config.capacity_pages, 1024)
        self.assertEqual(config.policy, EvictionPolicy.EVOLVED)
        self.assertTrue(config.ring_buffer_enabled)
        self.assertEqual(config.background_writer_pages_per_tick, 0.5)
        self.assertEqual(config.policy_config.clean_bonus, 10)
        self.assertIsNone(config.policy_config.dirty_score_for_not_requested)
        self.assertEqual(config.cost_model.rand_read_us, 150)

    def test_from_flat_dict_overrides_win(self):
        config = SimConfig.from_flat_dict({"capacity_pages": "64", "seed": "1"}, seed=9, policy=None, sample_size_pbm=40)
        self.assertEqual(config.seed, 9)
        self.assertEqual(config.policy, EvictionPolicy.CLOCK)
        self.assertEqual(config.policy_config.sample_size_pbm, 40)

    def test_from_flat_dict_capacity_from_override(self):
        self.assertEqual(SimConfig.from_flat_dict({}, capacity_pages=8).capacity_pages, 8)

    def test_from_flat_dict_unknown_key(self):
        with self.assertRaises(ConfigException):
            SimConfig.from_flat_dict({"capacity_pages": "64", "shared_buffers": "1GB"})

    def test_from_flat_dict_bad_value(self):
        with self.assertRaises(ConfigException):
            SimConfig.from_flat_dict({"capacity_pages": "many"})

    def test_from_flat_dict_missing_capacity(self):
        with self.assertRaises(ConfigException):
            SimConfig.from_flat_dict({"policy": "clock"})

    def test_dict_round_trip(self):
        config = SimConfig(128, policy=EvictionPolicy.COMBINED, seed=5, background_writer_enabled=True,
                           policy_config=PolicyConfig(combined_sample_size=8),
                           cost_model=IoCostModel(seq_read_us=10))
        self.assertEqual(SimConfig.from_dict(json.loads(config.body)), config)


class TestIoCostModel(unittest.TestCase):

    def test_defaults(self):
        model = IoCostModel()
        self.assertEqual((model.seq_read_us, model.rand_read_us, model.dirty_writeback_us, model.hit_us),
                         (20, 100, 200, 0))
        self.assertEqual(model.page_size_bytes, 8192)

    def test_ordering_enforced(self):
        with self.assertRaises(InvalidParameterException):
            IoCostModel(seq_read_us=200, rand_read_us=100)
        with self.assertRaises(InvalidParameterException):
            IoCostModel(rand_read_us=100, dirty_writeback_us=50)

    def test_negative_cost(self):
        with self.assertRaises(InvalidParameterException):
            IoCostModel(hit_us=-1)


class TestReports(unittest.TestCase):

    @staticmethod
    def report(policy: str = EvictionPolicy.CLOCK, latency_score: float = 19.6) -> RunReport:
        metrics = RunMetrics(requests=10, hits=5, seq_misses=2, rand_misses=3, dirty_evictions=1,
                             total_io_wait_us=540, io_volume_bytes=6 * 8192)
        return RunReport("scan", 42, SimConfig(8, policy=policy), metrics, 0.5, 54.0, latency_score, 12.5)

    def test_run_report_schema(self):
        body = json.loads(self.report().to_json())
        self.assertEqual(set(body), {"trace", "seed", "config", "metrics", "derived", "wall_time_ms"})
        self.assertEqual(set(body["derived"]), {"hit_rate", "avg_io_wait_us", "latency_score"})
        self.assertEqual(body["metrics"]["dirty_evictions"], 1)

    def test_run_report_without_wall_time(self):
        self.assertNotIn("wall_time_ms", json.loads(self.report().to_json(include_wall_time=False)))

    def test_run_report_round_trip(self):
        report = self.report()
        self.assertEqual(RunReport.from_json(report.to_json()), report)

    def test_comparison_report_round_trip(self):
        runs = [self.report(EvictionPolicy.CLOCK, 10.0), self.report(EvictionPolicy.BELADY, 20.0)]
        ranking = [{"policy": "belady", "mean_latency_score": 20.0, "mean_hit_rate": 0.5, "runs": 1},
                   {"policy": "clock", "mean_latency_score": 10.0, "mean_hit_rate": 0.5, "runs": 1}]
        deltas = [{"policy_a": "belady", "policy_b": "clock", "hit_rate_delta": 0.0, "latency_score_delta": 10.0}]
        report = ComparisonReport(runs, ranking, deltas)
        restored = ComparisonReport.from_json(report.to_json())
        self.assertEqual(restored.ranked_policies, ["belady", "clock"])
        self.assertEqual(restored.runs_of("clock"), [runs[0]])
        self.assertEqual(restored.deltas, deltas)


if __name__ == '__main__':
    unittest.main()
