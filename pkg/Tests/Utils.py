import csv
import io
import unittest

from PgBufferSim.Exceptions import ConfigException, InvalidParameterException
from PgBufferSim.Objects import ComparisonReport, RunMetrics, SimConfig, RunReport
from PgBufferSim.Utils import Utils, RUN_CSV_COLUMNS, build_csv_from_reports, parse_number, read_flat_config, \
    require_count, require_non_negative, require_probability, stable_seed, translate_to_boolean

from Tests.TestUtils import skip_if_no_pandas


def make_report(policy: str, hits: int) -> RunReport:
    metrics = RunMetrics(requests=10, hits=hits, rand_misses=10 - hits, total_io_wait_us=100 * (10 - hits))
    return RunReport("t", 7, SimConfig(4, policy=policy), metrics, hits / 10, 10.0 * (10 - hits),
                     1000 / (1 + 10.0 * (10 - hits)))


class TestUtilsMethods(unittest.TestCase):

    def test_stable_seed_is_stable(self):
        self.assertEqual(stable_seed(42, "trace", "clock"), stable_seed(42, "trace", "clock"))
        self.assertNotEqual(stable_seed(42, "trace", "clock"), stable_seed(42, "trace", "evolved"))
        self.assertNotEqual(stable_seed(42, "trace"), stable_seed(43, "trace"))

    def test_stable_seed_range(self):
        for seed in range(20):
            self.assertTrue(0 <= stable_seed(seed, "x") < 2 ** 63)

    def test_translate_to_boolean(self):
        for value in ("true", "True", "YES", "1", "on", True, 1):
            self.assertTrue(translate_to_boolean(value))
        for value in ("false", "F", "no", "0", "off", False, 0):
            self.assertFalse(translate_to_boolean(value))

    def test_translate_to_boolean_invalid(self):
        with self.assertRaises(ValueError):
            translate_to_boolean("maybe")

    def test_parse_number(self):
        self.assertEqual(parse_number("20"), 20)
        self.assertIsInstance(parse_number("20"), int)
        self.assertEqual(parse_number("0.5"), 0.5)
        with self.assertRaises(ValueError):
            parse_number("twenty")

    def test_require_count(self):
        self.assertEqual(require_count("n", 3), 3)
        self.assertEqual(require_count("n", 0, minimum=0), 0)
        for value in (0, -1, 1.5, True, "3"):
            with self.assertRaises(InvalidParameterException):
                require_count("n", value)

    def test_require_non_negative(self):
        self.assertEqual(require_non_negative("x", 0.25), 0.25)
        for value in (-0.1, float("nan"), "1"):
            with self.assertRaises(InvalidParameterException):
                require_non_negative("x", value)

    def test_require_probability(self):
        self.assertEqual(require_probability("p", 1), 1)
        for value in (-0.01, 1.01):
            with self.assertRaises(InvalidParameterException) as context:
                require_probability("p", value)
            self.assertEqual(context.exception.parameter, "p")

    def test_read_flat_config(self):
        text = "# pool\ncapacity_pages = 1024\npolicy=clock  ; inline\n\nrand_read_us = 100\n"
        self.assertEqual(read_flat_config(text), {"capacity_pages": "1024", "policy": "clock", "rand_read_us": "100"})

    def test_read_flat_config_keeps_case(self):
        self.assertIn("Seed", read_flat_config("Seed = 1"))

    def test_read_flat_config_malformed(self):
        with self.assertRaises(ConfigException):
            read_flat_config("capacity_pages\n")

    def test_build_csv_from_reports(self):
        text = build_csv_from_reports([make_report("clock", 4), make_report("belady", 6)])
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(tuple(text.splitlines()[0].split(",")), RUN_CSV_COLUMNS)
        self.assertEqual([row["policy"] for row in rows], ["clock", "belady"])
        self.assertEqual(rows[1]["hits"], "6")
        self.assertEqual(rows[0]["total_io_wait_us"], "600")

    def test_build_csv_empty(self):
        self.assertEqual(build_csv_from_reports([]), ",".join(RUN_CSV_COLUMNS) + "\n")

    @skip_if_no_pandas
    def test_build_pandas_dataframe_from_reports(self):
        df = Utils.build_pandas_dataframe_from_reports([make_report("clock", 4), make_report("belady", 6)])
        self.assertEqual(list(df.columns), list(RUN_CSV_COLUMNS))
        self.assertEqual(len(df), 2)
        self.assertEqual(df["hits"].sum(), 10)

    @skip_if_no_pandas
    def test_comparison_report_to_dataframe(self):
        report = ComparisonReport([make_report("clock", 4), make_report("belady", 6), make_report("clock", 5)],
                                  ranking=[], deltas=[])
        df = report.to_dataframe()
        self.assertEqual(list(df.columns), list(RUN_CSV_COLUMNS))
        self.assertEqual(len(df), 3)
        self.assertEqual(list(df["policy"]), ["clock", "belady", "clock"])
        self.assertEqual(df[df["policy"] == "clock"]["hits"].sum(), 9)


if __name__ == '__main__':
    unittest.main()
