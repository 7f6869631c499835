import configparser
import csv
import functools
import hashlib
import io
import math
import warnings
from typing import Any, Dict, Iterable, List, Union

from PgBufferSim.Exceptions.Exceptions import ConfigException, InvalidParameterException

try:
    import pandas as pd

    _has_pandas = True
except ImportError:
    _has_pandas = False
    warnings.warn("pandas failed to import. Report dataframes will not work", ImportWarning)

CONFIG_SECTION = "sim"

RUN_CSV_COLUMNS = (
    "trace", "policy", "seed", "requests", "hits", "seq_misses", "rand_misses", "dirty_evictions",
    "total_io_wait_us", "hit_rate", "avg_io_wait_us", "latency_score")


def require_pandas(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            import pandas
            return func(*args, **kwargs)
        except ImportError:
            raise ImportError(f"Function '{func.__name__}' requires pandas")

    return wrapper


def require_count(parameter: str, value: int, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidParameterException(parameter, value, f"must be an integer >= {minimum}")
    return value


def require_non_negative(parameter: str, value: Union[int, float]) -> Union[int, float]:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or math.isnan(value) or value < 0:
        raise InvalidParameterException(parameter, value, "must be a non-negative number")
    return value


def require_probability(parameter: str, value: float) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not 0 <= value <= 1:
        raise InvalidParameterException(parameter, value, "must lie in [0, 1]")
    return value


def stable_seed(*components: Any) -> int:
    """ Derive a 63 bit seed from arbitrary components

    Never uses the builtin hash(), which is salted per process.
    :param components: e.g. master seed, trace name, policy name
    :return: int
    """
    combined = "/".join(str(component) for component in components)
    return int(hashlib.sha256(combined.encode("utf-8")).hexdigest()[:16], 16) & 0x7FFFFFFFFFFFFFFF


def translate_to_boolean(value: Union[str, bool, int]) -> bool:
    """ Takes a boolean or string (e.g. 'true', 'True', 'yes', '1') and returns a proper boolean

    :param value:
    :return: boolean
    """
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value != 0
    if isinstance(value, str):
        lowered = value.strip().lower()
        if lowered in ("true", "t", "yes", "y", "1", "on"):
            return True
        if lowered in ("false", "f", "no", "n", "0", "off"):
            return False
    raise ValueError(f"Invalid boolean value: '{value}'")


def parse_number(value: str) -> Union[int, float]:
    """ '20' -> 20, '0.5' -> 0.5, 'inf' -> inf

    """
    try:
        return int(value)
    except ValueError:
        return float(value)


def read_flat_config(text: str) -> Dict[str, str]:
    """ Parse flat key=value lines into a dict

    The flat format has no section headers, so the text is wrapped into an implicit section
    before it is handed to configparser.
    :param text: content of a config file
    :return: dict of raw string values
    """
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(f"[{CONFIG_SECTION}]\n" + text)
    except configparser.Error as e:
        raise ConfigException(f"Malformed config file: {e}")
    return dict(parser[CONFIG_SECTION])


def build_csv_rows_from_reports(reports: Iterable['RunReport']) -> List[Dict[str, Any]]:
    rows = list()
    for report in reports:
        metrics = report.metrics
        rows.append({
            "trace": report.trace_name,
            "policy": report.config.policy,
            "seed": report.seed,
            "requests": metrics.requests,
            "hits": metrics.hits,
            "seq_misses": metrics.seq_misses,
            "rand_misses": metrics.rand_misses,
            "dirty_evictions": metrics.dirty_evictions,
            "total_io_wait_us": metrics.total_io_wait_us,
            "hit_rate": report.hit_rate,
            "avg_io_wait_us": report.avg_io_wait,
            "latency_score": report.latency_score})
    return rows


def build_csv_from_reports(reports: Iterable['RunReport']) -> str:
    """ One row per run, columns as in RUN_CSV_COLUMNS

    :param reports: iterable of RunReport
    :return: csv text with header line
    """
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=RUN_CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in build_csv_rows_from_reports(reports):
        writer.writerow(row)
    return buffer.getvalue()


@require_pandas
def build_pandas_dataframe_from_reports(reports: Iterable['RunReport']) -> 'pd.DataFrame':
    import pandas as pd
    return pd.DataFrame(build_csv_rows_from_reports(reports), columns=list(RUN_CSV_COLUMNS))
