# -*- coding: utf-8 -*-

import csv
import io
import logging
from pathlib import Path
from typing import Dict, List, Optional, TextIO, Union

import numpy as np

from PgBufferSim.Exceptions import TraceParseException
from PgBufferSim.Objects import AccessKind, Operation, PageRequest, PageTag, Trace
from PgBufferSim.Services.ObjectService import ObjectService
from PgBufferSim.Services.SeedService import SeedService
from PgBufferSim.Utils import require_count, require_non_negative, require_probability

logger = logging.getLogger(__name__)

TRACE_HEADER = ("seq", "stream", "relation", "block", "op", "access", "scan")
RELATION_DECLARATION = "#relation"

OPERATIONS = {str(op): op for op in Operation}
ACCESS_KINDS = {str(access): access for access in AccessKind}


class TraceService(ObjectService):
    """ Service to generate workload traces and to read and write trace files

    """

    def __init__(self, seeds: SeedService = None):
        super().__init__(seeds)

    def _numpy_rng(self, seed: Optional[int], kind: str) -> np.random.Generator:
        if seed is None:
            return self._seeds.numpy_rng("trace", kind)
        return np.random.default_rng(seed)

    def generate_scan_workload(self, num_relations: int, relation_blocks: int, num_streams: int,
                               scans_per_stream: int, seed: Optional[int] = None) -> Trace:
        """ Parallel query streams that each sweep randomly chosen relations from first to last block

        Streams are interleaved round-robin. Scan ids are unique per (stream, sweep):
        stream * scans_per_stream + sweep.
        :param num_relations: relations 0..num_relations-1, all of length relation_blocks
        :param relation_blocks: blocks per relation
        :param num_streams: parallel streams
        :param scans_per_stream: full sweeps issued by every stream
        :param seed: rng seed
        :return: Trace of num_streams * scans_per_stream * relation_blocks sequential reads
        """
        require_count("num_relations", num_relations)
        require_count("relation_blocks", relation_blocks)
        require_count("num_streams", num_streams)
        require_count("scans_per_stream", scans_per_stream)

        rng = self._numpy_rng(seed, "scan")
        choices = rng.integers(0, num_relations, size=(num_streams, scans_per_stream))

        per_stream = []
        for stream in range(num_streams):
            sweeps = []
            for sweep in range(scans_per_stream):
                sweeps.append((int(choices[stream, sweep]), stream * scans_per_stream + sweep))
            per_stream.append(sweeps)

        requests = []
        seq = 0
        sweep_length = relation_blocks
        for step in range(scans_per_stream * sweep_length):
            sweep, block = divmod(step, sweep_length)
            for stream in range(num_streams):
                relation, scan_id = per_stream[stream][sweep]
                requests.append(PageRequest(
                    seq=seq,
                    tag=PageTag(relation, block),
                    op=Operation.READ,
                    access=AccessKind.SEQUENTIAL,
                    scan=scan_id,
                    stream=stream))
                seq += 1

        relations = {relation: relation_blocks for relation in range(num_relations)}
        logger.debug("Generated scan workload with %d requests over %d relations", len(requests), num_relations)
        return Trace(requests, relations)

    @staticmethod
    def zipf_cdf(relation_blocks: int, zipf_s: float) -> np.ndarray:
        """ Cumulative Zipf(s) mass over block ids 0..relation_blocks-1, block 0 the most popular
        """
        weights = np.arange(1, relation_blocks + 1, dtype=np.float64) ** -float(zipf_s)
        cdf = np.cumsum(weights)
        return cdf / cdf[-1]

    def generate_point_workload(self, relation_blocks: int, num_requests: int, zipf_s: float = 0.0,
                                write_fraction: float = 0.0, seed: Optional[int] = None, relation: int = 0,
                                stream: int = 0) -> Trace:
        """ Random point lookups over one relation with Zipf-skewed block popularity

        :param relation_blocks: length of the relation
        :param num_requests: number of requests
        :param zipf_s: skew exponent, 0 is uniform
        :param write_fraction: probability that a request is a write
        :param seed: rng seed
        :param relation: relation id the lookups go to
        :param stream: stream id of all requests
        :return: Trace of random accesses without scan ids
        """
        require_count("relation_blocks", relation_blocks)
        require_count("num_requests", num_requests, minimum=0)
        require_non_negative("zipf_s", zipf_s)
        require_probability("write_fraction", write_fraction)
        require_count("relation", relation, minimum=0)

        rng = self._numpy_rng(seed, "point")
        cdf = self.zipf_cdf(relation_blocks, zipf_s)
        blocks = np.searchsorted(cdf, rng.random(num_requests), side="right")
        blocks = np.minimum(blocks, relation_blocks - 1)
        writes = rng.random(num_requests) < write_fraction

        requests = [
            PageRequest(
                seq=seq,
                tag=PageTag(relation, int(block)),
                op=Operation.WRITE if is_write else Operation.READ,
                access=AccessKind.RANDOM,
                scan=None,
                stream=stream)
            for seq, (block, is_write)
            in enumerate(zip(blocks.tolist(), writes.tolist()))]
        return Trace(requests, {relation: relation_blocks})

    def generate_mixed_workload(self, scan_params: Dict, point_params: Dict, ratio: float,
                                seed: Optional[int] = None) -> Trace:
        """ Scan and point requests interleaved so that the scan share of requests matches ratio

        Sub-generators use their own 'seed' entry if present, else seed. The longest prefixes of
        both sub-traces that realize ratio are spread evenly over the output; point requests are
        moved to a stream id after the scan streams.
        :param scan_params: kwargs of generate_scan_workload without seed
        :param point_params: kwargs of generate_point_workload without seed
        :param ratio: fraction of scan requests, in [0, 1]
        :param seed: default seed of both sub-generators
        :return: Trace
        """
        require_probability("ratio", ratio)
        scan_kwargs = dict(scan_params)
        scan_kwargs.setdefault("seed", seed)
        point_kwargs = dict(point_params)
        point_kwargs.setdefault("seed", seed)

        if ratio == 1:
            return self.generate_scan_workload(**scan_kwargs)
        if ratio == 0:
            return self.generate_point_workload(**point_kwargs)

        scan_trace = self.generate_scan_workload(**scan_kwargs)
        point_trace = self.generate_point_workload(**point_kwargs)

        total = int(min(len(scan_trace) / ratio, len(point_trace) / (1 - ratio)))
        num_scan = int(round(total * ratio))
        num_point = total - num_scan
        if num_scan > len(scan_trace) or num_point > len(point_trace):
            total -= 1
            num_scan = int(round(total * ratio))
            num_point = total - num_scan

        point_stream = 1 + max((request.stream for request in scan_trace.requests), default=-1)
        scan_requests = iter(scan_trace.requests[:num_scan])
        point_requests = iter(point_trace.requests[:num_point])

        requests = []
        for position in range(total):
            take_scan = (position + 1) * num_scan // total - position * num_scan // total
            if take_scan:
                requests.append(next(scan_requests).renumbered(position))
            else:
                requests.append(next(point_requests).renumbered(position, stream=point_stream))

        relations = scan_trace.relations
        for relation, length in point_trace.relations.items():
            relations[relation] = max(length, relations.get(relation, 0))
        logger.debug("Generated mixed workload: %d scan and %d point requests", num_scan, num_point)
        return Trace(requests, relations)

    def dumps_trace(self, trace: Trace) -> str:
        buffer = io.StringIO()
        self._write_rows(trace, buffer)
        return buffer.getvalue()

    def write_trace(self, trace: Trace, destination: Union[str, Path, TextIO]):
        """ Write trace as UTF-8 CSV

        Relation lengths precede the header as '#relation,<id>,<blocks>' lines.
        :param trace: Trace
        :param destination: path or text stream
        """
        if isinstance(destination, (str, Path)):
            with open(destination, "w", encoding="utf-8", newline="") as file:
                self._write_rows(trace, file)
        else:
            self._write_rows(trace, destination)

    @staticmethod
    def _write_rows(trace: Trace, file: TextIO):
        writer = csv.writer(file, lineterminator="\n")
        for relation, length in trace.relations.items():
            writer.writerow((RELATION_DECLARATION, relation, length))
        writer.writerow(TRACE_HEADER)
        for request in trace.requests:
            writer.writerow((
                request.seq,
                request.stream,
                request.tag.relation,
                request.tag.block,
                str(request.op),
                str(request.access),
                "" if request.scan is None else request.scan))

    def loads_trace(self, text: str) -> Trace:
        return self._read_rows(io.StringIO(text))

    def read_trace(self, source: Union[str, Path, TextIO]) -> Trace:
        """ Parse and validate a trace file

        :param source: path or text stream
        :return: Trace
        """
        if isinstance(source, (str, Path)):
            with open(source, "r", encoding="utf-8", newline="") as file:
                return self._read_rows(file)
        return self._read_rows(source)

    def _read_rows(self, file: TextIO) -> Trace:
        relations = dict()
        requests = []  # type: List[PageRequest]
        header_seen = False
        line_number = 0
        for line_number, row in enumerate(csv.reader(file), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if not header_seen:
                if row[0] == RELATION_DECLARATION:
                    relation, length = self._parse_declaration(row, line_number)
                    relations[relation] = length
                    continue
                if tuple(cell.strip() for cell in row) != TRACE_HEADER:
                    raise TraceParseException(line_number, f"expected header '{','.join(TRACE_HEADER)}'")
                header_seen = True
                continue
            requests.append(self._parse_request(row, line_number))

        if not header_seen:
            raise TraceParseException(line_number + 1, "missing header line")

        if not relations:
            for request in requests:
                relation = request.tag.relation
                relations[relation] = max(relations.get(relation, 0), request.tag.block + 1)

        return Trace(requests, relations).validate()

    @staticmethod
    def _parse_declaration(row: List[str], line_number: int):
        if len(row) != 3:
            raise TraceParseException(line_number, "relation declaration needs '#relation,<id>,<blocks>'")
        try:
            relation, length = int(row[1]), int(row[2])
        except ValueError:
            raise TraceParseException(line_number, "relation id and length must be integers")
        if relation < 0 or length < 1:
            raise TraceParseException(line_number, "relation id must be >= 0 and length >= 1")
        return relation, length

    @staticmethod
    def _parse_request(row: List[str], line_number: int) -> PageRequest:
        if len(row) != len(TRACE_HEADER):
            raise TraceParseException(line_number, f"expected {len(TRACE_HEADER)} columns, found {len(row)}")
        values = dict(zip(TRACE_HEADER, (cell.strip() for cell in row)))
        try:
            seq = int(values["seq"])
            stream = int(values["stream"])
            relation = int(values["relation"])
            block = int(values["block"])
            scan = int(values["scan"]) if values["scan"] else None
        except ValueError as e:
            raise TraceParseException(line_number, f"non-integer column: {e}")
        if min(seq, stream, relation, block) < 0 or (scan is not None and scan < 0):
            raise TraceParseException(line_number, "negative identifier")
        if values["op"] not in OPERATIONS:
            raise TraceParseException(line_number, f"op must be one of {sorted(OPERATIONS)}")
        if values["access"] not in ACCESS_KINDS:
            raise TraceParseException(line_number, f"access must be one of {sorted(ACCESS_KINDS)}")
        return PageRequest(
            seq=seq,
            tag=PageTag(relation, block),
            op=OPERATIONS[values["op"]],
            access=ACCESS_KINDS[values["access"]],
            scan=scan,
            stream=stream)
