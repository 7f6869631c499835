import unittest

from PgBufferSim.Exceptions import TraceValidationException
from PgBufferSim.Objects import AccessKind, Operation, PageRequest, PageTag, Trace


class TestTrace(unittest.TestCase):

    def setUp(self):
        self.requests = [
            PageRequest(0, PageTag(0, 0), Operation.READ, AccessKind.SEQUENTIAL, scan=0, stream=0),
            PageRequest(1, PageTag(0, 1), Operation.READ, AccessKind.SEQUENTIAL, scan=0, stream=0),
            PageRequest(2, PageTag(1, 3), Operation.WRITE, AccessKind.RANDOM, scan=None, stream=1),
            PageRequest(3, PageTag(0, 1), Operation.READ, AccessKind.RANDOM, scan=None, stream=1)]
        self.trace = Trace(self.requests, {0: 2, 1: 4})

    def test_page_tag_equality_and_ordering(self):
        self.assertEqual(PageTag(1, 2), PageTag(1, 2))
        self.assertNotEqual(PageTag(1, 2), PageTag(2, 1))
        self.assertEqual(hash(PageTag(3, 4)), hash(PageTag(3, 4)))
        self.assertLess(PageTag(0, 9), PageTag(1, 0))
        self.assertEqual(len({PageTag(0, 0), PageTag(0, 0), PageTag(0, 1)}), 2)

    def test_enums_accept_names_and_values(self):
        self.assertIs(Operation("W"), Operation.WRITE)
        self.assertIs(Operation("read"), Operation.READ)
        self.assertIs(AccessKind("seq"), AccessKind.SEQUENTIAL)
        self.assertIs(AccessKind("RAND"), AccessKind.RANDOM)
        with self.assertRaises(ValueError):
            Operation("X")

    def test_request_properties(self):
        write = self.requests[2]
        self.assertTrue(write.is_write)
        self.assertFalse(write.is_sequential)
        self.assertTrue(self.requests[0].is_sequential)
        renumbered = write.renumbered(10, stream=5)
        self.assertEqual(renumbered.seq, 10)
        self.assertEqual(renumbered.stream, 5)
        self.assertEqual(renumbered.tag, write.tag)
        self.assertEqual(write.renumbered(2), write)

    def test_footprint_and_distinct_tags(self):
        self.assertEqual(self.trace.footprint, 6)
        self.assertEqual(self.trace.distinct_tags(), {PageTag(0, 0), PageTag(0, 1), PageTag(1, 3)})
        self.assertEqual(len(self.trace), 4)
        self.assertEqual(self.trace.relation_length(1), 4)

    def test_validate_accepts_valid_trace(self):
        self.assertIs(self.trace.validate(), self.trace)

    def test_validate_seq_gap(self):
        requests = [self.requests[0], self.requests[2]]
        with self.assertRaises(TraceValidationException):
            Trace(requests, {0: 2, 1: 4}).validate()

    def test_validate_block_out_of_bounds(self):
        with self.assertRaises(TraceValidationException):
            Trace(self.requests, {0: 2, 1: 3}).validate()

    def test_validate_undeclared_relation(self):
        with self.assertRaises(TraceValidationException):
            Trace(self.requests, {0: 2}).validate()

    def test_validate_random_access_with_scan(self):
        requests = [PageRequest(0, PageTag(0, 0), Operation.READ, AccessKind.RANDOM, scan=4)]
        with self.assertRaises(TraceValidationException):
            Trace(requests, {0: 1}).validate()

    def test_relations_is_a_copy(self):
        relations = self.trace.relations
        relations[7] = 100
        self.assertNotIn(7, self.trace.relations)

    def test_equality(self):
        self.assertEqual(self.trace, Trace(list(self.requests), {1: 4, 0: 2}))
        self.assertNotEqual(self.trace, Trace(self.requests[:3], {0: 2, 1: 4}))


if __name__ == '__main__':
    unittest.main()
