import random
import unittest

from PgBufferSim.Exceptions import InvalidStateException, NoVictimException, PinUnderflowException, \
    PolicyContractViolation
from PgBufferSim.Objects import AccessKind, EvictionPolicy, MAX_USAGE, Operation, OutcomeKind, PageRequest, \
    PageTag, RingBuffer
from PgBufferSim.Services import BufferPoolService, PolicyService, ScanService

from Tests.TestUtils import random_pages

A, B, C = PageTag(0, 0), PageTag(0, 1), PageTag(0, 2)


def read(seq, tag, stream=0):
    return PageRequest(seq, tag, Operation.READ, AccessKind.RANDOM, None, stream)


def write(seq, tag, stream=0):
    return PageRequest(seq, tag, Operation.WRITE, AccessKind.RANDOM, None, stream)


def scan_read(seq, block, scan=0):
    return PageRequest(seq, PageTag(1, block), Operation.READ, AccessKind.SEQUENTIAL, scan, 0)


class TestBufferPoolService(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.pool = BufferPoolService()
        cls.clock = PolicyService().get(EvictionPolicy.CLOCK)
        cls.scans = ScanService()

    def setUp(self):
        self.estimator = self.scans.estimator(self.scans.create_registry())
        self.rng = random.Random(1)

    def access_all(self, state, requests, policy=None):
        return [self.pool.access(state, request, policy or self.clock, self.estimator, self.rng)
                for request in requests]

    def test_lookup_empty_pool(self):
        state = self.pool.create_pool(4)
        self.assertIsNone(self.pool.lookup(state, A))

    def test_lookup_after_access(self):
        state = self.pool.create_pool(4)
        outcome, = self.access_all(state, [read(0, A)])
        self.assertEqual(self.pool.lookup(state, A), outcome.slot)

    def test_capacity_suffices(self):
        state = self.pool.create_pool(2)
        outcomes = self.access_all(state, [read(0, A), read(1, B), read(2, A)])
        self.assertEqual([outcome.kind for outcome in outcomes],
                         [OutcomeKind.MISS_FILLED_EMPTY, OutcomeKind.MISS_FILLED_EMPTY, OutcomeKind.HIT])
        self.assertIsNone(outcomes[2].victim)

    def test_forced_eviction(self):
        state = self.pool.create_pool(1)
        first, second = self.access_all(state, [read(0, A), read(1, B)])
        self.assertIs(second.kind, OutcomeKind.MISS_EVICTED)
        self.assertEqual(second.victim, first.slot)
        self.assertIsNone(self.pool.lookup(state, A))
        self.assertEqual(self.pool.lookup(state, B), 0)

    def test_dirty_victim_reported(self):
        state = self.pool.create_pool(2)
        outcomes = self.access_all(state, [write(0, A), read(1, B), read(2, C)])
        self.assertIs(outcomes[2].kind, OutcomeKind.MISS_EVICTED)
        self.assertEqual(outcomes[2].victim, 0)
        self.assertTrue(outcomes[2].victim_was_dirty)
        buf = state.slot(0)
        self.assertEqual(buf.tag, C)
        self.assertFalse(buf.is_dirty)
        self.assertEqual(buf.usage_count, 1)

    def test_fault_kind_mirrors_access(self):
        state = self.pool.create_pool(2)
        outcomes = self.access_all(state, [scan_read(0, 0), read(1, A)])
        self.assertIs(outcomes[0].estimated_fault_kind, AccessKind.SEQUENTIAL)
        self.assertIs(outcomes[1].estimated_fault_kind, AccessKind.RANDOM)

    def test_hit_bumps_usage_up_to_max(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(seq, A) for seq in range(10)])
        buf = state.slot(self.pool.lookup(state, A))
        self.assertEqual(buf.usage_count, MAX_USAGE)
        self.assertEqual(buf.last_access, 9)

    def test_hit_write_sets_dirty(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A), write(1, A), read(2, A)])
        self.assertTrue(state.slot(0).is_dirty)

    def test_pin_unpin_net_zero(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A)])
        self.pool.pin(state, 0)
        self.assertEqual(state.slot(0).refcount, 1)
        self.pool.unpin(state, 0)
        self.assertEqual(state.slot(0).refcount, 0)

    def test_unpin_underflow(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A)])
        with self.assertRaises(PinUnderflowException):
            self.pool.unpin(state, 0)

    def test_pin_empty_slot(self):
        state = self.pool.create_pool(2)
        with self.assertRaises(InvalidStateException):
            self.pool.pin(state, 1)

    def test_pinned_slot_not_evicted(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A), read(1, B)])
        self.pool.pin(state, 0)
        outcome, = self.access_all(state, [read(2, C)])
        self.assertEqual(outcome.victim, 1)
        self.assertEqual(self.pool.lookup(state, A), 0)

    def test_all_pinned_no_victim(self):
        state = self.pool.create_pool(1)
        self.access_all(state, [read(0, A)])
        self.pool.pin(state, 0)
        with self.assertRaises(NoVictimException) as context:
            self.access_all(state, [read(1, B)])
        self.assertEqual(context.exception.seq, 1)

    def test_policy_returning_pinned_slot(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A), read(1, B)])
        self.pool.pin(state, 0)
        rogue = EvictionPolicy("rogue", lambda state, estimator, rng: 0)
        with self.assertRaises(PolicyContractViolation) as context:
            self.access_all(state, [read(2, C)], policy=rogue)
        self.assertEqual(context.exception.seq, 2)
        self.assertEqual(context.exception.slot, 0)

    def test_policy_returning_out_of_range_slot(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A), read(1, B)])
        rogue = EvictionPolicy("rogue", lambda state, estimator, rng: 7)
        with self.assertRaises(PolicyContractViolation):
            self.access_all(state, [read(2, C)], policy=rogue)

    def test_empty_slots_filled_before_policy(self):
        state = self.pool.create_pool(3)
        rogue = EvictionPolicy("rogue", lambda state, estimator, rng: 99)
        outcomes = self.access_all(state, [read(0, A), read(1, B), read(2, C)], policy=rogue)
        self.assertEqual([outcome.slot for outcome in outcomes], [0, 1, 2])

    def test_cold_misses_only(self):
        pages = random_pages(seed=3, length=300, pages=25)
        state = self.pool.create_pool(25)
        outcomes = self.access_all(state, [read(seq, PageTag(0, page)) for seq, page in enumerate(pages)])
        misses = sum(1 for outcome in outcomes if not outcome.is_hit)
        self.assertEqual(misses, len(set(pages)))

    def test_audit_after_random_accesses(self):
        pages = random_pages(seed=4, length=500, pages=40)
        state = self.pool.create_pool(8)
        for seq, page in enumerate(pages):
            request = write(seq, PageTag(0, page)) if seq % 3 == 0 else read(seq, PageTag(0, page))
            self.pool.access(state, request, self.clock, self.estimator, self.rng)
            self.assertTrue(self.pool.audit(state))

    def test_audit_detects_broken_page_table(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A), read(1, B)])
        state.page_table[A] = 1
        with self.assertRaises(InvalidStateException):
            self.pool.audit(state)

    def test_audit_detects_dirty_empty_slot(self):
        state = self.pool.create_pool(2)
        self.access_all(state, [read(0, A)])
        state.slot(1).is_dirty = True
        with self.assertRaises(InvalidStateException):
            self.pool.audit(state)

    def test_block_group_linked_on_access(self):
        registry = self.scans.create_registry()
        self.scans.register_scan(registry, 0, relation=1, start_block=0, length=10, now=0)
        estimator = self.scans.estimator(registry)
        state = self.pool.create_pool(4)
        self.pool.access(state, scan_read(0, 0), self.clock, estimator, self.rng)
        self.pool.access(state, read(1, A), self.clock, estimator, self.rng)
        self.assertIs(state.slot(0).block_group, registry.group_of(PageTag(1, 0)))
        self.assertIsNone(state.slot(1).block_group)

    def test_resident_pages_linked_when_scan_registers(self):
        registry = self.scans.create_registry(group_size=4)
        estimator = self.scans.estimator(registry)
        state = self.pool.create_pool(4)
        self.pool.access(state, scan_read(0, 5), self.clock, estimator, self.rng)
        self.pool.access(state, scan_read(1, 12), self.clock, estimator, self.rng)
        self.pool.access(state, read(2, PageTag(0, 5)), self.clock, estimator, self.rng)
        self.assertIsNone(state.slot(0).block_group)

        self.scans.register_scan(registry, 9, relation=1, start_block=0, length=10, now=3)
        linked = self.pool.link_block_groups(state, registry, relation=1, first_block=0, last_block=9)
        self.assertEqual(linked, 1)
        self.assertIs(state.slot(0).block_group, registry.group_of(PageTag(1, 5)))
        self.assertIsNone(state.slot(1).block_group)
        self.assertIsNone(state.slot(2).block_group)
        self.pool.audit(state)

    def test_evolved_keeps_page_a_new_scan_will_read(self):
        registry = self.scans.create_registry(group_size=4)
        estimator = self.scans.estimator(registry)
        evolved = PolicyService().get(EvictionPolicy.EVOLVED)
        state = self.pool.create_pool(2)
        self.pool.access(state, scan_read(0, 5), evolved, estimator, self.rng)
        self.pool.access(state, read(1, A), evolved, estimator, self.rng)
        self.scans.register_scan(registry, 9, relation=1, start_block=0, length=10, now=2)
        self.pool.link_block_groups(state, registry, relation=1, first_block=0, last_block=9)

        outcome = self.pool.access(state, read(3, B), evolved, estimator, self.rng)
        self.assertEqual(outcome.victim, 1)
        self.assertEqual(self.pool.lookup(state, PageTag(1, 5)), 0)

    def test_background_clean_oldest_unpinned_first(self):
        state = self.pool.create_pool(4)
        self.access_all(state, [write(0, A), write(1, B), write(2, C), read(3, PageTag(0, 3))])
        self.pool.pin(state, 0)
        self.assertEqual(self.pool.background_clean(state, 1), 1)
        self.assertTrue(state.slot(0).is_dirty)
        self.assertFalse(state.slot(1).is_dirty)
        self.assertTrue(state.slot(2).is_dirty)
        self.assertEqual(self.pool.background_clean(state, 5), 1)
        self.assertFalse(state.slot(2).is_dirty)
        self.assertEqual(self.pool.background_clean(state, 0), 0)

    def test_ring_buffer_isolates_scan(self):
        state = self.pool.create_pool(4)
        self.access_all(state, [read(0, A), read(1, B)])
        ring = RingBuffer(scan_id=0, size=2)
        outcomes = [self.pool.access(state, scan_read(seq, block), self.clock, self.estimator, self.rng, ring)
                    for seq, block in enumerate(range(6), start=2)]
        self.assertEqual([outcome.slot for outcome in outcomes], [2, 3, 2, 3, 2, 3])
        self.assertEqual([outcome.victim for outcome in outcomes], [None, None, 2, 3, 2, 3])
        self.assertEqual(self.pool.lookup(state, A), 0)
        self.assertEqual(self.pool.lookup(state, B), 1)
        self.assertTrue(self.pool.audit(state))

    def test_ring_buffer_skips_pinned_slot(self):
        state = self.pool.create_pool(4)
        ring = RingBuffer(scan_id=0, size=2)
        for seq, block in enumerate(range(2)):
            self.pool.access(state, scan_read(seq, block), self.clock, self.estimator, self.rng, ring)
        self.pool.pin(state, 0)
        outcome = self.pool.access(state, scan_read(2, 2), self.clock, self.estimator, self.rng, ring)
        self.assertEqual(outcome.slot, 2)
        self.assertEqual(list(ring.slots), [1, 2])


if __name__ == '__main__':
    unittest.main()
