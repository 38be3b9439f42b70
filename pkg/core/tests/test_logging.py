import logging

from django.test import SimpleTestCase

from brauer_blocks.logging import MoveTraceFilter
from core.combinatorics.abacus import from_partition
from core.combinatorics.partitions import Partition
from core.combinatorics.reduction import is_b_reduced, reduce


class MoveTraceFilterTests(SimpleTestCase):
    def test_plain_records_pass(self):
        record = logging.makeLogRecord({"msg": "Reduced (5,4)"})
        self.assertTrue(MoveTraceFilter().filter(record))
        self.assertTrue(MoveTraceFilter(enabled=True).filter(record))

    def test_move_records_need_the_switch(self):
        record = logging.makeLogRecord({"msg": "a^1_(1,2)", "move": "a^1_(1,2)"})
        self.assertFalse(MoveTraceFilter().filter(record))
        self.assertTrue(MoveTraceFilter(enabled=True).filter(record))


class ReductionLoggingTests(SimpleTestCase):
    def test_every_move_is_logged(self):
        lam = Partition((5, 4))
        self.assertFalse(is_b_reduced(from_partition(lam, 5, 15)))
        with self.assertLogs("core.combinatorics.reduction", level="DEBUG") as logs:
            _, trace = reduce(lam, 5, 15)
        moves = [record.move for record in logs.records if hasattr(record, "move")]
        self.assertEqual(moves, list(trace.moves))
        self.assertIn("in", logs.records[-1].getMessage())
