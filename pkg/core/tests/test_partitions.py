import random

from django.test import SimpleTestCase

from core.combinatorics.partitions import (
    EMPTY,
    Node,
    Partition,
    contains,
    content,
    dominance_leq,
    format_partition,
    is_p_regular,
    p_core_strip,
    parse_partition,
    partitions_of,
    skew_cells,
    transpose,
)
from core.exceptions import DomainError, ParseError


def P(*parts):
    return Partition(parts)


class PartitionTypeTests(SimpleTestCase):
    def test_rejects_increasing_or_non_positive_parts(self):
        with self.assertRaises(DomainError):
            P(4, 5)
        with self.assertRaises(DomainError):
            P(3, 0)

    def test_reads_past_the_end_are_zero(self):
        lam = P(5, 4)
        self.assertEqual(lam.part(3), 0)
        self.assertEqual(lam.padded(4), (5, 4, 0, 0))
        self.assertEqual(Partition.from_parts([2, 1, 0, 0]), P(2, 1))

    def test_size_and_length(self):
        lam = P(5, 5, 4, 4, 3, 2, 2, 2, 1)
        self.assertEqual(lam.size, 28)
        self.assertEqual(lam.length, 9)


class ParseTests(SimpleTestCase):
    def test_exponent_syntax(self):
        self.assertEqual(parse_partition("5^2,4^2,3,2^3,1"), P(5, 5, 4, 4, 3, 2, 2, 2, 1))

    def test_whitespace_and_empty(self):
        self.assertEqual(parse_partition(" 5 , 4 "), P(5, 4))
        self.assertEqual(parse_partition(""), EMPTY)

    def test_json_form(self):
        self.assertEqual(parse_partition('{"parts": [5, 4]}'), P(5, 4))

    def test_format_uses_exponents(self):
        self.assertEqual(format_partition(P(5, 5, 4, 4, 3, 2, 2, 2, 1)), "5^2,4^2,3,2^3,1")
        self.assertEqual(parse_partition(format_partition(P(3, 3, 1))), P(3, 3, 1))

    def test_malformed_text(self):
        for text in ("5,,4", "4,5", "a", "3^0", '{"parts": "x"}', "{oops"):
            with self.subTest(text=text), self.assertRaises(ParseError):
                parse_partition(text)


class TransposeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(transpose(EMPTY), EMPTY)
        self.assertEqual(transpose(P(1, 1, 1)), P(3))
        self.assertEqual(transpose(P(5, 4)), P(2, 2, 2, 2, 1))

    def test_involution_and_size(self):
        for n in range(21):
            for lam in partitions_of(n):
                with self.subTest(lam=str(lam)):
                    self.assertEqual(transpose(transpose(lam)), lam)
                    self.assertEqual(transpose(lam).size, lam.size)


class ContentAndRegularityTests(SimpleTestCase):
    def test_content(self):
        self.assertEqual(content(Node(1, 1)), 0)
        self.assertEqual(content(Node(4, 4)), 0)
        self.assertEqual(content(Node(2, 5)), 3)
        self.assertEqual(Node(2, 5).content, 3)

    def test_is_p_regular(self):
        self.assertFalse(is_p_regular(P(1, 1, 1), 3))
        self.assertTrue(is_p_regular(EMPTY, 3))
        self.assertTrue(is_p_regular(P(5, 4), 3))
        with self.assertRaises(DomainError):
            is_p_regular(P(1), 1)


class DominanceTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(dominance_leq(P(2, 2), P(3, 1)))
        self.assertFalse(dominance_leq(P(3, 1), P(2, 2)))
        self.assertTrue(dominance_leq(P(5, 4), P(5, 4)))

    def test_unequal_sizes(self):
        with self.assertRaises(DomainError):
            dominance_leq(P(2), P(2, 1))

    def test_partial_order(self):
        for n in range(1, 9):
            shapes = partitions_of(n)
            for a in shapes:
                self.assertTrue(dominance_leq(a, a))
                for b in shapes:
                    if a != b and dominance_leq(a, b):
                        self.assertFalse(dominance_leq(b, a), f"{a} and {b} n={n}")
                    for c in shapes:
                        if dominance_leq(a, b) and dominance_leq(b, c):
                            self.assertTrue(dominance_leq(a, c), f"{a} {b} {c}")


class ContainmentTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(contains(EMPTY, P(3, 1)))
        self.assertTrue(contains(P(4, 4), P(9, 4, 4)))
        self.assertTrue(contains(P(5, 4), P(9, 4, 4)))
        self.assertFalse(contains(P(5, 5), P(5, 4)))

    def test_mutual_containment_is_equality(self):
        shapes = [lam for n in range(7) for lam in partitions_of(n)]
        for a in shapes:
            for b in shapes:
                self.assertEqual(contains(a, b) and contains(b, a), a == b)

    def test_skew_cells(self):
        self.assertEqual(skew_cells(P(5, 4), P(5, 4)), frozenset())
        self.assertEqual(
            skew_cells(P(5, 4), P(9, 4, 4)),
            {(1, 6), (1, 7), (1, 8), (1, 9), (3, 1), (3, 2), (3, 3), (3, 4)},
        )
        self.assertEqual(skew_cells(EMPTY, P(2, 1)), {(1, 1), (1, 2), (2, 1)})
        with self.assertRaises(DomainError):
            skew_cells(P(5, 5), P(5, 4))


class CoreStripTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(p_core_strip(EMPTY, 5), (EMPTY, 0))
        self.assertEqual(p_core_strip(P(5, 4), 5), (P(3, 1), 1))
        for p in (2, 3, 5, 7):
            self.assertEqual(p_core_strip(P(p), p), (EMPTY, 1))

    def test_small_p(self):
        with self.assertRaises(DomainError):
            p_core_strip(P(2), 1)

    def test_size_identity(self):
        for n in range(13):
            for lam in partitions_of(n):
                for p in (2, 3, 5):
                    core, weight = p_core_strip(lam, p)
                    self.assertEqual(core.size + p * weight, lam.size)

    def test_removal_order_does_not_matter(self):
        rng = random.Random(20240517)
        shapes = [lam for n in range(21) for lam in partitions_of(n)]
        for _ in range(300):
            lam = rng.choice(shapes)
            p = rng.choice((2, 3, 5, 7))
            with self.subTest(lam=str(lam), p=p):
                self.assertEqual(p_core_strip(lam, p, rng), p_core_strip(lam, p))
