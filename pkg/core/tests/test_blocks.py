from itertools import combinations, product

from django.test import SimpleTestCase

from core.combinatorics.abacus import check_bead_congruence, from_partition
from core.combinatorics.blocks import (
    block_classes,
    label_set,
    same_char0_block,
    same_limiting_block,
    same_limiting_block_labels,
    same_symmetric_block,
)
from core.combinatorics.partitions import EMPTY, Partition, partitions_of, transpose
from core.exceptions import DomainError


def P(*parts):
    return Partition(parts)


class SymmetricBlockTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(same_symmetric_block(P(5, 4), P(8, 1), 5))
        self.assertTrue(same_symmetric_block(P(5, 4), P(5, 4), 5))
        self.assertFalse(same_symmetric_block(P(2), P(1, 1), 5))
        self.assertFalse(same_symmetric_block(P(5, 4), P(9), 5))

    def test_sizes_must_match(self):
        with self.assertRaises(DomainError):
            same_symmetric_block(P(2), P(1), 3)

    def test_symmetric_block_implies_limiting_block(self):
        for n in range(9):
            for lam, mu in combinations(partitions_of(n), 2):
                for p in (3, 5):
                    if not same_symmetric_block(lam, mu, p):
                        continue
                    for delta in range(1, p):
                        with self.subTest(lam=str(lam), mu=str(mu), p=p, delta=delta):
                            self.assertTrue(same_limiting_block(lam, mu, delta, p))


class LimitingBlockTests(SimpleTestCase):
    def test_worked_example(self):
        certificate = same_limiting_block(P(5, 4), P(9, 4, 4), 2, 5)
        self.assertTrue(certificate)
        self.assertEqual(certificate.b_used, 20)
        self.assertEqual(certificate.invariant_lam, certificate.invariant_mu)
        self.assertIsNone(certificate.trace)

    def test_trace_connects_the_abaci(self):
        certificate = same_limiting_block(P(5, 4), P(9, 4, 4), 2, 5, with_trace=True)
        self.assertEqual(certificate.trace.start, from_partition(P(5, 4), 5, 20))
        self.assertEqual(certificate.trace.end, from_partition(P(9, 4, 4), 5, 20))
        self.assertEqual(len(certificate.as_json()["trace"]), len(certificate.trace))

    def test_parity_obstruction(self):
        certificate = same_limiting_block(P(5, 4), P(10, 4), 2, 5, with_trace=True)
        self.assertFalse(certificate)
        self.assertEqual(certificate.invariant_lam.runner0, certificate.invariant_mu.runner0)
        self.assertEqual(certificate.invariant_lam.paired, certificate.invariant_mu.paired)
        self.assertNotEqual(certificate.invariant_lam.parity, certificate.invariant_mu.parity)
        self.assertIsNone(certificate.trace)

    def test_same_partition(self):
        certificate = same_limiting_block(P(3, 1), P(3, 1), 1, 3, with_trace=True)
        self.assertTrue(certificate)
        self.assertEqual(certificate.trace.end, certificate.trace.start)

    def test_delta_zero_mod_p(self):
        with self.assertRaises(DomainError):
            same_limiting_block(P(5, 4), P(9, 4, 4), 10, 5)

    def test_explicit_b(self):
        self.assertTrue(same_limiting_block(P(5, 4), P(9, 4, 4), 2, 5, b=10))
        with self.assertRaises(DomainError):
            same_limiting_block(P(5, 4), P(9, 4, 4), 2, 5, b=11)

    def test_verdict_does_not_depend_on_b(self):
        # p more beads put one more bead on every runner
        delta, p = 2, 5
        for lam, mu in combinations(label_set(6), 2):
            b = max(lam.length, mu.length, 1)
            while not check_bead_congruence(b, delta, p):
                b += 1
            verdicts = {
                same_limiting_block(lam, mu, delta, p, b=b + k * p).verdict for k in range(3)
            }
            verdicts.add(same_limiting_block(lam, mu, delta, p).verdict)
            self.assertEqual(len(verdicts), 1, f"{lam} {mu} b={b}")

    def test_equivalence_relation(self):
        for n, delta, p in ((5, 2, 3), (6, 1, 5), (7, 3, 7)):
            labels = label_set(n)
            same = {
                (lam, mu): same_limiting_block(lam, mu, delta, p).verdict
                for lam, mu in product(labels, repeat=2)
            }
            for lam in labels:
                self.assertTrue(same[lam, lam], f"{lam}")
            for lam, mu in product(labels, repeat=2):
                self.assertEqual(same[lam, mu], same[mu, lam], f"{lam} {mu}")
            for lam, mu, nu in product(labels, repeat=3):
                if same[lam, mu] and same[mu, nu]:
                    self.assertTrue(same[lam, nu], f"n={n} {lam} {mu} {nu}")

    def test_labels_are_transposed(self):
        self.assertTrue(same_limiting_block_labels(transpose(P(5, 4)), transpose(P(9, 4, 4)), 2, 5))
        self.assertEqual(
            same_limiting_block_labels(P(3, 1), P(2, 1, 1), 1, 3).verdict,
            same_limiting_block(P(2, 1, 1), P(3, 1), 1, 3).verdict,
        )

    def test_any_representative_of_delta_mod_p(self):
        for delta in (2, 7, -3):
            self.assertTrue(same_limiting_block(P(5, 4), P(9, 4, 4), delta, 5))


class Char0BlockTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(same_char0_block(P(5, 4), P(9, 4, 4), 7))
        self.assertTrue(same_char0_block(P(4, 2), P(4, 2), -3))
        self.assertFalse(same_char0_block(P(1), EMPTY, 1))

    def test_char0_implies_limiting_block(self):
        # a W-orbit lies inside the W_p-orbit for every p
        for lam, mu, delta in ((P(5, 4), P(9, 4, 4), 7), (EMPTY, P(3, 3), 2), (P(2), P(1, 1), 3)):
            if same_char0_block(lam, mu, delta):
                for p in (3, 5, 7):
                    if delta % p:
                        self.assertTrue(same_limiting_block(lam, mu, delta, p), f"{lam} {mu} {p}")


class BlockClassTests(SimpleTestCase):
    def test_label_set(self):
        self.assertEqual(label_set(0), [EMPTY])
        self.assertEqual(label_set(2), [P(1, 1), P(2), EMPTY])
        self.assertEqual(len(label_set(5)), 7 + 3 + 1)

    def test_single_class_for_n_zero(self):
        classes = block_classes(0, 1, 3)
        self.assertEqual([block.members for block in classes], [(EMPTY,)])

    def test_classes_agree_with_the_pairwise_predicate(self):
        for n, delta, p in ((2, 1, 3), (4, 1, 3), (5, 2, 3), (6, 2, 5)):
            classes = block_classes(n, delta, p)
            members = [lam for block in classes for lam in block.members]
            self.assertCountEqual(members, label_set(n))
            home = {lam: number for number, block in enumerate(classes) for lam in block.members}
            for lam, mu in combinations(label_set(n), 2):
                with self.subTest(n=n, lam=str(lam), mu=str(mu)):
                    self.assertEqual(
                        home[lam] == home[mu], same_limiting_block(lam, mu, delta, p).verdict
                    )

    def test_classes_are_ordered_by_first_member(self):
        classes = block_classes(6, 1, 3)
        firsts = [block.members[0] for block in classes]
        self.assertEqual(firsts, sorted(firsts))
