import random

from django.test import SimpleTestCase

from core.combinatorics.abacus import (
    Abacus,
    Move,
    apply_move,
    beta_sequence,
    check_bead_congruence,
    from_partition,
    from_positions,
    invert_move,
    move_a,
    move_d,
    move_m1,
    move_m2,
    move_m3,
    move_m4,
    orbit_invariant,
    p_core_abacus,
    render_abacus,
    runner_counts,
    to_partition,
    weight,
)
from core.combinatorics.partitions import EMPTY, Partition, p_core_strip, partitions_of
from core.exceptions import DomainError, IllegalMoveError, UsageError
from core.models import MoveKindChoice


def P(*parts):
    return Partition(parts)


FIVE_FOUR = frozenset({0, 1, 2, 3, 4, 5, 6, 7, 12, 14})
NINE_FOUR_FOUR = frozenset({0, 1, 2, 3, 4, 5, 6, 11, 12, 18})


class EncodingTests(SimpleTestCase):
    def test_beta_sequence(self):
        self.assertEqual(beta_sequence(P(5, 4), 10), (14, 12, 7, 6, 5, 4, 3, 2, 1, 0))
        self.assertEqual(beta_sequence(EMPTY, 3), (2, 1, 0))
        self.assertEqual(beta_sequence(P(3, 1), 4), (6, 3, 1, 0))

    def test_beta_sequence_needs_enough_beads(self):
        with self.assertRaises(DomainError):
            beta_sequence(P(1, 1, 1), 2)

    def test_from_partition(self):
        self.assertEqual(from_partition(P(5, 4), 5, 10).occupied, FIVE_FOUR)
        self.assertEqual(from_partition(EMPTY, 5, 5).occupied, frozenset(range(5)))
        self.assertEqual(from_partition(P(3, 1), 3, 4).occupied, frozenset({0, 1, 3, 6}))

    def test_to_partition(self):
        self.assertEqual(to_partition(from_positions(range(5), 5)), EMPTY)
        self.assertEqual(to_partition(from_positions(FIVE_FOUR, 5)), P(5, 4))
        self.assertEqual(to_partition(from_positions(NINE_FOUR_FOUR, 5)), P(9, 4, 4))

    def test_decode_encode_round_trip(self):
        for n in range(9):
            for lam in partitions_of(n):
                for b in (lam.length, lam.length + 4):
                    if b < 1:
                        continue
                    ab = from_partition(lam, 3, b)
                    self.assertEqual(to_partition(ab), lam)
                    self.assertEqual(ab.size, lam.size)

    def test_bead_labels(self):
        ab = from_partition(P(5, 4), 5, 10)
        self.assertEqual(ab.position(1), 14)
        self.assertEqual(ab.label(7), 3)
        with self.assertRaises(UsageError):
            ab.position(11)
        with self.assertRaises(UsageError):
            ab.label(13)

    def test_invalid_abacus(self):
        with self.assertRaises(UsageError):
            Abacus(5, 3, frozenset({0, 1}))
        with self.assertRaises(UsageError):
            Abacus(5, 2, frozenset({-1, 1}))
        with self.assertRaises(DomainError):
            Abacus(4, 2, frozenset({0, 1}))


class RunnerStatisticsTests(SimpleTestCase):
    def test_runner_counts(self):
        self.assertEqual(runner_counts(from_partition(P(5, 4), 5, 10)), (2, 2, 3, 1, 2))
        self.assertEqual(runner_counts(from_partition(EMPTY, 5, 5)), (1, 1, 1, 1, 1))
        self.assertEqual(runner_counts(from_partition(P(9, 4, 4), 5, 10)), (2, 3, 2, 2, 1))

    def test_orbit_invariant(self):
        invariant = orbit_invariant(from_partition(P(5, 4), 5, 10))
        self.assertEqual((invariant.runner0, invariant.paired, invariant.parity), (2, (4, 4), 1))
        self.assertEqual(invariant, orbit_invariant(from_partition(P(9, 4, 4), 5, 10)))
        empty = orbit_invariant(from_partition(EMPTY, 5, 5))
        self.assertEqual((empty.runner0, empty.paired, empty.parity), (1, (2, 2), 0))

    def test_invariant_counts_every_bead(self):
        for lam in partitions_of(7):
            ab = from_partition(lam, 7, 9)
            invariant = orbit_invariant(ab)
            self.assertEqual(invariant.runner0 + sum(invariant.paired), ab.b)

    def test_bead_congruence(self):
        self.assertTrue(check_bead_congruence(10, 2, 5))
        self.assertFalse(check_bead_congruence(10, 3, 5))
        self.assertTrue(check_bead_congruence(22, 7, 7))


class CoreTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(p_core_abacus(from_partition(P(5, 4), 5, 10)), (P(3, 1), 1))
        self.assertEqual(p_core_abacus(from_partition(EMPTY, 5, 5)), (EMPTY, 0))
        self.assertEqual(p_core_abacus(from_partition(P(5), 5, 5)), (EMPTY, 1))

    def test_slide_up_matches_rim_hook_stripping(self):
        for p in (3, 5, 7):
            for n in range(17):
                for lam in partitions_of(n):
                    ab = from_partition(lam, p, max(lam.length, 1))
                    with self.subTest(lam=str(lam), p=p):
                        self.assertEqual(p_core_abacus(ab), p_core_strip(lam, p))

    def test_weight_ignores_extra_beads(self):
        lam = P(6, 3, 3, 1)
        self.assertEqual(weight(from_partition(lam, 3, 4)), weight(from_partition(lam, 3, 13)))


class ElementaryMoveTests(SimpleTestCase):
    def setUp(self):
        self.ab = from_partition(P(5, 4), 5, 10)

    def test_move_a(self):
        moved = move_a(self.ab, 2, 1, 1)
        self.assertEqual(to_partition(moved), P(8, 1))
        self.assertEqual(runner_counts(moved), runner_counts(self.ab))

    def test_move_a_collision(self):
        with self.assertRaises(IllegalMoveError):
            move_a(self.ab, 3, 1, 1)

    def test_move_a_inverse(self):
        moved = move_a(self.ab, 2, 1, 1)
        back = move_a(moved, moved.label(9), moved.label(17), 1)
        self.assertEqual(back, self.ab)

    def test_move_d_example(self):
        moved = move_d(self.ab, 1, 3, 5)
        self.assertEqual(moved.occupied, NINE_FOUR_FOUR)
        self.assertEqual(to_partition(moved), P(9, 4, 4))

    def test_move_d_is_an_involution(self):
        moved = move_d(self.ab, 1, 3, 5)
        self.assertEqual(move_d(moved, moved.label(11), moved.label(18), 5), self.ab)

    def test_runner_zero_stays_on_runner_zero(self):
        ab = from_partition(P(2, 2), 5, 5)
        moved = move_d(ab, ab.label(0), ab.label(6), 3)
        self.assertIn(15, moved.occupied)
        self.assertEqual(runner_counts(moved)[0], runner_counts(ab)[0])

    def test_invalid_parameters(self):
        with self.assertRaises(UsageError):
            move_a(self.ab, 2, 2, 1)
        with self.assertRaises(UsageError):
            move_d(self.ab, 1, 3, 0)

    def test_move_below_zero(self):
        with self.assertRaises(IllegalMoveError):
            move_a(self.ab, 1, 10, 1)

    def test_invert_move(self):
        for move in (Move(MoveKindChoice.A, 2, 1, 1), Move(MoveKindChoice.D, 1, 3, 5)):
            with self.subTest(move=str(move)):
                after = apply_move(self.ab, move)
                self.assertEqual(apply_move(after, invert_move(self.ab, move, after)), self.ab)

    def test_move_str(self):
        self.assertEqual(str(Move(MoveKindChoice.D, 1, 3, 5)), "d^5_(1,3)")

    def test_random_moves(self):
        rng = random.Random(2718)
        shapes = [lam for n in range(11) for lam in partitions_of(n)]
        checked = 0
        while checked < 2_000:
            lam = rng.choice(shapes)
            p = rng.choice((3, 5, 7))
            b = lam.length + rng.randint(1, 5)
            i, j = rng.sample(range(1, b + 1), 2)
            move = Move(rng.choice((MoveKindChoice.A, MoveKindChoice.D)), i, j, rng.randint(1, 6))
            start = from_partition(lam, p, b)
            try:
                result = apply_move(start, move)
            except IllegalMoveError:
                continue
            checked += 1
            context = f"{lam} p={p} b={b} {move}"
            self.assertEqual(orbit_invariant(result), orbit_invariant(start), context)
            self.assertEqual((result.size - start.size) % 2, 0, context)
            if move.kind == MoveKindChoice.A:
                self.assertEqual(result.size, start.size, context)
                self.assertEqual(runner_counts(result), runner_counts(start), context)
            else:
                self.assertEqual(move_d(start, j, i, move.r), result, context)
            # beads are relabelled by position after the move
            self.assertEqual(from_partition(to_partition(result), p, b), result, context)
            self.assertEqual(apply_move(result, invert_move(start, move, result)), start, context)


class CompositeMoveTests(SimpleTestCase):
    def test_m1_matches_move_a(self):
        ab = from_partition(P(5, 4), 5, 10)
        moved, trace = move_m1(ab, up=1, down=2)
        self.assertEqual(to_partition(moved), P(8, 1))
        self.assertEqual(trace.end, moved)

    def test_m1_blocked(self):
        ab = from_partition(P(5, 4), 5, 10)
        with self.assertRaises(IllegalMoveError):
            move_m1(ab, up=1, down=3)

    def test_m2_sends_a_runner_pair_over_the_arc(self):
        ab = from_partition(P(5, 4), 5, 10)
        moved, trace = move_m2(ab, 2, 3, 4)
        self.assertEqual(moved.occupied, frozenset({0, 1, 2, 3, 4, 5, 6, 8, 13, 14}))
        self.assertEqual(to_partition(moved), P(5, 5, 1))
        self.assertEqual(orbit_invariant(moved), orbit_invariant(ab))
        self.assertEqual(len(trace), 1)

    def test_m2_needs_consecutive_beads_of_one_runner(self):
        ab = from_partition(P(5, 4), 5, 10)
        with self.assertRaises(UsageError):
            move_m2(ab, 2, 4, 4)
        with self.assertRaises(UsageError):
            move_m2(ab, 2, 8, 4)

    def test_m4_then_m3_round_trip(self):
        ab = from_partition(P(5, 4), 5, 15)
        lowered, down = move_m4(ab, 1, 2)
        self.assertEqual(lowered.occupied, (ab.occupied - {19, 17}) | {24, 22})
        self.assertEqual(down.start, ab)
        self.assertEqual(down.replay(), lowered)

        raised, up = move_m3(lowered, lowered.label(24), lowered.label(22))
        self.assertEqual(raised, ab)
        self.assertEqual(up.replay(), ab)
        for before, _, after in up.steps():
            self.assertEqual(orbit_invariant(before), orbit_invariant(after))

    def test_m3_moves_one_bead_twice(self):
        ab = from_partition(P(5, 4), 5, 15)
        lowered, _ = move_m4(ab, 1, 1)
        self.assertEqual(lowered.occupied, (ab.occupied - {19}) | {29})
        raised, _ = move_m3(lowered, 1, 1)
        self.assertEqual(raised, ab)

    def test_m3_with_a_short_helper_runner(self):
        ab = from_partition(P(5, 4), 5, 10)
        with self.assertRaises(UsageError):
            move_m3(ab, 1, 2, helper_runner=3)


class RenderTests(SimpleTestCase):
    def test_header_lists_the_arcs(self):
        text = render_abacus(from_partition(P(5, 4), 5, 10))
        lines = text.splitlines()
        self.assertEqual(lines[0], "arcs 1~4 2~3")
        self.assertEqual(lines[1], "0 1 2 3 4")
        self.assertEqual(lines[2], "o o o o o")
        self.assertEqual(len(lines), 2 + 3)
