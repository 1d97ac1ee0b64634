import numpy as np
from django.test import SimpleTestCase

from apps.automata.models import Alphabet
from apps.automata.parsers import parse_automaton
from apps.automata.operations import determinize, is_strongly_connected, languages_agree, minimize, trim
from apps.automata.sampling import random_dfa, random_nfa
from apps.birecurrence.operations import is_birecurrent
from apps.codes.construction import vincent_iteration
from apps.core.corpus import load_corpus_automaton, load_corpus_code
from apps.core.exceptions import AmbiguityError, DomainError
from apps.unambiguous.operations import is_unambiguous, require_unambiguous, unambiguous_recurrence

SEED = 0x5EED
AMBIGUOUS = 'alphabet a\ninitial 1\nfinal 2\ntrans 1 a 1\ntrans 1 a 2\ntrans 2 a 2\n'


class UnambiguityTests(SimpleTestCase):
    def test_corpus_automata_are_unambiguous(self):
        for name in ('unambiguous', 'vincent'):
            with self.subTest(name=name):
                self.assertTrue(is_unambiguous(load_corpus_automaton(name)))

    def test_witness_and_paths(self):
        check = is_unambiguous(parse_automaton(AMBIGUOUS))
        self.assertFalse(check)
        self.assertEqual(check.witness, 'aa')
        self.assertEqual(sorted(check.paths), [('1', '1', '2'), ('1', '2', '2')])

    def test_empty_word_can_be_ambiguous(self):
        a = parse_automaton('alphabet a\ninitial 1\ninitial 2\nfinal 1 2\ntrans 1 a 1\ntrans 2 a 2\n')
        self.assertEqual(is_unambiguous(a).witness, '')

    def test_require(self):
        with self.assertRaises(AmbiguityError) as raised:
            require_unambiguous(parse_automaton(AMBIGUOUS))
        self.assertEqual(raised.exception.witness, 'aa')

    def test_deterministic_automata_are_unambiguous(self):
        rng = np.random.default_rng(SEED)
        for _ in range(20):
            a = random_dfa(rng, int(rng.integers(1, 6)), Alphabet(('a', 'b')))
            self.assertTrue(is_unambiguous(a.as_nfa()))

    def test_witness_has_two_paths(self):
        rng = np.random.default_rng(SEED)
        for _ in range(20):
            check = is_unambiguous(random_nfa(rng, 4, Alphabet(('a', 'b'))))
            if not check:
                first, second = check.paths
                self.assertNotEqual(first, second)
                self.assertEqual(len(first), len(check.witness) + 1)


class RecurrenceTests(SimpleTestCase):
    def test_transcribed_seventeen_state_table(self):
        a = load_corpus_automaton('vincent')
        self.assertEqual(len(minimize(determinize(a)).states), 17)
        self.assertEqual(unambiguous_recurrence(a).minimal_rank, 1)

    def test_iterated_construction_has_rank_three(self):
        built = vincent_iteration(frozenset(load_corpus_code('degree3_reversed')), 'ba')
        report = unambiguous_recurrence(built.automaton.as_nfa())
        self.assertEqual(report.minimal_rank, 3)
        self.assertTrue(report.birecurrent)
        self.assertIsNotNone(report.witness_x)
        self.assertIsNotNone(report.witness_y)
        self.assertFalse(languages_agree(built.automaton, load_corpus_automaton('vincent'), 10))

    def test_witnesses_match_the_subset_automata(self):
        report = unambiguous_recurrence(load_corpus_automaton('unambiguous'))
        self.assertEqual(report.minimal_rank, 1)
        self.assertEqual(report.delta_strongly_connected, report.witness_x is not None)
        self.assertEqual(report.reversal_strongly_connected, report.witness_y is not None)

    def test_automaton_must_be_trim(self):
        a = parse_automaton('alphabet a b\ninitial 1\nfinal 1\ntrans 1 a 1\ntrans 1 b 2\n')
        with self.assertRaises(DomainError):
            unambiguous_recurrence(a.as_nfa())
        self.assertEqual(trim(a).states, ('1',))

    def test_deterministic_inputs_agree_with_the_birecurrence_verdict(self):
        for name in ('rev', 'revbis', 'palindrome', 'cyclic3'):
            with self.subTest(name=name):
                a = load_corpus_automaton(name)
                self.assertEqual(unambiguous_recurrence(a.as_nfa()).birecurrent, is_birecurrent(a))

    def test_criterion_on_random_unambiguous_automata(self):
        rng = np.random.default_rng(SEED)
        alphabet = Alphabet(('a', 'b'))
        checked = attempts = 0
        while checked < 100 and attempts < 50_000:
            attempts += 1
            a = trim(random_nfa(rng, int(rng.integers(1, 7)), alphabet, edge_probability=0.2))
            if not is_strongly_connected(a) or not is_unambiguous(a):
                continue
            # raises InternalInconsistency when the witnesses and the subset automata disagree
            report = unambiguous_recurrence(a)
            if report.witness_x is not None and report.witness_y is not None:
                self.assertTrue(report.birecurrent)
            checked += 1
        self.assertEqual(checked, 100)
