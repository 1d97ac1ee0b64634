import numpy as np
from django.test import SimpleTestCase

from apps.automata.models import Alphabet, Dfa, Nfa
from apps.automata.operations import (are_isomorphic, determinize, deterministic_reversal, enumerate_accepted,
                                      is_strongly_connected, languages_agree, literal_automaton, minimize,
                                      reverse, trim)
from apps.automata.parsers import dump_automaton, parse_automaton
from apps.automata.sampling import random_dfa, random_strongly_connected_dfa
from apps.core.corpus import load_corpus_automaton
from apps.core.exceptions import InputError, NotPrefixCode, ParseError

SEED = 0x5EED


class ParserTests(SimpleTestCase):
    def test_deterministic_file(self):
        a = load_corpus_automaton('rev')
        self.assertIsInstance(a, Dfa)
        self.assertEqual(a.states, ('1', '2'))
        self.assertEqual(a.terminal, frozenset({'1'}))
        self.assertTrue(a.accepts('aba'))
        self.assertFalse(a.accepts('bb'))

    def test_two_initial_states_give_an_nfa(self):
        a = load_corpus_automaton('vincent')
        self.assertEqual(a.initials, frozenset({'1', '14'}))
        self.assertEqual(len(a.states), 17)

    def test_dump_parses_back(self):
        for name in ('palindrome', 'degree3', 'unambiguous'):
            a = load_corpus_automaton(name)
            self.assertEqual(parse_automaton(dump_automaton(a)), a)

    def test_empty_language_parses_back(self):
        empty = trim(parse_automaton('alphabet a b\ninitial 1\ntrans 1 a 1\n'))
        self.assertIsNone(empty.initial)
        text = dump_automaton(empty)
        self.assertIn('initial\n', text)
        back = parse_automaton(text)
        self.assertIsInstance(back, Dfa)
        self.assertEqual(back, empty)

    def test_nfa_kind_survives_the_dump(self):
        deterministic_looking = load_corpus_automaton('rev').as_nfa()
        back = parse_automaton(dump_automaton(deterministic_looking))
        self.assertIsInstance(back, Nfa)
        self.assertEqual(back, deterministic_looking)
        self.assertEqual(parse_automaton(dump_automaton(load_corpus_automaton('vincent'))),
                         load_corpus_automaton('vincent'))

    def test_kind_line(self):
        a = parse_automaton('kind nfa\nalphabet a\ninitial 1\nfinal 1\ntrans 1 a 1\n')
        self.assertIsInstance(a, Nfa)
        with self.assertRaises(ParseError) as raised:
            parse_automaton('kind pda\nalphabet a\n')
        self.assertEqual(raised.exception.line, 1)

    def test_errors_carry_line_numbers(self):
        with self.assertRaises(ParseError) as raised:
            parse_automaton('alphabet a b\ninitial 1\ntrans 1 c 2\n')
        self.assertEqual(raised.exception.line, 3)
        self.assertEqual(raised.exception.exit_code, 2)

    def test_unknown_keyword(self):
        with self.assertRaises(ParseError):
            parse_automaton('alphabet a\nstart 1\n')

    def test_letters_are_single_characters(self):
        with self.assertRaises(InputError):
            Alphabet(('ab',))


class ReversalTests(SimpleTestCase):
    def test_reversal_of_rev_has_two_subset_states(self):
        reversal = deterministic_reversal(load_corpus_automaton('rev'))
        self.assertEqual(len(reversal.states), 2)
        self.assertEqual(set(reversal.members.values()), {('1',), ('1', '2')})

    def test_reversal_of_degree3_subsets(self):
        reversal = deterministic_reversal(load_corpus_automaton('degree3'))
        self.assertEqual(len(reversal.states), 9)
        self.assertEqual(reversal.members[reversal.initial], ('1', '6'))
        self.assertIn(('3', '4', '9'), reversal.members.values())
        self.assertIn(('2', '4', '8'), reversal.members.values())

    def test_reversal_sizes(self):
        for name, size in (('xstar6', 6), ('s4', 6), ('cyclic3', 3)):
            with self.subTest(name=name):
                self.assertEqual(len(deterministic_reversal(load_corpus_automaton(name)).states), size)

    def test_reversal_of_cyclic3(self):
        reversal = deterministic_reversal(load_corpus_automaton('cyclic3'))
        self.assertEqual(set(reversal.members.values()), {('1', '2'), ('1', '3'), ('2', '3')})

    def test_reverse_accepts_mirror_words(self):
        a = load_corpus_automaton('palindrome')
        mirror = reverse(a)
        for word in enumerate_accepted(a, 6):
            self.assertTrue(mirror.accepts(word[::-1]))


class MinimizeTests(SimpleTestCase):
    def test_minimal_sizes(self):
        for name, size in (('palindrome', 4), ('cyclic3', 3), ('aplus', 2), ('degree3', 9), ('qlin', 3)):
            with self.subTest(name=name):
                self.assertEqual(len(minimize(load_corpus_automaton(name)).states), size)

    def test_minimize_keeps_the_language(self):
        rng = np.random.default_rng(SEED)
        alphabet = Alphabet(('a', 'b'))
        for _ in range(50):
            a = random_dfa(rng, int(rng.integers(1, 7)), alphabet)
            self.assertTrue(languages_agree(a, minimize(a), 7))

    def test_minimal_automaton_is_unique_up_to_isomorphism(self):
        a = load_corpus_automaton('degree3')
        self.assertTrue(are_isomorphic(minimize(a), minimize(determinize(a.as_nfa()))))

    def test_double_reversal_is_minimal(self):
        a = load_corpus_automaton('palindrome')
        twice = deterministic_reversal(deterministic_reversal(a))
        self.assertTrue(are_isomorphic(minimize(a), minimize(twice)))
        self.assertEqual(len(twice.states), len(minimize(a).states))


class StructureTests(SimpleTestCase):
    def test_strong_connectivity(self):
        self.assertTrue(is_strongly_connected(load_corpus_automaton('rev')))
        self.assertFalse(is_strongly_connected(load_corpus_automaton('aplus')))

    def test_trim_drops_useless_states(self):
        a = parse_automaton('alphabet a b\ninitial 1\nfinal 1\ntrans 1 a 1\ntrans 1 b 2\n')
        self.assertEqual(trim(a).states, ('1',))

    def test_enumerate_in_length_lex_order(self):
        self.assertEqual(enumerate_accepted(load_corpus_automaton('rev'), 3),
                         ['', 'a', 'aa', 'ba', 'aaa', 'aba', 'baa'])

    def test_literal_automaton_of_a_square(self):
        a = literal_automaton(['aa', 'ab', 'ba', 'bb'])
        self.assertEqual(len(a.states), 3)
        self.assertTrue(a.accepts('abba'))
        self.assertFalse(a.accepts('aba'))

    def test_literal_automaton_needs_a_prefix_code(self):
        with self.assertRaises(NotPrefixCode):
            literal_automaton(['a', 'ab'])

    def test_random_strongly_connected_sampling(self):
        rng = np.random.default_rng(SEED)
        for _ in range(20):
            a = random_strongly_connected_dfa(rng, 5, Alphabet(('a', 'b')))
            self.assertIsNotNone(a)
            self.assertTrue(is_strongly_connected(a))
