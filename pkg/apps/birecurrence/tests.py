from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from apps.automata.models import Alphabet
from apps.automata.operations import literal_automaton, minimize
from apps.automata.sampling import random_strongly_connected_dfa
from apps.birecurrence.indecomposable import classify_indecomposable
from apps.birecurrence.operations import (birecurrence_check, birecurrence_report, cesaro_average, code_star_density,
                                          degree, density, index, is_birecurrent, is_dense, is_recurrent,
                                          saturated_terminal_sets)
from apps.birecurrence.roots import (is_finite_type, left_root, recurrent_decomposition,
                                     verify_decomposition)
from apps.codes.models import Bernoulli
from apps.codes.operations import average_length
from apps.core.corpus import load_corpus_automaton, load_corpus_bernoulli, load_corpus_code
from apps.core.exceptions import DomainError
from apps.monoid.operations import strongly_synchronizable_classes

SEED = 0x5EED
BIRECURRENT = ('rev', 'palindrome', 'cyclic3', 'degree3', 'xstar6', 's4')
DENSE = ('palindrome', 'cyclic3', 'degree3', 's4')


class VerdictTests(SimpleTestCase):
    def test_birecurrent_corpus_sets(self):
        for name in BIRECURRENT:
            with self.subTest(name=name):
                self.assertTrue(is_birecurrent(load_corpus_automaton(name)))

    def test_recurrent_but_not_birecurrent(self):
        for name in ('revbis', 'xstar6bis'):
            with self.subTest(name=name):
                a = load_corpus_automaton(name)
                self.assertTrue(is_recurrent(a))
                check = birecurrence_check(a)
                self.assertFalse(check.verdict)
                self.assertIsNone(check.saturating_word)

    def test_not_recurrent(self):
        self.assertFalse(is_recurrent(load_corpus_automaton('aplus')))
        self.assertFalse(is_birecurrent(load_corpus_automaton('aplus')))

    def test_dual_methods_agree_on_random_automata(self):
        rng = np.random.default_rng(SEED)
        alphabet = Alphabet(('a', 'b'))
        checked = 0
        while checked < 200:
            a = random_strongly_connected_dfa(rng, 7, alphabet)
            if a is None:
                continue
            # raises InternalInconsistency when the two methods disagree
            check = birecurrence_check(a)
            if check.verdict:
                self.assertIsNotNone(check.saturating_word)
            checked += 1

    def test_saturated_terminal_sets(self):
        sets = saturated_terminal_sets(load_corpus_automaton('palindrome'))
        for t in (('1', '2'), ('3', '4'), ('1', '4'), ('2', '3')):
            self.assertIn(t, sets)


class InvariantTests(SimpleTestCase):
    def test_degrees(self):
        for name, value in (('rev', 1), ('palindrome', 2), ('cyclic3', 3), ('degree3', 3), ('s4', 4)):
            with self.subTest(name=name):
                self.assertEqual(degree(load_corpus_automaton(name)), value)

    def test_index_and_density(self):
        cyclic = load_corpus_automaton('cyclic3')
        self.assertEqual(index(cyclic), Fraction(3, 2))
        self.assertEqual(density(cyclic), Fraction(2, 3))
        self.assertEqual(index(load_corpus_automaton('s4')), 2)
        self.assertEqual(index(load_corpus_automaton('palindrome')), 2)

    def test_index_needs_a_dense_set(self):
        self.assertFalse(is_dense(load_corpus_automaton('rev')))
        with self.assertRaises(DomainError):
            index(load_corpus_automaton('rev'))

    def test_cesaro_average_approaches_the_density(self):
        for name in DENSE:
            with self.subTest(name=name):
                a = load_corpus_automaton(name)
                self.assertLess(abs(cesaro_average(a, n=400) - density(a)), Fraction(1, 50))

    def test_density_of_a_code_star(self):
        self.assertEqual(code_star_density(['aa', 'ab', 'ba', 'bb']), (Fraction(1, 2), Fraction(1, 2)))
        average, expected = code_star_density(load_corpus_code('degree3'))
        self.assertEqual(expected, Fraction(1, 3))
        self.assertLess(abs(average - expected), Fraction(1, 50))

    def test_average_length_of_the_left_root(self):
        a = load_corpus_automaton('palindrome')
        d = recurrent_decomposition(a)
        for pi in (Bernoulli.uniform(a.alphabet), load_corpus_bernoulli('skewed')):
            self.assertEqual(average_length(d.left_root.words, pi, a.alphabet),
                             index(a) * pi.of_set(d.prefix_part.words))


class RootTests(SimpleTestCase):
    def test_roots_of_rev(self):
        d = recurrent_decomposition(load_corpus_automaton('rev'))
        self.assertEqual(d.left_root.words, ('a', 'ba'))
        self.assertFalse(d.right_root.finite)
        self.assertFalse(d.finite_type)

    def test_roots_of_the_palindrome_set(self):
        a = load_corpus_automaton('palindrome')
        d = recurrent_decomposition(a)
        self.assertEqual(len(d.left_root.words), 9)
        self.assertEqual(set(d.prefix_part.words), {'', 'a'})
        self.assertTrue(d.finite_type)
        self.assertEqual(verify_decomposition(a, d, 10), ['S = X*P', 'S = QY*'])
        self.assertEqual(len(d.right_root.words), 9)

    def test_finite_type(self):
        self.assertTrue(is_finite_type(load_corpus_automaton('degree3')))
        self.assertFalse(is_finite_type(load_corpus_automaton('xstar6')))

    def test_left_root_needs_recurrence(self):
        with self.assertRaises(DomainError):
            left_root(load_corpus_automaton('aplus'))


class ReportTests(SimpleTestCase):
    def test_report_of_degree3(self):
        report = birecurrence_report(load_corpus_automaton('degree3'))
        self.assertTrue(report.birecurrent)
        self.assertTrue(report.dense)
        self.assertTrue(report.finite_type)
        self.assertEqual(report.degree, 3)
        self.assertEqual(report.left_root_degree, 3)
        self.assertEqual(report.reversal_index, report.index)
        self.assertEqual(report.density, 1 / report.index)

    def test_report_of_a_non_recurrent_set(self):
        report = birecurrence_report(load_corpus_automaton('aplus'))
        self.assertFalse(report.recurrent)
        self.assertIsNone(report.decomposition)

    def test_saturation_classes_without_density(self):
        report = birecurrence_report(load_corpus_automaton('rev'))
        self.assertFalse(report.dense)
        self.assertIsNone(report.index)
        self.assertEqual(report.saturation_classes, 1)
        self.assertIsNone(birecurrence_report(load_corpus_automaton('revbis')).saturation_classes)


class IndecomposableTests(SimpleTestCase):
    def test_synchronized_code(self):
        self.assertEqual(classify_indecomposable(['a', 'ba', 'bb']).kind, 'synchronized')

    def test_group_code_is_a_left_root(self):
        verdict = classify_indecomposable(['aa', 'ab', 'ba', 'bb'])
        self.assertEqual(verdict.kind, 'left-root-of-dense-birecurrent')
        self.assertEqual(verdict.degree, 2)
        self.assertTrue(verdict.finite_type)

    def test_square_of_a_code_is_decomposable(self):
        x = recurrent_decomposition(load_corpus_automaton('palindrome')).left_root.words
        verdict = classify_indecomposable(x)
        self.assertEqual(verdict.kind, 'decomposable')
        self.assertIsNotNone(verdict.witness_code)
        z_star = minimize(literal_automaton(verdict.witness_code))
        for word in x:
            self.assertTrue(z_star.accepts(word))

    def test_strong_synchronizability_yields_the_decomposition(self):
        # {c, d, e, fc, fd, fe, ff} composed with A²: degree 2, not a group code
        x = ['aa', 'ab', 'ba', 'bbaa', 'bbab', 'bbba', 'bbbb']
        m = minimize(literal_automaton(x))
        self.assertEqual(len(m.states), 4)
        self.assertEqual(len(strongly_synchronizable_classes(m)), 2)
        verdict = classify_indecomposable(x)
        self.assertEqual(verdict.kind, 'decomposable')
        self.assertEqual(verdict.method, 'strong-synchronizability')
        self.assertEqual(set(verdict.witness_code), {'aa', 'ab', 'ba', 'bb'})

    def test_group_code_needs_the_congruence_search(self):
        x = load_corpus_code('fourth')
        m = minimize(literal_automaton(x))
        self.assertEqual(len(strongly_synchronizable_classes(m)), len(m.states))
        verdict = classify_indecomposable(x)
        self.assertEqual(verdict.kind, 'decomposable')
        self.assertEqual(verdict.method, 'principal-congruence')
        self.assertEqual(set(verdict.witness_code), {'aa', 'ab', 'ba', 'bb'})

    def test_classification_needs_a_maximal_prefix_code(self):
        with self.assertRaises(DomainError):
            classify_indecomposable(['a', 'ba'])
