from fractions import Fraction

from django.test import SimpleTestCase

from apps.automata.operations import determinize, literal_automaton, minimize
from apps.automata.parsers import parse_automaton
from apps.birecurrence.operations import is_birecurrent
from apps.codes.operations import average_length, is_maximal_prefix
from apps.core.corpus import load_corpus_automaton, load_corpus_bernoulli, load_corpus_representation
from apps.core.exceptions import DomainError, ParseError
from apps.core.models import Outcome
from apps.series.cr2 import cr2_constructive
from apps.series.decomposition import decompose_into_birecurrent, decompose_scalar, integer_combination_search
from apps.series.irreducible import count_irreducible_components
from apps.series.parsers import dump_representation, parse_representation
from apps.series.representation import (direct_sum, in_row_basis, minimize_representation, representation_from_dfa,
                                        representation_from_unambiguous, series_agree)
from apps.series.scalar import is_recurrent_series, level_sets, minimize_scalar
from apps.series.syntactic import code_star_reducibility, covers_minimal_ideal, is_completely_reducible, syntactic_data

SCALAR_CYCLE = 'alphabet a\ninitial 1\noutput 1 1\noutput 2 2\ntrans 1 a 2\ntrans 2 a 3\ntrans 3 a 1\n'


class RepresentationTests(SimpleTestCase):
    def test_coefficients(self):
        r = load_corpus_representation('aplus')
        self.assertEqual(r.dim, 2)
        self.assertEqual([r.coefficient(w) for w in ('', 'a', 'aa', 'aaa')], [0, 1, 1, 1])

    def test_minimal_dimensions(self):
        self.assertEqual(minimize_representation(load_corpus_representation('aplus')).rep.dim, 2)
        self.assertEqual(minimize_representation(load_corpus_representation('astar')).rep.dim, 1)

    def test_minimal_representation_of_an_automaton(self):
        r = representation_from_dfa(load_corpus_automaton('bifix3'))
        minimal = minimize_representation(r)
        self.assertEqual(minimal.original_dim, 5)
        self.assertEqual(minimal.rep.dim, 4)
        self.assertEqual(minimal.row_words[0], '')
        self.assertTrue(series_agree(r, minimal.rep, 10))

    def test_difference_of_equal_series_is_zero(self):
        r = representation_from_dfa(load_corpus_automaton('palindrome'))
        self.assertEqual(minimize_representation(direct_sum([r, r], [1, -1])).rep.dim, 0)

    def test_unambiguous_automaton_matches_its_determinization(self):
        a = load_corpus_automaton('unambiguous')
        self.assertTrue(series_agree(representation_from_unambiguous(a),
                                     representation_from_dfa(minimize(determinize(a))), 10))

    def test_split_of_a_plus_in_a_row_basis(self):
        r = in_row_basis(load_corpus_representation('aplus'), [[-1, 1], [0, 1]])
        self.assertEqual(list(r.lam), [-1, 1])
        self.assertEqual(r.mu['a'].tolist(), [[0, 0], [0, 1]])
        self.assertEqual(list(r.gamma), [1, 1])

    def test_dump_parses_back(self):
        r = load_corpus_representation('aplus')
        self.assertEqual(parse_representation(dump_representation(r)), r)

    def test_dim_comes_first(self):
        with self.assertRaises(ParseError) as raised:
            parse_representation('lambda 1 0\ndim 2\n')
        self.assertEqual(raised.exception.line, 1)

    def test_row_length_is_checked(self):
        with self.assertRaises(ParseError):
            parse_representation('dim 2\nlambda 1 0\ngamma 0 1\nmatrix a\n0 1 0\n')


class ReducibilityTests(SimpleTestCase):
    def test_birecurrent_sets_are_completely_reducible(self):
        for name in ('rev', 'palindrome', 'cyclic3'):
            with self.subTest(name=name):
                verdict = is_completely_reducible(load_corpus_automaton(name))
                self.assertEqual(verdict.outcome, Outcome.VERDICT)
                self.assertTrue(verdict.verdict)
                self.assertEqual(verdict.ek_dim, 0)

    def test_recurrent_sets_that_are_not_birecurrent(self):
        for name in ('revbis', 'xstar6bis'):
            with self.subTest(name=name):
                self.assertTrue(is_completely_reducible(load_corpus_automaton(name)).verdict)

    def test_non_recurrent_set_is_inapplicable(self):
        verdict = is_completely_reducible(load_corpus_automaton('aplus'))
        self.assertEqual(verdict.outcome, Outcome.INAPPLICABLE)
        self.assertIsNone(verdict.verdict)

    def test_star_of_a_code(self):
        bifix = code_star_reducibility(['aa', 'ab', 'ba', 'bb'])
        self.assertTrue(bifix.completely_reducible)
        self.assertTrue(bifix.bifix)
        prefix_only = code_star_reducibility(['a', 'ba', 'bb'])
        self.assertFalse(prefix_only.completely_reducible)
        self.assertFalse(prefix_only.bifix)

    def test_certificate_lies_in_the_eventual_kernel(self):
        x_star = parse_automaton('alphabet a b\ninitial 1\nfinal 1\ntrans 1 a 1\ntrans 1 b 2\n'
                                 'trans 2 a 1\ntrans 2 b 1\n')
        verdict = is_completely_reducible(x_star)
        self.assertFalse(verdict.verdict)
        self.assertGreater(verdict.ek_dim, 0)
        self.assertTrue(any(c != 0 for c in verdict.certificate))

    def test_eventual_subspaces_do_not_depend_on_the_distribution(self):
        uniform, skewed = load_corpus_bernoulli('uniform'), load_corpus_bernoulli('skewed')
        for x, lengths, ek_dim in ((['a', 'ba', 'bb'], (Fraction(3, 2), Fraction(5, 3)), 1),
                                   (['aa', 'ab', 'ba', 'bb'], (2, 2), 0)):
            with self.subTest(x=x):
                data = syntactic_data(literal_automaton(x))
                self.assertEqual((average_length(x, uniform), average_length(x, skewed)), lengths)
                for pi in (uniform, skewed):
                    self.assertTrue(is_maximal_prefix(x, pi))
                    self.assertEqual(pi.of_set(x), 1)
                self.assertEqual(data.ek_dim, ek_dim)
                self.assertEqual(code_star_reducibility(x).completely_reducible, ek_dim == 0)
                for vector in data.ek:
                    for i in data.monoid.ideal:
                        self.assertTrue(all(v == 0 for v in vector @ data.psi(i)))

    def test_covers_minimal_ideal(self):
        self.assertEqual(covers_minimal_ideal(load_corpus_automaton('cyclic3')), (True, 1))


class DecompositionTests(SimpleTestCase):
    def test_three_birecurrent_halves(self):
        result = decompose_into_birecurrent(load_corpus_automaton('qlin'))
        self.assertEqual(result.outcome, Outcome.VERDICT)
        self.assertEqual(sorted(t.coefficient for t in result.terms),
                         [Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2)])
        for term in result.terms:
            self.assertTrue(is_birecurrent(term.automaton))

    def test_no_integer_combination(self):
        search = integer_combination_search(load_corpus_automaton('qlin'))
        self.assertEqual(search.outcome, Outcome.NOT_FOUND)
        self.assertEqual(search.max_coefficient, 2)

    def test_difference_of_two_sets(self):
        result = decompose_into_birecurrent(load_corpus_automaton('revbis'))
        self.assertEqual(sorted(t.coefficient for t in result.terms), [-1, 1])
        search = integer_combination_search(load_corpus_automaton('revbis'))
        self.assertEqual(search.outcome, Outcome.VERDICT)

    def test_birecurrent_set_is_its_own_decomposition(self):
        result = decompose_into_birecurrent(load_corpus_automaton('palindrome'))
        self.assertEqual([t.coefficient for t in result.terms], [1])

    def test_decomposition_needs_complete_reducibility(self):
        x_star = parse_automaton('alphabet a b\ninitial 1\nfinal 1\ntrans 1 a 1\ntrans 1 b 2\n'
                                 'trans 2 a 1\ntrans 2 b 1\n')
        with self.assertRaises(DomainError):
            decompose_into_birecurrent(x_star)

    def test_non_recurrent_set(self):
        self.assertEqual(decompose_into_birecurrent(load_corpus_automaton('aplus')).outcome,
                         Outcome.INAPPLICABLE)


class ScalarTests(SimpleTestCase):
    def setUp(self):
        self.series = parse_automaton(SCALAR_CYCLE)

    def test_level_sets(self):
        levels = level_sets(self.series)
        self.assertEqual(sorted(levels), [1, 2])
        self.assertTrue(levels[1].accepts('aaa'))
        self.assertTrue(levels[2].accepts('a'))

    def test_recurrent_series(self):
        self.assertTrue(is_recurrent_series(self.series))
        self.assertEqual(len(minimize_scalar(self.series).states), 3)

    def test_decompose_scalar(self):
        result = decompose_scalar(self.series)
        self.assertEqual(result.outcome, Outcome.VERDICT)
        self.assertEqual(sorted(t.coefficient for t in result.terms), [1, 2])


class ConstructiveTests(SimpleTestCase):
    def test_absolutely_irreducible_series_is_rebuilt(self):
        trace = cr2_constructive(representation_from_dfa(load_corpus_automaton('rev')))
        self.assertEqual(trace.outcome, Outcome.VERDICT)
        self.assertTrue(trace.terms)
        self.assertTrue(is_recurrent_series(trace.birecurrent))

    def test_group_series_is_not_absolutely_irreducible(self):
        trace = cr2_constructive(representation_from_dfa(load_corpus_automaton('cyclic3')))
        self.assertEqual(trace.outcome, Outcome.INDETERMINATE)

    def test_zero_series(self):
        r = representation_from_dfa(load_corpus_automaton('rev'))
        self.assertEqual(cr2_constructive(direct_sum([r, r], [1, -1])).outcome, Outcome.INDETERMINATE)


class IrreducibleComponentTests(SimpleTestCase):
    def test_component_counts(self):
        for name, count in (('bifix3', 2), ('qlin', 1)):
            with self.subTest(name=name):
                result = count_irreducible_components(load_corpus_automaton(name))
                self.assertEqual(result.outcome, Outcome.VERDICT)
                self.assertEqual(result.count, count)

    def test_same_seed_same_answer(self):
        a = load_corpus_automaton('bifix3')
        self.assertEqual(count_irreducible_components(a, seed=7), count_irreducible_components(a, seed=7))

    def test_non_recurrent_set(self):
        self.assertEqual(count_irreducible_components(load_corpus_automaton('aplus')).outcome,
                         Outcome.INAPPLICABLE)
