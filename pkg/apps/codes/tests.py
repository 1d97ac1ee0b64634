from fractions import Fraction

from django.test import SimpleTestCase

from apps.automata.models import Alphabet
from apps.birecurrence.operations import degree, is_birecurrent
from apps.codes.conjecture import conjecture_search, skewed
from apps.codes.construction import (delta_w, dp_set, gamma_w, power_family, proper_prefix_polynomial,
                                     vincent_iteration)
from apps.codes.models import Bernoulli, NoncommPoly
from apps.codes.operations import average_length, is_maximal_prefix, proper_prefixes, pure_square, pure_squares
from apps.codes.parsers import dump_code, parse_bernoulli, parse_code
from apps.codes.predicates import is_bifix_code, is_prefix_code, is_suffix_code
from apps.core.corpus import load_corpus_automaton, load_corpus_code
from apps.core.exceptions import DomainError, InputError, NotPrefixCode, ParseError
from apps.core.models import Outcome

SQUARE = ('aa', 'ab', 'ba', 'bb')


class PolynomialTests(SimpleTestCase):
    def test_product_is_not_commutative(self):
        a, b = NoncommPoly({'a': 1}), NoncommPoly({'b': 1})
        self.assertEqual((a * b).support(), frozenset({'ab'}))
        self.assertNotEqual(a * b, b * a)

    def test_truncated_star(self):
        self.assertEqual(NoncommPoly.of_set(['a']).star(3), NoncommPoly.of_set(['', 'a', 'aa', 'aaa']))

    def test_division(self):
        p = NoncommPoly.of_set(['', 'a'])
        m = NoncommPoly.of_set(['', 'b', 'ab'])
        self.assertEqual((p * m).left_divide(p), m)
        self.assertEqual((m * p).right_divide(p), m)
        self.assertIsNone(NoncommPoly.of_set(['b']).left_divide(p))

    def test_ring_laws(self):
        p = NoncommPoly({'': 2, 'a': Fraction(-1, 2), 'ba': 3})
        q = NoncommPoly({'b': 1, 'ab': Fraction(2, 3)})
        r = NoncommPoly({'': 1, 'bb': -1})
        self.assertEqual((p * q) * r, p * (q * r))
        self.assertEqual(p * (q + r), p * q + p * r)
        self.assertEqual((q + r) * p, q * p + r * p)
        self.assertEqual(p * NoncommPoly.one(), p)
        self.assertEqual(p - p, 0)

    def test_division_identities(self):
        p = NoncommPoly({'': 2, 'a': Fraction(-1, 2), 'ba': 3})
        for m in (NoncommPoly({'b': 1, 'ab': Fraction(2, 3)}), NoncommPoly.of_set(['', 'a', 'bab']), NoncommPoly()):
            with self.subTest(m=m):
                self.assertEqual((p * m).left_divide(p), m)
                self.assertEqual((m * p).right_divide(p), m)
        self.assertIsNone(NoncommPoly({'b': 1}).right_divide(p))

    def test_division_needs_a_constant_term(self):
        with self.assertRaises(DomainError):
            NoncommPoly.of_set(['a']).left_divide(NoncommPoly.of_set(['b']))


class PredicateTests(SimpleTestCase):
    def test_prefix_witness(self):
        check = is_prefix_code(['ba', 'a', 'ab'])
        self.assertFalse(check)
        self.assertEqual(check.witness, ('a', 'ab'))

    def test_suffix_witness(self):
        check = is_suffix_code(['b', 'ab'])
        self.assertFalse(check)
        self.assertEqual(check.witness, ('b', 'ab'))

    def test_bifix(self):
        self.assertTrue(is_bifix_code(SQUARE))
        self.assertFalse(is_bifix_code(['a', 'ba', 'bb']))

    def test_empty_word_is_not_a_code_word(self):
        with self.assertRaises(DomainError):
            is_prefix_code(['', 'a'])


class MeasureTests(SimpleTestCase):
    def test_maximality(self):
        self.assertTrue(is_maximal_prefix(SQUARE))
        self.assertTrue(is_maximal_prefix(load_corpus_code('degree3')))
        self.assertFalse(is_maximal_prefix(['a', 'ba']))
        with self.assertRaises(NotPrefixCode):
            is_maximal_prefix(['a', 'ab'])

    def test_average_length(self):
        self.assertEqual(average_length(SQUARE), 2)
        self.assertEqual(average_length(load_corpus_code('degree3')), 3)
        pi = Bernoulli({'a': Fraction(1, 3), 'b': Fraction(2, 3)})
        self.assertEqual(average_length(['a', 'ba', 'bb'], pi), Fraction(5, 3))

    def test_average_length_needs_maximality(self):
        with self.assertRaises(DomainError):
            average_length(['a', 'ba'])

    def test_bernoulli_must_sum_to_one(self):
        with self.assertRaises(InputError):
            Bernoulli({'a': Fraction(1, 2)})

    def test_skewed_distribution(self):
        pi = skewed(Alphabet(('a', 'b')))
        self.assertEqual(pi.probs, {'a': Fraction(1, 3), 'b': Fraction(2, 3)})


class PureSquareTests(SimpleTestCase):
    def test_pure_squares(self):
        self.assertEqual([ps.w for ps in pure_squares(SQUARE)], ['a', 'b'])
        self.assertEqual([ps.w for ps in pure_squares(load_corpus_code('degree3'))], ['ab'])

    def test_quotients(self):
        ps = pure_square(SQUARE, 'a')
        self.assertEqual(ps.G, frozenset({'a', 'b'}))
        self.assertEqual(ps.D, frozenset({'a', 'b'}))

    def test_square_must_belong_to_the_code(self):
        with self.assertRaises(DomainError):
            pure_square(SQUARE, 'ab')

    def test_clash_is_reported(self):
        with self.assertRaises(DomainError) as raised:
            pure_square(['aa', 'aba', 'abb', 'b'], 'a')
        self.assertIn("'aba'", raised.exception.message)


class ConstructionTests(SimpleTestCase):
    def test_delta_of_the_square_code(self):
        self.assertEqual(delta_w(pure_square(SQUARE, 'a')),
                         frozenset({'bb', 'aab', 'abb', 'baa', 'bab', 'aaaa', 'aaab', 'abaa', 'abab'}))

    def test_gamma_of_the_square_code(self):
        self.assertEqual(gamma_w(pure_square(SQUARE, 'a')),
                         frozenset({'bb', 'baa', 'bba', 'aab', 'bab', 'aaaa', 'baaa', 'aaba', 'baba'}))

    def test_proper_prefix_polynomial(self):
        ps = pure_square(load_corpus_code('degree3'), 'ab')
        self.assertEqual(proper_prefix_polynomial(ps), NoncommPoly.of_set(proper_prefixes(delta_w(ps))))

    def test_dp_set(self):
        result = dp_set(pure_square(SQUARE, 'a'))
        self.assertEqual(len(result.automaton.states), 4)
        self.assertTrue(is_birecurrent(result.automaton))
        self.assertTrue(result.decomposition.finite_type)
        self.assertEqual(set(result.decomposition.prefix_part.words), {'', 'a'})

    def test_dp_set_needs_a_bifix_code(self):
        with self.assertRaises(DomainError):
            dp_set(pure_square(['aa', 'ab', 'b'], 'a'))

    def test_vincent_iteration(self):
        report = vincent_iteration(frozenset(load_corpus_code('degree3_reversed')), 'ba')
        self.assertTrue(report.birecurrent)
        self.assertTrue(report.finite_type)
        self.assertEqual(len(report.identities), 4)
        self.assertTrue(is_maximal_prefix(report.x))

    def test_vincent_iteration_second_stage_is_not_suffix(self):
        report = vincent_iteration(frozenset(load_corpus_code('degree3_reversed')), 'ba')
        self.assertFalse(is_bifix_code(report.x))
        self.assertEqual(len(report.u), 81)
        self.assertFalse(is_suffix_code(report.u))
        self.assertEqual(len(report.automaton.states), 17)
        self.assertEqual(degree(report.automaton), 3)

    def test_gamma_of_a_bifix_code_is_suffix(self):
        ps = pure_square(load_corpus_code('degree3_reversed'), 'ba')
        self.assertTrue(is_suffix_code(gamma_w(ps)))

    def test_power_family(self):
        for n in (2, 3, 4):
            with self.subTest(n=n):
                member = power_family(n)
                self.assertEqual(len(member.x), (n + 1) ** 2)
                self.assertTrue(is_birecurrent(member.automaton))
                self.assertEqual(degree(member.automaton), 2)

    def test_power_family_starts_at_two(self):
        with self.assertRaises(DomainError):
            power_family(1)


class ConjectureTests(SimpleTestCase):
    def test_factorization_of_the_palindrome_set(self):
        result = conjecture_search(load_corpus_automaton('palindrome'))
        self.assertTrue(result.found)
        self.assertEqual(result.m, frozenset({'', 'b', 'aa', 'ba'}))
        self.assertEqual(result.n, frozenset({'', 'b', 'aa', 'ab'}))
        self.assertEqual(set(result.measures.values()), {result.index})

    def test_inapplicable_without_finite_type(self):
        self.assertEqual(conjecture_search(load_corpus_automaton('rev')).outcome, Outcome.INAPPLICABLE)


class ParserTests(SimpleTestCase):
    def test_code_file(self):
        self.assertEqual(parse_code('aa  # first\nab\n\nba\nbb\n'), SQUARE)

    def test_repeated_word(self):
        with self.assertRaises(ParseError) as raised:
            parse_code('aa\nab\naa\n')
        self.assertEqual(raised.exception.line, 3)

    def test_dump_in_length_lex_order(self):
        self.assertEqual(dump_code(['bb', 'a', 'ab']), 'a\nab\nbb\n')

    def test_bernoulli_file(self):
        pi = parse_bernoulli('prob a 1/3\nprob b 2/3\n')
        self.assertEqual(pi.of_word('ab'), Fraction(2, 9))
        with self.assertRaises(ParseError):
            parse_bernoulli('prob ab 1\n')
