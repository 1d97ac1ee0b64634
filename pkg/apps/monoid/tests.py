import numpy as np
from django.test import SimpleTestCase

from apps.automata.models import Alphabet
from apps.automata.parsers import parse_automaton
from apps.automata.sampling import random_dfa
from apps.core.corpus import load_corpus_automaton
from apps.core.exceptions import AmbiguityError, ResourceCapExceeded
from apps.monoid.eggbox import build_eggbox, eggbox_render
from apps.monoid.operations import (evaluate, find_saturating_word, is_saturated, kernel_of, minimal_images,
                                    rank, strongly_synchronizable_classes, synchronizable, transition_monoid)

SEED = 0x5EED


class TransitionMonoidTests(SimpleTestCase):
    def test_monoid_of_rev(self):
        g = transition_monoid(load_corpus_automaton('rev'))
        self.assertEqual(len(g), 6)
        self.assertEqual([m.witness for m in g.elements], ['', 'a', 'b', 'ab', 'ba', 'bb'])
        self.assertEqual(g.minimal_rank, 1)
        self.assertTrue(g.has_zero)
        self.assertEqual(g.elements[g.zero].witness, 'bb')

    def test_group_automaton_has_a_group_ideal(self):
        g = transition_monoid(load_corpus_automaton('cyclic3'))
        self.assertEqual(len(g), 3)
        self.assertEqual(g.minimal_rank, 3)
        self.assertFalse(g.has_zero)
        self.assertEqual(g.suschkevitch.order, 3)

    def test_brute_force_agreement(self):
        rng = np.random.default_rng(SEED)
        alphabet = Alphabet(('a', 'b'))
        for _ in range(10):
            a = random_dfa(rng, int(rng.integers(2, 6)), alphabet)
            g = transition_monoid(a)
            for word in alphabet.words(6):
                self.assertEqual(evaluate(a, word).key, g.elements[g.element_of(word)].value.key)

    def test_rank_is_monotone_under_products(self):
        g = transition_monoid(load_corpus_automaton('degree3'))
        for i in range(0, len(g), 7):
            for j in range(0, len(g), 5):
                product = g.elements[g.product(i, j)]
                self.assertLessEqual(rank(product), min(g.ranks[i], g.ranks[j]))

    def test_green_classes_refine(self):
        g = transition_monoid(load_corpus_automaton('palindrome'))
        for i in range(len(g)):
            for j in range(len(g)):
                if g.h_class[i] == g.h_class[j]:
                    self.assertEqual(g.r_class[i], g.r_class[j])
                    self.assertEqual(g.l_class[i], g.l_class[j])
                if g.r_class[i] == g.r_class[j] or g.l_class[i] == g.l_class[j]:
                    self.assertEqual(g.d_class[i], g.d_class[j])

    def test_cap_is_reported(self):
        with self.assertRaises(ResourceCapExceeded) as raised:
            transition_monoid(load_corpus_automaton('palindrome'), cap=3)
        self.assertEqual(raised.exception.cap, 3)
        self.assertEqual(raised.exception.exit_code, 4)


class BooleanMatrixTests(SimpleTestCase):
    def test_deterministic_ranks_agree(self):
        rng = np.random.default_rng(SEED)
        alphabet = Alphabet(('a', 'b'))
        for _ in range(10):
            a = random_dfa(rng, int(rng.integers(2, 6)), alphabet)
            by_maps = transition_monoid(a)
            by_matrices = transition_monoid(a.as_nfa())
            self.assertEqual(by_maps.ranks, by_matrices.ranks)
            self.assertEqual([m.witness for m in by_maps.elements], [m.witness for m in by_matrices.elements])

    def test_unambiguous_matrices_stay_zero_one(self):
        g = transition_monoid(load_corpus_automaton('unambiguous'))
        self.assertEqual(g.minimal_rank, 1)
        for m in g.elements:
            self.assertLessEqual(int(m.value.matrix.max(initial=0)), 1)
        self.assertEqual(g.ranks[g.element_of('ab')], 1)

    def test_ambiguous_product_is_rejected(self):
        a = parse_automaton('alphabet a\ninitial 1\nfinal 2\ntrans 1 a 1\ntrans 1 a 2\ntrans 2 a 2\n')
        with self.assertRaises(AmbiguityError) as raised:
            transition_monoid(a)
        self.assertEqual(raised.exception.witness, 'aa')


class KernelTests(SimpleTestCase):
    def setUp(self):
        self.palindrome = load_corpus_automaton('palindrome')

    def test_kernel_of_a_word(self):
        self.assertEqual(kernel_of(self.palindrome, 'b'), [('1', '2'), ('3', '4')])

    def test_saturation(self):
        self.assertTrue(is_saturated(self.palindrome, {'1', '2'}, 'b'))
        self.assertFalse(is_saturated(self.palindrome, {'1', '3'}, 'b'))
        self.assertEqual(find_saturating_word(self.palindrome, ('1', '2')), 'b')

    def test_minimal_images_of_degree3(self):
        g = transition_monoid(load_corpus_automaton('degree3'))
        images = {frozenset(image) for image in minimal_images(g)}
        self.assertEqual(images, {frozenset('123'), frozenset('467'), frozenset('145'), frozenset('189')})

    def test_synchronizable_pair(self):
        self.assertTrue(synchronizable(load_corpus_automaton('rev'), '1', '2'))
        self.assertFalse(synchronizable(load_corpus_automaton('cyclic3'), '1', '2'))

    def test_strongly_synchronizable_classes_of_a_group_automaton(self):
        classes = strongly_synchronizable_classes(load_corpus_automaton('cyclic3'))
        self.assertEqual(classes, [('1',), ('2',), ('3',)])


class EggboxTests(SimpleTestCase):
    def test_eggbox_of_rev(self):
        g = transition_monoid(load_corpus_automaton('rev'))
        box = build_eggbox(g)
        self.assertEqual(box.rows, ('1,2', '1'))
        self.assertEqual(box.columns, ('1', '2'))
        rendered = {position: cell.render() for position, cell in box.cells.items()}
        self.assertEqual(rendered, {('1,2', '1'): '*a', ('1,2', '2'): '*ab',
                                    ('1', '1'): '*ba', ('1', '2'): 'b'})
        self.assertEqual(box.cell_of(g, 'bab'), ('1', '2'))

    def test_eggbox_of_the_palindrome_set(self):
        box = build_eggbox(transition_monoid(load_corpus_automaton('palindrome')))
        self.assertEqual(box.rows, ('1,2/3,4', '1,4/2,3'))
        self.assertEqual(box.columns, ('1/3', '2/4'))

    def test_palindrome_eggbox_cell_by_cell(self):
        g = transition_monoid(load_corpus_automaton('palindrome'))
        box = build_eggbox(g)
        frame = box.to_frame()
        expected = {('1,2/3,4', '1/3'): '*b', ('1,2/3,4', '2/4'): '*ba',
                    ('1,4/2,3', '1/3'): '*ab', ('1,4/2,3', '2/4'): '*aba'}
        self.assertEqual({position: cell.render() for position, cell in box.cells.items()}, expected)
        for (row, column), text in expected.items():
            self.assertEqual(frame.loc[row, column], text)
        # each H-class is a group of order 2
        for word in ('b', 'ba', 'ab', 'aba'):
            self.assertEqual(len(g.h_members(g.h_class[g.element_of(word)])), 2)
        for word, position in (('bb', ('1,2/3,4', '1/3')), ('bba', ('1,2/3,4', '2/4')),
                               ('abb', ('1,4/2,3', '1/3')), ('abba', ('1,4/2,3', '2/4'))):
            self.assertEqual(box.cell_of(g, word), position)

    def test_eggbox_of_an_unambiguous_automaton(self):
        g = transition_monoid(load_corpus_automaton('unambiguous'))
        box = build_eggbox(g)
        self.assertEqual(box.rows, ('2,3', '1,3'))
        self.assertEqual(box.columns, ('3', '1,2'))
        self.assertEqual(box.cell_of(g, 'ab'), ('2,3', '3'))

    def test_render(self):
        text = eggbox_render(transition_monoid(load_corpus_automaton('rev')))
        self.assertIn('*ab', text)
        self.assertIn('1,2', text)
