import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from apps.core.conf import birec_setting
from apps.core.corpus import CORPUS, CorpusEntry, CorpusRunner, compare, corpus_path
from apps.core.exceptions import DomainError, InputError
from apps.core.models import Report
from apps.core.reports import ReportOptions, build_report


def automaton(name):
    return str(corpus_path('automata', name))


def code(name):
    return str(corpus_path('codes', name))


def birec(*args):
    out = StringIO()
    call_command('birec', *args, stdout=out)
    return out.getvalue()


class CommandTests(SimpleTestCase):
    def test_check_as_json(self):
        payload = json.loads(birec('check', automaton('rev'), '--json'))
        self.assertEqual(payload['command'], 'check')
        self.assertEqual(payload['inputs'], {'file': 'rev.aut'})
        self.assertTrue(payload['result']['birecurrent'])
        self.assertEqual(payload['result']['left_root'], ['a', 'ba'])

    def test_json_output_is_deterministic(self):
        first = birec('components', automaton('bifix3'), '--json', '--seed', '0x5EED')
        second = birec('components', automaton('bifix3'), '--json', '--seed', '0x5EED')
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first)['result']['count'], 2)
        self.assertNotIn('elapsed', first)

    def test_text_output(self):
        self.assertIn('Birecurrence of palindrome.aut', birec('check', automaton('palindrome')))
        self.assertIn('trans', birec('reverse', automaton('degree3')))

    def test_code_subcommands(self):
        delta = birec('delta', code('square'), 'a')
        self.assertEqual(delta.split(), ['bb', 'aab', 'abb', 'baa', 'bab', 'aaaa', 'aaab', 'abaa', 'abab'])
        payload = json.loads(birec('code', code('square'), '--json'))
        self.assertEqual(payload['result']['pure_squares'], ['a', 'b'])

    def test_parse_error_exit_code(self):
        with tempfile.TemporaryDirectory() as directory:
            broken = Path(directory) / 'broken.aut'
            broken.write_text('alphabet a\ninitial 1\ntrans 1 z 1\n', encoding='utf-8')
            with self.assertRaises(CommandError) as raised:
                birec('check', str(broken))
        self.assertEqual(raised.exception.returncode, 2)
        self.assertIn('line 3', str(raised.exception))

    def test_missing_file_exit_code(self):
        with self.assertRaises(CommandError) as raised:
            birec('check', '/nonexistent/set.aut')
        self.assertEqual(raised.exception.returncode, 2)

    def test_domain_error_exit_code(self):
        with self.assertRaises(CommandError) as raised:
            birec('delta', code('square'), 'ab')
        self.assertEqual(raised.exception.returncode, 3)

    def test_cap_exit_code(self):
        with self.assertRaises(CommandError) as raised:
            birec('monoid', automaton('palindrome'), '--cap', '3')
        self.assertEqual(raised.exception.returncode, 4)

    def test_inapplicable_is_not_an_error(self):
        payload = json.loads(birec('reducible', automaton('aplus'), '--json'))
        self.assertEqual(payload['result']['outcome'], 'inapplicable')

    def test_corpus_subcommand(self):
        with tempfile.TemporaryDirectory() as directory:
            target = Path(directory) / 'corpus.json'
            out = birec('corpus', '--workers', '2', '--report', str(target))
            summary = json.loads(target.read_text(encoding='utf-8'))
        self.assertIn(f"{len(CORPUS)}/{len(CORPUS)} entries passed", out)
        self.assertEqual(summary['status'], 'SUCCESS')


class ReportTests(SimpleTestCase):
    def test_lookup(self):
        report = Report('x', {}, {'terms': [{'c': 1}, {'c': 2}], 'words': ['a', 'b', 'c']})
        self.assertEqual(report.lookup('terms.*.c'), [1, 2])
        self.assertEqual(report.lookup('words#'), 3)

    def test_compare_sorted_and_missing(self):
        report = Report('x', {}, {'coefficients': ['1', '-1']})
        self.assertEqual(compare(report, {'coefficients~': ['-1', '1']}), [])
        self.assertEqual(len(compare(report, {'coefficients': ['-1', '1'], 'absent': 1})), 2)

    def test_unknown_command(self):
        with self.assertRaises(DomainError):
            build_report('frobnicate', [])

    def test_density_of_a_group_automaton(self):
        report = build_report('density', [automaton('cyclic3')], ReportOptions(bound=8))
        self.assertEqual(report.result['index'], '3/2')
        self.assertLess(report.result['cesaro_error'], 0.02)

    def test_check_rejects_scalar_automata(self):
        with tempfile.TemporaryDirectory() as directory:
            scalar = Path(directory) / 'scalar.aut'
            scalar.write_text('alphabet a\ninitial 1\noutput 1 1/2\ntrans 1 a 1\n', encoding='utf-8')
            with self.assertRaises(InputError):
                build_report('check', [str(scalar)])


class SettingsTests(SimpleTestCase):
    def test_defaults(self):
        with override_settings(BIREC={}):
            self.assertEqual(birec_setting('BOUND'), 12)
            self.assertEqual(birec_setting('SEED'), 0x5EED)

    def test_override(self):
        with override_settings(BIREC={'BOUND': 5}):
            self.assertEqual(ReportOptions().resolved_bound, 5)
            self.assertEqual(ReportOptions(bound=7).resolved_bound, 7)


class CorpusRunnerTests(SimpleTestCase):
    def test_every_entry_passes(self):
        runner = CorpusRunner(workers=1)
        table = runner.run()
        self.assertEqual(list(table.columns), ['entry', 'command', 'status', 'details'])
        self.assertTrue(runner.all_passed, table[table['status'] != 'pass'].to_string())

    def test_errors_are_collected(self):
        entries = [CorpusEntry('broken', 'check', (('automata', 'aplus'),), {'birecurrent': True})]
        runner = CorpusRunner(entries, workers=1)
        runner.run()
        self.assertFalse(runner.all_passed)
        self.assertEqual(runner.summary()['failed'], 1)
