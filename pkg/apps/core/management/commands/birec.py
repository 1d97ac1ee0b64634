# apps/core/management/commands/birec.py
import logging
import time

from django.core.management.base import BaseCommand, CommandError

from apps.core.corpus import CorpusRunner
from apps.core.exceptions import BirecError
from apps.core.reports import ReportOptions, build_report, render_report_json

logger = logging.getLogger('birec')

# subcommand -> (positional arguments, optional positional arguments, help)
SUBCOMMANDS = {
    'check': (['file'], [], 'birecurrence report of an automaton (unambiguity report for an Nfa)'),
    'monoid': (['file'], [], "transition monoid, Green's classes and the eggbox of the minimal ideal"),
    'reverse': (['file'], [], 'deterministic reversal'),
    'minimize': (['file'], [], 'minimal automaton'),
    'minrep': (['file'], [], 'minimal linear representation of an automaton or a representation file'),
    'reducible': (['file'], [], 'complete reducibility with its certificate'),
    'decompose': (['file'], [], 'decomposition into birecurrent sets'),
    'components': (['file'], [], 'number of irreducible constituents'),
    'code': (['codefile'], ['pifile'], 'prefix, suffix, bifix and maximality checks of a code'),
    'classify': (['codefile'], [], 'classification of an indecomposable maximal prefix code'),
    'delta': (['codefile', 'w'], [], 'the code δ_w(Z)'),
    'gamma': (['codefile', 'w'], [], 'the code γ_w(Z)'),
    'dp': (['codefile', 'w'], [], 'the birecurrent set δ_w(Z)*{ε, w}'),
    'vincent': (['codefile', 'w'], [], 'the iterated construction V = {ε, w²}U*{ε, w}'),
    'conjecture': (['file'], [], 'search for M, N with 𝟙(M)(1-𝟙(A)) = (1-𝟙(A))𝟙(N)'),
    'density': (['file'], ['pifile'], 'index, density and Cesàro average'),
}


def _seed(value: str) -> int:
    return int(value, 0)


class Command(BaseCommand):
    help = 'Birecurrent sets and complete reducibility: decide, compute and construct'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)
        for name, (required, optional, text) in SUBCOMMANDS.items():
            sub = subparsers.add_parser(name, help=text)
            for argument in required:
                sub.add_argument(argument)
            for argument in optional:
                sub.add_argument(argument, nargs='?')
            self._add_flags(sub)
            if name == 'conjecture':
                sub.add_argument('--max-len', type=int, dest='max_len')
            if name == 'decompose':
                sub.add_argument('--max-coefficient', type=int, default=2, dest='max_coefficient')
        corpus = subparsers.add_parser('corpus', help='run every golden example')
        corpus.add_argument('--workers', type=int)
        corpus.add_argument('--report', help='write the pass/fail summary as JSON')

    def _add_flags(self, parser):
        parser.add_argument('--json', action='store_true', help='machine-readable output')
        parser.add_argument('--bound', type=int, help='length bound of the verifications (default 12)')
        parser.add_argument('--cap', type=int, help='maximum number of monoid elements')
        parser.add_argument('--seed', type=_seed, help='seed of the random splitting (hex allowed)')

    def handle(self, *args, **options):
        subcommand = options['subcommand']
        try:
            if subcommand == 'corpus':
                return self._run_corpus(options)
            return self._run_report(subcommand, options)
        except BirecError as exc:
            logger.error(f"❌ {subcommand}: {exc.message}")
            raise CommandError(exc.message, returncode=exc.exit_code) from exc

    def _run_report(self, subcommand, options):
        required, optional, _ = SUBCOMMANDS[subcommand]
        arguments = [options[name] for name in required]
        arguments.extend(options[name] for name in optional if options.get(name))
        flags = ReportOptions(
            bound=options.get('bound'),
            cap=options.get('cap'),
            seed=options.get('seed'),
            max_len=options.get('max_len'),
            max_coefficient=options.get('max_coefficient') or 2,
        )
        start = time.perf_counter()
        report = build_report(subcommand, arguments, flags)
        report.elapsed = time.perf_counter() - start
        if options['json']:
            self.stdout.write(render_report_json(report))
        else:
            self.stdout.write(report.text, ending='')
            if options['verbosity'] > 1:
                self.stdout.write(f"⏱️ {report.elapsed:.3f}s")

    def _run_corpus(self, options):
        runner = CorpusRunner(workers=options.get('workers'))
        table = runner.run()
        self.stdout.write(table.to_string())
        summary = runner.summary()
        self.stdout.write(f"\n{summary['passed']}/{summary['entries']} entries passed")
        if options.get('report'):
            runner.save_report(options['report'])
        if not runner.all_passed:
            raise CommandError(f"{summary['failed']} corpus entries failed", returncode=1)
