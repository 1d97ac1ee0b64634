# apps/core/corpus.py
"""
Golden corpus and its runner.

The corpus files live under ``settings.BIREC['CORPUS_DIR']`` in one folder
per kind (``automata``, ``codes``, ``representations``, ``bernoulli``).
Each ``CorpusEntry`` runs one report builder and compares dotted paths of
its result with the worked values.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from apps.automata.parsers import load_automaton
from apps.codes.parsers import load_bernoulli, load_code
from apps.core.conf import birec_setting
from apps.core.exceptions import BirecError, InputError
from apps.core.models import Report
from apps.core.reports import ReportOptions, build_report
from apps.core.serializers import render_json
from apps.series.parsers import load_representation

logger = logging.getLogger(__name__)

KIND_SUFFIXES = {
    'automata': '.aut',
    'codes': '.code',
    'representations': '.rep',
    'bernoulli': '.pi',
}


def corpus_dir() -> Path:
    configured = birec_setting('CORPUS_DIR')
    if configured is None:
        raise InputError('BIREC["CORPUS_DIR"] is not configured')
    return Path(configured)


def corpus_path(kind: str, name: str) -> Path:
    """Path of a corpus file given its kind and its name without suffix."""
    try:
        suffix = KIND_SUFFIXES[kind]
    except KeyError:
        raise InputError(f"unknown corpus kind {kind!r}") from None
    path = corpus_dir() / kind / f"{name}{suffix}"
    if not path.exists():
        raise InputError(f"no corpus file {kind}/{name}{suffix}")
    return path


def load_corpus_automaton(name: str, kind: str = 'auto'):
    return load_automaton(corpus_path('automata', name), kind=kind)


def load_corpus_code(name: str) -> Tuple[str, ...]:
    return load_code(corpus_path('codes', name))


def load_corpus_representation(name: str):
    return load_representation(corpus_path('representations', name))


def load_corpus_bernoulli(name: str):
    return load_bernoulli(corpus_path('bernoulli', name))


@dataclass(frozen=True)
class CorpusEntry:
    """
    One golden example.

    ``files`` are (kind, name) pairs resolved against the corpus folder;
    ``words`` are extra positional arguments (the word w of a pure
    square). ``expected`` maps dotted result paths to values; a path
    ending in ``~`` is compared as a sorted list.
    """

    name: str
    command: str
    files: Tuple[Tuple[str, str], ...]
    expected: Dict[str, Any]
    words: Tuple[str, ...] = ()
    options: ReportOptions = field(default_factory=ReportOptions)

    def arguments(self) -> Tuple:
        return tuple(corpus_path(kind, name) for kind, name in self.files) + self.words


def _aut(name):
    return (('automata', name),)


def _code(name):
    return (('codes', name),)


CORPUS: List[CorpusEntry] = [
    # birecurrence verdicts and invariants
    CorpusEntry('rev', 'check', _aut('rev'), {
        'recurrent': True, 'birecurrent': True, 'finite_type': False, 'degree': 1,
        'left_root': ['a', 'ba'], 'right_root': 'infinite'}),
    CorpusEntry('palindrome', 'check', _aut('palindrome'), {
        'birecurrent': True, 'degree': 2, 'finite_type': True, 'P': ['eps', 'a'], 'left_root#': 9}),
    CorpusEntry('cyclic3', 'check', _aut('cyclic3'), {
        'birecurrent': True, 'degree': 3, 'dense': True, 'index': '3/2', 'density': '2/3'}),
    CorpusEntry('degree3', 'check', _aut('degree3'), {
        'birecurrent': True, 'degree': 3, 'finite_type': True}),
    CorpusEntry('xstar6', 'check', _aut('xstar6'), {
        'birecurrent': True, 'finite_type': False, 'right_root': 'infinite'}),
    CorpusEntry('s4', 'check', _aut('s4'), {
        'birecurrent': True, 'degree': 4, 'index': '2'}),
    CorpusEntry('revbis', 'check', _aut('revbis'), {'recurrent': True, 'birecurrent': False}),
    CorpusEntry('xstar6bis', 'check', _aut('xstar6bis'), {'recurrent': True, 'birecurrent': False}),
    CorpusEntry('unambiguous', 'check', _aut('unambiguous'), {
        'unambiguity.unambiguous': True, 'minimal_rank': 1}),
    # hand-transcribed 17-state table: unambiguous, but its monoid has rank 1
    CorpusEntry('vincent-automaton', 'check', _aut('vincent'), {
        'unambiguity.unambiguous': True, 'minimal_rank': 1}),
    CorpusEntry('cyclic3-density', 'density', _aut('cyclic3'), {
        'index': '3/2', 'density': '2/3', 'average_length': '3'}),
    CorpusEntry('palindrome-density', 'density', (('automata', 'palindrome'), ('bernoulli', 'skewed')), {
        'density': '1/2', 'average_length': '8/3'}),
    # reversals
    CorpusEntry('rev-reversal', 'reverse', _aut('rev'), {'states#': 2}),
    CorpusEntry('degree3-reversal', 'reverse', _aut('degree3'), {'states#': 9}),
    CorpusEntry('xstar6-reversal', 'reverse', _aut('xstar6'), {'states#': 6}),
    CorpusEntry('s4-reversal', 'reverse', _aut('s4'), {'states#': 6}),
    # minimal ideals
    CorpusEntry('rev-eggbox', 'monoid', _aut('rev'), {
        'minimal_rank': 1, 'eggbox.rows': ['1,2', '1'], 'eggbox.columns': ['1', '2']}),
    CorpusEntry('palindrome-eggbox', 'monoid', _aut('palindrome'), {
        'minimal_rank': 2, 'eggbox.rows': ['1,2/3,4', '1,4/2,3'], 'eggbox.columns': ['1/3', '2/4']}),
    CorpusEntry('unambiguous-eggbox', 'monoid', _aut('unambiguous'), {
        'minimal_rank': 1, 'eggbox.rows': ['2,3', '1,3'], 'eggbox.columns': ['3', '1,2']}),
    # series
    CorpusEntry('bifix3-minrep', 'minrep', _aut('bifix3'), {'rep.dim': 4, 'original_dim': 5}),
    CorpusEntry('aplus-minrep', 'minrep', (('representations', 'aplus'),), {'rep.dim': 2}),
    CorpusEntry('astar-minrep', 'minrep', (('representations', 'astar'),), {'rep.dim': 1}),
    CorpusEntry('revbis-reducible', 'reducible', _aut('revbis'), {
        'completely_reducible': True, 'ek_dim': 0}),
    CorpusEntry('xstar6bis-reducible', 'reducible', _aut('xstar6bis'), {
        'completely_reducible': True, 'ek_dim': 0}),
    CorpusEntry('qlin-decompose', 'decompose', _aut('qlin'), {
        'outcome': 'verdict', 'terms.*.coefficient~': ['-1/2', '1/2', '1/2'],
        'integer_search.outcome': 'not found by this strategy'}),
    CorpusEntry('revbis-decompose', 'decompose', _aut('revbis'), {
        'outcome': 'verdict', 'terms.*.coefficient~': ['-1', '1']}),
    CorpusEntry('xstar6bis-decompose', 'decompose', _aut('xstar6bis'), {
        'outcome': 'verdict', 'terms#': 3}),
    CorpusEntry('palindrome-decompose', 'decompose', _aut('palindrome'), {
        'outcome': 'verdict', 'terms.*.coefficient': ['1']}),
    CorpusEntry('bifix3-components', 'components', _aut('bifix3'), {'outcome': 'verdict', 'count': 2}),
    CorpusEntry('qlin-components', 'components', _aut('qlin'), {'outcome': 'verdict', 'count': 1}),
    # codes and constructions
    CorpusEntry('square-code', 'code', _code('square'), {
        'prefix.verdict': True, 'bifix.verdict': True, 'maximal_prefix': True,
        'average_length': '2', 'pure_squares': ['a', 'b'], 'star_completely_reducible': True}),
    CorpusEntry('square-delta', 'delta', _code('square'), {
        'code': ['bb', 'aab', 'abb', 'baa', 'bab', 'aaaa', 'aaab', 'abaa', 'abab']}, words=('a',)),
    CorpusEntry('square-dp', 'dp', _code('square'), {
        'states': 4, 'P': ['eps', 'a'], 'self_reversed': True}, words=('a',)),
    CorpusEntry('degree3-dp', 'dp', _code('degree3'), {'states': 9, 'P': ['eps', 'ab']}, words=('ab',)),
    CorpusEntry('degree3-vincent', 'vincent', _code('degree3_reversed'), {
        'birecurrent': True, 'finite_type': True, 'states': 17, 'u#': 81}, words=('ba',)),
]


@dataclass
class CorpusOutcome:
    index: int
    name: str
    command: str
    status: str
    failures: List[str]
    exit_code: int = 0

    @property
    def passed(self) -> bool:
        return self.status == 'pass'


def _normalize(value: Any, sort: bool) -> Any:
    if sort and isinstance(value, list):
        return sorted(value)
    return value


def compare(report: Report, expected: Dict[str, Any]) -> List[str]:
    """Paths of ``expected`` whose values differ from the report."""
    failures = []
    for path, wanted in expected.items():
        sort = path.endswith('~')
        try:
            actual = report.lookup(path.rstrip('~'))
        except (KeyError, TypeError, IndexError):
            failures.append(f"{path}: missing")
            continue
        if _normalize(actual, sort) != _normalize(wanted, sort):
            failures.append(f"{path}: expected {wanted!r}, got {actual!r}")
    return failures


class CorpusRunner:
    """
    Runs every corpus entry and collects a pass/fail table.

    Entries are independent; with several workers they run in a thread
    pool, and results are kept in corpus order.
    """

    def __init__(self, entries: Optional[List[CorpusEntry]] = None, workers: Optional[int] = None):
        self.entries = entries if entries is not None else CORPUS
        self.workers = workers or birec_setting('WORKERS')
        self.outcomes: List[CorpusOutcome] = []
        logger.info(f"Corpus runner initialized with {len(self.entries)} entries")

    def run_entry(self, index: int, entry: CorpusEntry) -> CorpusOutcome:
        try:
            report = build_report(entry.command, entry.arguments(), entry.options)
        except BirecError as exc:
            logger.error(f"❌ {entry.name}: {exc.message}")
            return CorpusOutcome(index, entry.name, entry.command, 'error', [exc.message], exc.exit_code)
        failures = compare(report, entry.expected)
        if failures:
            logger.error(f"❌ {entry.name}: {'; '.join(failures)}")
            return CorpusOutcome(index, entry.name, entry.command, 'fail', failures)
        logger.info(f"✅ {entry.name}")
        return CorpusOutcome(index, entry.name, entry.command, 'pass', [])

    def run(self) -> pd.DataFrame:
        start_time = datetime.now()
        logger.info("Starting corpus run...")
        logger.info("=" * 70)
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = [pool.submit(self.run_entry, i, e) for i, e in enumerate(self.entries)]
                self.outcomes = [f.result() for f in futures]
        else:
            self.outcomes = [self.run_entry(i, e) for i, e in enumerate(self.entries)]

        table = self.table()
        passed = int(table['status'].eq('pass').sum()) if not table.empty else 0
        logger.info("=" * 70)
        logger.info(f"⏱️ Execution Time: {datetime.now() - start_time}")
        logger.info(f"✅ Passed: {passed}")
        logger.info(f"❌ Failed: {len(self.outcomes) - passed}")
        return table

    def table(self) -> pd.DataFrame:
        rows = [{'entry': o.name, 'command': o.command, 'status': o.status,
                 'details': '; '.join(o.failures)} for o in self.outcomes]
        frame = pd.DataFrame(rows, columns=['entry', 'command', 'status', 'details'])
        frame.index = [o.index for o in self.outcomes]
        return frame

    @property
    def all_passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def summary(self) -> Dict[str, Any]:
        passed = sum(1 for o in self.outcomes if o.passed)
        return {
            'status': 'SUCCESS' if passed == len(self.outcomes) else 'FAILED',
            'entries': len(self.outcomes),
            'passed': passed,
            'failed': len(self.outcomes) - passed,
            'results': [{'entry': o.name, 'command': o.command, 'status': o.status,
                         'exit_code': o.exit_code, 'failures': o.failures} for o in self.outcomes],
        }

    def save_report(self, path) -> Path:
        """Write the run summary as JSON (no timings, so reruns give identical files)."""
        path = Path(path)
        path.write_text(render_json(self.summary()) + '\n', encoding='utf-8')
        logger.info(f"Corpus report saved: {path}")
        return path
