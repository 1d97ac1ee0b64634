# apps/core/reports.py
"""
Report builders shared by the ``birec`` command and the corpus runner.

Every builder loads its input files, calls one operation of the apps and
returns a ``Report`` whose ``result`` is the serializer output. Files that
the CLI emits (automata, codes, representations) are the text rendering
of the corresponding reports, so they re-parse to the same value.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from apps.automata.models import Alphabet, Dfa, Nfa, ScalarOutputDfa, format_word
from apps.automata.operations import are_isomorphic, deterministic_reversal, minimize
from apps.automata.parsers import dump_automaton, load_automaton
from apps.automata.serializers import DfaSerializer
from apps.birecurrence.indecomposable import classify_indecomposable
from apps.birecurrence.operations import birecurrence_report, cesaro_average, code_star_density, index
from apps.birecurrence.roots import recurrent_decomposition
from apps.birecurrence.serializers import BirecurrenceReportSerializer, IndecomposabilitySerializer
from apps.codes.conjecture import conjecture_search
from apps.codes.construction import delta_w, dp_set, gamma_w, vincent_iteration
from apps.codes.models import Bernoulli
from apps.codes.operations import average_length, is_maximal_prefix, pure_square, pure_squares
from apps.codes.parsers import dump_code, load_bernoulli, load_code
from apps.codes.predicates import is_bifix_code, is_prefix_code, is_suffix_code
from apps.codes.serializers import (CodeCheckSerializer, ConjectureResultSerializer, DpSetSerializer,
                                    PureSquareSerializer, VincentReportSerializer)
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InputError, InvariantViolation
from apps.core.models import Outcome, Report
from apps.core.serializers import RationalField, render_json
from apps.monoid.eggbox import build_eggbox, eggbox_render
from apps.monoid.operations import transition_monoid
from apps.monoid.serializers import EggboxSerializer, GreenStructureSerializer
from apps.series.cr2 import cr2_constructive
from apps.series.decomposition import decompose_into_birecurrent, decompose_scalar, integer_combination_search
from apps.series.irreducible import count_irreducible_components
from apps.series.parsers import dump_representation, load_representation
from apps.series.representation import (minimize_representation, representation_from_dfa,
                                        representation_from_scalar, representation_from_unambiguous)
from apps.series.serializers import (CR2TraceSerializer, DecompositionResultSerializer,
                                     IntegerSearchSerializer, IrreducibleCountSerializer,
                                     MinimalRepresentationSerializer, ReducibilityVerdictSerializer)
from apps.series.syntactic import code_star_reducibility, covers_minimal_ideal, is_completely_reducible
from apps.unambiguous.operations import is_unambiguous, unambiguous_recurrence
from apps.unambiguous.serializers import UnambiguityWitnessSerializer, UnambiguousRecurrenceSerializer

logger = logging.getLogger(__name__)

REPRESENTATION_SUFFIX = '.rep'


@dataclass(frozen=True)
class ReportOptions:
    """Flag values of one invocation; ``None`` falls back to ``settings.BIREC``."""

    bound: Optional[int] = None
    cap: Optional[int] = None
    seed: Optional[int] = None
    max_len: Optional[int] = None
    max_coefficient: int = 2

    @property
    def resolved_bound(self) -> int:
        return self.bound if self.bound is not None else birec_setting('BOUND')

    @property
    def resolved_cap(self) -> int:
        return self.cap if self.cap is not None else birec_setting('CAP')

    @property
    def resolved_seed(self) -> int:
        return self.seed if self.seed is not None else birec_setting('SEED')


# ==================== LOADING ====================

def _dfa(path: Union[str, Path]) -> Dfa:
    automaton = load_automaton(path)
    if not isinstance(automaton, Dfa):
        raise InputError(f"{Path(path).name} is not a deterministic automaton")
    return automaton


def _alphabet_of_code(words) -> Alphabet:
    return Alphabet.from_words(w for w in words if w)


def _word_argument(w: str) -> str:
    return '' if w == 'eps' else w


# ==================== TEXT RENDERING ====================

def _format_value(value: Any) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, list):
        return '{' + ', '.join(_format_value(v) for v in value) + '}' if value else '{}'
    if isinstance(value, dict):
        return ', '.join(f"{k}={_format_value(v)}" for k, v in value.items())
    return str(value)


def render_fields(title: str, result: Dict[str, Any], fields: Optional[List[str]] = None) -> str:
    """``title`` followed by one ``  name: value`` line per field."""
    names = fields if fields is not None else list(result)
    lines = [title]
    lines.extend(f"  {name}: {_format_value(result[name])}" for name in names if name in result)
    return '\n'.join(lines) + '\n'


def render_report_json(report: Report) -> str:
    return render_json(report.payload())


# ==================== AUTOMATA AND MONOIDS ====================

def check_report(path, options: ReportOptions = ReportOptions()) -> Report:
    """Birecurrence report of a deterministic automaton, unambiguity report of an Nfa."""
    automaton = load_automaton(path)
    inputs = {'file': Path(path).name}
    if isinstance(automaton, ScalarOutputDfa):
        raise InputError('check expects a deterministic or an unambiguous automaton')
    if isinstance(automaton, Nfa):
        witness = is_unambiguous(automaton)
        result = {'unambiguity': UnambiguityWitnessSerializer(witness).data}
        if witness.verdict:
            recurrence = unambiguous_recurrence(automaton, options.resolved_cap)
            result.update(UnambiguousRecurrenceSerializer(recurrence).data)
        return Report('check', inputs, result, render_fields(f"Unambiguous automaton {inputs['file']}", result))
    report = birecurrence_report(automaton, options.resolved_bound, options.resolved_cap)
    result = BirecurrenceReportSerializer(report).data
    return Report('check', inputs, result, render_fields(f"Birecurrence of {inputs['file']}", result))


def monoid_report(path, options: ReportOptions = ReportOptions()) -> Report:
    automaton = load_automaton(path)
    if isinstance(automaton, ScalarOutputDfa):
        automaton = automaton.dfa
    g = transition_monoid(automaton, options.resolved_cap)
    result = GreenStructureSerializer(g).data
    result['eggbox'] = EggboxSerializer(build_eggbox(g)).data if g.ideal else None
    summary = render_fields(f"Transition monoid of {Path(path).name}", result,
                            ['size', 'minimal_rank', 'has_zero', 'suschkevitch_order'])
    return Report('monoid', {'file': Path(path).name}, result, summary + eggbox_render(g) + '\n')


def reverse_report(path, options: ReportOptions = ReportOptions()) -> Report:
    reversal = deterministic_reversal(_dfa(path))
    return Report('reverse', {'file': Path(path).name}, DfaSerializer(reversal).data, dump_automaton(reversal))


def minimize_report(path, options: ReportOptions = ReportOptions()) -> Report:
    minimal = minimize(_dfa(path))
    return Report('minimize', {'file': Path(path).name}, DfaSerializer(minimal).data, dump_automaton(minimal))


# ==================== SERIES ====================

def _representation(path):
    if Path(path).suffix == REPRESENTATION_SUFFIX:
        return load_representation(path)
    automaton = load_automaton(path)
    if isinstance(automaton, Nfa):
        return representation_from_unambiguous(automaton)
    if isinstance(automaton, ScalarOutputDfa):
        return representation_from_scalar(automaton)
    return representation_from_dfa(automaton)


def minrep_report(path, options: ReportOptions = ReportOptions()) -> Report:
    minimal = minimize_representation(_representation(path), options.resolved_bound)
    result = MinimalRepresentationSerializer(minimal).data
    return Report('minrep', {'file': Path(path).name}, result, dump_representation(minimal.rep))


def reducible_report(path, options: ReportOptions = ReportOptions()) -> Report:
    automaton = _dfa(path)
    verdict = is_completely_reducible(automaton, options.resolved_cap)
    result = ReducibilityVerdictSerializer(verdict).data
    if verdict.outcome == Outcome.VERDICT and verdict.verdict:
        covered, order = covers_minimal_ideal(automaton, options.resolved_cap)
        result['covers_minimal_ideal'] = covered
        result['group_order'] = order
    return Report('reducible', {'file': Path(path).name}, result,
                  render_fields(f"Complete reducibility of {Path(path).name}", result))


def decompose_report(path, options: ReportOptions = ReportOptions()) -> Report:
    """
    Rational decomposition of a set (plus the bounded integer search), of a
    scalar-output series by level sets, or the constructive trace of a
    representation file.
    """
    inputs = {'file': Path(path).name}
    bound, cap = options.resolved_bound, options.resolved_cap
    if Path(path).suffix == REPRESENTATION_SUFFIX:
        trace = cr2_constructive(load_representation(path), bound, cap)
        result = CR2TraceSerializer(trace).data
        return Report('decompose', inputs, result,
                      render_fields(f"Constructive decomposition of {inputs['file']}", result,
                                    ['outcome', 'u', 'v', 'X', 'Y', 'verified_bound', 'reason']))
    automaton = load_automaton(path)
    if isinstance(automaton, ScalarOutputDfa):
        decomposition = decompose_scalar(automaton, bound, cap)
        result = DecompositionResultSerializer(decomposition).data
    elif isinstance(automaton, Dfa):
        decomposition = decompose_into_birecurrent(automaton, bound, cap)
        result = DecompositionResultSerializer(decomposition).data
        search = integer_combination_search(automaton, options.max_coefficient, cap)
        result['integer_search'] = IntegerSearchSerializer(search).data
    else:
        raise InputError('decompose expects a deterministic automaton, a scalar automaton or a representation')
    lines = [f"Decomposition of {inputs['file']}: {result['outcome']}"]
    lines.extend(f"  {term['coefficient']} * S[{','.join(term['terminal'])}]" for term in result['terms'])
    if result['reason']:
        lines.append(f"  reason: {result['reason']}")
    if 'integer_search' in result:
        lines.append(f"  integer search: {result['integer_search']['outcome']}")
    return Report('decompose', inputs, result, '\n'.join(lines) + '\n')


def components_report(path, options: ReportOptions = ReportOptions()) -> Report:
    count = count_irreducible_components(_dfa(path), options.resolved_seed, cap=options.resolved_cap)
    result = IrreducibleCountSerializer(count).data
    return Report('components', {'file': Path(path).name, 'seed': hex(options.resolved_seed)}, result,
                  render_fields(f"Irreducible components of {Path(path).name}", result))


# ==================== CODES ====================

def code_report(path, pi_path=None, options: ReportOptions = ReportOptions()) -> Report:
    """Prefix/suffix/bifix checks of a finite code, its maximality, average length and pure squares."""
    words = load_code(path)
    alphabet = _alphabet_of_code(words)
    pi = load_bernoulli(pi_path) if pi_path else Bernoulli.uniform(alphabet)
    prefix = is_prefix_code(words)
    result: Dict[str, Any] = {
        'size': len(words),
        'prefix': CodeCheckSerializer(prefix).data,
        'suffix': CodeCheckSerializer(is_suffix_code(words)).data,
        'bifix': CodeCheckSerializer(is_bifix_code(words)).data,
        'maximal_prefix': None,
        'average_length': None,
        'star_density': None,
        'star_cesaro_error': None,
        'pure_squares': [],
        'star_completely_reducible': None,
    }
    if prefix.verdict:
        maximal = is_maximal_prefix(words, pi, alphabet)
        result['maximal_prefix'] = maximal
        if maximal:
            result['average_length'] = RationalField().to_representation(average_length(words, pi, alphabet))
            average, expected = code_star_density(words, pi, alphabet)
            result['star_density'] = RationalField().to_representation(expected)
            result['star_cesaro_error'] = float(abs(average - expected))
            result['star_completely_reducible'] = code_star_reducibility(
                words, alphabet, options.resolved_cap).completely_reducible
    if result['bifix']['verdict']:
        result['pure_squares'] = [format_word(ps.w) for ps in pure_squares(words)]
    inputs = {'file': Path(path).name, 'pi': Path(pi_path).name if pi_path else 'uniform'}
    return Report('code', inputs, result, render_fields(f"Code {inputs['file']}", result))


def classify_report(path, options: ReportOptions = ReportOptions()) -> Report:
    words = load_code(path)
    verdict = classify_indecomposable(words, _alphabet_of_code(words), cap=options.resolved_cap)
    result = IndecomposabilitySerializer(verdict).data
    return Report('classify', {'file': Path(path).name}, result,
                  render_fields(f"Classification of {Path(path).name}", result))


def _construction_report(command: str, build: Callable, path, w: str) -> Report:
    words = load_code(path)
    alphabet = _alphabet_of_code(words)
    ps = pure_square(words, _word_argument(w))
    code = build(ps, alphabet)
    result = {'pure_square': PureSquareSerializer(ps).data, 'code': dump_code(code, alphabet).split()}
    return Report(command, {'file': Path(path).name, 'w': w}, result, dump_code(code, alphabet))


def delta_report(path, w: str, options: ReportOptions = ReportOptions()) -> Report:
    return _construction_report('delta', delta_w, path, w)


def gamma_report(path, w: str, options: ReportOptions = ReportOptions()) -> Report:
    return _construction_report('gamma', gamma_w, path, w)


def dp_report(path, w: str, options: ReportOptions = ReportOptions()) -> Report:
    words = load_code(path)
    alphabet = _alphabet_of_code(words)
    result_set = dp_set(pure_square(words, _word_argument(w)), alphabet, options.resolved_bound)
    result = DpSetSerializer(result_set).data
    result['states'] = len(result_set.automaton.states)
    reversal = minimize(deterministic_reversal(result_set.automaton))
    result['self_reversed'] = are_isomorphic(minimize(result_set.automaton), reversal)
    return Report('dp', {'file': Path(path).name, 'w': w}, result, dump_automaton(result_set.automaton))


def vincent_report(path, w: str, options: ReportOptions = ReportOptions()) -> Report:
    words = load_code(path)
    report = vincent_iteration(frozenset(words), _word_argument(w), _alphabet_of_code(words),
                               options.resolved_bound)
    result = VincentReportSerializer(report).data
    return Report('vincent', {'file': Path(path).name, 'w': w}, result,
                  render_fields(f"Iteration of {Path(path).name} with w={w}", result,
                                ['nfa_states', 'states', 'identities', 'birecurrent', 'finite_type', 'u']))


def conjecture_report(path, options: ReportOptions = ReportOptions()) -> Report:
    max_len = options.max_len if options.max_len is not None else options.resolved_bound
    result = ConjectureResultSerializer(conjecture_search(_dfa(path), max_len)).data
    return Report('conjecture', {'file': Path(path).name, 'max_len': max_len}, result,
                  render_fields(f"Factorization search on {Path(path).name}", result))


def density_report(path, pi_path=None, options: ReportOptions = ReportOptions()) -> Report:
    """
    Density 1/i(S) next to the Cesàro average under π, and for sets of
    finite type the identity λ(X) = i(S)π(P).
    """
    automaton = minimize(_dfa(path))
    pi = load_bernoulli(pi_path) if pi_path else Bernoulli.uniform(automaton.alphabet)
    missing = [x for x in automaton.alphabet if x not in pi.probs]
    if missing:
        raise InputError(f"no probability for letters {', '.join(missing)}")
    value = index(automaton, options.resolved_cap)
    n = birec_setting('CESARO_N')
    average = cesaro_average(automaton, pi, n)
    field = RationalField()
    result: Dict[str, Any] = {
        'index': field.to_representation(value),
        'density': field.to_representation(1 / value),
        'cesaro_n': n,
        'cesaro_average': field.to_representation(average),
        'cesaro_error': float(abs(average - 1 / value)),
        'average_length': None,
    }
    decomposition = recurrent_decomposition(automaton)
    if decomposition.finite_type and decomposition.prefix_part.finite:
        length = average_length(decomposition.left_root.words, pi, automaton.alphabet)
        expected = value * pi.of_set(decomposition.prefix_part.words)
        if length != expected:
            raise InvariantViolation(f"λ(X) = {length} but i(S)π(P) = {expected}")
        result['average_length'] = field.to_representation(length)
    inputs = {'file': Path(path).name, 'pi': Path(pi_path).name if pi_path else 'uniform'}
    return Report('density', inputs, result, render_fields(f"Density of {inputs['file']}", result))


REPORT_BUILDERS: Dict[str, Callable[..., Report]] = {
    'check': check_report,
    'monoid': monoid_report,
    'reverse': reverse_report,
    'minimize': minimize_report,
    'minrep': minrep_report,
    'reducible': reducible_report,
    'decompose': decompose_report,
    'components': components_report,
    'code': code_report,
    'classify': classify_report,
    'delta': delta_report,
    'gamma': gamma_report,
    'dp': dp_report,
    'vincent': vincent_report,
    'conjecture': conjecture_report,
    'density': density_report,
}


def build_report(command: str, args, options: ReportOptions = ReportOptions()) -> Report:
    try:
        builder = REPORT_BUILDERS[command]
    except KeyError:
        raise DomainError(f"unknown command {command!r}") from None
    logger.debug(f"Building {command} report for {args}")
    return builder(*args, options=options)
