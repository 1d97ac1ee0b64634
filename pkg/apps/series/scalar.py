# apps/series/scalar.py
"""Automata with a scalar output function: minimization, level sets, recurrence."""
import logging
from fractions import Fraction
from typing import Dict

from apps.automata.models import Dfa, ScalarOutputDfa
from apps.automata.operations import access_order, is_strongly_connected, minimize, trim
from apps.birecurrence.operations import is_recurrent
from apps.core.exceptions import InvariantViolation

logger = logging.getLogger(__name__)


def _useful(s: ScalarOutputDfa) -> ScalarOutputDfa:
    """Drop states that are not accessible or from which no nonzero output is reachable."""
    support = s.dfa
    kept = set(trim(support).states)
    delta = {(q, x): t for (q, x), t in s.delta.items() if q in kept and t in kept}
    initial = s.initial if s.initial in kept else None
    return ScalarOutputDfa(s.alphabet, tuple(q for q in s.states if q in kept), initial, delta,
                           {q: Fraction(v) for q, v in s.tau.items() if q in kept})


def minimize_scalar(s: ScalarOutputDfa) -> ScalarOutputDfa:
    """
    Moore refinement started from the partition by output value.

    States are labelled by their earliest member in breadth-first order,
    as for plain automata.
    """
    t = _useful(s)
    if t.initial is None:
        return ScalarOutputDfa(s.alphabet, (), None, {}, {})
    order = access_order(t.dfa)
    values: Dict[Fraction, int] = {}
    block = {q: values.setdefault(Fraction(t.tau.get(q, 0)), len(values)) for q in order}
    while True:
        signatures: Dict[tuple, int] = {}
        refined = {}
        for q in order:
            signature = (block[q],) + tuple(
                block[t.delta[(q, x)]] if (q, x) in t.delta else -1 for x in t.alphabet)
            refined[q] = signatures.setdefault(signature, len(signatures))
        stable = len(signatures) == len(set(block.values()))
        block = refined
        if stable:
            break
    representative: Dict[int, str] = {}
    for q in order:
        representative.setdefault(block[q], q)
    states = tuple(q for q in order if representative[block[q]] == q)
    delta = {(representative[block[q]], x): representative[block[target]]
             for (q, x), target in t.delta.items()}
    tau = {q: Fraction(t.tau.get(q, 0)) for q in states if t.tau.get(q, 0)}
    logger.debug("scalar automaton minimized from %d to %d states", len(s.states), len(states))
    return ScalarOutputDfa(s.alphabet, states, states[0], delta, tau)


def level_sets(s: ScalarOutputDfa) -> Dict[Fraction, Dfa]:
    """For each nonzero output α, the minimal automaton of {w : (S, w) = α}."""
    m = minimize_scalar(s)
    support = m.dfa
    return {value: minimize(support.with_terminal({q for q, v in m.tau.items() if v == value}))
            for value in m.values()}


def is_recurrent_series(s: ScalarOutputDfa) -> bool:
    """Strong connectivity of the minimal scalar automaton; level sets of a recurrent series are recurrent."""
    m = minimize_scalar(s)
    recurrent = is_strongly_connected(m.dfa.with_terminal(m.states)) if m.states else False
    if recurrent:
        for value, level in level_sets(m).items():
            if not is_recurrent(level):
                raise InvariantViolation(f"the level set of {value} of a recurrent series is not recurrent")
    return recurrent
