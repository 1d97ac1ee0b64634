# apps/series/parsers.py
"""
Text format for linear representations.

    dim 2
    lambda 1 0
    gamma 0 1
    matrix a
    0 1
    0 1

One ``matrix`` block per letter; the alphabet is the order of the blocks.
"""
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

from apps.automata.models import Alphabet
from apps.core.exceptions import BirecError, InputError, ParseError
from apps.core.linalg import format_fraction, qmatrix, qvector
from apps.series.models import LinearRepresentation

logger = logging.getLogger(__name__)


def _rationals(tokens: List[str], number: int, source: Optional[str]) -> List[Fraction]:
    try:
        return [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational in {' '.join(tokens)!r}", line=number, source=source) from exc


def parse_representation(text: str, source: Optional[str] = None) -> LinearRepresentation:
    dim: Optional[int] = None
    lam = gamma = None
    matrices: Dict[str, List[List[Fraction]]] = {}
    current: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        fail = lambda msg: ParseError(msg, line=number, source=source)
        if keyword == 'dim':
            if dim is not None or len(args) != 1 or not args[0].isdigit():
                raise fail('expected a single "dim n" line first')
            dim = int(args[0])
            continue
        if dim is None:
            raise fail('"dim n" must come first')
        if keyword in ('lambda', 'gamma'):
            values = _rationals(args, number, source)
            if len(values) != dim:
                raise fail(f"{keyword} needs {dim} entries, got {len(values)}")
            if (lam if keyword == 'lambda' else gamma) is not None:
                raise fail(f"{keyword} given twice")
            if keyword == 'lambda':
                lam = values
            else:
                gamma = values
        elif keyword == 'matrix':
            if len(args) != 1 or len(args[0]) != 1:
                raise fail('expected "matrix <letter>"')
            if args[0] in matrices:
                raise fail(f"matrix of {args[0]!r} given twice")
            if current is not None and len(matrices[current]) != dim:
                raise fail(f"matrix of {current!r} has {len(matrices[current])} rows, expected {dim}")
            current = args[0]
            matrices[current] = []
        else:
            if current is None:
                raise fail(f"unknown keyword {keyword!r}")
            row = _rationals([keyword] + args, number, source)
            if len(row) != dim:
                raise fail(f"row has {len(row)} entries, expected {dim}")
            if len(matrices[current]) == dim:
                raise fail(f"matrix of {current!r} already has {dim} rows")
            matrices[current].append(row)
    if dim is None or lam is None or gamma is None:
        raise ParseError('dim, lambda and gamma lines are required', source=source)
    if not matrices:
        raise ParseError('at least one matrix block is required', source=source)
    for letter, rows in matrices.items():
        if len(rows) != dim:
            raise ParseError(f"matrix of {letter!r} has {len(rows)} rows, expected {dim}", source=source)
    alphabet = Alphabet(tuple(matrices))
    mu = {letter: qmatrix(rows, shape=(dim, dim)) for letter, rows in matrices.items()}
    return LinearRepresentation(alphabet, qvector(lam), mu, qvector(gamma))


def load_representation(path: Union[str, Path]) -> LinearRepresentation:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_representation(text, source=path.name)
    except BirecError:
        logger.error(f"❌ Failed to parse {path.name}")
        raise


def dump_representation(r: LinearRepresentation) -> str:
    """Inverse of ``parse_representation``."""
    row = lambda values: ' '.join(format_fraction(v) for v in values)
    lines = [f"dim {r.dim}", f"lambda {row(r.lam)}", f"gamma {row(r.gamma)}"]
    for letter in r.alphabet:
        lines.append(f"matrix {letter}")
        lines.extend(row(values) for values in r.mu[letter])
    return '\n'.join(line.rstrip() for line in lines) + '\n'
