# apps/core/models.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class Outcome(str, Enum):
    """How an operation ended when it may end without a yes/no answer."""

    VERDICT = 'verdict'
    INAPPLICABLE = 'inapplicable'
    INDETERMINATE = 'indeterminate'
    NOT_FOUND = 'not found by this strategy'


@dataclass
class Report:
    """
    Result of one CLI subcommand.

    ``result`` is the serializer output and is the only part that goes to
    JSON together with ``command`` and ``inputs``; ``text`` is the human
    rendering and ``elapsed`` is shown in text mode only.
    """

    command: str
    inputs: Dict[str, Any]
    result: Dict[str, Any]
    text: str = ''
    warnings: List[str] = field(default_factory=list)
    elapsed: Optional[float] = None

    def payload(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'result': self.result,
            'warnings': self.warnings,
        }

    def lookup(self, path: str) -> Any:
        """
        Value at a dotted path of ``result``.

        ``terms.*.coefficient`` collects a field over a list and a trailing
        ``#`` gives the length of the value instead of the value.
        """
        length = path.endswith('#')
        value: Any = self.result
        for part in path.rstrip('#').split('.'):
            if part == '*':
                continue
            if isinstance(value, list):
                value = [item[part] for item in value]
            else:
                value = value[part]
        return len(value) if length else value
