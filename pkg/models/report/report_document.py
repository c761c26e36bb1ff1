from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, is_dataclass
from fractions import Fraction
from typing import Any, Dict, Final, List

from models.algebra.rational_matrix import RatMatrix, format_rational

EXIT_SUCCESS: Final[int] = 0
EXIT_INPUT_ERROR: Final[int] = 2
EXIT_UNCERTIFIED: Final[int] = 3


def serialize(value: Any) -> Any:
    """JSON-ready copy of ``value``: rationals become ``"num/den"`` strings, matrices lists of rows, dataclasses
    dicts of their fields and properties named in ``_report_properties``.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, RatMatrix):
        return [[format_rational(entry) for entry in row] for row in value.to_rows()]
    if is_dataclass(value):
        result = {item.name: serialize(getattr(value, item.name)) for item in fields(value)}
        for name in getattr(value, '_report_properties', ()):
            result[name] = serialize(getattr(value, name))
        return result
    if isinstance(value, dict):
        return {str(key): serialize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize(item) for item in value]
    return str(value)


@dataclass
class ReportDocument:
    """Result of one query.

    ``sections`` maps section names (``grading``, ``toledo``, ``bounds``, ``curvature``...) to serialized content.
    ``certification`` collects every open orbit certification flag the report relies on; the document is partial
    when one of them is false.
    """
    query: dict
    schema_version: str
    sections: Dict[str, Any] = field(default_factory=dict)
    certification: Dict[str, bool] = field(default_factory=dict)
    provenance: Dict[str, Any] = field(default_factory=dict)

    def add_section(self, name: str, content: Any):
        self.sections[name] = serialize(content)

    def certify(self, name: str, certified: bool):
        self.certification[name] = bool(certified)

    @property
    def certified(self) -> bool:
        return all(self.certification.values())

    @property
    def exit_code(self) -> int:
        return EXIT_SUCCESS if self.certified else EXIT_UNCERTIFIED

    def to_dict(self) -> dict:
        provenance = dict(self.provenance)
        provenance['certification'] = dict(self.certification)
        return {'schema_version': self.schema_version, 'query': self.query, 'provenance': provenance,
                **self.sections}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    def to_text(self) -> str:
        lines: List[str] = []
        _flatten('', self.to_dict(), lines)
        return '\n'.join(lines) + '\n'

    def render(self, output: str) -> str:
        return self.to_json() if output == 'json' else self.to_text()


def _flatten(prefix: str, value: Any, lines: List[str]):
    """``dotted.key: value`` lines in sorted key order; matrices and flat lists stay on one line."""
    if isinstance(value, dict):
        if not value:
            lines.append(f'{prefix}: {{}}')
        for key in sorted(value):
            _flatten(f'{prefix}.{key}' if prefix else key, value[key], lines)
    elif isinstance(value, list) and any(isinstance(item, dict) for item in value):
        for index, item in enumerate(value):
            _flatten(f'{prefix}[{index}]', item, lines)
    else:
        lines.append(f'{prefix}: {_text_value(value)}')


def _text_value(value: Any) -> str:
    if isinstance(value, list):
        return '[' + ', '.join(_text_value(item) for item in value) + ']'
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)
