from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Final, Optional, Tuple

from models.algebra.rational_matrix import format_rational, to_rational
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.missing_parameter import MissingParameterError

_MODULE_NAME: Final[str] = 'models.report.query_spec'

KINDS: Final[Tuple[str, ...]] = ('grade', 'rank', 'orbit', 'so-orbit', 'sweep')
OUTPUTS: Final[Tuple[str, ...]] = ('text', 'json')

# fields each kind must carry, and fields it may carry
_REQUIRED: Final[Dict[str, Tuple[str, ...]]] = {
    'grade': ('target',),
    'rank': ('target',),
    'orbit': ('target', 'partition'),
    'so-orbit': ('p', 'q', 'r1', 'r2'),
    'sweep': ('target', 'max_rank'),
}
_OPTIONAL: Final[Dict[str, Tuple[str, ...]]] = {
    'grade': ('labels', 'theta'),
    'rank': ('labels', 'theta', 'genus', 'lambda_'),
    'orbit': (),
    'so-orbit': ('genus', 'lambda_'),
    'sweep': (),
}
_SELECTORS: Final[Tuple[str, ...]] = ('target', 'labels', 'theta', 'partition', 'p', 'q', 'r1', 'r2', 'genus',
                                      'lambda_', 'max_rank')


@dataclass(frozen=True)
class QuerySpec:
    """One command line query.

    ``target`` is the algebra as typed by the user (``B3`` for ``grade``, ``so7`` for ``rank`` and ``orbit``, a
    family letter for ``sweep``). ``grade`` and ``rank`` take exactly one of ``labels`` and ``theta``.

    :raises MissingParameterError: If a field required by ``kind`` is absent.
    :raises InvalidParameterValue: If a field does not belong to ``kind`` or has a bad value.
    """
    kind: str
    target: Optional[str] = None
    labels: Optional[Tuple[int, ...]] = None
    theta: Optional[Tuple[int, ...]] = None
    partition: Optional[Tuple[int, ...]] = None
    p: Optional[int] = None
    q: Optional[int] = None
    r1: Optional[int] = None
    r2: Optional[int] = None
    genus: Optional[int] = None
    lambda_: Optional[Fraction] = None
    max_rank: Optional[int] = None
    seed: int = 0
    output: str = 'text'
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        self._validate_parameters()

    def _validate_parameters(self):
        if self.kind not in KINDS:
            raise InvalidParameterValue(module=_MODULE_NAME, name='query', parameter='kind',
                                        cause='must_be_grade_rank_orbit_so-orbit_or_sweep')
        for name in _REQUIRED[self.kind]:
            if getattr(self, name) is None:
                raise MissingParameterError(module=_MODULE_NAME, name=self.kind, parameter=name)
        allowed = _REQUIRED[self.kind] + _OPTIONAL[self.kind]
        for name in _SELECTORS:
            if name not in allowed and getattr(self, name) is not None:
                raise InvalidParameterValue(module=_MODULE_NAME, name=self.kind, parameter=name,
                                            cause='not_accepted_by_this_kind')
        if self.kind in ('grade', 'rank') and (self.labels is None) == (self.theta is None):
            raise InvalidParameterValue(module=_MODULE_NAME, name=self.kind, parameter='labels_theta',
                                        cause='give_exactly_one')
        if self.lambda_ is not None and self.genus is None:
            raise MissingParameterError(module=_MODULE_NAME, name=self.kind, parameter='genus')
        if self.genus is not None and self.genus < 2:
            raise InvalidParameterValue(module=_MODULE_NAME, name=self.kind, parameter='genus',
                                        cause='must_be_at_least_2')
        if self.output not in OUTPUTS:
            raise InvalidParameterValue(module=_MODULE_NAME, name=self.kind, parameter='output',
                                        cause='must_be_text_or_json')
        if self.workers < 1:
            raise InvalidParameterValue(module=_MODULE_NAME, name=self.kind, parameter='workers',
                                        cause='must_be_positive')
        if self.max_rank is not None and self.max_rank < 1:
            raise InvalidParameterValue(module=_MODULE_NAME, name=self.kind, parameter='max_rank',
                                        cause='must_be_positive')

    @classmethod
    def from_config_json(cls, parameters: dict) -> QuerySpec:
        """Builds a query from a JSON-like dict, as echoed in reports."""
        if 'kind' not in parameters:
            raise MissingParameterError(module=_MODULE_NAME, name='query', parameter='kind')
        values = dict(parameters)
        for name in ('labels', 'theta', 'partition'):
            if values.get(name) is not None:
                values[name] = tuple(int(value) for value in values[name])
        if 'lambda' in values:
            values['lambda_'] = values.pop('lambda')
        if values.get('lambda_') is not None:
            values['lambda_'] = to_rational(values['lambda_'])
        return cls(**values)

    def echo(self) -> dict:
        """The fields that select the computation; output format and worker count are left out so that reports
        do not depend on them.
        """
        echo = {'kind': self.kind, 'seed': self.seed}
        for name in _SELECTORS:
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, tuple):
                value = list(value)
            elif isinstance(value, Fraction):
                value = format_rational(value)
            echo['lambda' if name == 'lambda_' else name] = value
        return echo
