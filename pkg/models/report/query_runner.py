from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, Final, List, Tuple

from config.configuration import Configuration
from models.algebra.graded_matrix_algebra import build_classical
from models.algebra.grading import Grading, canonical_parabolic_grading, make_grading
from models.algebra.lie_type import LieType
from models.algebra.rational_matrix import RatMatrix
from models.algebra.root_system import build_root_system
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.orbit.nilpotent_representative import (even_jm_grading_labels, h_spectrum, nilpotent_representative,
                                                   weighted_dynkin_labels)
from models.orbit.partition import (Partition, is_distinguished, is_even_orbit, partition_valid, sl_centralizer_dim,
                                    toledo_rank_sl)
from models.orbit.so_orbit_label import SOOrbitLabel, expected_h, so_grading, so_orbit_representative
from models.report.query_spec import QuerySpec
from models.report.report_document import ReportDocument
from models.toledo.am_bounds import am_bounds, so_degree_bound, toledo_range
from models.toledo.toledo_context import ToledoContext
from models.utils.loggable import Loggable

# smallest rank swept per family; D_2 and D_3 repeat A-type algebras
SWEEP_MIN_RANK: Final[Dict[str, int]] = {'A': 1, 'B': 2, 'C': 2, 'D': 4}


def grading_summary(g: Grading) -> dict:
    """Root level data of a grading, for the Killing form scaled by ``g.form_scale``."""
    parity = g.parity_real_form_dims()
    return {
        'lie_type': str(g.rs.lie_type),
        'labels': list(g.labels),
        'dims': {str(degree): dimension for degree, dimension in sorted(g.degree_dims().items())},
        'max_degree': g.max_degree,
        'three_term': g.is_three_term,
        'zeta': g.zeta.flatten(),
        'gamma': list(g.gamma),
        'B_gamma_gamma': g.B_gamma_gamma,
        'B_zeta_zeta': g.B_zeta_zeta,
        'B_zeta_zeta_times_Bgg': g.jm_regular_rank,
        'parity_real_form': parity,
    }


def sweep_item(lie_type: LieType, labels: Tuple[int, ...], seed: int) -> dict:
    """Root level against matrix level data of one labeling, and the Toledo rank of its phvs."""
    g = make_grading(build_root_system(lie_type), labels)
    family, size = lie_type.matrix_family()
    ga = build_classical(family, size, labels=labels)
    dims_match = ga.degree_dims() == g.degree_dims()
    context = ToledoContext(ga, g)
    phvs = context.phvs_toledo_rank(seed)
    jm_regular, _ = context.jm_regularity(phvs.element)
    return {
        'lie_type': str(lie_type),
        'labels': list(labels),
        'dims': {str(degree): dimension for degree, dimension in sorted(g.degree_dims().items())},
        'dims_match': dims_match,
        'three_term': g.is_three_term,
        'rk_T_phvs': phvs.rank,
        'B_zeta_zeta_times_Bgg': context.B_zeta_zeta_times_Bgg,
        'jm_regular': jm_regular,
        'phvs_regular': context.phvs_regular(phvs.element, True) if phvs.certified else None,
        'open_orbit_certified': phvs.certified,
    }


def sweep_labelings(family: str, max_rank: int) -> List[Tuple[LieType, Tuple[int, ...]]]:
    """Every nonzero 0/1 labeling of ``family`` for ranks up to ``max_rank``, by rank then lexicographically."""
    items = []
    for rank in range(SWEEP_MIN_RANK[family], max_rank + 1):
        lie_type = LieType(family, rank)
        for labels in itertools.product((0, 1), repeat=rank):
            if any(labels):
                items.append((lie_type, labels))
    return items


class QueryRunner(Loggable):
    """Runs a :class:`QuerySpec` against the algebra modules and assembles the :class:`ReportDocument`.

    Matrix quantities use the trace form ``tr(xy)``; ``grade`` reports use the Killing form. Ranks, bounds and
    normalized curvatures do not depend on that choice.
    """
    _MODULE_NAME: Final[str] = 'models.report.query_runner'

    def __init__(self, enable_log: bool = None) -> None:
        super().__init__(name='runner', enable_log=enable_log)

    def run(self, spec: QuerySpec) -> ReportDocument:
        self.print(f'running {spec.kind} {spec.echo()}')
        document = ReportDocument(query=spec.echo(), schema_version=Configuration.get_schema_version(),
                                  provenance={'seed': spec.seed})
        handler = {
            'grade': self._run_grade,
            'rank': self._run_rank,
            'orbit': self._run_orbit,
            'so-orbit': self._run_so_orbit,
            'sweep': self._run_sweep,
        }[spec.kind]
        handler(spec, document)
        return document

    # ----------------------------------------------------------------------------------------------------------------------#

    @staticmethod
    def _root_grading(lie_type: LieType, spec: QuerySpec) -> Grading:
        rs = build_root_system(lie_type)
        if spec.theta is not None:
            return canonical_parabolic_grading(rs, spec.theta)
        return make_grading(rs, spec.labels)

    def _run_grade(self, spec: QuerySpec, document: ReportDocument):
        g = self._root_grading(LieType.parse(spec.target), spec)
        document.provenance['form'] = 'killing'
        document.add_section('grading', grading_summary(g))

    def _run_rank(self, spec: QuerySpec, document: ReportDocument):
        family, size = LieType.parse_family(spec.target)
        g = self._root_grading(LieType.from_matrix_family(family, size), spec)
        ga = build_classical(family, size, labels=g.labels)
        context = ToledoContext(ga, g)
        report = context.report(spec.seed)
        document.provenance.update({'form': 'trace', 'form_scale': ga.alg.form_scale,
                                    'B_gamma_gamma_trace': context.normalization})
        document.add_section('grading', grading_summary(g))
        document.add_section('matrix', {'algebra': ga.alg.name, 'zeta_diagonal': ga.zeta_diagonal,
                                        'dims': {str(k): v for k, v in sorted(ga.degree_dims().items())}})
        document.add_section('toledo', report)
        document.add_section('curvature', {
            'at_e': report.curvature,
            'range': [Fraction(-1), -1 / report.rk_T_phvs],
        })
        if spec.genus is not None:
            lambda_ = spec.lambda_ if spec.lambda_ is not None else Fraction(0)
            bounds = am_bounds(report.rk_T_e, report.B_zeta_zeta_times_Bgg, spec.genus, lambda_, report.rk_T_phvs)
            document.add_section('bounds', {'am_bounds': bounds,
                                            'toledo_range': list(toledo_range(report.rk_T_phvs, spec.genus))})
        document.certify('open_orbit', report.open_orbit_certified)

    def _run_orbit(self, spec: QuerySpec, document: ReportDocument):
        family, size = LieType.parse_family(spec.target)
        partition = Partition.of(spec.partition)
        if not partition_valid(family, size, partition):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=spec.target, parameter='partition',
                                        cause='not_a_nilpotent_orbit_of_family')
        representative = nilpotent_representative(family, size, partition, spec.seed)
        triple = representative.triple
        orbit = {
            'partition': list(partition.parts),
            'valid': True,
            'even': is_even_orbit(partition),
            'distinguished': is_distinguished(family, size, partition),
            'h_spectrum': h_spectrum(triple.h),
            'weighted_dynkin_labels': weighted_dynkin_labels(family, size, partition),
            'triple_centralizer_dim': len(representative.ga.centralizer_coordinates([triple.e, triple.h, triple.f],
                                                                                     degree=None)),
            'representative_matches_partition': representative.matches,
            'e': representative.e,
        }
        orbit.update(self._orbit_toledo_rank(family, size, partition, representative))
        document.provenance['form'] = 'trace'
        document.add_section('orbit', orbit)
        document.certify('representative', representative.certified and representative.matches)

    @staticmethod
    def _orbit_toledo_rank(family: str, size: int, partition: Partition, representative) -> dict:
        """``sl``: rank of the Jordan matrix in the principal grading next to the closed formula. ``so``/``sp``:
        rank in the grading by ``h/2``, available for even orbits only.
        """
        if representative.e.is_zero():
            return {'toledo_rank': Fraction(0), 'grading_labels': None}
        if family == 'sl':
            context = ToledoContext(representative.ga)
            return {'toledo_rank': context.toledo_rank(representative.e),
                    'toledo_rank_formula': toledo_rank_sl(partition),
                    'centralizer_dim_formula': sl_centralizer_dim(partition),
                    'grading_labels': list(representative.ga.labels)}
        labels = even_jm_grading_labels(family, size, partition)
        if labels is None:
            return {'toledo_rank': None, 'grading_labels': None}
        context = ToledoContext(build_classical(family, size, labels=labels))
        jm_regular, _ = context.jm_regularity(representative.e)
        return {'toledo_rank': context.toledo_rank(representative.e), 'grading_labels': labels,
                'jm_regular': jm_regular}

    def _run_so_orbit(self, spec: QuerySpec, document: ReportDocument):
        label = SOOrbitLabel(spec.p, spec.q, spec.r1, spec.r2)
        context = ToledoContext(so_grading(label.p, label.q))
        e = so_orbit_representative(label)
        rank = context.toledo_rank(e)
        h = context.triple(e).h if not e.is_zero() else RatMatrix.zeros(label.size, label.size)
        phvs = context.phvs_toledo_rank(spec.seed)
        orbit = {
            'label': {'p': label.p, 'q': label.q, 'r1': label.r1, 'r2': label.r2},
            'algebra': context.alg.name,
            'toledo_rank': rank,
            'expected_toledo_rank': label.toledo_rank if label.q > 1 else None,
            'h': h,
            'h_matches_normal_form': h == expected_h(label),
            'is_open_label': label.is_open,
            'orbit_is_open': context.ga.orbit_is_open(e),
            'jm_regular': context.jm_regularity(e)[0] if not e.is_zero() else None,
            'rk_T_phvs': phvs.rank,
            'e': e,
        }
        document.provenance.update({'form': 'trace', 'B_gamma_gamma_trace': context.normalization})
        document.add_section('so_orbit', orbit)
        if spec.genus is not None:
            lambda_ = spec.lambda_ if spec.lambda_ is not None else Fraction(0)
            bounds = {'am_bounds': am_bounds(rank, context.B_zeta_zeta_times_Bgg, spec.genus, lambda_, phvs.rank)}
            if label.q > 1:
                bounds['deg_V_lower_bound'] = so_degree_bound(label, spec.genus)
            document.add_section('bounds', bounds)
        document.certify('open_orbit', phvs.certified)

    def _run_sweep(self, spec: QuerySpec, document: ReportDocument):
        items = sweep_labelings(spec.target, spec.max_rank)
        self.print(f'sweeping {len(items)} labelings with {spec.workers} worker(s)')
        with ThreadPoolExecutor(max_workers=spec.workers) as executor:
            results = list(executor.map(lambda item: sweep_item(item[0], item[1], spec.seed), items))
        for index, result in enumerate(results):
            result['index'] = index
        document.provenance['form'] = 'trace'
        document.add_section('sweep', results)
        document.certify('open_orbit', all(result['open_orbit_certified'] for result in results))


def run_query(spec: QuerySpec) -> ReportDocument:
    return QueryRunner().run(spec)
