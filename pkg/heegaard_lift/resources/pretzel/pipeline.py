"""
Certificate that a Dehn filling of a (p, +-3, q) pretzel knot exterior
contains an essential surface.

The 3-fold cyclic cover of the filling has a weakly reducible genus-7
splitting. Compressing both sides along the disjoint disks and running the
multi-handle addition test on each side certifies the surface.
"""

import logging
from contextlib import contextmanager
from math import gcd

from heegaard_lift.resources.base.exceptions import (
    HeegaardLiftError,
    PreconditionError,
    StageError,
)
from heegaard_lift.resources.base.schemas import ReportHeader
from heegaard_lift.resources.cover.diagram_lift import (
    lift_diagram,
    lifted_curve_name,
)
from heegaard_lift.resources.cover.model import CyclicHom
from heegaard_lift.resources.cover.service import (
    cover_basis,
    lift_all,
    slope_word,
    weak_reducibility_report,
)
from heegaard_lift.resources.diagram.service import (
    compress,
    curve_words,
    dualize,
    restrict_curves,
    stabilization_report,
)
from heegaard_lift.resources.factor.service import get_factor_service
from heegaard_lift.resources.freegroup.service import (
    delete_generators,
    format_word,
    homology,
    parse_word,
)
from heegaard_lift.resources.pretzel.enums import PipelineStage
from heegaard_lift.resources.pretzel.model import PretzelParams
from heegaard_lift.resources.pretzel.schemas import Slope, Theorem1Certificate
from heegaard_lift.resources.pretzel.service import (
    gated_diagram,
    pretzel_words,
)
from heegaard_lift.settings import Settings, get_settings

logger = logging.getLogger(__name__)

FILLING_CURVE = 'D'
BOUNDARY_CURVES = ('D1', 'D2')


@contextmanager
def stage(name: PipelineStage):
    logger.info('pipeline stage %s', name.value)
    try:
        yield
    except StageError:
        raise
    except HeegaardLiftError as exc:
        raise StageError(name.value, exc) from exc


class Theorem1Pipeline:
    def __init__(self, settings: Settings):
        self.settings = settings
        self.order = settings.DEFAULT_COVER_ORDER
        self.tree = settings.DEFAULT_TREE_GENERATOR
        self.factor = get_factor_service(settings)

    def run(
        self,
        params: PretzelParams,
        slope: tuple[int, int] = (2, 1),
        parallel: bool | None = None,
    ) -> Theorem1Certificate:
        """
        Certifies the filling of base slope ``order * m / n`` through the
        cover filled along ``m / n``.

        Raises:
            PreconditionError: the slope is not coprime, before any stage.
            StageError: a stage failed; the stage name is in the message.
        """
        m, n = slope
        base_m = self.order * m
        if gcd(m, n) != 1:
            raise PreconditionError(f'Cover slope {m}/{n} is not coprime')
        if gcd(base_m, n) != 1:
            raise PreconditionError(
                f'Base slope {base_m}/{n} is not coprime'
            )
        warnings = []
        if abs(m) < 2:
            warnings.append(
                f'cover slope {m}/{n} has |m| < 2; the filling may not '
                'keep the surface incompressible'
            )
            logger.warning(warnings[-1])

        with stage(PipelineStage.WORDS):
            family = params.normalize()
            words = pretzel_words(params)
            basis = words['D1'].basis
            meridian = parse_word('x', basis)
            filling = slope_word(base_m, n, meridian, words['lambda'])

        with stage(PipelineStage.HOMOLOGY):
            h1 = homology([words[name] for name in BOUNDARY_CURVES], basis)

        with stage(PipelineStage.COVER):
            hom = CyclicHom.constant(basis.rank, self.order, 1)
            ctx = cover_basis(basis, hom, self.tree)
            lifts = {
                name: lift_all(words[name], ctx)
                for name in (*BOUNDARY_CURVES, 'lambda')
            }
            lifted_words = {
                lifted_curve_name(name, label): word
                for name, family_lifts in lifts.items()
                for label, word in family_lifts.items()
            }

        top = self.order
        eliminated = [
            ctx.lift_name(generator, top) for generator in range(basis.rank)
        ]
        with stage(PipelineStage.WEAK_REDUCIBILITY):
            disk_lifts = {
                lifted_curve_name(name, label): lifts[name][label]
                for name in BOUNDARY_CURVES
                for label in sorted(lifts[name])
            }
            pairs = weak_reducibility_report(
                ctx, disk_lifts, ctx.lifted.names
            )

        with stage(PipelineStage.HANDLEBODY_SIDE):
            compressed = {
                lifted_curve_name(name, top): delete_generators(
                    lifts[name][top], eliminated
                )
                for name in BOUNDARY_CURVES
            }
            handlebody_side = self.factor.mha_check(compressed, parallel)

        with stage(PipelineStage.FILLING_DIAGRAM):
            diagram = gated_diagram(
                {
                    'D1': words['D1'],
                    'D2': words['D2'],
                    FILLING_CURVE: filling,
                }
            )

        with stage(PipelineStage.DIAGRAM_LIFT):
            lifted = lift_diagram(diagram, hom, self.tree)
            warnings.extend(lifted.warnings)
            new_disks = [
                lifted_curve_name(name, label)
                for name in BOUNDARY_CURVES
                for label in range(1, top + 1)
            ]
            new_disks.append(lifted_curve_name(FILLING_CURVE, top))
            cover_diagram = restrict_curves(lifted.diagram, new_disks)

        with stage(PipelineStage.STABILIZATION):
            stabilization = stabilization_report(cover_diagram)

        with stage(PipelineStage.DUAL_SIDE):
            dual = restrict_curves(
                dualize(cover_diagram, new_disks), eliminated
            )
            squeezed = compress(
                dual,
                [lifted_curve_name(name, top) for name in BOUNDARY_CURVES],
            )
            warnings.extend(squeezed.warnings)
            dual_words = curve_words(squeezed.diagram)
            dual_side = self.factor.mha_check(dual_words, parallel)

        certificate = Theorem1Certificate(
            header=ReportHeader.create(
                self.settings.APP_VERSION, self.settings.REPORT_VERSION
            ),
            tangles=params.tangles,
            family=family,
            cover_slope=Slope(m=m, n=n),
            base_slope=Slope(m=base_m, n=n),
            words={
                **{name: format_word(word) for name, word in words.items()},
                FILLING_CURVE: format_word(filling),
            },
            homology=h1,
            cover=ctx.describe(),
            lifted_words={
                name: format_word(word)
                for name, word in sorted(lifted_words.items())
            },
            weak_reducibility=tuple(pairs),
            stabilization=stabilization,
            handlebody_side=handlebody_side,
            dual_curves={
                name: format_word(word) for name, word in dual_words.items()
            },
            dual_side=dual_side,
            warnings=tuple(warnings),
        )
        logger.info(
            'certificate for (%s): %s',
            params.label(),
            certificate.overall.value,
        )
        return certificate


def get_theorem1_pipeline(settings: Settings | None = None):
    return Theorem1Pipeline(settings or get_settings())


def theorem1_pipeline(
    params: PretzelParams,
    slope: tuple[int, int] = (2, 1),
    parallel: bool | None = None,
) -> Theorem1Certificate:
    return get_theorem1_pipeline().run(params, slope, parallel)
