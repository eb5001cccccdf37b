import logging
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from heegaard_lift.resources.base.exceptions import (
    DiagramError,
    PretzelParamsError,
)
from heegaard_lift.resources.diagram.model import HeegaardDiagram
from heegaard_lift.resources.diagram.realize import realize_diagram
from heegaard_lift.resources.diagram.service import curve_words
from heegaard_lift.resources.freegroup.model import Basis, CyclicWord
from heegaard_lift.resources.freegroup.service import (
    load_system,
    make_basis,
    parse_cyclic,
)
from heegaard_lift.resources.pretzel.enums import PretzelCase
from heegaard_lift.resources.pretzel.model import PretzelParams
from heegaard_lift.settings import get_settings

logger = logging.getLogger(__name__)

PRETZEL_BASIS = ('x', 'y', 'z')

FIXTURES = {
    (3, 3, 3): 'pretzel_333.json',
    (3, 3, 3, 3, 3): 'pretzel_33333.json',
    (4, 3, 3, 3): 'pretzel_4333.json',
}

D1_TEMPLATES = {
    PretzelCase.POSITIVE: '(x^-1 y)^{i1} (x y^-1)^{i} (x z^-1)^2 (x^-1 z)',
    PretzelCase.MIXED: '(y^-1 x)^{i} (y x^-1)^{i1} (x z^-1)^2 (x^-1 z)',
    PretzelCase.NEGATIVE: '(y^-1 x)^{i} (y x^-1)^{i1} (x z^-1)^2 (x^-1 z)',
}

D2_TEMPLATES = {
    PretzelCase.POSITIVE: '(z y^-1)^{j1} (z^-1 y)^{j} (z^-1 x)^2 (z x^-1)',
    PretzelCase.MIXED: '(z y^-1)^{j1} (z^-1 y)^{j} (z^-1 x)^2 (z x^-1)',
    PretzelCase.NEGATIVE: '(y z^-1)^{j} (y^-1 z)^{j1} (z^-1 x)^2 (z x^-1)',
}

LONGITUDE_TEMPLATES = {
    PretzelCase.POSITIVE: (
        '(y^-1 x)^{i} (y^-1 z)^{j1} (x^-1 z) (x^-1 y)^{i1} '
        '(z^-1 y)^{j} (z^-1 x)^2'
    ),
    PretzelCase.MIXED: (
        '(y^-1 x)^{i} (z^-1 y)^{j} (z^-1 x) z^-1 (y x^-1)^{i} '
        '(z y^-1)^{j} (z x^-1) z'
    ),
    PretzelCase.NEGATIVE: (
        '(x^-1 z) (y^-1 x)^{i} (y^-1 z)^{j} y^-1 (x z^-1) '
        '(y x^-1)^{i} (y z^-1)^{j} y'
    ),
}


def component_count(tangles: Sequence[int]) -> int:
    """Number of components of the pretzel link with these tangles."""
    if not tangles:
        raise PretzelParamsError('A pretzel link needs at least one tangle')
    if any(entry == 0 for entry in tangles):
        raise PretzelParamsError('Tangle entries must be nonzero')
    even = sum(1 for entry in tangles if entry % 2 == 0)
    if even:
        return even
    return 1 if len(tangles) % 2 else 2


def pretzel_basis() -> Basis:
    return make_basis(PRETZEL_BASIS)


def pretzel_words(params: PretzelParams) -> dict[str, CyclicWord]:
    """
    Disk boundaries ``D1``, ``D2`` and the longitude ``lambda`` of the
    genus-3 splitting of the knot exterior, over the basis x, y, z.
    """
    member = params.normalize()
    values = {
        'i': member.i,
        'i1': member.i + 1,
        'j': member.j,
        'j1': member.j + 1,
    }
    basis = pretzel_basis()
    words = {
        'D1': D1_TEMPLATES[member.case],
        'D2': D2_TEMPLATES[member.case],
        'lambda': LONGITUDE_TEMPLATES[member.case],
    }
    return {
        name: parse_cyclic(template.format(**values), basis)
        for name, template in words.items()
    }


def gated_diagram(curves: dict[str, CyclicWord]) -> HeegaardDiagram:
    """
    Realizes ``curves`` and refuses the result unless every curve reads
    back letter for letter.
    """
    diagram = realize_diagram(curves)
    read = curve_words(diagram)
    mismatched = sorted(
        name
        for name, word in curves.items()
        if read[name].letters != word.letters
    )
    if mismatched:
        raise DiagramError(
            f'diagram does not reproduce the words of {mismatched}'
        )
    return diagram


def pretzel_diagram(params: PretzelParams) -> HeegaardDiagram:
    return gated_diagram(pretzel_words(params))


def load_pretzel_system(
    tangles: Sequence[int], data_dir: Path | None = None
) -> tuple[Basis, dict[str, CyclicWord]]:
    """
    Reads the shipped word fixture for ``tangles``.

    Raises:
        PretzelParamsError: no fixture slot, or the slot ships without
            words.
    """
    key = tuple(tangles)
    if key not in FIXTURES:
        raise PretzelParamsError(
            f'No word fixture for ({",".join(map(str, key))})'
        )
    directory = data_dir or get_settings().DATA_DIR
    basis, curves = load_system(Path(directory) / FIXTURES[key])
    if not curves:
        raise PretzelParamsError(
            f'The fixture for ({",".join(map(str, key))}) ships empty; '
            'supply the words with --system'
        )
    logger.debug('loaded %d curves from %s', len(curves), FIXTURES[key])
    return basis, curves


def make_params(tangles: Sequence[int]) -> PretzelParams:
    try:
        return PretzelParams(tangles=tuple(tangles))
    except ValidationError as exc:
        message = exc.errors()[0]['msg']
        raise PretzelParamsError(f'Invalid tangles: {message}') from exc


def pretzel_system(tangles: Sequence[int]) -> dict[str, CyclicWord]:
    """Words of the (p, +-3, q) family, or the shipped fixture otherwise."""
    if len(tangles) == 3:
        return pretzel_words(make_params(tangles))
    make_params(tangles)
    return load_pretzel_system(tangles)[1]
