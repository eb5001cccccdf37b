import logging
from itertools import combinations
from math import gcd
from typing import Mapping, Sequence

from heegaard_lift.resources.base.exceptions import (
    CoverError,
    PreconditionError,
)
from heegaard_lift.resources.cover.model import (
    CoverContext,
    CyclicHom,
    LiftedLetter,
    OpenPath,
    lift_name,
)
from heegaard_lift.resources.cover.schemas import WeakReductionPair
from heegaard_lift.resources.freegroup.model import (
    Basis,
    Code,
    CyclicWord,
    Word,
    generator_of,
    least_rotation,
    letter_key,
)
from heegaard_lift.resources.freegroup.service import (
    concat,
    make_basis,
    power,
    to_cyclic,
)

logger = logging.getLogger(__name__)


def cover_basis(
    basis: Basis, hom: CyclicHom, tree_generator: str | int
) -> CoverContext:
    """
    Lifted disk system of the n-fold cyclic cover: every disk lifts to n
    copies, and the lifts ``t_1 .. t_(n-1)`` of the tree disk are
    eliminated, leaving rank ``n (k - 1) + 1``.
    """
    if len(hom.values) != basis.rank:
        raise CoverError('Hom needs one value per generator')
    if isinstance(tree_generator, str):
        if tree_generator not in basis:
            raise CoverError(f'Unknown tree generator {tree_generator!r}')
        tree = basis.index(tree_generator)
    else:
        tree = tree_generator
    if not 0 <= tree < basis.rank:
        raise CoverError('Tree generator out of range')
    n = hom.modulus
    if gcd(hom.values[tree], n) != 1:
        raise CoverError(
            f'Tree generator {basis.names[tree]!r} has non-unit value '
            f'{hom.values[tree]} mod {n}'
        )
    if n == 1:
        return CoverContext(
            base=basis, hom=hom, tree_generator=tree, lifted=basis
        )
    names = [
        lift_name(name, sheet, n)
        for index, name in enumerate(basis.names)
        if index != tree
        for sheet in range(1, n + 1)
    ]
    names.append(lift_name(basis.names[tree], n, n))
    return CoverContext(
        base=basis,
        hom=hom,
        tree_generator=tree,
        lifted=make_basis(names),
    )


def full_lift(
    codes: Sequence[Code], ctx: CoverContext, start_sheet: int
) -> tuple[tuple[LiftedLetter, ...], int]:
    """
    Sheet-by-sheet lift keeping every disk lift, tree lifts included.

    A letter g read in sheet s crosses the lift g_s into sheet s + h(g);
    g^-1 read in sheet s crosses g_(s - h(g)) back into that sheet.

    :return: the lifted letters and the end sheet.
    """
    if not 1 <= start_sheet <= ctx.order:
        raise CoverError(f'Start sheet {start_sheet} out of 1..{ctx.order}')
    sheet = start_sheet
    lifted = []
    for code in codes:
        generator = generator_of(code)
        step = ctx.hom.values[generator]
        if code > 0:
            lifted.append(
                LiftedLetter(generator=generator, sheet=sheet, sign=1)
            )
            sheet = ctx.shift(sheet, step)
        else:
            sheet = ctx.shift(sheet, -step)
            lifted.append(
                LiftedLetter(generator=generator, sheet=sheet, sign=-1)
            )
    return tuple(lifted), sheet


def drop_tree(
    letters: Sequence[LiftedLetter], ctx: CoverContext
) -> list[Code]:
    codes = []
    for letter in letters:
        code = ctx.lifted_code(letter)
        if code is not None:
            codes.append(code)
    return codes


def project_lift(
    letters: Sequence[LiftedLetter], ctx: CoverContext
) -> CyclicWord:
    """Forgets sheet indices of a full lift."""
    return CyclicWord.from_codes(
        ctx.base, [(letter.generator + 1) * letter.sign for letter in letters]
    )


def project_word(word: Word, ctx: CoverContext) -> CyclicWord:
    """
    Forgets sheet indices of a word over the lifted basis. Tree letters were
    dropped on lifting, so the result is over the base basis with the tree
    generator read as the identity.
    """
    if word.basis != ctx.lifted:
        raise CoverError('Word is not over the lifted basis')
    sheets = {
        ctx.lift_name(generator, sheet): generator
        for generator in range(ctx.base.rank)
        for sheet in range(1, ctx.order + 1)
    }
    return CyclicWord.from_codes(
        ctx.base,
        [
            (sheets[ctx.lifted.names[generator_of(code)]] + 1)
            * (1 if code > 0 else -1)
            for code in word.letters
        ],
    )


def lift_word(
    word: Word, ctx: CoverContext, start_sheet: int
) -> CyclicWord | OpenPath:
    if word.basis != ctx.base:
        raise CoverError('Word is not over the base basis')
    letters, end = full_lift(word.letters, ctx, start_sheet)
    if end != start_sheet:
        return OpenPath(
            start_sheet=start_sheet,
            end_sheet=end,
            letters=tuple(
                _letter_text(letter, ctx) for letter in letters
            ),
        )
    return CyclicWord.from_codes(ctx.lifted, drop_tree(letters, ctx))


def _letter_text(letter: LiftedLetter, ctx: CoverContext) -> str:
    name = ctx.lift_name(letter.generator, letter.sheet)
    return name if letter.sign > 0 else f'{name}^-1'


def _sheet_codes(
    letters: Sequence[LiftedLetter], ctx: CoverContext
) -> tuple[Code, ...]:
    return tuple(
        (letter.generator * ctx.order + letter.sheet) * letter.sign
        for letter in letters
    )


def distinguished_start(codes: Sequence[Code], ctx: CoverContext) -> int:
    """
    Start sheet of the distinguished lift of a closed word: fewest
    crossings of sheet-n disks, ties to the least canonical lift.
    """

    def rank(start: int):
        letters, _ = full_lift(codes, ctx, start)
        on_last = sum(1 for letter in letters if letter.sheet == ctx.order)
        canonical = least_rotation(_sheet_codes(letters, ctx))
        return on_last, [letter_key(code) for code in canonical], start

    return min(range(1, ctx.order + 1), key=rank)


def lift_orbits(
    codes: Sequence[Code], ctx: CoverContext
) -> list[tuple[int, int, tuple[LiftedLetter, ...]]]:
    """
    Every closed lift of a cyclic word as ``(label, start, letters)``.

    Closed words lift to n curves labelled by deck shift from the
    distinguished one, which gets label n. Otherwise the word is repeated
    until it closes and each orbit is labelled by its least start sheet.
    """
    n = ctx.order
    value = ctx.hom.of_codes(tuple(codes))
    if value == 0:
        origin = distinguished_start(codes, ctx) if codes else n
        lifts = []
        for start in range(1, n + 1):
            label = (start - origin) % n or n
            letters, _ = full_lift(codes, ctx, start)
            lifts.append((label, start, letters))
        return sorted(lifts)
    repeat = n // gcd(n, value)
    seen: set[int] = set()
    lifts = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        letters, _ = full_lift(tuple(codes) * repeat, ctx, start)
        sheet = start
        for _ in range(repeat):
            seen.add(sheet)
            sheet = ctx.shift(sheet, value)
        lifts.append((start, start, letters))
    return lifts


def lift_all(word: CyclicWord, ctx: CoverContext) -> dict[int, CyclicWord]:
    """The n labelled lifts of a closed word; label n is distinguished."""
    if word.basis != ctx.base:
        raise CoverError('Word is not over the base basis')
    if ctx.hom.of_codes(word.letters) != 0:
        raise CoverError('Word has nonzero hom value; its lifts do not close')
    return {
        label: CyclicWord.from_codes(ctx.lifted, drop_tree(letters, ctx))
        for label, _, letters in lift_orbits(word.letters, ctx)
    }


def weak_reducibility_report(
    ctx: CoverContext,
    curves: Mapping[str, CyclicWord],
    disks: Sequence[str],
) -> list[WeakReductionPair]:
    """
    Every maximal pair (curves, disks), both nonempty, where no listed
    curve uses a letter of any listed disk.
    """
    for name in disks:
        if name not in ctx.lifted:
            raise CoverError(f'Unknown lifted disk {name!r}')
    used = {
        name: {ctx.lifted.names[generator_of(code)] for code in word.letters}
        for name, word in curves.items()
    }
    curve_names = list(curves)
    disk_names = list(disks)

    def avoiding(disk_set) -> tuple[str, ...]:
        return tuple(c for c in curve_names if not used[c] & set(disk_set))

    def avoided(curve_set) -> tuple[str, ...]:
        touched = set().union(*(used[c] for c in curve_set))
        return tuple(d for d in disk_names if d not in touched)

    pairs: set[tuple[tuple[str, ...], tuple[str, ...]]] = set()
    if len(disk_names) <= len(curve_names):
        for size in range(1, len(disk_names) + 1):
            for disk_set in combinations(disk_names, size):
                side = avoiding(disk_set)
                if side:
                    pairs.add((side, avoided(side)))
    else:
        for size in range(1, len(curve_names) + 1):
            for curve_set in combinations(curve_names, size):
                side = avoided(curve_set)
                if side:
                    pairs.add((avoiding(side), side))
    return [
        WeakReductionPair(curves=curve_side, disks=disk_side)
        for curve_side, disk_side in sorted(pairs)
        if curve_side and disk_side
    ]


def is_trivial_filling(m: int, n: int) -> bool:
    return n == 0 and abs(m) == 1


def slope_word(
    m: int, n: int, meridian: Word, longitude: Word
) -> CyclicWord:
    """Filling curve ``longitude^n meridian^m`` of slope m/n."""
    if gcd(m, n) != 1:
        raise PreconditionError(f'Slope {m}/{n} is not coprime')
    if is_trivial_filling(m, n):
        raise PreconditionError(f'Slope {m}/{n} is the trivial filling')
    return to_cyclic(concat(power(longitude, n), power(meridian, m)))
