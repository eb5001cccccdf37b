import pytest
from typer.testing import CliRunner

from heegaard_lift.resources.freegroup.service import (
    default_basis,
    load_system,
    parse_cyclic,
)
from heegaard_lift.settings import get_settings

settings = get_settings()


@pytest.fixture
def f2():
    return default_basis(2)


@pytest.fixture
def f3():
    return default_basis(3)


@pytest.fixture
def words(f2, f3):
    """Parses ``text`` over F_2 or F_3 as a cyclic word."""

    def parse(text, rank=2):
        return parse_cyclic(text, f2 if rank == 2 else f3)

    return parse


@pytest.fixture(scope='session')
def pretzel_333():
    _, curves = load_system(settings.DATA_DIR / 'pretzel_333.json')
    return curves


@pytest.fixture
def runner():
    return CliRunner()
