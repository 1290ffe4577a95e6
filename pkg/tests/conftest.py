import pytest
from hypothesis import settings

from rankone.construction import (
    AffineExtension,
    PeriodicExtension,
    RankOneParams,
    Stage,
)
from rankone.codes import identity_code, constant_code, run_detector_code

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


# the two-stage golden parameter, explicit only
@pytest.fixture
def p1():
    return RankOneParams((Stage(2, (1,)), Stage(2, (2,))))


# the golden bounded parameter: stages repeat with period 2
@pytest.fixture
def p1ext():
    return RankOneParams(
        (Stage(2, (1,)), Stage(2, (2,))), PeriodicExtension(2), declared_bound=2
    )


# the golden unbounded parameter: q_n = 2, spacer n+1 at every stage
@pytest.fixture
def p3():
    return RankOneParams((), AffineExtension(q=2, slots=(1,), coeff=1, offset=1))


@pytest.fixture
def det():
    return run_detector_code()


@pytest.fixture
def ident():
    return identity_code()


@pytest.fixture
def const1():
    return constant_code(1)


# the curated classification corpus: five bounded, five unbounded parameter
# sets, each paired with its own master seed for ten random codes
CORPUS = [
    ("b1", RankOneParams((Stage(2, (1,)), Stage(2, (2,))), PeriodicExtension(2), declared_bound=2)),
    ("b2", RankOneParams((Stage(3, (0, 1)),), PeriodicExtension(1), declared_bound=1)),
    ("b3", RankOneParams((Stage(2, (0,)), Stage(3, (2, 1))), PeriodicExtension(2), declared_bound=2)),
    ("b4", RankOneParams((Stage(2, (2,)), Stage(3, (1, 0))), PeriodicExtension(2), declared_bound=2)),
    ("b5", RankOneParams((Stage(3, (1, 1)), Stage(2, (0,))), PeriodicExtension(2), declared_bound=1)),
    ("u1", RankOneParams((), AffineExtension(q=2, slots=(1,), coeff=1, offset=1))),
    ("u2", RankOneParams((Stage(2, (0,)),), AffineExtension(q=2, slots=(1,), coeff=1, offset=0))),
    ("u3", RankOneParams((Stage(2, (1,)), Stage(2, (2,))), AffineExtension(q=2, slots=(1,), coeff=1, offset=2))),
    ("u4", RankOneParams((Stage(2, (2,)),), AffineExtension(q=2, slots=(1,), coeff=2, offset=3))),
    ("u5", RankOneParams((Stage(3, (2, 0)),), AffineExtension(q=2, slots=(1,), coeff=1, offset=1))),
]
CORPUS_BASE_SEED = 20260800


@pytest.fixture
def corpus():
    return CORPUS
