from fractions import Fraction

import pytest

from relgames import BeliefState, Game, two_player_beliefs

PD_PAYOFFS = (("3", "3"), ("0", "5"), ("5", "0"), ("1", "1"))


def make_pd() -> Game:
    return Game(("x", "y"), (("C", "D"), ("C", "D")), PD_PAYOFFS)


@pytest.fixture
def pd() -> Game:
    return make_pd()


def underestimating_beliefs() -> BeliefState:
    """Mild mutual relationships (1/3) with both sides' estimates at 1/5."""
    return two_player_beliefs(
        Fraction(1, 3), Fraction(1, 3), Fraction(1, 5), Fraction(1, 5)
    )


@pytest.fixture
def pd_beliefs() -> BeliefState:
    return underestimating_beliefs()


@pytest.fixture
def zero_beliefs() -> BeliefState:
    return two_player_beliefs(0, 0)
