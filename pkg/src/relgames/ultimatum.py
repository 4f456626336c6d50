"""Repeated ultimatum bargaining under relationship-weighted payoffs.

One player (Row) proposes a split of a dollar on the cent grid, the
other (Column) accepts or rejects; rejection leaves both with nothing.
With relationship value R_CR, Column's own weighted payoff from
accepting share a is a + (1 - a) * R_CR, so Column accepts exactly the
offers strictly above -R_CR / (1 - R_CR); symmetrically Row only makes
offers strictly below 1 / (1 - R_RC).  A rejection at an offer reveals
that Column's threshold is at least that offer, which drives Row's
ascending-offer inference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import BeliefState, two_player_beliefs
from .rational import Interval, format_rational, parse_rational

CENT = Fraction(1, 100)
ONE = Fraction(1)
ZERO = Fraction(0)


class UltimatumDomainError(ValueError):
    """An ultimatum quantity is undefined for the given relationship value."""


def validate_offer(value) -> Fraction:
    """Check an offer lies on the cent grid in [0, 1]."""
    offer = parse_rational(value)
    if not ZERO <= offer <= ONE:
        raise ValueError(f"offer {format_rational(offer)} outside [0, 1]")
    if 100 % offer.denominator != 0:
        raise ValueError(f"offer {format_rational(offer)} is not a whole number of cents")
    return offer


def cent_grid():
    """All offers 0, 1/100, ..., 1."""
    return tuple(Fraction(k, 100) for k in range(101))


@dataclass(frozen=True)
class Bound:
    """A threshold or cap value; ``unconstrained`` flags the regimes
    (relationship >= 1) where the formula no longer binds and every
    grid offer is acceptable."""

    value: Fraction
    unconstrained: bool = False


def acceptance_threshold(r_cr) -> Bound:
    """Smallest share Column insists on: -R_CR / (1 - R_CR).

    Column accepts exactly the offers strictly above it (indifference at
    the boundary means rejection).  For R_CR >= 1 every offer including
    0 is acceptable; the bound is 0 with the unconstrained flag set.
    """
    r = parse_rational(r_cr)
    if r >= 1:
        return Bound(ZERO, unconstrained=True)
    return Bound(-r / (1 - r))


def offer_cap(r_rc) -> Bound:
    """Largest share Row is willing to give away: 1 / (1 - R_RC).

    Row only makes offers strictly below it.  For R_RC >= 1 Row is
    willing to offer anything up to the whole dollar; the bound is 1
    with the unconstrained flag set.
    """
    r = parse_rational(r_rc)
    if r >= 1:
        return Bound(ONE, unconstrained=True)
    return Bound(1 / (1 - r))


def column_accepts(r_cr, offer: Fraction) -> bool:
    """Accept iff Column's own weighted payoff from the split is positive."""
    bound = acceptance_threshold(r_cr)
    if bound.unconstrained:
        return True
    return offer > bound.value


def row_willing(r_rc, offer: Fraction) -> bool:
    """Row only proposes splits with positive own weighted payoff."""
    bound = offer_cap(r_rc)
    if bound.unconstrained:
        return offer <= ONE
    return offer < bound.value


@dataclass(frozen=True)
class AgreementRange:
    """Offers acceptable to both sides: the open interval between
    Column's threshold and Row's cap, plus the cent offers inside it."""

    interval: Interval
    offers: tuple[Fraction, ...]

    @property
    def is_empty(self) -> bool:
        return self.interval.is_empty


def agreement_range(r_rc, r_cr) -> AgreementRange:
    threshold = acceptance_threshold(r_cr)
    cap = offer_cap(r_rc)
    interval = Interval(
        lo=threshold.value,
        hi=cap.value,
        lo_open=not threshold.unconstrained,
        hi_open=not cap.unconstrained,
    )
    offers = tuple(
        offer for offer in cent_grid() if column_accepts(r_cr, offer) and row_willing(r_rc, offer)
    )
    return AgreementRange(interval, offers)


def optimal_relationship_claim(col_belief_rc) -> Fraction:
    """The R_CR making Column's threshold exactly Row's believed cap.

    Solving -r / (1 - r) = 1 / (1 - b) gives r = 1 / b: the posture that
    maximizes Column's share if agreement still happens.  Only defined
    for beliefs b < 0; at b = 0 the threshold would have to equal 1,
    which no finite R_CR < 1 reaches (it is approached only as R_CR
    tends to minus infinity), and for b in (0, 1) the solution 1 / b
    lands at or above 1 where the threshold formula no longer applies.
    """
    b = parse_rational(col_belief_rc)
    if b >= 1:
        raise UltimatumDomainError(
            f"believed relationship must be below 1, got {format_rational(b)}"
        )
    if b == 0:
        raise UltimatumDomainError(
            "no finite claim matches a believed cap of 1: the rejection threshold "
            "approaches 1 only as the claimed relationship tends to minus infinity"
        )
    if b > 0:
        claim = 1 / b
        raise UltimatumDomainError(
            f"claim {format_rational(claim)} would be at or above 1, where every "
            "offer is acceptable and the threshold equation has no solution"
        )
    return 1 / b


ASCEND = "ascend"


@dataclass(frozen=True)
class UltimatumConfig:
    """Relationships, each side's belief about the other, and Row's offer
    policy.  Omitted beliefs default to the true values.  ``offers`` may
    be a fixed sequence of cent-grid offers played verbatim instead of
    the inference-driven ascent."""

    r_rc: Fraction
    r_cr: Fraction
    row_belief_cr: Fraction | None = None
    col_belief_rc: Fraction | None = None
    offers: tuple[Fraction, ...] | None = None
    max_rounds: int = 100

    def __post_init__(self):
        object.__setattr__(self, "r_rc", parse_rational(self.r_rc))
        object.__setattr__(self, "r_cr", parse_rational(self.r_cr))
        for name in ("row_belief_cr", "col_belief_rc"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, parse_rational(value))
        if self.offers is not None:
            object.__setattr__(self, "offers", tuple(validate_offer(o) for o in self.offers))
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be at least 1")

    def beliefs(self) -> BeliefState:
        """The two-player BeliefState (Row first) implied by the config."""
        return two_player_beliefs(
            self.r_rc,
            self.r_cr,
            x_belief_yx=self.row_belief_cr,
            y_belief_xy=self.col_belief_rc,
        )


@dataclass(frozen=True)
class BargainRound:
    round_index: int  # 1-based
    offer: Fraction
    accepted: bool
    # Row's inferred lower bound on Column's threshold after this round
    row_threshold_bound: Fraction
    # Column's inferred lower bound on Row's cap (largest offer seen)
    column_cap_bound: Fraction


@dataclass(frozen=True)
class BargainingOutcome:
    agreement: bool
    offer: Fraction | None
    round_index: int | None
    reason: str | None
    rounds: tuple[BargainRound, ...]
    true_range: AgreementRange


def _smallest_admissible(lower: Fraction, r_rc) -> Fraction | None:
    """Smallest cent offer strictly above ``lower`` that Row will make."""
    start = max(0, lower.numerator * 100 // lower.denominator)
    for k in range(start, 101):
        offer = Fraction(k, 100)
        if offer > lower and row_willing(r_rc, offer):
            return offer
    return None


def bargain(config: UltimatumConfig) -> BargainingOutcome:
    """Run one bargaining episode.

    Under the ascent policy Row opens just above its believed threshold
    for Column (never below one cent) and raises the offer one cent past
    every rejection; Column accepts exactly the offers strictly above
    its true threshold.  Ends on acceptance, when no admissible cent
    offer remains, or at the round cap.
    """
    config.beliefs()  # validates the four relationship values as a BeliefState
    true_range = agreement_range(config.r_rc, config.r_cr)

    believed = acceptance_threshold(
        config.r_cr if config.row_belief_cr is None else config.row_belief_cr
    )
    lower = max(ZERO, believed.value) if not believed.unconstrained else ZERO
    rounds: list[BargainRound] = []
    cap_seen = ZERO

    if config.offers is not None:
        schedule = iter(config.offers)
    else:
        schedule = None

    for round_index in range(1, config.max_rounds + 1):
        if schedule is not None:
            offer = next(schedule, None)
            if offer is None:
                return BargainingOutcome(
                    False, None, None, "offer sequence exhausted", tuple(rounds), true_range
                )
        else:
            offer = _smallest_admissible(lower, config.r_rc)
            if offer is None:
                return BargainingOutcome(
                    False, None, None, "no admissible cent offer remains", tuple(rounds), true_range
                )
        accepted = column_accepts(config.r_cr, offer)
        if not accepted:
            lower = max(lower, offer)
        cap_seen = max(cap_seen, offer)
        rounds.append(BargainRound(round_index, offer, accepted, lower, cap_seen))
        if accepted:
            return BargainingOutcome(True, offer, round_index, None, tuple(rounds), true_range)
    return BargainingOutcome(False, None, None, "round limit reached", tuple(rounds), true_range)
