"""Factor classification: finite/trivial versus isomorphic, with certificates.

The dichotomy is an existence statement; at desk scale it is replaced by two
finite certificates searched under explicit budgets:

* a stabilized period p shared by every image word up to the level budget
  (the factor is then finite), or
* an invertibility margin M: image windows of radius M determine the central
  source symbol on every legal probe (the factor map is then injective at
  desk scale, hence an isomorphism).

Budget exhaustion yields an honest Undetermined verdict, never a guess.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .codes import (
    SlidingBlockCode,
    alpha_n,
    apply_code,
    apply_code_tuple,
    image_point_window,
    normalize_for_code,
)
from .construction import (
    LeftTail,
    RankOneParams,
    RightTail,
    build_vn,
    language_words,
    v_prefix,
    vn_length,
)
from .errors import (
    ExtensionExhaustedError,
    HorizonExhaustedError,
    InternalInconsistencyError,
    NeedsTelescopingError,
    WindowInsufficientError,
)
from .words import Word, is_period, periods_from_borders

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budgets:
    """Search budgets for classification.

    p_max defaults to the length of the level-2 image word; probe_length
    defaults to the least length the margin search needs.
    """

    n_max: int = 6
    p_max: int | None = None
    M_max: int = 8
    probe_length: int | None = None
    K_range: tuple[int, int] = (-3, 3)
    normalize_horizon: int = 32

    def __post_init__(self):
        if self.n_max < 1 or self.M_max < 0:
            raise ValueError("budgets must be positive")
        if self.p_max is not None and self.p_max < 1:
            raise ValueError("p_max must be positive")


@dataclass(frozen=True)
class FactorClassification:
    """The verdict plus whatever certificate backs it."""

    verdict: str  # "finite" | "trivial" | "isomorphic" | "undetermined"
    period: int | None = None
    margin: int | None = None
    probe_length: int | None = None
    reason: str | None = None
    budgets_used: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc: dict = {"verdict": self.verdict}
        if self.period is not None:
            doc["period"] = self.period
        if self.margin is not None:
            doc["margin"] = self.margin
        if self.probe_length is not None:
            doc["probe_length"] = self.probe_length
        if self.reason is not None:
            doc["reason"] = self.reason
        doc["budgets_used"] = dict(sorted(self.budgets_used.items()))
        return doc


@dataclass(frozen=True)
class SpacerProfile:
    """Stage-1 spacer slots reaching a threshold, mod-q_1 residue classes."""

    threshold: int
    classes: tuple[int, ...]
    aperiodic_class_present: bool


def spacer_profile(params: RankOneParams, threshold: int) -> SpacerProfile:
    """Residue classes j in [1, q_1 - 1] whose stage-1 spacer is >= threshold.

    The remaining gaps between level-1 blocks fall at positions divisible by
    q_1 and come from higher stages; for an unbounded parameter their lengths
    grow without bound (the aperiodic class).
    """
    st = params.stage(1)
    classes = tuple(j for j in range(1, st.q) if st.spacers[j - 1] >= threshold)
    if not classes:
        raise NeedsTelescopingError(
            f"no stage-1 spacer reaches {threshold}; telescope deeper first"
        )
    return SpacerProfile(threshold, classes, not params.is_bounded)


def detect_finite_period(
    code: SlidingBlockCode,
    params: RankOneParams,
    n_max: int,
    p_max: int,
) -> int | None:
    """Least p <= p_max that is a period of every image word up to level n_max
    and of a long image prefix; None when no such p exists.

    params must already be normalized for the code.  Budget exhaustion shows
    up as None, never as a wrong verdict.
    """
    alphas = [alpha_n(code, params, n) for n in range(1, n_max + 1)]
    allowed: list[set[int]] = []
    for a in alphas:
        ps = set(periods_from_borders(a))
        ps.update(range(len(a), p_max + 1))  # vacuous periods past the word
        allowed.append(ps)
    candidates = sorted(set.intersection(*allowed)) if allowed else []
    candidates = [p for p in candidates if p <= p_max]
    if not candidates:
        return None
    prefix_len = 10 * vn_length(params, 2)
    image = apply_code(code, v_prefix(params, prefix_len))
    for p in candidates:
        if p < len(image) and is_period(image, p):
            if params.declared_bound is not None:
                if p <= params.declared_bound:
                    log.info("finite period %d within the declared spacer bound %d", p, params.declared_bound)
                else:
                    log.warning(
                        "finite period %d exceeds the declared spacer bound %d",
                        p,
                        params.declared_bound,
                    )
            return p
    return None


def margin_holds(
    code: SlidingBlockCode,
    params: RankOneParams,
    M: int,
    probe_length: int | None = None,
) -> bool:
    """Do image windows of radius M determine the source symbol they cover?

    Probes are exactly the legal words of the probe length; every position
    whose radius-M image window fits inside the probe is checked.  With the
    minimal probe length 2M + R + 1 this is the plain center check.
    """
    R = code.R
    least = 2 * M + R + 1
    ell = least if probe_length is None else probe_length
    if ell < least:
        raise ValueError(f"probe length {ell} below the least usable {least}")
    probes = language_words(params, ell)
    seen: dict[tuple[int, ...], int] = {}
    for u in probes:
        img = apply_code_tuple(code, u)
        for pos in range(M, ell - M - R):
            window = img[pos - M : pos + M + 1]
            prev = seen.get(window)
            if prev is None:
                seen[window] = u[pos]
            elif prev != u[pos]:
                return False
    return True


def invertibility_margin(
    code: SlidingBlockCode,
    params: RankOneParams,
    M_max: int,
    probe_length: int | None = None,
) -> int | None:
    """Least M <= M_max whose margin certificate holds; None when none does.

    params must already be normalized for the code.  The optional probe
    length must leave room for the widest window, 2*M_max + R + 1.
    """
    least = 2 * M_max + code.R + 1
    if probe_length is not None and probe_length < least:
        raise ValueError(f"probe length {probe_length} cannot host margins up to {M_max}")
    for M in range(M_max + 1):
        if margin_holds(code, params, M):
            return M
    return None


def _first_nonbackground(symbols: tuple[int, ...], background: int) -> int | None:
    for i, s in enumerate(symbols):
        if s != background:
            return i
    return None


def _last_nonbackground(symbols: tuple[int, ...], background: int) -> int | None:
    for i in range(len(symbols) - 1, -1, -1):
        if symbols[i] != background:
            return i
    return None


def left_tail_signature(code: SlidingBlockCode, params: RankOneParams, K: int) -> int:
    """Coordinate of the first non-background symbol in the image of the
    left-tail point with word material starting at K.

    Non-background symbols cannot occur before K - R (all earlier windows sit
    inside the 1-run), and occur by K + i0 where i0 marks the first
    non-background symbol of the level-1 image word.
    """
    sigma = code.background
    a1 = alpha_n(code, params, 1)
    i0 = _first_nonbackground(a1.symbols, sigma)
    if i0 is None:
        raise ValueError("level-1 image word is constant background")
    lo, hi = K - code.R, K + i0
    img = image_point_window(code, params, LeftTail(K), lo, hi)
    first = _first_nonbackground(img.symbols, sigma)
    if first is None:
        raise WindowInsufficientError("no witness inside the guaranteed window")
    return lo + first


def right_tail_signature(code: SlidingBlockCode, params: RankOneParams, K: int) -> int:
    """Coordinate of the last non-background symbol in the image of the
    right-tail point with word material ending at K."""
    sigma = code.background
    a1 = alpha_n(code, params, 1)
    if a1.is_constant() and a1[0] == sigma:
        raise ValueError("level-1 image word is constant background")
    lo, hi = K - code.R - len(a1), K
    img = image_point_window(code, params, RightTail(K), lo, hi)
    last = _last_nonbackground(img.symbols, sigma)
    if last is None:
        raise WindowInsufficientError("no witness inside the guaranteed window")
    return lo + last


def tail_separation_check(
    code: SlidingBlockCode,
    params: RankOneParams,
    K_range: tuple[int, int],
) -> bool:
    """Are the images of the tail points pairwise distinct over the sampled K?

    Checks that first non-background positions of left-tail images and last
    non-background positions of right-tail images each track K at a constant
    offset (hence are pairwise distinct), and that the two image families are
    disjoint from each other and from the constant image of the fixed point,
    on windows wide enough to contain the witnesses.

    params must be normalized for the code, with a non-constant level-1
    image word; a constant image word signals a trivial factor upstream.
    """
    sigma = code.background
    a1 = alpha_n(code, params, 1)
    if a1.is_constant():
        raise ValueError("level-1 image word is constant; the factor is trivial or finite")
    lo_K, hi_K = K_range
    if lo_K > hi_K:
        raise ValueError("empty K range")
    ks = range(lo_K, hi_K + 1)

    left = {K: left_tail_signature(code, params, K) for K in ks}
    right = {K: right_tail_signature(code, params, K) for K in ks}
    if len({pos - K for K, pos in left.items()}) != 1:
        return False
    if len({pos - K for K, pos in right.items()}) != 1:
        return False
    if len(set(left.values())) != len(left) or len(set(right.values())) != len(right):
        return False

    # Left-tail images carry non-background symbols arbitrarily far right,
    # right-tail images are background there: find such a witness for every
    # pair to separate the two families.
    for K in ks:
        for K2 in ks:
            if _left_has_witness_beyond(code, params, K, K2) is None:
                raise WindowInsufficientError(
                    f"no non-background witness of the left-tail image K={K} beyond {K2}"
                )
    return True


def _left_has_witness_beyond(
    code: SlidingBlockCode, params: RankOneParams, K: int, beyond: int, levels: int = 12
) -> int | None:
    """First coordinate > beyond where the left-tail image is non-background."""
    sigma = code.background
    start = max(beyond + 1, K - code.R)
    for n in range(2, levels + 1):
        try:
            width = vn_length(params, n)
        except ExtensionExhaustedError:
            break
        img = image_point_window(code, params, LeftTail(K), start, start + width)
        hit = _first_nonbackground(img.symbols, sigma)
        if hit is not None:
            return start + hit
    return None


def _trivial_image_verified(
    code: SlidingBlockCode, params: RankOneParams, n_max: int
) -> bool:
    """All image words up to level n_max are constant background."""
    sigma = code.background
    for n in range(1, n_max + 1):
        try:
            if vn_length(params, n) < code.R + 1:
                continue
            a = alpha_n(code, params, n)
        except ExtensionExhaustedError:
            break
        if not (a.is_constant() and a[0] == sigma):
            return False
    return True


def classify(
    code: SlidingBlockCode,
    params: RankOneParams,
    budgets: Budgets = Budgets(),
) -> FactorClassification:
    """Decide finite/trivial versus isomorphic for the code's factor.

    Bounded spacer parameter: a stabilized period gives Finite, else a margin
    certificate gives Isomorphic.  Unbounded: constant background images give
    Trivial, else tail separation plus a margin certificate give Isomorphic.
    Budget exhaustion yields Undetermined naming the failing stage.  Both
    certificates succeeding at once is a hard internal error: the dichotomy
    forbids it for aperiodic source words.
    """
    used = {"n_max": budgets.n_max, "p_max": budgets.p_max, "M_max": budgets.M_max}

    def undetermined(reason: str) -> FactorClassification:
        return FactorClassification("undetermined", reason=reason, budgets_used=dict(used))

    try:
        normalized = normalize_for_code(params, code, budgets.normalize_horizon)
    except HorizonExhaustedError as exc:
        if _trivial_image_verified(code, params, budgets.n_max):
            return FactorClassification("trivial", budgets_used=dict(used))
        return undetermined(f"normalization: {exc}")
    except ExtensionExhaustedError as exc:
        return undetermined(f"normalization: {exc}")

    R = code.R
    probe_length = budgets.probe_length or (2 * budgets.M_max + R + 1)
    try:
        if params.is_bounded:
            p_max = budgets.p_max or (vn_length(normalized, 2) - R)
            used["p_max"] = p_max
            period = detect_finite_period(code, normalized, budgets.n_max, p_max)
            margin = invertibility_margin(code, normalized, budgets.M_max, probe_length)
            if period is not None and margin is not None:
                raise InternalInconsistencyError(
                    f"both certificates validated: period {period} and margin {margin}"
                )
            if period is not None:
                return FactorClassification("finite", period=period, budgets_used=dict(used))
            if margin is not None:
                return FactorClassification(
                    "isomorphic", margin=margin, probe_length=probe_length, budgets_used=dict(used)
                )
            return undetermined(
                f"no stabilized period <= {p_max} and no margin <= {budgets.M_max}"
            )

        # unbounded: normalization succeeded, so some image word is non-constant
        separated = tail_separation_check(code, normalized, budgets.K_range)
        if not separated:
            return undetermined("tail images failed the separation check")
        margin = invertibility_margin(code, normalized, budgets.M_max, probe_length)
        if margin is None:
            return undetermined(f"no margin <= {budgets.M_max}")
        return FactorClassification(
            "isomorphic", margin=margin, probe_length=probe_length, budgets_used=dict(used)
        )
    except ExtensionExhaustedError as exc:
        return undetermined(f"extension exhausted: {exc}")
    except WindowInsufficientError as exc:
        return undetermined(f"tail separation: {exc}")


def revalidate(
    code: SlidingBlockCode,
    params: RankOneParams,
    result: FactorClassification,
    budgets: Budgets = Budgets(),
) -> bool:
    """Re-check a verdict's certificate with more data.

    Finite: a fresh image prefix ten times longer must still have the period.
    Isomorphic: the margin must hold at probe length L + lh(v_1).  Trivial:
    image words one level deeper must still be constant background.
    """
    if result.verdict == "undetermined":
        return True
    if result.verdict == "trivial":
        return _trivial_image_verified(code, params, budgets.n_max + 1)
    normalized = normalize_for_code(params, code, budgets.normalize_horizon)
    if result.verdict == "finite":
        prefix_len = 100 * vn_length(normalized, 2)
        image = apply_code(code, v_prefix(normalized, prefix_len))
        return is_period(image, result.period)
    if result.verdict == "isomorphic":
        longer = result.probe_length + vn_length(normalized, 1)
        return margin_holds(code, normalized, result.margin, longer)
    raise ValueError(f"unknown verdict {result.verdict!r}")
