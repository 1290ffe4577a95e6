"""Rank-one word construction from cutting and spacer parameters.

A parameter value holds explicit stages plus an extension rule that
materializes stages beyond the explicit ones.  Stage n concatenates q_n
copies of the current word with runs of 1s of lengths given by the stage's
spacer row:

    v_0 = 0,   v_{n+1} = v_n 1^{a_{n,1}} v_n ... v_n 1^{a_{n,q_n-1}} v_n

Bi-infinite points are never materialized; all access goes through
coordinate windows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .errors import ExtensionExhaustedError, NoParseError
from .words import Word, ones, subword


@dataclass(frozen=True)
class Stage:
    """One construction stage: cutting value q and a row of q-1 spacer lengths."""

    q: int
    spacers: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.spacers, tuple):
            object.__setattr__(self, "spacers", tuple(self.spacers))
        if self.q <= 1:
            raise ValueError("q must exceed 1")
        if len(self.spacers) != self.q - 1:
            raise ValueError(f"stage with q={self.q} needs {self.q - 1} spacers, got {len(self.spacers)}")
        if any(a < 0 for a in self.spacers):
            raise ValueError("spacers must be non-negative")


@dataclass(frozen=True)
class ExplicitExtension:
    """No stages beyond the explicit ones."""

    kind = "explicit"


@dataclass(frozen=True)
class PeriodicExtension:
    """Repeat the last `period` explicit stages forever."""

    period: int
    kind = "periodic"

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")


@dataclass(frozen=True)
class AffineExtension:
    """Generated stages have cutting value q; designated slots (1-based)
    get spacer coeff*n + offset at stage n, the rest get `fill`.

    coeff >= 1, so an affine rule always yields an unbounded spacer
    parameter.
    """

    q: int = 2
    slots: tuple[int, ...] = (1,)
    coeff: int = 1
    offset: int = 1
    fill: int = 0
    kind = "affine"

    def __post_init__(self):
        if not isinstance(self.slots, tuple):
            object.__setattr__(self, "slots", tuple(self.slots))
        if self.q <= 1:
            raise ValueError("q must exceed 1")
        if self.coeff < 1:
            raise ValueError("affine coeff must be positive (use periodic for constant rows)")
        if self.fill < 0 or self.offset < 0:
            raise ValueError("affine offset and fill must be non-negative")
        if not self.slots:
            raise ValueError("affine rule needs at least one designated slot")
        if any(not 1 <= s <= self.q - 1 for s in self.slots):
            raise ValueError("affine slots must lie in [1, q-1]")

    def row(self, n: int) -> tuple[int, ...]:
        value = self.coeff * n + self.offset
        return tuple(value if i in self.slots else self.fill for i in range(1, self.q))


Extension = Union[ExplicitExtension, PeriodicExtension, AffineExtension]


@dataclass(frozen=True)
class RankOneParams:
    """Cutting/spacer parameters: explicit stages plus an extension rule."""

    stages: tuple[Stage, ...]
    extension: Extension = field(default_factory=ExplicitExtension)
    declared_bound: int | None = None

    def __post_init__(self):
        if not isinstance(self.stages, tuple):
            object.__setattr__(self, "stages", tuple(self.stages))
        if isinstance(self.extension, PeriodicExtension):
            if self.extension.period > len(self.stages):
                raise ValueError("periodic extension needs at least `period` explicit stages")
        if isinstance(self.extension, AffineExtension) and self.declared_bound is not None:
            raise ValueError("declared_bound is inconsistent with an affine (unbounded) extension")
        if self.declared_bound is not None:
            if self.declared_bound < 0:
                raise ValueError("declared_bound must be non-negative")
            for n, st in enumerate(self.stages):
                if any(a > self.declared_bound for a in st.spacers):
                    raise ValueError(f"stage {n} spacer exceeds declared_bound {self.declared_bound}")

    @property
    def is_bounded(self) -> bool:
        return not isinstance(self.extension, AffineExtension)

    def stage(self, n: int) -> Stage:
        """Materialize stage n under the extension rule."""
        if n < 0:
            raise ValueError("stage index must be non-negative")
        e = len(self.stages)
        if n < e:
            return self.stages[n]
        ext = self.extension
        if isinstance(ext, ExplicitExtension):
            raise ExtensionExhaustedError(f"stage {n} beyond the {e} explicit stages")
        if isinstance(ext, PeriodicExtension):
            k = ext.period
            return self.stages[e - k + (n - e) % k]
        return Stage(ext.q, ext.row(n))

    def spacer_bound(self, horizon: int = 64) -> int | None:
        """A bound for every materialized spacer, or None when unbounded.

        declared_bound wins when present; a periodic rule is bounded by the
        max over one cycle; explicit stages by their max.
        """
        if self.declared_bound is not None:
            return self.declared_bound
        if not self.is_bounded:
            return None
        depth = len(self.stages)
        if isinstance(self.extension, PeriodicExtension):
            depth = max(depth, horizon)
        best = 0
        for n in range(depth):
            try:
                st = self.stage(n)
            except ExtensionExhaustedError:
                break
            best = max(best, max(st.spacers, default=0))
        return best


# ---------------------------------------------------------------------------
# word construction


@lru_cache(maxsize=512)
def _build(params: RankOneParams, n: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    prev = _build(params, n - 1)
    st = params.stage(n - 1)
    parts = [prev]
    for a in st.spacers:
        parts.append((1,) * a)
        parts.append(prev)
    return tuple(sym for part in parts for sym in part)


def build_vn(params: RankOneParams, n: int) -> Word:
    """The stage-n word v_n; v_0 = "0"."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Word(_build(params, n))


def vn_length(params: RankOneParams, n: int) -> int:
    """Length of v_n by the recurrence L_{n+1} = q_n L_n + sum(row n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    length = 1
    for t in range(n):
        st = params.stage(t)
        length = st.q * length + sum(st.spacers)
    return length


# ---------------------------------------------------------------------------
# telescoping


def _merge_range(params: RankOneParams, i: int, j: int) -> Stage:
    """Compose stages i..j-1 into the single stage carrying v_i to v_j.

    Substituting the recursion into itself: extending a merged row by stage t
    interleaves the current row between consecutive copies, with stage t's
    spacers at the seams.  Word-level equality is enforced by tests, not
    trusted from this formula.
    """
    if j <= i:
        raise ValueError("empty stage range")
    st = params.stage(i)
    q, row = st.q, list(st.spacers)
    for t in range(i + 1, j):
        st = params.stage(t)
        new_row: list[int] = []
        for a in st.spacers:
            new_row.extend(row)
            new_row.append(a)
        new_row.extend(row)
        q, row = q * st.q, new_row
    return Stage(q, tuple(row))


def telescope(params: RankOneParams, indices: list[int]) -> RankOneParams:
    """Extract the subsequence v_{indices[0]}, v_{indices[1]}, ... as new params.

    indices must be strictly increasing and start at 0.  Beyond the last
    index the new parameter continues with the original stages one by one,
    so telescope(p, [0, n]) drops to v_n while keeping the rest of p intact
    (identity index lists leave the parameter unchanged).
    """
    if not indices or indices[0] != 0:
        raise ValueError("indices must start at 0")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError("indices must be strictly increasing")
    merged = tuple(_merge_range(params, indices[k], indices[k + 1]) for k in range(len(indices) - 1))
    base = indices[-1]
    shift = base - (len(indices) - 1)
    e = len(params.stages)
    ext = params.extension

    if shift == 0 and merged == params.stages[:base]:
        return params

    if isinstance(ext, ExplicitExtension):
        if base > e:
            raise ExtensionExhaustedError(f"index {base} beyond the {e} explicit stages")
        tail = params.stages[base:]
        return RankOneParams(merged + tail, ExplicitExtension(), params.declared_bound)

    if isinstance(ext, PeriodicExtension):
        k = ext.period
        # Carry enough original stages that the cycle stays aligned.
        upto = max(e, base + k)
        tail = tuple(params.stage(t) for t in range(base, upto))
        return RankOneParams(merged + tail, PeriodicExtension(k), params.declared_bound)

    tail = tuple(params.stage(t) for t in range(base, max(e, base)))
    new_ext = AffineExtension(
        q=ext.q,
        slots=ext.slots,
        coeff=ext.coeff,
        offset=ext.offset + ext.coeff * shift,
        fill=ext.fill,
    )
    return RankOneParams(merged + tail, new_ext, params.declared_bound)


# ---------------------------------------------------------------------------
# the one-sided limit words and tail points


def _level_for_length(params: RankOneParams, length: int) -> int:
    if length < 1:
        raise ValueError("length must be positive")
    n = 0
    while vn_length(params, n) < length:
        n += 1
    return n


def v_prefix(params: RankOneParams, length: int) -> Word:
    """Prefix of the one-sided limit word V; independent of the stage used."""
    n = _level_for_length(params, length)
    w = build_vn(params, n)
    return subword(w, 0, length - 1)


def vstar_suffix(params: RankOneParams, length: int) -> Word:
    """End segment of the dual limit word V* (every v_n is an end segment)."""
    n = _level_for_length(params, length)
    w = build_vn(params, n)
    return subword(w, len(w) - length, len(w) - 1)


@dataclass(frozen=True)
class FixedPoint:
    """The constant-1 point (a member of the subshift only when unbounded)."""


@dataclass(frozen=True)
class LeftTail:
    """All 1s left of K, then V starting at coordinate K."""

    K: int


@dataclass(frozen=True)
class RightTail:
    """V* ending at coordinate K, then all 1s."""

    K: int


@dataclass(frozen=True)
class VPrefixSample:
    """A window read inside V itself, at the given non-negative offset."""

    offset: int


PointSpec = Union[FixedPoint, LeftTail, RightTail, VPrefixSample]


def point_window(params: RankOneParams, p: PointSpec, lo: int, hi: int) -> Word:
    """Restriction of the designated bi-infinite point to coordinates [lo, hi]."""
    if lo > hi:
        raise ValueError("window must satisfy lo <= hi")
    width = hi - lo + 1
    if isinstance(p, FixedPoint):
        return ones(width)
    if isinstance(p, LeftTail):
        if hi < p.K:
            return ones(width)
        prefix = v_prefix(params, hi - p.K + 1)
        pad = max(0, p.K - lo)
        start = max(0, lo - p.K)
        return ones(pad) + subword(prefix, start, len(prefix) - 1)
    if isinstance(p, RightTail):
        if lo > p.K:
            return ones(width)
        suffix = vstar_suffix(params, p.K - lo + 1)  # covers [lo, K]
        pad = max(0, hi - p.K)
        return subword(suffix, 0, min(hi, p.K) - lo) + ones(pad)
    if isinstance(p, VPrefixSample):
        if p.offset + lo < 0:
            raise ValueError("window leaves the materialized prefix")
        prefix = v_prefix(params, p.offset + hi + 1)
        return subword(prefix, p.offset + lo, p.offset + hi)
    raise TypeError(f"unknown point spec {p!r}")


# ---------------------------------------------------------------------------
# expected occurrences and decomposition scanning


@dataclass(frozen=True)
class Decomposition:
    """A full cover of a coordinate frame by block copies and 1-runs.

    starts[i+1] = starts[i] + block_length + spacers[i]; the described word
    equals the block at each start and is all 1s on each gap.  level is the
    construction level of the block, or None when the block was supplied
    directly.
    """

    level: int | None
    starts: tuple[int, ...]
    spacers: tuple[int, ...]
    frame: tuple[int, int]

    def __post_init__(self):
        if not isinstance(self.starts, tuple):
            object.__setattr__(self, "starts", tuple(self.starts))
        if not isinstance(self.spacers, tuple):
            object.__setattr__(self, "spacers", tuple(self.spacers))
        if not self.starts:
            raise ValueError("a decomposition needs at least one block")
        if len(self.spacers) != len(self.starts) - 1:
            raise ValueError("need exactly one spacer between consecutive starts")
        if any(b <= a for a, b in zip(self.starts, self.starts[1:])):
            raise ValueError("starts must be strictly increasing")
        if any(c < 0 for c in self.spacers):
            raise ValueError("spacers must be non-negative")

    def gaps_consistent(self, block_length: int) -> bool:
        return all(
            self.starts[i + 1] == self.starts[i] + block_length + self.spacers[i]
            for i in range(len(self.spacers))
        )


def expected_occurrences(params: RankOneParams, n: int, m: int) -> Decomposition:
    """The structural decomposition of v_m into copies of v_n.

    Obtained by expanding the recursion from level m down to level n; the
    gap row is exactly the merged stage row for the range [n, m).
    """
    if not 1 <= n < m:
        raise ValueError("need 1 <= n < m")
    row = _merge_range(params, n, m).spacers
    block_len = vn_length(params, n)
    starts = [0]
    for c in row:
        starts.append(starts[-1] + block_len + c)
    total = vn_length(params, m)
    if starts[-1] + block_len != total:
        raise AssertionError("decomposition does not tile v_m")  # pragma: no cover
    return Decomposition(n, tuple(starts), row, (0, total - 1))


def scan_decomposition(params: RankOneParams, n: int, w: Word) -> list[Decomposition]:
    """All ways to write w as v_n 1^{c_1} v_n ... 1^{c_r} v_n, full cover.

    Parses are returned in lexicographic order of their start tuples;
    multiplicity is reported, never collapsed.  Raises NoParseError when no
    full cover exists.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    block = build_vn(params, n)
    parses = _all_covers(w, block)
    if not parses:
        raise NoParseError(f"no full cover of the {len(w)}-symbol window by level-{n} blocks")
    out = []
    for starts in parses:
        spacers = tuple(starts[i + 1] - starts[i] - len(block) for i in range(len(starts) - 1))
        out.append(Decomposition(n, tuple(starts), spacers, (0, len(w) - 1)))
    return sorted(out, key=lambda d: d.starts)


def _all_covers(w: Word, block: Word) -> list[tuple[int, ...]]:
    """Start tuples of every full cover of w by `block` separated by 1-runs."""
    L = len(block)
    if L == 0 or L > len(w):
        return []

    def matches(pos: int) -> bool:
        return w.symbols[pos : pos + L] == block.symbols

    n = len(w)
    memo: dict[int, list[tuple[int, ...]]] = {}

    def covers_from(pos: int) -> list[tuple[int, ...]]:
        # All covers of w[pos:] that begin with a block at pos.
        if pos in memo:
            return memo[pos]
        result: list[tuple[int, ...]] = []
        if matches(pos):
            after = pos + L
            if after == n:
                result.append((pos,))
            else:
                nxt = after
                while True:
                    for rest in covers_from(nxt):
                        result.append((pos,) + rest)
                    if nxt < n and w[nxt] == 1:
                        nxt += 1
                    else:
                        break
        memo[pos] = result
        return result

    return covers_from(0)


# ---------------------------------------------------------------------------
# exact language enumeration


def _reachable_gap_values(params: RankOneParams, m: int, cap: int, horizon: int = 256) -> tuple[set[int], bool]:
    """Spacer lengths occurring between adjacent v_m copies, capped.

    Returns (values <= cap, saturated) where saturated means some gap exceeds
    cap (in particular whenever the parameter is unbounded).  Every stage row
    value at a level >= m is such a gap, and conversely.
    """
    values: set[int] = set()
    saturated = False
    ext = params.extension
    if isinstance(ext, ExplicitExtension):
        top = len(params.stages)
    elif isinstance(ext, PeriodicExtension):
        top = max(len(params.stages), m) + ext.period
    else:
        # Affine slot values grow; stop once the generated value passes cap.
        top = max(len(params.stages), m)
        while ext.coeff * top + ext.offset <= cap:
            top += 1
        top += 1
        saturated = True
    for t in range(m, max(top, m)):
        try:
            row = params.stage(t).spacers
        except ExtensionExhaustedError:
            break
        for a in row:
            if a <= cap:
                values.add(a)
            else:
                saturated = True
    if not params.is_bounded:
        saturated = True
    return values, saturated


def language_words(params: RankOneParams, length: int, horizon: int = 256) -> set[tuple[int, ...]]:
    """Every legal window of the given length, as symbol tuples.

    Any window fits inside `v_m 1^c v_m` for the least m with lh(v_m) >= length
    and c an adjacent-copy gap (a window shorter than v_m cannot span two
    gaps at that level).  Gaps longer than the window saturate: a single run
    of `length` 1s covers every window that sees at most one end of a long
    run, which also yields the tail-point windows in the unbounded case.
    """
    m = _level_for_length(params, length)
    v = build_vn(params, m).symbols
    gaps, saturated = _reachable_gap_values(params, m, cap=length - 2, horizon=horizon)
    run_lengths = set(gaps)
    if saturated:
        run_lengths.add(length)
    out: set[tuple[int, ...]] = set()
    if not run_lengths:  # deepest materializable word: only its own windows
        for k in range(len(v) - length + 1):
            out.add(v[k : k + length])
        return out
    for c in run_lengths:
        joined = v + (1,) * c + v
        for k in range(len(joined) - length + 1):
            out.add(joined[k : k + length])
    return out


# ---------------------------------------------------------------------------
# parameter file format


PARAMS_SCHEMA = "rankone-params/1"


def params_to_dict(params: RankOneParams) -> dict:
    doc: dict = {
        "schema": PARAMS_SCHEMA,
        "stages": [{"q": st.q, "spacers": list(st.spacers)} for st in params.stages],
    }
    ext = params.extension
    if isinstance(ext, ExplicitExtension):
        doc["extension"] = {"kind": "explicit"}
    elif isinstance(ext, PeriodicExtension):
        doc["extension"] = {"kind": "periodic", "period": ext.period}
    else:
        doc["extension"] = {
            "kind": "affine",
            "q": ext.q,
            "slots": list(ext.slots),
            "coeff": ext.coeff,
            "offset": ext.offset,
            "fill": ext.fill,
        }
    if params.declared_bound is not None:
        doc["declared_bound"] = params.declared_bound
    return doc


def params_from_dict(doc: dict) -> RankOneParams:
    try:
        stages = tuple(Stage(s["q"], tuple(s["spacers"])) for s in doc["stages"])
        raw = doc.get("extension", {"kind": "explicit"})
        kind = raw["kind"]
        if kind == "explicit":
            ext: Extension = ExplicitExtension()
        elif kind == "periodic":
            ext = PeriodicExtension(raw["period"])
        elif kind == "affine":
            ext = AffineExtension(
                q=raw.get("q", 2),
                slots=tuple(raw.get("slots", (1,))),
                coeff=raw.get("coeff", 1),
                offset=raw.get("offset", 1),
                fill=raw.get("fill", 0),
            )
        else:
            raise ValueError(f"unknown extension kind {kind!r}")
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r} in parameter document") from None
    return RankOneParams(stages, ext, doc.get("declared_bound"))


def dump_params(params: RankOneParams) -> str:
    return json.dumps(params_to_dict(params), indent=2, sort_keys=True) + "\n"


def load_params(text: str) -> RankOneParams:
    return params_from_dict(json.loads(text))
