"""Sliding block codes and their action on words and tail points.

A code of window size R+1 maps a binary word of length l >= R+1 to a word
of length l - R over the target alphabet: output coordinate k is the table
value of the input block [k, k+R].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .construction import (
    PointSpec,
    RankOneParams,
    build_vn,
    point_window,
    telescope,
    vn_length,
)
from .errors import ExtensionExhaustedError, HorizonExhaustedError
from .words import Word, subword


def _block_index(bits: tuple[int, ...]) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


@dataclass(frozen=True)
class SlidingBlockCode:
    """Window size R+1 and a total table from binary blocks to [0, b-1].

    The table is stored as a tuple indexed by the block read as a binary
    number, most significant bit first.
    """

    R: int
    target_alphabet: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.R < 0:
            raise ValueError("R must be non-negative")
        if self.target_alphabet < 2:
            raise ValueError("target alphabet must have at least 2 symbols")
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != 2 ** (self.R + 1):
            raise ValueError(f"table must have {2 ** (self.R + 1)} entries, got {len(self.table)}")
        if any(not 0 <= s < self.target_alphabet for s in self.table):
            raise ValueError("table values must lie in the target alphabet")

    @classmethod
    def from_pairs(cls, R: int, target_alphabet: int, pairs) -> "SlidingBlockCode":
        """Build from (block string, symbol) pairs covering all 2^(R+1) blocks."""
        table = [None] * 2 ** (R + 1)
        for block, sym in pairs:
            if len(block) != R + 1 or any(c not in "01" for c in block):
                raise ValueError(f"block {block!r} is not a binary word of length {R + 1}")
            idx = _block_index(tuple(int(c) for c in block))
            if table[idx] is not None:
                raise ValueError(f"block {block!r} listed twice")
            table[idx] = sym
        if any(v is None for v in table):
            raise ValueError("table is partial: every binary block must be mapped")
        return cls(R, target_alphabet, tuple(table))

    def value(self, bits: tuple[int, ...]) -> int:
        return self.table[_block_index(bits)]

    @property
    def background(self) -> int:
        """Image of the all-1 block: the symbol long 1-runs map to."""
        return self.table[-1]

    def blocks(self):
        return product((0, 1), repeat=self.R + 1)


def identity_code() -> SlidingBlockCode:
    return SlidingBlockCode(0, 2, (0, 1))


def constant_code(symbol: int = 1, target_alphabet: int = 2, R: int = 0) -> SlidingBlockCode:
    return SlidingBlockCode(R, target_alphabet, (symbol,) * 2 ** (R + 1))


def run_detector_code() -> SlidingBlockCode:
    """R=1 code sending the block 11 to 1 and everything else to 0."""
    return SlidingBlockCode(1, 2, (0, 0, 0, 1))


def apply_code(code: SlidingBlockCode, w: Word) -> Word:
    """Slide the code across w; the result has length len(w) - R."""
    if w.alphabet_size != 2 or any(s not in (0, 1) for s in w.symbols):
        raise ValueError("sliding block codes act on binary words")
    R = code.R
    if len(w) < R + 1:
        raise ValueError(f"word of length {len(w)} is shorter than the window {R + 1}")
    table = code.table
    mask = 2 ** (R + 1) - 1
    out = []
    acc = 0
    for i, s in enumerate(w.symbols):
        acc = ((acc << 1) | s) & mask
        if i >= R:
            out.append(table[acc])
    return Word(tuple(out), code.target_alphabet)


def apply_code_tuple(code: SlidingBlockCode, symbols: tuple[int, ...]) -> tuple[int, ...]:
    """Table application on a raw symbol tuple (internal fast path)."""
    R = code.R
    table = code.table
    mask = 2 ** (R + 1) - 1
    out = []
    acc = 0
    for i, s in enumerate(symbols):
        acc = ((acc << 1) | s) & mask
        if i >= R:
            out.append(table[acc])
    return tuple(out)


def alpha_n(code: SlidingBlockCode, params: RankOneParams, n: int) -> Word:
    """Image of v_n under the code; length lh(v_n) - R."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return apply_code(code, build_vn(params, n))


def beta_a(code: SlidingBlockCode, params: RankOneParams, a: int) -> Word:
    """Image of (R-end of v_1) 1^a (R-start of v_1); length a + R.

    This is the word the code produces across a spacer of length a between
    consecutive v_1 copies.  Defined for every a >= 0; a + R = 0 gives the
    empty word.
    """
    if a < 0:
        raise ValueError("spacer length must be non-negative")
    R = code.R
    if a + R == 0:
        return Word((), code.target_alphabet)
    v1 = build_vn(params, 1)
    if len(v1) < R:
        raise ValueError(f"v_1 of length {len(v1)} is too short for R={R}")
    left = Word(v1.symbols[len(v1) - R :]) if R else Word(())
    right = Word(v1.symbols[:R]) if R else Word(())
    return apply_code(code, left + Word((1,) * a) + right)


def normalize_for_code(
    params: RankOneParams,
    code: SlidingBlockCode,
    horizon: int = 32,
    max_length: int = 200_000,
) -> RankOneParams:
    """Telescope so the stage-1 word is long enough for the code's window.

    The new v_1 must have length >= B + 2R + 2 when a declared bound B is
    present, else >= 2(R+1).  For an unbounded parameter the image of the
    new v_1 must additionally be non-constant; if no stage within the
    materialization budget (stage horizon and word-length cap) produces a
    non-constant image, the code is constant on the whole language and
    HorizonExhaustedError is raised.
    """
    R = code.R
    if params.declared_bound is not None:
        threshold = params.declared_bound + 2 * R + 2
    else:
        threshold = 2 * (R + 1)
    need_nonconstant = not params.is_bounded

    # Make sure the horizon reaches stages whose spacers exceed the window,
    # otherwise a constant-so-far image is not yet conclusive.
    top = horizon
    if need_nonconstant:
        n = 0
        while n < horizon + 64:
            try:
                row = params.stage(n).spacers
            except ExtensionExhaustedError:
                break
            if any(a >= R + 1 for a in row):
                top = max(horizon, n + 4)
                break
            n += 1

    for n0 in range(1, top + 1):
        length = vn_length(params, n0)
        if length > max(max_length, threshold):
            break
        if length < threshold:
            continue
        if need_nonconstant and apply_code(code, build_vn(params, n0)).is_constant():
            continue
        return telescope(params, [0, n0])
    raise HorizonExhaustedError(
        f"no stage up to {top} (words up to {max_length} symbols) meets the "
        f"normalization conditions (threshold {threshold}, "
        f"non-constant image required: {need_nonconstant})"
    )


def _alpha_level_for_length(code: SlidingBlockCode, params: RankOneParams, length: int) -> int:
    n = 1
    while vn_length(params, n) - code.R < length:
        n += 1
    return n


def w_prefix(code: SlidingBlockCode, params: RankOneParams, length: int) -> Word:
    """Prefix of the limit of the image words; independent of the level used."""
    if length < 1:
        raise ValueError("length must be positive")
    n = _alpha_level_for_length(code, params, length)
    img = alpha_n(code, params, n)
    return subword(img, 0, length - 1)


def wstar_suffix(code: SlidingBlockCode, params: RankOneParams, length: int) -> Word:
    """End segment of the dual limit of the image words."""
    if length < 1:
        raise ValueError("length must be positive")
    n = _alpha_level_for_length(code, params, length)
    img = alpha_n(code, params, n)
    return subword(img, len(img) - length, len(img) - 1)


def image_point_window(
    code: SlidingBlockCode, params: RankOneParams, p: PointSpec, lo: int, hi: int
) -> Word:
    """The [lo, hi] window of the image of the designated point.

    Equals the code applied to the [lo, hi + R] window of the point itself.
    """
    return apply_code(code, point_window(params, p, lo, hi + code.R))


# ---------------------------------------------------------------------------
# code file format


CODE_SCHEMA = "rankone-code/1"


def code_to_dict(code: SlidingBlockCode) -> dict:
    blocks = ["".join(str(b) for b in bits) for bits in code.blocks()]
    return {
        "schema": CODE_SCHEMA,
        "R": code.R,
        "b": code.target_alphabet,
        "table": [[block, code.table[_block_index(tuple(int(c) for c in block))]] for block in blocks],
    }


def code_from_dict(doc: dict) -> SlidingBlockCode:
    try:
        return SlidingBlockCode.from_pairs(doc["R"], doc["b"], doc["table"])
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r} in code document") from None


def dump_code(code: SlidingBlockCode) -> str:
    return json.dumps(code_to_dict(code), indent=2, sort_keys=True) + "\n"


def load_code(text: str) -> SlidingBlockCode:
    return code_from_dict(json.loads(text))
