"""Brute-force references used to freeze golden values and back property tests.

Everything here is deliberately naive and shares nothing with the optimized
paths except the Word and Decomposition types.  The command-line tool never
calls into this module.
"""

from __future__ import annotations

from .construction import Decomposition
from .words import Word


def naive_period(w: Word) -> int:
    """Least p with w(i) = w(i+p) for all valid i, trying p = 1, 2, ..."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no period")
    for p in range(1, n + 1):
        if all(w[i] == w[i + p] for i in range(n - p)):
            return p
    raise AssertionError("unreachable: p = len(w) always qualifies")


def brute_decompositions(w: Word, block: Word) -> list[Decomposition]:
    """Every full cover w = block 1^{c_1} block ... block, by plain recursion."""
    if len(block) < 1:
        raise ValueError("block must be non-empty")
    if block[0] != 0 or block[len(block) - 1] != 0:
        raise ValueError("block must start and end with 0")
    L = len(block)
    found: list[tuple[int, ...]] = []

    def recurse(pos: int, starts: tuple[int, ...]):
        if w.symbols[pos : pos + L] != block.symbols:
            return
        starts = starts + (pos,)
        after = pos + L
        if after == len(w):
            found.append(starts)
            return
        c = 0
        while True:
            recurse(after + c, starts)
            if after + c < len(w) and w[after + c] == 1:
                c += 1
            else:
                return

    recurse(0, ())
    out = []
    for starts in sorted(found):
        spacers = tuple(starts[i + 1] - starts[i] - L for i in range(len(starts) - 1))
        out.append(Decomposition(None, starts, spacers, (0, len(w) - 1)))
    return out


def _naive_image(code, u: Word) -> tuple[int, ...]:
    # plain window-by-window table lookup, independent of the rolling scan
    return tuple(code.value(u.symbols[k : k + code.R + 1]) for k in range(len(u) - code.R))


def exhaustive_margin_check(code, probes: list[Word], M: int) -> bool:
    """True iff no two probes with equal images differ at position M.

    Quadratic pairwise comparison over probes of length 2M + R + 1.
    """
    want = 2 * M + code.R + 1
    for u in probes:
        if len(u) != want:
            raise ValueError(f"probe of length {len(u)}; margin {M} needs {want}")
    images = [_naive_image(code, u) for u in probes]
    for i in range(len(probes)):
        for j in range(i + 1, len(probes)):
            if images[i] == images[j] and probes[i][M] != probes[j][M]:
                return False
    return True
