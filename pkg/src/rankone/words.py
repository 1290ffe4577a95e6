"""Finite-word primitives: indexing, subwords, occurrence scanning, periods.

Words are immutable sequences of small non-negative integers.  Binary words
(alphabet size 2) are written as 0/1 strings throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Word:
    """An immutable word over the alphabet {0, ..., alphabet_size - 1}."""

    symbols: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise ValueError("alphabet_size must be at least 2")
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.alphabet_size:
                raise ValueError(f"symbol {s} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def from_string(cls, text: str, alphabet_size: int = 2) -> "Word":
        """Parse a word from a digit string such as "01011010"."""
        return cls(tuple(int(c) for c in text), alphabet_size)

    def to_string(self) -> str:
        if self.alphabet_size <= 10:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet_size != other.alphabet_size:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.alphabet_size)

    def __mul__(self, times: int) -> "Word":
        return Word(self.symbols * times, self.alphabet_size)

    def __repr__(self):
        return f"Word({self.to_string()!r})"

    def is_constant(self) -> bool:
        return len(set(self.symbols)) <= 1


def ones(length: int) -> Word:
    """The binary word 1^length."""
    return Word((1,) * length)


@dataclass(frozen=True)
class PeriodReport:
    """Minimal period of a word, optionally with all periods below a bound."""

    word_length: int
    minimal_period: int
    all_periods_up_to: tuple[int, ...] | None = field(default=None)


def subword(w: Word, i: int, j: int) -> Word:
    """The inclusive window w[i..j], of length j - i + 1."""
    if not 0 <= i <= j < len(w):
        raise IndexError(f"window [{i}, {j}] out of range for word of length {len(w)}")
    return Word(w.symbols[i : j + 1], w.alphabet_size)


def border_array(w: Word) -> list[int]:
    """Failure function: b[i] = length of the longest proper border of w[0..i]."""
    n = len(w)
    b = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and w[k] != w[i]:
            k = b[k - 1]
        if w[k] == w[i]:
            k += 1
        b[i] = k
    return b


def find_occurrences(pattern: Word, text: Word) -> list[int]:
    """All start positions of pattern in text, overlapping occurrences included.

    Linear-time scan driven by the pattern's failure function; tests pin it
    against a naive quadratic scan.
    """
    m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    if m > len(text):
        return []
    b = border_array(pattern)
    out = []
    k = 0
    for i, s in enumerate(text.symbols):
        while k > 0 and pattern[k] != s:
            k = b[k - 1]
        if pattern[k] == s:
            k += 1
        if k == m:
            out.append(i - m + 1)
            k = b[k - 1]
    return out


def _check_period_arg(w: Word, p: int):
    if not 0 < p < len(w):
        raise ValueError(f"period {p} outside (0, {len(w)})")


def is_period(w: Word, p: int) -> bool:
    """True iff w(i) = w(i+p) for every i with both sides defined."""
    _check_period_arg(w, p)
    return all(w[i] == w[i + p] for i in range(len(w) - p))


def is_period_prefix_form(w: Word, p: int) -> bool:
    """Period test via repeated copies of the length-p prefix.

    Writing len(w) = l*p + q with 0 <= q < p: the l-fold copy of the prefix
    must start w, and w must start the (l+1)-fold copy.  Equivalent to
    is_period; the equivalence is asserted exhaustively in tests.
    """
    _check_period_arg(w, p)
    block = subword(w, 0, p - 1)
    l = len(w) // p
    if (block * l).symbols != w.symbols[: l * p]:
        return False
    return (block * (l + 1)).symbols[: len(w)] == w.symbols


def periods_from_borders(w: Word) -> list[int]:
    """All periods of w in increasing order, including the vacuous len(w).

    p < len(w) is a period exactly when w has a border of length len(w) - p,
    so the border chain of the whole word enumerates them.
    """
    n = len(w)
    b = border_array(w)
    ps = [n]
    k = b[n - 1]
    while k > 0:
        ps.append(n - k)
        k = b[k - 1]
    return sorted(ps)


def minimal_period(w: Word, collect_up_to: int | None = None) -> PeriodReport:
    """Least period of w, with the convention that len(w) always qualifies.

    When collect_up_to is given, the report also lists every period <= that
    bound.  Computed from the failure function; anchored to the naive oracle
    in tests, not trusted from the construction.
    """
    if len(w) == 0:
        raise ValueError("empty word has no period")
    ps = periods_from_borders(w)
    collected = None
    if collect_up_to is not None:
        collected = tuple(p for p in ps if p <= collect_up_to)
    return PeriodReport(len(w), ps[0], collected)
