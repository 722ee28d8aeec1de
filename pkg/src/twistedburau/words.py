"""Free-group words, the right Artin action of braids on F_n, and colorings.

Letters are stored as signed integers: ``+i`` is the generator ``x_i`` and
``-i`` its inverse.  The same convention is used for braid letters, where
``+i``/``-i`` stand for sigma_i and its inverse.  Braid words are read
left to right, top to bottom, so ``(w)(beta gamma) = ((w)beta)gamma``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word in the free group of rank ``n``."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.n:
                raise ValueError(f"generator index {a} out of range for rank {self.n}")
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def identity(cls, n: int) -> Word:
        return cls((), n)

    @classmethod
    def generator(cls, i: int, n: int) -> Word:
        return cls((i,), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return word_product(self, other)

    def inverse(self) -> Word:
        return word_inverse(self)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{abs(a)}" + ("^-1" if a < 0 else "") for a in self.letters)


def word_product(u: Word, v: Word) -> Word:
    if u.n != v.n:
        raise ValueError(f"rank mismatch: {u.n} vs {v.n}")
    # both factors are reduced, so cancellation only happens at the seam
    a, b = u.letters, v.letters
    i = 0
    while i < len(a) and i < len(b) and a[-1 - i] == -b[i]:
        i += 1
    return Word(a[: len(a) - i] + b[i:], u.n)


def word_inverse(u: Word) -> Word:
    return Word(tuple(-a for a in reversed(u.letters)), u.n)


@dataclass(frozen=True)
class ColoredBraidWord:
    """A braid word on ``n`` strands together with the coloring of its top.

    ``letters`` holds signed Artin generator indices.  ``colors`` is the
    top coloring ``c`` with values in ``1..mu``, required to be surjective.
    """

    n: int
    letters: tuple[int, ...] = ()
    colors: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.n - 1:
                raise ValueError(f"braid generator s{abs(a)} out of range for {self.n} strands")
        object.__setattr__(self, "letters", letters)
        colors = self.colors
        if colors is None:
            colors = (1,) * self.n
        colors = tuple(int(c) for c in colors)
        if len(colors) != self.n:
            raise ValueError(f"coloring has length {len(colors)}, expected {self.n}")
        if min(colors) < 1 or set(colors) != set(range(1, max(colors) + 1)):
            raise ValueError(f"coloring {colors} is not surjective onto 1..{max(colors)}")
        object.__setattr__(self, "colors", colors)

    @property
    def mu(self) -> int:
        return max(self.colors)

    def __len__(self) -> int:
        return len(self.letters)

    def bottom_colors(self) -> tuple[int, ...]:
        return propagate_colors(self)[-1]

    def is_color_preserving(self) -> bool:
        return self.bottom_colors() == self.colors

    def compose(self, other: ColoredBraidWord) -> ColoredBraidWord:
        """Concatenation ``self * other``; the bottom of self must match the top of other."""
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        if self.bottom_colors() != other.colors:
            raise ValueError("colorings are not composable")
        return ColoredBraidWord(self.n, self.letters + other.letters, self.colors)

    def inverse(self) -> ColoredBraidWord:
        return ColoredBraidWord(
            self.n, tuple(-a for a in reversed(self.letters)), self.bottom_colors()
        )

    def split(self, at: int) -> tuple[ColoredBraidWord, ColoredBraidWord]:
        """Cut into a prefix of ``at`` letters and the remaining suffix."""
        head = ColoredBraidWord(self.n, self.letters[:at], self.colors)
        tail = ColoredBraidWord(self.n, self.letters[at:], head.bottom_colors())
        return head, tail

    def __str__(self) -> str:
        return format_braid(self.letters) or "1"


def artin_letter_action(letter: int, j: int, n: int) -> Word:
    """Image of ``x_j`` under a single Artin generator (or its inverse)."""
    i = abs(letter)
    if not 1 <= i <= n - 1:
        raise ValueError(f"braid generator s{i} out of range for rank {n}")
    if not 1 <= j <= n:
        raise ValueError(f"generator index {j} out of range for rank {n}")
    if letter > 0:
        if j == i:
            return Word((i, i + 1, -i), n)
        if j == i + 1:
            return Word((i,), n)
    else:
        if j == i:
            return Word((i + 1,), n)
        if j == i + 1:
            return Word((-(i + 1), i, i + 1), n)
    return Word((j,), n)


def _substitute(letters: Sequence[int], images: Sequence[tuple[int, ...]],
                inverses: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        chunk = images[a - 1] if a > 0 else inverses[-a - 1]
        for b in chunk:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


def apply_letters(letters: Sequence[int], w: Word) -> Word:
    """Right action of a braid word (no coloring needed) on ``w``."""
    n = w.n
    current = w.letters
    for letter in letters:
        images = [artin_letter_action(letter, j, n).letters for j in range(1, n + 1)]
        inverses = [tuple(-b for b in reversed(im)) for im in images]
        current = _substitute(current, images, inverses)
    return Word(current, n)


def braid_action(beta: ColoredBraidWord, w: Word) -> Word:
    if beta.n != w.n:
        raise ValueError(f"rank mismatch: braid on {beta.n} strands, word of rank {w.n}")
    return apply_letters(beta.letters, w)


def braid_permutation(beta: ColoredBraidWord) -> tuple[int, ...]:
    """Permutation sending each top position to the bottom position of its strand.

    Returned as a tuple ``p`` with ``p[i - 1]`` the image of ``i``.
    """
    position = list(range(1, beta.n + 1))  # position[s] = current position of strand s+1
    for letter in beta.letters:
        i = abs(letter)
        for s, pos in enumerate(position):
            if pos == i:
                position[s] = i + 1
            elif pos == i + 1:
                position[s] = i
    return tuple(position)


def propagate_colors(beta: ColoredBraidWord) -> list[tuple[int, ...]]:
    """Colorings between consecutive letters.

    Entry 0 is the top coloring and entry ``len(beta)`` the bottom one.
    """
    current = list(beta.colors)
    out = [tuple(current)]
    for letter in beta.letters:
        i = abs(letter)
        current[i - 1], current[i] = current[i], current[i - 1]
        out.append(tuple(current))
    return out


def g_word(i: int, n: int) -> Word:
    """``g_i = x_1 x_2 ... x_i`` written in the x-alphabet."""
    return Word(tuple(range(1, i + 1)), n)


def to_g_alphabet(w: Word) -> Word:
    """Rewrite an x-word in the free basis ``g_i = x_1...x_i`` via x_i = g_{i-1}^-1 g_i."""
    out: list[int] = []
    for a in w.letters:
        i = abs(a)
        piece = (-(i - 1), i) if i > 1 else (1,)
        if a < 0:
            piece = tuple(-b for b in reversed(piece))
        out.extend(piece)
    return Word(out, w.n)


def from_g_alphabet(w: Word) -> Word:
    """Inverse of :func:`to_g_alphabet`: substitute ``g_i -> x_1...x_i``."""
    n = w.n
    images = [tuple(range(1, i + 1)) for i in range(1, n + 1)]
    inverses = [tuple(-b for b in reversed(im)) for im in images]
    return Word(_substitute(w.letters, images, inverses), n)


_BRAID_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str) -> tuple[int, ...]:
    """Parse ``"s1 s2^-1 s1^3"`` into signed letters ``(1, -2, 1, 1, 1)``."""
    letters: list[int] = []
    offset = 0
    for token in text.split():
        offset = text.index(token, offset)
        m = _BRAID_TOKEN.match(token)
        if not m:
            raise ValueError(f"bad braid token {token!r} at position {offset}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if i < 1:
            raise ValueError(f"braid generator index must be >= 1 at position {offset}")
        if e == 0:
            raise ValueError(f"zero exponent in {token!r} at position {offset}")
        letters.extend([i if e > 0 else -i] * abs(e))
        offset += len(token)
    return tuple(letters)


def format_braid(letters: Sequence[int]) -> str:
    """Inverse of :func:`parse_braid`, grouping runs into powers."""
    parts: list[str] = []
    k = 0
    while k < len(letters):
        a = letters[k]
        run = 1
        while k + run < len(letters) and letters[k + run] == a:
            run += 1
        e = run if a > 0 else -run
        parts.append(f"s{abs(a)}" if e == 1 else f"s{abs(a)}^{e}")
        k += run
    return " ".join(parts)
