"""The integral group ring Z[F_n] and Fox free differential calculus."""

from __future__ import annotations

from typing import Iterable, Mapping

from .words import Word, word_product


class GroupRingElement:
    """A finite integer combination of reduced words."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]], n: int):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, int] = {}
        for w, c in items:
            if w.n != n:
                raise ValueError(f"rank mismatch: word of rank {w.n} in Z[F_{n}]")
            acc[w] = acc.get(w, 0) + int(c)
        self.terms = {w: c for w, c in acc.items() if c}
        self.n = n

    @classmethod
    def zero(cls, n: int) -> GroupRingElement:
        return cls({}, n)

    @classmethod
    def one(cls, n: int) -> GroupRingElement:
        return cls({Word.identity(n): 1}, n)

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> GroupRingElement:
        return cls({w: coeff}, w.n)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: GroupRingElement) -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        other = _coerce(other, self.n)
        return gr_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return gr_scale(self, -1)

    def __sub__(self, other):
        other = _coerce(other, self.n)
        return gr_add(self, gr_scale(other, -1))

    def __rsub__(self, other):
        return _coerce(other, self.n) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return gr_scale(self, other)
        return gr_mul(self, _coerce(other, self.n))

    def __rmul__(self, other):
        if isinstance(other, int):
            return gr_scale(self, other)
        return gr_mul(_coerce(other, self.n), self)

    def __eq__(self, other):
        if isinstance(other, (int, Word)):
            other = _coerce(other, self.n)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0].letters)):
            body = str(w)
            if body == "1":
                text = str(abs(c))
            else:
                text = body if abs(c) == 1 else f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    __repr__ = __str__


def _coerce(x, n: int) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, Word):
        return GroupRingElement.from_word(x)
    if isinstance(x, int):
        return GroupRingElement({Word.identity(n): x}, n)
    raise TypeError(f"cannot interpret {type(x).__name__} as a group ring element")


def gr_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    a._check(b)
    return GroupRingElement(list(a.terms.items()) + list(b.terms.items()), a.n)


def gr_scale(a: GroupRingElement, k: int) -> GroupRingElement:
    return GroupRingElement({w: c * k for w, c in a.terms.items()}, a.n)


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    a._check(b)
    return GroupRingElement(
        ((word_product(u, v), cu * cv) for u, cu in a.terms.items() for v, cv in b.terms.items()),
        a.n,
    )


def _word_derivative_terms(w: Word, j: int):
    # d(uv) = du + u dv, scanned left to right with the running prefix
    prefix: list[int] = []
    for a in w.letters:
        if a == j:
            yield Word(tuple(prefix), w.n), 1
        prefix.append(a)
        if a == -j:
            yield Word(tuple(prefix), w.n), -1


def fox_derivative(a: GroupRingElement | Word, j: int) -> GroupRingElement:
    """Fox derivative with respect to the ``j``-th free generator."""
    if isinstance(a, Word):
        a = GroupRingElement.from_word(a)
    if not 1 <= j <= a.n:
        raise ValueError(f"generator index {j} out of range for rank {a.n}")
    return GroupRingElement(
        ((v, c * e) for w, c in a.terms.items() for v, e in _word_derivative_terms(w, j)),
        a.n,
    )


def fox_jacobian_row(w: Word | GroupRingElement) -> list[GroupRingElement]:
    n = w.n
    return [fox_derivative(w, j) for j in range(1, n + 1)]
