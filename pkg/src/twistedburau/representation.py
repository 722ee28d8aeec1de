"""Representations of F_n into GL_k over a Laurent ring, and their twisting by colorings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Sequence

from .group_ring import GroupRingElement
from .laurent import (COLOR_NAME_RE, LaurentPoly, VariableRegistry, color_names, format_poly,
                      parse_poly, registry)
from .matrices import RingMatrix, determinant, inverse
from .words import ColoredBraidWord, Word, braid_action, g_word


class RepresentationError(ValueError):
    pass


class Representation:
    """Images ``rho(x_1), ..., rho(x_n)`` as invertible ``k x k`` matrices.

    Every image must have a signed monomial determinant; inverses are cached
    at construction.
    """

    def __init__(self, images: Sequence[RingMatrix], registry: VariableRegistry,
                 name: str | None = None, inverses: Sequence[RingMatrix] | None = None):
        if not images:
            raise RepresentationError("a representation needs at least one generator image")
        k = images[0].nrows
        for i, m in enumerate(images, 1):
            if m.shape != (k, k):
                raise RepresentationError(
                    f"image of x{i} has shape {m.shape}, expected {(k, k)}")
        self.images = tuple(m.embed(registry) for m in images)
        self.registry = registry
        self.n = len(images)
        self.k = k
        self.name = name
        if inverses is None:
            inv = []
            for i, m in enumerate(self.images, 1):
                d = determinant(m)
                if not d.is_unit():
                    raise RepresentationError(
                        f"image of x{i} is not invertible: det = {format_poly(d)} is not a unit")
                inv.append(inverse(m))
            inverses = inv
        self.inverses = tuple(m.embed(registry) for m in inverses)
        self._over: dict[VariableRegistry, Representation] = {}

    @classmethod
    def trivial(cls, n: int, k: int = 1, reg: VariableRegistry | None = None) -> Representation:
        reg = reg or registry(())
        one = RingMatrix.identity(k, reg)
        return cls([one] * n, reg, name="trivial", inverses=[one] * n)

    def over(self, reg: VariableRegistry) -> Representation:
        """The same representation with entries re-expressed over a larger registry."""
        if reg is self.registry:
            return self
        cached = self._over.get(reg)
        if cached is None:
            cached = Representation([m.embed(reg) for m in self.images], reg, self.name,
                                    [m.embed(reg) for m in self.inverses])
            self._over[reg] = cached
        return cached

    def image(self, letter: int) -> RingMatrix:
        return self.images[letter - 1] if letter > 0 else self.inverses[-letter - 1]

    def determinants(self) -> list[LaurentPoly]:
        return [determinant(m) for m in self.images]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.images == other.images

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "n": self.n,
            "k": self.k,
            "variables": [v for v in self.registry.names if not COLOR_NAME_RE.match(v)],
            "images": [m.to_lists() for m in self.images],
        }
        if self.name:
            data["name"] = self.name
        return data

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Representation{label} n={self.n} k={self.k} over {self.registry.names}>"


def load_representation(data: Mapping[str, Any] | str | Path) -> Representation:
    """Build a :class:`Representation` from its JSON description (or a path to one)."""
    if isinstance(data, (str, Path)):
        with open(data) as fh:
            data = json.load(fh)
    try:
        n = int(data["n"])
        k = int(data["k"])
        variables = list(data.get("variables", []))
        raw_images = data["images"]
    except (KeyError, TypeError, ValueError) as exc:
        raise RepresentationError(f"malformed representation description: {exc}") from None
    for v in variables:
        if COLOR_NAME_RE.match(v):
            raise RepresentationError(f"variable name {v!r} is reserved for colors")
    reg = registry(tuple(variables))
    if len(raw_images) != n:
        raise RepresentationError(f"expected {n} images, got {len(raw_images)}")
    images = []
    for i, raw in enumerate(raw_images, 1):
        if len(raw) != k or any(len(row) != k for row in raw):
            raise RepresentationError(f"image of x{i} is not {k}x{k}")
        rows = []
        for row in raw:
            rows.append([parse_poly(str(x), reg) for x in row])
        images.append(RingMatrix(rows, reg, k))
    return Representation(images, reg, name=data.get("name"))


@dataclass(frozen=True)
class ColorMap:
    """The coloring ``c``; defines psi_c(x_i) = t_{c_i}."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if not colors or min(colors) < 1 or set(colors) != set(range(1, max(colors) + 1)):
            raise ValueError(f"coloring {colors} is not surjective onto 1..mu")
        object.__setattr__(self, "colors", colors)

    @property
    def mu(self) -> int:
        return max(self.colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def variable_names(self) -> tuple[str, ...]:
        return color_names(self.mu)

    def registry_for(self, rep: Representation) -> VariableRegistry:
        return rep.registry.extended(self.variable_names())

    def exponents(self, reg: VariableRegistry) -> list[tuple[int, ...]]:
        """Exponent vector of psi_c(x_i) in ``reg``, for each generator."""
        names = self.variable_names()
        out = []
        for c in self.colors:
            e = [0] * len(reg)
            e[reg.index(names[c - 1])] = 1
            out.append(tuple(e))
        return out


class WordEvaluator:
    """Evaluates ``rho(w) * t^psi(w)`` with a prefix trie, so prefixes are shared."""

    def __init__(self, images: Sequence[RingMatrix], inverses: Sequence[RingMatrix],
                 exponents: Sequence[tuple[int, ...]], reg: VariableRegistry):
        self.images = images
        self.inverses = inverses
        self.exponents = exponents
        self.reg = reg
        k = images[0].nrows
        self._root = RingMatrix.identity(k, reg)
        self._trie: dict[tuple[int, ...], RingMatrix] = {(): self._root}

    @classmethod
    def twisted(cls, rep: Representation, colors: ColorMap) -> WordEvaluator:
        reg = colors.registry_for(rep)
        r = rep.over(reg)
        return cls(r.images, r.inverses, colors.exponents(reg), reg)

    def matrix(self, letters: tuple[int, ...]) -> RingMatrix:
        m = self._trie.get(letters)
        if m is not None:
            return m
        # walk back to the longest cached prefix
        cut = len(letters) - 1
        while letters[:cut] not in self._trie:
            cut -= 1
        m = self._trie[letters[:cut]]
        for pos in range(cut, len(letters)):
            a = letters[pos]
            m = m * (self.images[a - 1] if a > 0 else self.inverses[-a - 1])
            self._trie[letters[: pos + 1]] = m
        return m

    def exponent(self, letters: tuple[int, ...]) -> tuple[int, ...]:
        e = [0] * len(self.reg)
        for a in letters:
            sign = 1 if a > 0 else -1
            for idx, x in enumerate(self.exponents[abs(a) - 1]):
                if x:
                    e[idx] += sign * x
        return tuple(e)

    def word(self, w: Word) -> RingMatrix:
        return self.matrix(w.letters).shift(self.exponent(w.letters))

    def element(self, a: GroupRingElement) -> RingMatrix:
        k = self._root.nrows
        acc = RingMatrix.zero(k, k, self.reg)
        for w, c in a.terms.items():
            acc = acc + self.word(w).shift((0,) * len(self.reg), c)
        return acc


def evaluate_rep(rep: Representation, w: Word) -> RingMatrix:
    """``rho(w)``, multiplicative in ``w``."""
    if w.n != rep.n:
        raise ValueError(f"rank mismatch: word of rank {w.n}, representation of rank {rep.n}")
    m = RingMatrix.identity(rep.k, rep.registry)
    for a in w.letters:
        m = m * rep.image(a)
    return m


def twisted_evaluate(rep: Representation, colors: ColorMap, a: GroupRingElement | Word,
                     evaluator: WordEvaluator | None = None) -> RingMatrix:
    """Linear extension of ``w -> rho(w) t^psi_c(w)`` to the group ring."""
    if isinstance(a, Word):
        a = GroupRingElement.from_word(a)
    if a.n != rep.n or colors.n != rep.n:
        raise ValueError("rank mismatch between element, representation and coloring")
    evaluator = evaluator or WordEvaluator.twisted(rep, colors)
    return evaluator.element(a)


def pullback(rep: Representation, beta: ColoredBraidWord) -> Representation:
    """``beta_* rho``: the representation ``x_i -> rho(x_i beta)``."""
    if beta.n != rep.n:
        raise ValueError(f"rank mismatch: braid on {beta.n} strands, representation of rank {rep.n}")
    if not beta.letters:
        return rep
    images, inverses = [], []
    for i in range(1, rep.n + 1):
        w = braid_action(beta, Word.generator(i, rep.n))
        images.append(evaluate_rep(rep, w))
        inverses.append(evaluate_rep(rep, w.inverse()))
    return Representation(images, rep.registry, rep.name, inverses)


@dataclass(frozen=True)
class ExtensionReport:
    extends: bool
    failing: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.extends


def extends_to_closure(rep: Representation, beta: ColoredBraidWord) -> ExtensionReport:
    """Whether ``rho(x_i beta) == rho(x_i)`` exactly for every generator."""
    failing = []
    for i in range(1, rep.n + 1):
        w = braid_action(beta, Word.generator(i, rep.n))
        if evaluate_rep(rep, w) != rep.images[i - 1]:
            failing.append(i)
    return ExtensionReport(not failing, tuple(failing))


def g_images(rep: Representation) -> tuple[list[RingMatrix], list[RingMatrix]]:
    """Images of ``g_i = x_1...x_i`` and of their inverses."""
    imgs = [evaluate_rep(rep, g_word(i, rep.n)) for i in range(1, rep.n + 1)]
    invs = [evaluate_rep(rep, g_word(i, rep.n).inverse()) for i in range(1, rep.n + 1)]
    return imgs, invs


def g_evaluator(rep: Representation, colors: ColorMap) -> WordEvaluator:
    """Evaluator for words written in the ``g`` alphabet (i.e. rho composed with from_g)."""
    reg = colors.registry_for(rep)
    r = rep.over(reg)
    imgs, invs = g_images(r)
    x_exps = colors.exponents(reg)
    exps = []
    acc = [0] * len(reg)
    for e in x_exps:
        acc = [a + b for a, b in zip(acc, e)]
        exps.append(tuple(acc))
    return WordEvaluator(imgs, invs, exps, reg)
