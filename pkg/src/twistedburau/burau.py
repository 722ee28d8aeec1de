"""Twisted Burau matrices of colored braids.

Two independent routes compute the unreduced matrix: Fox calculus on the
acted words ``x_i beta``, and a product of closed-form generator blocks
chained by the cocycle law ``B_rho(beta gamma) = B_{gamma_* rho}(beta) B_rho(gamma)``.
The reduced matrix comes from Fox calculus in the free basis
``g_i = x_1 ... x_i``, whose last element is fixed by every braid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_ring import fox_derivative
from .laurent import VariableRegistry
from .matrices import RingMatrix, assemble_blocks, inverse
from .representation import (ColorMap, Representation, WordEvaluator, evaluate_rep, g_evaluator,
                             pullback)
from .words import ColoredBraidWord, Word, braid_action, g_word, to_g_alphabet

X_BASIS = "x-basis"
G_BASIS = "g-basis"
REDUCED = "reduced"


class BurauConsistencyError(AssertionError):
    """An internal identity that must hold by construction failed."""


@dataclass(frozen=True)
class BurauMatrix:
    matrix: RingMatrix
    basis: str
    colors_top: tuple[int, ...]
    colors_bottom: tuple[int, ...]
    rep: Representation

    @property
    def registry(self) -> VariableRegistry:
        return self.matrix.registry

    def __str__(self) -> str:
        return str(self.matrix)


def _check(rep: Representation, beta: ColoredBraidWord) -> None:
    if rep.n != beta.n:
        raise ValueError(
            f"rank mismatch: representation of rank {rep.n}, braid on {beta.n} strands")


def _twisted_registry(rep: Representation, beta: ColoredBraidWord) -> VariableRegistry:
    return ColorMap(beta.colors).registry_for(rep)


def burau_unreduced(rep: Representation, beta: ColoredBraidWord) -> BurauMatrix:
    """Block ``(i, j)`` is ``(rho x psi_c')(d(x_i beta)/dx_j)`` with ``c'`` the bottom coloring."""
    _check(rep, beta)
    bottom = beta.bottom_colors()
    ev = WordEvaluator.twisted(rep, ColorMap(bottom))
    grid = []
    for i in range(1, beta.n + 1):
        w = braid_action(beta, Word.generator(i, beta.n))
        grid.append([ev.element(fox_derivative(w, j)) for j in range(1, beta.n + 1)])
    return BurauMatrix(assemble_blocks(grid), X_BASIS, beta.colors, bottom, rep)


def _color_var(reg: VariableRegistry, colors: ColorMap, position: int) -> tuple[int, ...]:
    return colors.exponents(reg)[position - 1]


def _positive_block(letter: int, rep: Representation, bottom: tuple[int, ...],
                    reg: VariableRegistry, reduced: bool) -> RingMatrix:
    n, k = rep.n, rep.k
    i = letter
    r = rep.over(reg)
    cmap = ColorMap(bottom)
    ident = RingMatrix.identity(k, reg)
    zero = RingMatrix.zero(k, k, reg)
    if not reduced:
        conj = evaluate_rep(r, Word((i, i + 1, -i), n)).shift(_color_var(reg, cmap, i + 1))
        over = r.images[i - 1].shift(_color_var(reg, cmap, i))
        grid = [[ident if a == b else zero for b in range(n)] for a in range(n)]
        grid[i - 1][i - 1] = ident - conj
        grid[i - 1][i] = over
        grid[i][i - 1] = ident
        grid[i][i] = zero
        return assemble_blocks(grid)
    m = n - 1
    # rho(g_{i+1} g_i^{-1}) t_{c'_{i+1}}
    word = Word(g_word(i + 1, n).letters + g_word(i, n).inverse().letters, n)
    twist = evaluate_rep(r, word).shift(_color_var(reg, cmap, i + 1))
    grid = [[ident if a == b else zero for b in range(m)] for a in range(m)]
    row = i - 1
    if i >= 2:
        grid[row][i - 2] = twist
    grid[row][i - 1] = -twist
    if i <= m - 1:
        grid[row][i] = ident
    return assemble_blocks(grid)


def _local_inverse(mat: RingMatrix, lo: int, hi: int) -> RingMatrix:
    """Invert a matrix that is the identity outside the window ``[lo, hi)``."""
    window = inverse(mat.submatrix(range(lo, hi), range(lo, hi)))
    size = mat.nrows
    rows = []
    for a in range(size):
        if lo <= a < hi:
            rows.append([window.rows[a - lo][b - lo] if lo <= b < hi else 0 for b in range(size)])
        else:
            rows.append([1 if a == b else 0 for b in range(size)])
    return RingMatrix(rows, mat.registry, size)


def burau_generator_block(letter: int, rep: Representation, colors_top: tuple[int, ...],
                          reduced: bool = False, reg: VariableRegistry | None = None) -> BurauMatrix:
    """Closed-form matrix of a single Artin letter viewed as a colored braid.

    Positive letters use the displayed generator formulas; an inverse letter
    is the exact inverse of the positive block for the pulled-back
    representation and swapped colorings.
    """
    beta = ColoredBraidWord(rep.n, (letter,), colors_top)
    reg = reg or _twisted_registry(rep, beta)
    bottom = beta.bottom_colors()
    i = abs(letter)
    k = rep.k
    if letter > 0:
        mat = _positive_block(i, rep, bottom, reg, reduced)
    else:
        # B_{rho'}(s^-1) = B_rho(s)^-1 where rho = (s^-1)_* rho' and s runs bottom -> top
        base = pullback(rep, beta)
        mat = _positive_block(i, base, colors_top, reg, reduced)
        if reduced:
            lo, hi = max(i - 2, 0) * k, min(i + 1, rep.n - 1) * k
        else:
            lo, hi = (i - 1) * k, (i + 1) * k
        mat = _local_inverse(mat, lo, hi)
    return BurauMatrix(mat, REDUCED if reduced else X_BASIS, beta.colors, bottom, rep)


def burau_by_letters(rep: Representation, beta: ColoredBraidWord,
                     reduced: bool = False) -> BurauMatrix:
    """Product of generator blocks chained by the cocycle law.

    For ``beta = l_1 ... l_m`` the factor of ``l_a`` uses the representation
    ``(l_{a+1} ... l_m)_* rho`` and the colorings between letters.
    """
    _check(rep, beta)
    reg = _twisted_registry(rep, beta)
    size = (rep.n - 1 if reduced else rep.n) * rep.k
    colorings = [beta.colors]
    for a in beta.letters:
        colorings.append(ColoredBraidWord(beta.n, (a,), colorings[-1]).bottom_colors())
    reps = [rep]
    for a in reversed(beta.letters[1:]):
        reps.append(pullback(reps[-1], ColoredBraidWord(beta.n, (a,))))
    reps.reverse()
    result = RingMatrix.identity(size, reg)
    for pos, a in enumerate(beta.letters):
        block = burau_generator_block(a, reps[pos], colorings[pos], reduced, reg)
        result = result * block.matrix
    return BurauMatrix(result, REDUCED if reduced else X_BASIS, beta.colors, colorings[-1], rep)


def burau_g_basis(rep: Representation, beta: ColoredBraidWord) -> BurauMatrix:
    """Full ``nk x nk`` matrix in the basis lifted from ``g_1, ..., g_n``."""
    _check(rep, beta)
    bottom = beta.bottom_colors()
    ev = g_evaluator(rep, ColorMap(bottom))
    grid = []
    for i in range(1, beta.n + 1):
        acted = to_g_alphabet(braid_action(beta, g_word(i, beta.n)))
        grid.append([ev.element(fox_derivative(acted, j)) for j in range(1, beta.n + 1)])
    return BurauMatrix(assemble_blocks(grid), G_BASIS, beta.colors, bottom, rep)


def burau_reduced(rep: Representation, beta: ColoredBraidWord) -> BurauMatrix:
    """Top-left ``(n-1)k`` square of the g-basis matrix.

    Raises :class:`BurauConsistencyError` if the last block row is not
    ``(0 ... 0 I_k)``.
    """
    full = burau_g_basis(rep, beta)
    m = full.matrix
    n, k = rep.n, rep.k
    expected = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
    for j in range(n):
        block = m.extract_block(n - 1, j, k)
        target = RingMatrix(expected if j == n - 1 else [[0] * k for _ in range(k)],
                            m.registry, k)
        if block != target:
            raise BurauConsistencyError(
                f"g-basis matrix has unexpected last block row at column block {j + 1}")
    size = (n - 1) * k
    top = m.submatrix(range(size), range(size))
    return BurauMatrix(top, REDUCED, full.colors_top, full.colors_bottom, rep)
