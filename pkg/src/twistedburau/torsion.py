"""Twisted torsion of braid closures, by Wada's invariant and by the reduced Burau matrix.

``wada_invariant`` works from the closure presentation with relations
``x_i = x_i beta``.  ``torsion_from_burau`` uses
``det(Bbar - I) / det(rho(x_1...x_n) t_{c_1}...t_{c_n} - I)``.
``verify_main_theorem`` compares the two up to signed monomials.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .burau import burau_reduced, burau_unreduced, BurauConsistencyError
from .group_ring import GroupRingElement, fox_derivative
from .laurent import (LaurentPoly, RationalFunction, UnitWitness, exact_divide, format_poly,
                      rat_equal_up_to_units, substitute)
from .matrices import RingMatrix, assemble_blocks, determinant
from .representation import (ColorMap, Representation, WordEvaluator, evaluate_rep,
                             extends_to_closure)
from .words import ColoredBraidWord, Word, braid_action

WADA = "wada"
BURAU = "burau"


class NotExtendableError(ValueError):
    def __init__(self, failing: tuple[int, ...]):
        gens = ", ".join(f"x{i}" for i in failing)
        super().__init__(f"representation does not extend to the closure (fails on {gens})")
        self.failing = failing


class ColoringError(ValueError):
    pass


@dataclass
class TorsionResult:
    value: RationalFunction
    route: str
    notes: list[str] = field(default_factory=list)
    unit_generators: tuple[LaurentPoly, ...] = ()

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def normal_form(self) -> str:
        return self.value.normal_form()

    def __str__(self) -> str:
        return str(self.value)


@dataclass
class VerificationReport:
    verdict: str  # "pass", "fail" or "not applicable"
    extendable: bool
    lhs: RationalFunction | None = None
    rhs: RationalFunction | None = None
    witness: UnitWitness | None = None
    detail: str = ""
    torsion: RationalFunction | None = None
    failing_generators: tuple[int, ...] = ()
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _require_closure(rep: Representation, beta: ColoredBraidWord) -> None:
    if not beta.is_color_preserving():
        raise ColoringError(
            f"braid does not preserve the coloring {beta.colors} "
            f"(bottom coloring {beta.bottom_colors()})")
    report = extends_to_closure(rep, beta)
    if not report:
        raise NotExtendableError(report.failing)


def unit_generators(rep: Representation, reg) -> tuple[LaurentPoly, ...]:
    """-1 and the determinants of the generator images, over ``reg``."""
    return (LaurentPoly.constant(reg, -1),) + tuple(d.embed(reg) for d in rep.determinants())


def closure_fox_matrix(rep: Representation, beta: ColoredBraidWord,
                       check: bool = True) -> RingMatrix:
    """Block ``(i, j)`` is ``(rho x psi_c)(d((x_i beta) - x_i)/dx_j)``.

    With ``check`` the result is compared against ``burau_unreduced - I``.
    """
    if not beta.is_color_preserving():
        raise ColoringError(f"braid does not preserve the coloring {beta.colors}")
    n = beta.n
    ev = WordEvaluator.twisted(rep, ColorMap(beta.colors))
    grid = []
    for i in range(1, n + 1):
        x = Word.generator(i, n)
        rel = GroupRingElement.from_word(braid_action(beta, x)) - x
        grid.append([ev.element(fox_derivative(rel, j)) for j in range(1, n + 1)])
    mat = assemble_blocks(grid)
    if check:
        burau = burau_unreduced(rep, beta).matrix
        if mat != burau - RingMatrix.identity(mat.nrows, mat.registry):
            raise BurauConsistencyError("closure Fox matrix differs from B - I")
    return mat


def _fraction(num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
    if num.is_zero():
        return RationalFunction(num)
    q = exact_divide(num, den)
    return RationalFunction(q) if q is not None else RationalFunction(num, den)


def wada_invariant(rep: Representation, beta: ColoredBraidWord, drop_relator: int | None = None,
                   drop_column: int | None = None) -> TorsionResult:
    """``det(A_j) / det((rho x psi)(x_j - 1))`` from the closure presentation.

    Indices are 1-based and default to ``n``.
    """
    _require_closure(rep, beta)
    n, k = beta.n, rep.k
    r = n if drop_relator is None else drop_relator
    j = n if drop_column is None else drop_column
    if not (1 <= r <= n and 1 <= j <= n):
        raise ValueError(f"dropped indices must lie in 1..{n}")
    cmap = ColorMap(beta.colors)
    reg = cmap.registry_for(rep)
    a = closure_fox_matrix(rep, beta, check=False)
    num = determinant(a.delete_block(r - 1, j - 1, k))
    ev = WordEvaluator.twisted(rep, cmap)
    den = determinant(ev.element(GroupRingElement.from_word(Word.generator(j, n)) - 1))
    notes = [f"dropped relator {r}, column {j}"]
    if den.is_zero():
        raise ArithmeticError(
            "Wada denominator vanished; input violates Wada's nonvanishing guarantee")
    if num.is_zero():
        notes.append("numerator determinant is 0: complex not acyclic, torsion set to 0")
    return TorsionResult(_fraction(num, den), WADA, notes, unit_generators(rep, reg))


def burau_denominator(rep: Representation, beta: ColoredBraidWord) -> LaurentPoly:
    """``det(rho(x_1...x_n) t_{c_1}...t_{c_n} - I_k)``."""
    cmap = ColorMap(beta.colors)
    reg = cmap.registry_for(rep)
    r = rep.over(reg)
    g_n = Word(tuple(range(1, beta.n + 1)), beta.n)
    shift = [0] * len(reg)
    for e in cmap.exponents(reg):
        shift = [a + b for a, b in zip(shift, e)]
    m = evaluate_rep(r, g_n).shift(shift) - RingMatrix.identity(rep.k, reg)
    return determinant(m)


def burau_numerator(rep: Representation, beta: ColoredBraidWord) -> LaurentPoly:
    """``det(Bbar(beta) - I)``; the empty determinant 1 when ``n == 1``."""
    reduced = burau_reduced(rep, beta).matrix
    return determinant(reduced - RingMatrix.identity(reduced.nrows, reduced.registry))


def torsion_from_burau(rep: Representation, beta: ColoredBraidWord) -> TorsionResult:
    _require_closure(rep, beta)
    reg = ColorMap(beta.colors).registry_for(rep)
    num = burau_numerator(rep, beta)
    den = burau_denominator(rep, beta)
    notes = []
    if den.is_zero():
        notes.append("identity degenerate: denominator vanishes")
        return TorsionResult(RationalFunction(num), BURAU, notes, unit_generators(rep, reg))
    if num.is_zero():
        notes.append("det(Bbar - I) = 0: torsion is 0")
    return TorsionResult(_fraction(num, den), BURAU, notes, unit_generators(rep, reg))


def verify_main_theorem(rep: Representation, beta: ColoredBraidWord,
                        drop_relator: int | None = None,
                        drop_column: int | None = None) -> VerificationReport:
    """Check ``tau * det(rho(g_n) t^{c} - I) = +- d h det(Bbar - I)`` for one input."""
    if not beta.is_color_preserving():
        return VerificationReport("not applicable", False,
                                  detail="braid does not preserve its coloring")
    ext = extends_to_closure(rep, beta)
    if not ext:
        return VerificationReport("not applicable", False, failing_generators=ext.failing,
                                  detail=f"representation does not extend (fails on "
                                         f"{', '.join(f'x{i}' for i in ext.failing)})")
    timings = {}
    t0 = time.perf_counter()
    wada = wada_invariant(rep, beta, drop_relator, drop_column)
    t1 = time.perf_counter()
    timings[WADA] = t1 - t0
    num = burau_numerator(rep, beta)
    den = burau_denominator(rep, beta)
    timings[BURAU] = time.perf_counter() - t1
    lhs = wada.value * den
    rhs = RationalFunction(num)
    gens = wada.unit_generators
    witness = rat_equal_up_to_units(lhs, rhs, gens)
    if witness is None:
        return VerificationReport("fail", True, lhs, rhs, None,
                                  "sides differ beyond signed monomials", wada.value, (), timings)
    detail = "equal up to " + format_poly(witness.as_poly())
    return VerificationReport("pass", True, lhs, rhs, witness, detail, wada.value, (), timings)


def alexander_untwisted(beta: ColoredBraidWord) -> TorsionResult:
    """Torsion for the trivial one-dimensional representation.

    With one color the value is multiplied by ``t - 1`` to give the Alexander
    polynomial; with several colors the torsion itself is returned.
    """
    rep = Representation.trivial(beta.n)
    result = torsion_from_burau(rep, beta)
    if beta.mu == 1:
        reg = result.value.registry
        factor = LaurentPoly.variable(reg, "t") - 1
        value = result.value * factor
        result = TorsionResult(_fraction(value.numerator, value.denominator), BURAU,
                               result.notes + ["multiplied by (t - 1)"], result.unit_generators)
    return result


def specialize(value: RationalFunction, assignments) -> RationalFunction:
    """Apply :func:`substitute` to numerator and denominator."""
    return RationalFunction(substitute(value.numerator, assignments),
                            substitute(value.denominator, assignments))
