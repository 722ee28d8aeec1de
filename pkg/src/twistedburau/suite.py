"""Random inputs and cross-route checks shared by the self-test command and the test suite.

Everything is driven by a ``random.Random`` so a seed reproduces a run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .burau import burau_by_letters, burau_g_basis, burau_reduced, burau_unreduced
from .laurent import LaurentPoly, VariableRegistry, registry
from .matrices import RingMatrix
from .representation import Representation, load_representation, pullback
from .torsion import closure_fox_matrix, verify_main_theorem
from .words import ColoredBraidWord, Word, braid_permutation

REP_VARIABLES = ("s",)
TREFOIL_IMAGES = (
    [["-s", "1"], ["0", "1"]],
    [["1", "0"], ["s", "-s"]],
)


def trefoil_rep() -> Representation:
    """The two-dimensional representation of the trefoil group used in the golden run."""
    return load_representation({"name": "trefoil", "n": 2, "k": 2, "variables": ["s"],
                                "images": [list(m) for m in TREFOIL_IMAGES]})


@dataclass
class Case:
    rep: Representation
    beta: ColoredBraidWord
    label: str

    def __str__(self) -> str:
        return f"{self.label}: {self.beta} colors {self.beta.colors} k={self.rep.k}"


def random_word(rng: random.Random, n: int, max_len: int) -> Word:
    length = rng.randint(0, max_len)
    return Word(tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length)), n)


def random_letters(rng: random.Random, n: int, max_len: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    length = rng.randint(0, max_len)
    return tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))


def random_coloring(rng: random.Random, n: int) -> tuple[int, ...]:
    mu = rng.randint(1, n)
    colors = list(range(1, mu + 1)) + [rng.randint(1, mu) for _ in range(n - mu)]
    rng.shuffle(colors)
    return tuple(colors)


def random_colored_braid(rng: random.Random, n: int, max_len: int,
                         colors: tuple[int, ...] | None = None) -> ColoredBraidWord:
    return ColoredBraidWord(n, random_letters(rng, n, max_len), colors or random_coloring(rng, n))


def preserved_coloring(rng: random.Random, beta_letters: tuple[int, ...], n: int) -> tuple[int, ...]:
    """A random coloring constant on the cycles of the braid permutation."""
    perm = braid_permutation(ColoredBraidWord(n, beta_letters))
    cycles, seen = [], set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = perm[i - 1]
        cycles.append(cyc)
    mu = rng.randint(1, len(cycles))
    labels = list(range(1, mu + 1)) + [rng.randint(1, mu) for _ in range(len(cycles) - mu)]
    rng.shuffle(labels)
    colors = [0] * n
    for cyc, lab in zip(cycles, labels):
        for i in cyc:
            colors[i - 1] = lab
    return tuple(colors)


def random_unit(rng: random.Random, reg: VariableRegistry, max_exp: int = 1) -> LaurentPoly:
    e = [rng.randint(-max_exp, max_exp) for _ in range(len(reg))]
    return LaurentPoly.monomial(reg, e, rng.choice((1, -1)))


def random_unimodular(rng: random.Random, reg: VariableRegistry, k: int) -> RingMatrix:
    """A product of a few elementary and diagonal matrices; its determinant is a signed monomial."""
    m = RingMatrix.identity(k, reg)
    if k == 1:
        return RingMatrix([[random_unit(rng, reg)]], reg, 1)
    for _ in range(rng.randint(1, 3)):
        kind = rng.random()
        rows: list[list[LaurentPoly | int]] = [[1 if a == b else 0 for b in range(k)]
                                               for a in range(k)]
        if kind < 0.35:
            for a in range(k):
                rows[a][a] = random_unit(rng, reg)
        else:
            a, b = rng.sample(range(k), 2)
            rows[a][b] = random_unit(rng, reg) * rng.choice((1, 1, 2))
        m = m * RingMatrix(rows, reg, k)
    return m


def random_rep(rng: random.Random, n: int, k: int,
               reg: VariableRegistry | None = None) -> Representation:
    reg = reg or registry(REP_VARIABLES)
    return Representation([random_unimodular(rng, reg, k) for _ in range(n)], reg, name="random")


def abelian_rep(rng: random.Random, colors: tuple[int, ...], k: int,
                reg: VariableRegistry | None = None) -> Representation:
    """Pairwise commuting images that depend only on the color of each generator.

    Such a representation extends over every braid preserving ``colors``.
    """
    reg = reg or registry(REP_VARIABLES)
    mu = max(colors)
    s = LaurentPoly.variable(reg, REP_VARIABLES[0])
    per_color = []
    diagonal = k == 1 or rng.random() < 0.5
    for _ in range(mu):
        if diagonal:
            m = RingMatrix([[random_unit(rng, reg) if a == b else 0 for b in range(k)]
                            for a in range(k)], reg, k)
        else:
            # scalar times a power of [[1, s], [0, 1]]
            a = rng.randint(-2, 2)
            u = random_unit(rng, reg)
            m = RingMatrix([[u, u * s * a], [0, u]], reg, 2)
        per_color.append(m)
    return Representation([per_color[c - 1] for c in colors], reg, name="abelian")


def conjugated_case(rep: Representation, beta: ColoredBraidWord,
                    gamma: tuple[int, ...]) -> Case:
    """``gamma^-1 beta gamma`` with the pulled-back representation and matching colors."""
    n = beta.n
    top = ColoredBraidWord(n, gamma, beta.colors).bottom_colors()
    inv = tuple(-a for a in reversed(gamma))
    new_rep = pullback(rep, ColoredBraidWord(n, inv))
    new_beta = ColoredBraidWord(n, inv + beta.letters + gamma, top)
    return Case(new_rep, new_beta, "conjugate")


def trivial_cases(rng: random.Random, count: int, max_n: int = 4,
                  max_len: int = 6) -> list[Case]:
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        letters = random_letters(rng, n, max_len)
        colors = preserved_coloring(rng, letters, n)
        out.append(Case(Representation.trivial(n), ColoredBraidWord(n, letters, colors), "trivial"))
    return out


def extendable_cases(seed: int = 0, count: int = 40, max_n: int = 4,
                     max_len: int = 6) -> list[Case]:
    """A mixed list of colored braids with representations that extend to the closure."""
    rng = random.Random(seed)
    rep = trefoil_rep()
    cases = [Case(rep, ColoredBraidWord(2, (1,) * m, (1, 1)), f"trefoil s1^{m}")
             for m in (3, -3, 6)]
    cases.append(Case(rep, ColoredBraidWord(2, (1, 1, 1, -1, 1), (1, 1)), "trefoil s1^3 padded"))
    cases += trivial_cases(rng, count // 2, max_n, max_len)
    while len(cases) < count:
        n = rng.randint(2, max_n)
        letters = random_letters(rng, n, max_len)
        colors = preserved_coloring(rng, letters, n)
        beta = ColoredBraidWord(n, letters, colors)
        roll = rng.random()
        if roll < 0.25:
            gamma = random_letters(rng, 2, 3)
            cases.append(conjugated_case(rep, ColoredBraidWord(2, (1, 1, 1), (1, 1)), gamma))
            continue
        base = abelian_rep(rng, colors, rng.choice((1, 2)))
        if roll < 0.45:
            cases.append(conjugated_case(base, beta, random_letters(rng, n, 3)))
        else:
            cases.append(Case(base, beta, "abelian"))
    return cases


def cocycle_pairs(seed: int = 0, count: int = 200, max_n: int = 4,
                  max_len: int = 6) -> list[tuple[Representation, ColoredBraidWord, ColoredBraidWord]]:
    """Random ``(rho, beta, gamma)`` with ``gamma`` starting from the bottom coloring of ``beta``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        beta = random_colored_braid(rng, n, max_len)
        gamma = ColoredBraidWord(n, random_letters(rng, n, max_len), beta.bottom_colors())
        out.append((random_rep(rng, n, rng.choice((1, 2))), beta, gamma))
    return out


@dataclass
class SuiteSummary:
    checks: dict[str, list[int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        passed, total = self.checks.setdefault(name, [0, 0])
        self.checks[name] = [passed + ok, total + 1]
        if not ok:
            self.failures.append(f"{name}: {detail}")

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"{name:<22} {p}/{t}" for name, (p, t) in self.checks.items()]
        out += [f"FAILED {f}" for f in self.failures]
        out.append(f"elapsed {self.elapsed:.2f}s")
        return out


def run_selftest(seed: int = 0, cases: int = 30, pairs: int = 50) -> SuiteSummary:
    """Cocycle law, route equivalence, block shape and the torsion identity on random inputs."""
    start = time.perf_counter()
    summary = SuiteSummary()
    for rep, beta, gamma in cocycle_pairs(seed, pairs):
        whole = burau_unreduced(rep, beta.compose(gamma)).matrix
        split = burau_unreduced(pullback(rep, gamma), beta).matrix * burau_unreduced(rep, gamma).matrix
        summary.record("cocycle", whole == split, f"{beta} * {gamma}")
    for case in extendable_cases(seed, cases):
        rep, beta = case.rep, case.beta
        fox = burau_unreduced(rep, beta).matrix
        summary.record("fox = letterwise", fox == burau_by_letters(rep, beta).matrix, str(case))
        closure = closure_fox_matrix(rep, beta, check=False)
        summary.record("closure = B - I",
                       closure == fox - RingMatrix.identity(fox.nrows, fox.registry), str(case))
        try:
            burau_reduced(rep, beta)
            burau_g_basis(rep, beta)
            summary.record("g-basis block shape", True)
        except AssertionError as exc:
            summary.record("g-basis block shape", False, f"{case}: {exc}")
        report = verify_main_theorem(rep, beta)
        summary.record("torsion identity", report.passed, f"{case}: {report.detail}")
    summary.elapsed = time.perf_counter() - start
    return summary
