"""Sparse multivariate Laurent polynomials with integer coefficients.

Exponent vectors are tuples indexed by a :class:`VariableRegistry`.  The
monomial order is lexicographic in registry order.  Rational functions are
kept as unreduced fractions; comparisons cross-multiply and decide equality
up to multiplication by a signed monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")
COLOR_NAME_RE = re.compile(r"t\d*\Z")


def color_names(mu: int) -> tuple[str, ...]:
    """Names of the color variables: ``t`` for a single color, else ``t1..t<mu>``."""
    if mu < 1:
        raise ValueError("need at least one color")
    return ("t",) if mu == 1 else tuple(f"t{i}" for i in range(1, mu + 1))


@dataclass(frozen=True)
class VariableRegistry:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownVariableError(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index  # type: ignore[attr-defined]

    def extended(self, names: Iterable[str]) -> VariableRegistry:
        return registry(self.names + tuple(v for v in names if v not in self))


@lru_cache(maxsize=None)
def registry(names: Sequence[str]) -> VariableRegistry:
    """Interned registry, so that equal registries are usually the same object."""
    return VariableRegistry(tuple(names))


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.position = position


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class LaurentPoly:
    """Element of Z[x_1^{+-1}, ..., x_m^{+-1}] stored as {exponent tuple: coefficient}."""

    __slots__ = ("registry", "terms", "_hash")

    def __init__(self, registry: VariableRegistry, terms: Mapping[tuple[int, ...], int] | None = None):
        self.registry = registry
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, reg: VariableRegistry) -> LaurentPoly:
        return cls(reg)

    @classmethod
    def constant(cls, reg: VariableRegistry, c: int) -> LaurentPoly:
        return cls(reg, {(0,) * len(reg): int(c)})

    @classmethod
    def one(cls, reg: VariableRegistry) -> LaurentPoly:
        return cls.constant(reg, 1)

    @classmethod
    def monomial(cls, reg: VariableRegistry, exponents: Sequence[int], coeff: int = 1) -> LaurentPoly:
        exps = tuple(int(e) for e in exponents)
        if len(exps) != len(reg):
            raise ValueError("exponent vector has wrong length for registry")
        return cls(reg, {exps: coeff})

    @classmethod
    def variable(cls, reg: VariableRegistry, name: str, power: int = 1) -> LaurentPoly:
        exps = [0] * len(reg)
        exps[reg.index(name)] = power
        return cls(reg, {tuple(exps): 1})

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly the signed monomials."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return next(iter(self.terms.values()), 0)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.registry is not self.registry and other.registry != self.registry:
                raise ValueError(
                    f"registry mismatch: {self.registry.names} vs {other.registry.names}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.registry, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.registry, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.registry, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.registry, {e: c * other for e, c in self.terms.items()}) if other else \
                LaurentPoly(self.registry)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly(self.registry, {tuple(x + y for x, y in zip(ea, eb)): ca * cb
                                               for ea, ca in a.items()})
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly(self.registry, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError(f"negative power of non-unit {self}")
            (e, c), = self.terms.items()
            return LaurentPoly(self.registry, {tuple(x * k for x in e): c ** -k})
        result = LaurentPoly.one(self.registry)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exponents: Sequence[int], coeff: int = 1) -> LaurentPoly:
        """Multiply by the monomial ``coeff * x^exponents``."""
        if not any(exponents):
            return self if coeff == 1 else self * coeff
        return LaurentPoly(self.registry, {tuple(x + y for x, y in zip(e, exponents)): c * coeff
                                           for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.registry, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.registry == other.registry and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.registry.names, frozenset(self.terms.items())))
        return self._hash

    # structure ----------------------------------------------------------
    def min_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * len(self.registry)
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * len(self.registry)
        return tuple(max(col) for col in zip(*self.terms))

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        """Lexicographically greatest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def trailing_term(self) -> tuple[tuple[int, ...], int]:
        e = min(self.terms)
        return e, self.terms[e]

    def embed(self, reg: VariableRegistry) -> LaurentPoly:
        """Re-express over a registry containing all variables that occur."""
        if reg is self.registry or reg == self.registry:
            return self if reg is self.registry else LaurentPoly(reg, self.terms)
        used = [i for i in range(len(self.registry)) if any(e[i] for e in self.terms)]
        pos = [reg.index(self.registry.names[i]) for i in used]
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(reg)
            for i, p in zip(used, pos):
                new[p] = e[i]
            out[tuple(new)] = c
        return LaurentPoly(reg, out)

    def substitute(self, assignments: Mapping[str, LaurentPoly | int],
                   target: VariableRegistry | None = None) -> LaurentPoly:
        return substitute(self, assignments, target)

    def variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.registry.names)
                     if any(e[i] for e in self.terms))

    # text ---------------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


def _monomial_text(reg: VariableRegistry, e: tuple[int, ...]) -> str:
    parts = []
    for name, k in zip(reg.names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Terms in increasing lexicographic order, e.g. ``1 - t + s*t^2``."""
    if not p.terms:
        return "0"
    out = []
    for e, c in sorted(p.terms.items()):
        mono = _monomial_text(p.registry, e)
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("VAR", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, reg: VariableRegistry):
        self.tokens = _tokenize(text)
        self.i = 0
        self.reg = reg

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            expected = "end of input" if kind == "END" else repr(kind)
            got = "end of input" if tok[0] == "END" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {expected}, got {got}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> LaurentPoly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> LaurentPoly:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> LaurentPoly:
        kind, text, pos = self.peek()
        if kind == "INT":
            self.take()
            return LaurentPoly.constant(self.reg, int(text))
        if kind == "VAR":
            self.take()
            if text not in self.reg:
                raise UnknownVariableError(text, pos)
            power = 1
            if self.peek()[0] == "^":
                self.take()
                sign = 1
                if self.peek()[0] == "-":
                    self.take()
                    sign = -1
                power = sign * int(self.take("INT")[1])
            return LaurentPoly.variable(self.reg, text, power)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if kind == "-":
            self.take()
            return -self.factor()
        got = "end of input" if kind == "END" else repr(text)
        raise PolynomialSyntaxError(f"unexpected {got}", pos)


def parse_poly(text: str, reg: VariableRegistry) -> LaurentPoly:
    """Parse ``+ - * ^ ( )`` expressions over the variables of ``reg``."""
    parser = _Parser(text, reg)
    value = parser.expr()
    parser.take("END")
    return value


# division ----------------------------------------------------------------

def _cleared(p: LaurentPoly) -> tuple[tuple[int, ...], dict[tuple[int, ...], int]]:
    m = p.min_exponents()
    return m, {tuple(x - y for x, y in zip(e, m)): c for e, c in p.terms.items()}


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Quotient ``p / q`` in the Laurent ring, or ``None`` if q does not divide p.

    Both sides are shifted to ordinary polynomials with no monomial factor;
    the quotient is then a polynomial, found by lexicographic long division.
    """
    q = p._coerce(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly(p.registry)
    mp, P = _cleared(p)
    mq, Q = _cleared(q)
    shift = tuple(x - y for x, y in zip(mp, mq))
    lq = max(Q)
    cq = Q[lq]
    # total degree is additive, which bounds the quotient's support
    budget = max(map(sum, P)) - max(map(sum, Q))
    if budget < 0:
        return None
    r = dict(P)
    quotient: dict[tuple[int, ...], int] = {}
    while r:
        lr = max(r)
        d = tuple(x - y for x, y in zip(lr, lq))
        if min(d) < 0 or sum(d) > budget:
            return None
        c, rem = divmod(r[lr], cq)
        if rem:
            return None
        quotient[d] = c
        for e, v in Q.items():
            key = tuple(x + y for x, y in zip(e, d))
            nv = r.get(key, 0) - c * v
            if nv:
                r[key] = nv
            else:
                del r[key]
    return LaurentPoly(p.registry, quotient).shift(shift)


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    return exact_divide(p, q) is not None


# units ---------------------------------------------------------------------

@dataclass(frozen=True)
class UnitWitness:
    """Records ``lhs = sign * x^monomial * rhs`` for a comparison up to units.

    ``unit_exponents`` expresses the monomial's non-color part in the declared
    unit generators when such an expression is read off; empty otherwise.
    """

    sign: int
    monomial: tuple[int, ...]
    registry: VariableRegistry
    unit_exponents: tuple[int, ...] = ()

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.registry, self.monomial, self.sign)

    def is_trivial(self) -> bool:
        return self.sign == 1 and not any(self.monomial)

    def __str__(self) -> str:
        return format_poly(self.as_poly())


def unit_normal_form(p: LaurentPoly) -> tuple[int, tuple[int, ...], LaurentPoly]:
    """Split ``p = sign * x^shift * normal`` with ``normal`` canonical.

    ``normal`` has every variable's minimum exponent equal to zero and a
    positive lexicographically smallest term.
    """
    if p.is_zero():
        return 1, (0,) * len(p.registry), p
    m, cleared = _cleared(p)
    sign = 1 if cleared[min(cleared)] > 0 else -1
    if sign < 0:
        cleared = {e: -c for e, c in cleared.items()}
    return sign, m, LaurentPoly(p.registry, cleared)


def normalize(p: LaurentPoly) -> LaurentPoly:
    return unit_normal_form(p)[2]


def _check_unit_generators(unit_generators: Iterable[LaurentPoly]) -> list[LaurentPoly]:
    gens = list(unit_generators)
    for g in gens:
        if not g.is_unit():
            raise ValueError(
                f"unit generator {g} is not a signed monomial; the indeterminacy group "
                "is not monomial"
            )
    return gens


def equal_up_to_units(p: LaurentPoly, q: LaurentPoly,
                      unit_generators: Iterable[LaurentPoly] = ()) -> UnitWitness | None:
    """Decide ``p = +- x^m * u * q`` and return the witness, else ``None``.

    Every declared unit generator must be a signed monomial, so the group they
    generate together with +-1 and the registry monomials is just the signed
    monomials; the witness records the combined factor.
    """
    gens = _check_unit_generators(unit_generators)
    q = p._coerce(q)
    zero = (0,) * len(p.registry)
    if p.is_zero() or q.is_zero():
        if p.is_zero() and q.is_zero():
            return UnitWitness(1, zero, p.registry)
        return None
    sp, mp, np_ = unit_normal_form(p)
    sq, mq, nq = unit_normal_form(q)
    if np_.terms != nq.terms:
        return None
    mono = tuple(x - y for x, y in zip(mp, mq))
    return UnitWitness(sp * sq, mono, p.registry, _unit_exponents(mono, gens, p.registry))


def _unit_exponents(mono: tuple[int, ...], gens: list[LaurentPoly],
                    reg: VariableRegistry) -> tuple[int, ...]:
    # Read off a power of a single generator covering the non-color part, when possible.
    colors = {i for i, v in enumerate(reg.names) if COLOR_NAME_RE.match(v)}
    rest = [0 if i in colors else x for i, x in enumerate(mono)]
    if not any(rest):
        return (0,) * len(gens)
    for idx, g in enumerate(gens):
        (e, _), = g.terms.items()
        ge = [0 if i in colors else x for i, x in enumerate(e)]
        nz = [i for i, x in enumerate(ge) if x]
        if not nz:
            continue
        k, r = divmod(rest[nz[0]], ge[nz[0]])
        if not r and all(k * x == y for x, y in zip(ge, rest)):
            out = [0] * len(gens)
            out[idx] = k
            return tuple(out)
    return ()


def substitute(p: LaurentPoly, assignments: Mapping[str, LaurentPoly | int],
               target: VariableRegistry | None = None) -> LaurentPoly:
    """Ring homomorphism sending the named variables to the given images.

    Unassigned variables are kept (they must exist in ``target``).  A variable
    that occurs with a negative exponent must be sent to a unit.
    """
    target = target or p.registry
    images: list[LaurentPoly] = []
    for i, name in enumerate(p.registry.names):
        if name in assignments:
            img = assignments[name]
            img = LaurentPoly.constant(target, img) if isinstance(img, int) else img.embed(target)
            if any(e[i] < 0 for e in p.terms) and not img.is_unit():
                raise ValueError(
                    f"cannot substitute non-unit {img} for {name}, which has negative exponents"
                )
            images.append(img)
        else:
            images.append(LaurentPoly.variable(target, name))
    out = LaurentPoly(target)
    for e, c in p.terms.items():
        term = LaurentPoly.constant(target, c)
        for img, k in zip(images, e):
            if k:
                term = term * img ** k
        out = out + term
    return out


# rational functions ----------------------------------------------------------

class RationalFunction:
    """An unreduced fraction ``numerator / denominator`` of Laurent polynomials."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly | None = None):
        if denominator is None:
            denominator = LaurentPoly.one(numerator.registry)
        denominator = numerator._coerce(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if numerator.is_zero():
            denominator = LaurentPoly.one(numerator.registry)
        self.numerator = numerator
        self.denominator = denominator

    @property
    def registry(self) -> VariableRegistry:
        return self.numerator.registry

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def simplified(self) -> RationalFunction:
        """Divide out the denominator when it divides the numerator exactly."""
        q = exact_divide(self.numerator, self.denominator)
        if q is not None:
            return RationalFunction(q)
        return self

    def as_poly(self) -> LaurentPoly | None:
        return exact_divide(self.numerator, self.denominator)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.numerator * other.numerator,
                                    self.denominator * other.denominator)
        return RationalFunction(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.numerator * other.denominator,
                                    self.denominator * other.numerator)
        return RationalFunction(self.numerator, self.denominator * other)

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            other = RationalFunction(self.numerator._coerce(other))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None  # type: ignore[assignment]

    def normal_form(self) -> str:
        """Canonical representative modulo signed monomials, as text."""
        q = self.as_poly()
        if q is not None:
            return format_poly(normalize(q))
        return f"({format_poly(normalize(self.numerator))}) / ({format_poly(normalize(self.denominator))})"

    def __str__(self) -> str:
        if self.denominator == 1:
            return format_poly(self.numerator)
        return f"({format_poly(self.numerator)}) / ({format_poly(self.denominator)})"

    __repr__ = __str__


def rat_equal_up_to_units(f: RationalFunction, g: RationalFunction,
                          unit_generators: Iterable[LaurentPoly] = ()) -> UnitWitness | None:
    """Compare ``f = u * g`` by cross-multiplying; the witness is the unit ``u``."""
    return equal_up_to_units(f.numerator * g.denominator, g.numerator * f.denominator,
                             unit_generators)
