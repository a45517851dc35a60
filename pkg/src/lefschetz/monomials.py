"""Monomials, monomial ideals, and quotient modules in up to four variables.

Everything here is immutable and pure.  The fixed variable order is
x > y > z > t, and all "sorted" monomial lists are in descending
lexicographic order on exponent vectors, so x-heavy monomials come first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

VARIABLES = ("x", "y", "z", "t")
MAX_VARIABLES = 4


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector over a fixed ambient ring."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.exponents) <= MAX_VARIABLES:
            raise ValueError(f"ambient variable count must be 1..{MAX_VARIABLES}")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        if self.nvars != other.nvars:
            raise ValueError("mixed ambient rings")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.nvars != other.nvars:
            raise ValueError("mixed ambient rings")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def extended(self, nvars: int) -> "Monomial":
        """The same monomial viewed in a larger ambient ring."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink ambient ring")
        return Monomial(self.exponents + (0,) * (nvars - self.nvars))

    def __str__(self) -> str:
        parts = []
        for var, e in zip(VARIABLES, self.exponents):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts) if parts else "1"


def variable_power(nvars: int, v: int, e: int) -> Monomial:
    """The monomial x_v^e in an ambient ring with nvars variables."""
    if not 0 <= v < nvars:
        raise ValueError(f"variable index {v} out of range for {nvars} variables")
    exps = [0] * nvars
    exps[v] = e
    return Monomial(tuple(exps))


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All degree-d monomials in nvars variables, in descending lex order."""

    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for e in range(remaining, -1, -1):
            for rest in rec(remaining - e, slots - 1):
                yield (e,) + rest

    for exps in rec(d, nvars):
        yield Monomial(exps)


def sort_descending(monomials: Iterable[Monomial]) -> list[Monomial]:
    return sorted(monomials, key=lambda m: m.exponents, reverse=True)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its unique minimal generating antichain.

    The zero ideal has no generators; the unit ideal is generated by 1.
    Use :func:`minimalize` or :meth:`from_generators` to construct one from
    an arbitrary generating set.
    """

    generators: frozenset[Monomial]
    nvars: int

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError("generator ambient ring mismatch")
        for g in self.generators:
            for h in self.generators:
                if g is not h and g.divides(h):
                    raise ValueError("generators are not an antichain; use from_generators")

    @classmethod
    def from_generators(
        cls, gens: Iterable[Monomial], nvars: Optional[int] = None
    ) -> "MonomialIdeal":
        gens = list(gens)
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for the zero ideal")
            nvars = gens[0].nvars
        sizes = {g.nvars for g in gens}
        if sizes and sizes != {nvars}:
            raise ValueError("mixed ambient ring sizes")
        minimal: list[Monomial] = []
        for m in sort_descending(set(gens)):
            if not any(g.divides(m) for g in minimal):
                minimal = [g for g in minimal if not m.divides(g)]
                minimal.append(m)
        return cls(frozenset(minimal), nvars)

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(frozenset(), nvars)

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(frozenset({Monomial((0,) * nvars)}), nvars)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def sorted_generators(self) -> list[Monomial]:
        return sort_descending(self.generators)

    def contains(self, m: Monomial) -> bool:
        if m.nvars != self.nvars:
            raise ValueError("mixed ambient rings")
        return any(g.divides(m) for g in self.generators)

    def is_artinian(self) -> bool:
        """Whether the ideal contains a pure power of every variable."""
        for v in range(self.nvars):
            if not any(
                all(e == 0 for i, e in enumerate(g.exponents) if i != v)
                for g in self.generators
            ):
                return False
        return True

    def pure_power_exponent(self, v: int) -> int:
        """The least j with x_v^j in the ideal; raises if there is none."""
        candidates = [
            g.exponents[v]
            for g in self.generators
            if all(e == 0 for i, e in enumerate(g.exponents) if i != v)
        ]
        if not candidates:
            raise ValueError(f"no pure power of variable {v} in the ideal")
        return min(candidates)

    def colon_variable_power(self, v: int, j: int) -> "MonomialIdeal":
        """The colon ideal (I : x_v^j), by per-generator exponent subtraction."""
        if j < 0:
            raise ValueError("colon exponent must be nonnegative")
        if not 0 <= v < self.nvars:
            raise ValueError("variable index out of range")
        if j == 0 or self.is_zero:
            return self
        quotients = []
        for g in self.generators:
            exps = list(g.exponents)
            exps[v] = max(exps[v] - j, 0)
            quotients.append(Monomial(tuple(exps)))
        return MonomialIdeal.from_generators(quotients, self.nvars)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.nvars != other.nvars:
            raise ValueError("mixed ambient rings")
        return MonomialIdeal.from_generators(
            list(self.generators) + list(other.generators), self.nvars
        )

    def extended(self, nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(
            frozenset(g.extended(nvars) for g in self.generators), nvars
        )

    def dimension_in_degree(self, d: int) -> int:
        """dim_k of the degree-d graded piece of the ideal."""
        return sum(1 for m in monomials_of_degree(self.nvars, d) if self.contains(m))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(str(g) for g in self.sorted_generators())


def minimalize(gens: Iterable[Monomial], nvars: Optional[int] = None) -> MonomialIdeal:
    """The divisibility antichain generating the same ideal as ``gens``."""
    return MonomialIdeal.from_generators(gens, nvars=nvars)


@dataclass(frozen=True)
class QuotientModule:
    """The graded module (I + J)/J for monomial ideals I, J in one ring.

    Its degree-d basis is the set of degree-d monomials lying in I but not
    in J.  When J is Artinian every graded piece is finite and the module
    vanishes above the socle degree of S/J.
    """

    numerator: MonomialIdeal
    denominator: MonomialIdeal

    def __post_init__(self) -> None:
        if self.numerator.nvars != self.denominator.nvars:
            raise ValueError("numerator and denominator live in different rings")

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def degree_basis(self, d: int) -> list[Monomial]:
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return [
            m
            for m in monomials_of_degree(self.nvars, d)
            if self.numerator.contains(m) and not self.denominator.contains(m)
        ]

    def dimension_in_degree(self, d: int) -> int:
        return len(self.degree_basis(d))

    def top_degree_bound(self) -> int:
        """Largest degree that can carry a nonzero graded piece."""
        if not self.denominator.is_artinian():
            raise ValueError("denominator must be Artinian")
        return sum(
            self.denominator.pure_power_exponent(v) - 1 for v in range(self.nvars)
        )

    def hilbert_series(self) -> "HilbertSeries":
        from .series import HilbertSeries

        if not self.denominator.is_artinian():
            raise ValueError("denominator must be Artinian")
        if self.denominator.is_unit or self.numerator.is_zero:
            return HilbertSeries.zero()
        top = self.top_degree_bound()
        counts = [self.dimension_in_degree(d) for d in range(top + 1)]
        return HilbertSeries.from_coefficients(0, counts)

    def socle_degree(self) -> int:
        series = self.hilbert_series()
        if series.is_zero:
            raise ValueError("zero module has no socle degree")
        return series.end

    def tensor_truncation(self, c: int) -> "QuotientModule":
        """The module tensored with k[t]/(t^c), t a fresh ambient variable."""
        if c < 1:
            raise ValueError("truncation exponent must be at least 1")
        nvars = self.nvars + 1
        if nvars > MAX_VARIABLES:
            raise ValueError("ambient variable limit exceeded")
        num = self.numerator.extended(nvars)
        den = self.denominator.extended(nvars) + MonomialIdeal.from_generators(
            [variable_power(nvars, nvars - 1, c)]
        )
        return QuotientModule(num, den)

    def __str__(self) -> str:
        return f"({self.numerator})/({self.denominator})"


def algebra_quotient(ideal: MonomialIdeal) -> QuotientModule:
    """The algebra S/I as a quotient module (1)/I."""
    return QuotientModule(MonomialIdeal.unit(ideal.nvars), ideal)


def lex_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The lex-segment ideal with the same Hilbert function, in two variables.

    Built degreewise: in each degree take the lex-largest dim I_d monomials.
    Only defined in two variables, where it agrees with the generic initial
    ideal.
    """
    if ideal.nvars != 2:
        raise ValueError("lex ideal construction requires exactly 2 variables")
    if ideal.is_zero or ideal.is_unit:
        return ideal
    maxdeg = max(g.degree for g in ideal.generators)
    # Beyond maxdeg the codimension of S/I is non-increasing, so new lex
    # generators (which need the codimension to drop) stop appearing once it
    # has bottomed out.
    codim_at_top = (maxdeg + 1) - ideal.dimension_in_degree(maxdeg)
    limit = maxdeg + codim_at_top + 2
    segment_members: list[Monomial] = []
    for d in range(limit + 1):
        t = ideal.dimension_in_degree(d)
        segment_members.extend(Monomial((d - j, j)) for j in range(t))
    return MonomialIdeal.from_generators(segment_members, nvars=2)


_TOKEN = re.compile(r"\s*([a-zA-Z])\s*(?:\^\s*(-?\d+))?\s*")


class ParseError(ValueError):
    """Raised on malformed monomial or ideal expressions."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_monomial(text: str, nvars: int) -> Monomial:
    """Parse a product of ``var^exp`` factors separated by '*' or whitespace."""
    exps = [0] * nvars
    pos = 0
    stripped = text.strip()
    if stripped == "1":
        return Monomial(tuple(exps))
    expect_factor = True
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "*":
            if expect_factor:
                raise ParseError("unexpected '*'", pos)
            expect_factor = True
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        var, exp_text = match.group(1), match.group(2)
        if var not in VARIABLES[:nvars]:
            raise ParseError(f"unknown variable {var!r}", match.start(1))
        exp = 1 if exp_text is None else int(exp_text)
        if exp < 0:
            raise ParseError("negative exponent", match.start(2))
        exps[VARIABLES.index(var)] += exp
        expect_factor = False
        pos = match.end()
    if expect_factor:
        raise ParseError("empty monomial expression", pos)
    return Monomial(tuple(exps))


def infer_nvars(text: str) -> int:
    """Smallest ambient variable count covering every variable in the text."""
    best = 1
    for ch in text:
        if ch in VARIABLES:
            best = max(best, VARIABLES.index(ch) + 1)
        elif ch.isalpha():
            raise ParseError(f"unknown variable {ch!r}", text.index(ch))
    return best


def parse_ideal(text: str, nvars: Optional[int] = None) -> MonomialIdeal:
    """Parse a comma-separated list of monomial expressions as an ideal.

    '0' denotes the zero ideal and '1' the unit ideal.
    """
    if nvars is None:
        nvars = infer_nvars(text)
    stripped = text.strip()
    if stripped == "0":
        return MonomialIdeal.zero(nvars)
    if not stripped:
        raise ParseError("empty ideal expression", 0)
    gens = [parse_monomial(part, nvars) for part in stripped.split(",")]
    return MonomialIdeal.from_generators(gens, nvars=nvars)
