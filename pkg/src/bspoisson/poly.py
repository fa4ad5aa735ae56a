"""Exact sparse multivariate polynomials over the rationals.

Variables are numbered from 1 in user-facing text (``z_1 ... z_n``) and from
0 internally.  A polynomial is a map from exponent tuples to nonzero
``Fraction`` coefficients; zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are equal.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Exps = tuple[int, ...]


class IntegralityError(ArithmeticError):
    """A coefficient that should be an integer is not."""


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exps, Fraction | int] | None = None):
        self.nvars = nvars
        clean: dict[Exps, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(e)] = Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exps, Fraction]) -> Polynomial:
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: Fraction | int) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> Polynomial:
        """The monomial z_{i+1}^power (``i`` is 0-based)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Fraction | int = 1) -> Polynomial:
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
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
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def scale(self, c: Fraction | int) -> Polynomial:
        if not c:
            return Polynomial.zero(self.nvars)
        c = Fraction(c)
        return Polynomial._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(self.nvars, out)

    def __rmul__(self, other) -> Polynomial:
        return self.__mul__(other)

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ----------------------------------------------------------

    def diff(self, i: int) -> Polynomial:
        """Partial derivative in variable ``i`` (0-based)."""
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                out[tuple(f)] = c * k
        return Polynomial._raw(self.nvars, out)

    def support(self) -> set[int]:
        """0-based indices of the variables that occur."""
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def in_vars(self, allowed: Iterable[int]) -> bool:
        """True when only variables in ``allowed`` (0-based) occur."""
        return self.support() <= set(allowed)

    def substitute_zero_above(self, k: int) -> Polynomial:
        """Set z_{k+1}, ..., z_n to zero (1-based k).

        ``f.substitute_zero_above(k) == f`` exactly when f lies in
        C[z_1, ..., z_k].
        """
        return Polynomial._raw(
            self.nvars,
            {e: c for e, c in self.terms.items() if not any(e[k:])},
        )

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coeff(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def embed(self, nvars: int, offset: int) -> Polynomial:
        """Rename z_j to z_{j+offset} inside a ring with ``nvars`` variables."""
        if offset + self.nvars > nvars:
            raise ValueError("embedding does not fit")
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return Polynomial._raw(nvars, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    # -- integrality and reduction -----------------------------------------

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def evaluate(self, point: Iterable[Fraction | int]) -> Fraction:
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            m = c
            for x, k in zip(point, e):
                if k:
                    m *= x**k
            total += m
        return total

    # -- text ---------------------------------------------------------------

    def to_text(self, sep: str = " ", var: str = "z_") -> str:
        """Render as e.g. ``z_1 z_3 - 2 z_2``."""
        if not self.terms:
            return "0"
        parts = []
        for n, (e, c) in enumerate(self.sorted_terms()):
            mono = sep.join(
                f"{var}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt(mag)}{sep}{mono}"
            else:
                body = _fmt(mag)
            if n == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_text()!r})"

    # -- JSON term format ---------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"coeff": _fmt(c), "exps": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, terms: list[Mapping]) -> Polynomial:
        out: dict[Exps, Fraction] = {}
        for t in terms:
            coeff = t["coeff"]
            if not isinstance(coeff, str):
                raise ValueError("coefficients must be exact strings")
            e = tuple(int(x) for x in t["exps"])
            out[e] = out.get(e, 0) + Fraction(coeff)
        return cls(nvars, out)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:z_?\d+(?:\^\d+)?\s*\*?\s*)*)")
_FACTOR = re.compile(r"z_?(\d+)(?:\^(\d+))?")


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse text such as ``"2z2z3^2 + z1z3"`` or ``"z_1 z_3 - 2 z_2"``."""
    s = text.replace("−", "-").replace(" ", "")
    if s in ("", "0"):
        return Polynomial.zero(nvars)
    out = Polynomial.zero(nvars)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, num, mono = m.groups()
        if not num and not mono:
            raise ValueError(f"empty term in {text!r}")
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        e = [0] * nvars
        for fm in _FACTOR.finditer(mono or ""):
            i = int(fm.group(1)) - 1
            if not 0 <= i < nvars:
                raise ValueError(f"variable z{i + 1} out of range in {text!r}")
            e[i] += int(fm.group(2) or 1)
        out = out + Polynomial(nvars, {tuple(e): c})
        pos = m.end()
    return out


def assert_integral(f: Polynomial) -> dict[Exps, int]:
    """Integer view of ``f``; raises IntegralityError on a fractional coefficient."""
    out = {}
    for e, c in f.terms.items():
        if c.denominator != 1:
            raise IntegralityError(f"coefficient {c} of {f} is not an integer")
        out[e] = c.numerator
    return out


def reduce_mod(f: Polynomial, p: int) -> Polynomial:
    """Coefficientwise reduction to Z/p, representatives in 0..p-1."""
    ints = assert_integral(f)
    return Polynomial(f.nvars, {e: c % p for e, c in ints.items() if c % p})


class Derivation:
    """A derivation given by its values on generators, extended by Leibniz.

    ``images`` maps 0-based variable indices to polynomials.  Applying the
    derivation to a polynomial that involves a variable without an image is
    an error.
    """

    __slots__ = ("nvars", "images")

    def __init__(self, nvars: int, images: Mapping[int, Polynomial]):
        self.nvars = nvars
        self.images = dict(images)
        for i, g in self.images.items():
            if g.nvars != nvars:
                raise ValueError(f"image of z_{i + 1} has wrong nvars")

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_derivation(self, f)

    def domain(self) -> set[int]:
        return set(self.images)

    def __repr__(self) -> str:
        body = ", ".join(f"z_{i + 1} -> {g}" for i, g in sorted(self.images.items()))
        return f"Derivation({body})"


def apply_derivation(d: Derivation, f: Polynomial) -> Polynomial:
    if f.nvars != d.nvars:
        raise ValueError("nvars mismatch")
    out = Polynomial.zero(f.nvars)
    for i in sorted(f.support()):
        if i not in d.images:
            raise KeyError(f"derivation has no image for z_{i + 1}")
        img = d.images[i]
        if img:
            out = out + f.diff(i) * img
    return out


def commutator(d1: Derivation, d2: Derivation, f: Polynomial) -> Polynomial:
    """[d1, d2](f) = d1(d2(f)) - d2(d1(f))."""
    return d1(d2(f)) - d2(d1(f))


def poisson_bracket_extend(table, f: Polynomial, g: Polynomial) -> Polynomial:
    """Extend a generator table {z_a, z_b} to {f, g} by bilinearity and Leibniz.

    ``table`` needs ``n`` and ``bracket(a, b)`` with 1-based indices.
    """
    n = table.n
    if f.nvars != n or g.nvars != n:
        raise ValueError("nvars mismatch")
    df = {a: f.diff(a) for a in f.support()}
    dg = {b: g.diff(b) for b in g.support()}
    out = Polynomial.zero(n)
    for a, fa in df.items():
        for b, gb in dg.items():
            if a == b:
                continue
            br = table.bracket(a + 1, b + 1)
            if br:
                out = out + fa * gb * br
    return out
