"""Exact sparse polynomials over the rationals, in the variables (x, s) and in x alone.

Coefficients are exact rationals: plain ``int`` while a value is integral,
``fractions.Fraction`` otherwise.  The two representations compare and hash
identically, so polynomial equality is plain dict equality and nothing ever
rounds.

Polynomials are immutable value objects.  Canonical form stores no zero
coefficients, and iteration/rendering order is fixed (descending degree in x,
then descending degree in s), so equal polynomials always render to the same
string.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

__all__ = [
    "Rat",
    "OddDegreeError",
    "ZeroPolynomialError",
    "BiPoly",
    "UniPoly",
]

Rat = Union[int, Fraction]


class OddDegreeError(ValueError):
    """A square-root substitution hit a term of odd degree.

    The callers that halve exponents only ever do so on polynomials that are
    even in the substituted variable; seeing this error means the input was
    not one of those.
    """


class ZeroPolynomialError(ValueError):
    """A degree-based operation was applied to the zero polynomial."""


def _coeff(c: object) -> Rat:
    """Validate and normalize a coefficient: integral Fractions become ints."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return int(c)
    raise TypeError(
        f"coefficient must be an exact rational (int or Fraction), got {type(c).__name__}"
    )


def _exponent(e: object) -> int:
    if isinstance(e, int) and not isinstance(e, bool) and e >= 0:
        return e
    raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")


_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitting constant for doubles


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ta = _SPLIT * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLIT * b
    bhi = tb - (tb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _term_text(mag: Rat, vars_part: list[str]) -> str:
    parts = [str(mag)] if (mag != 1 or not vars_part) else []
    parts.extend(vars_part)
    return "*".join(parts)


def _join_terms(rendered: list[tuple[bool, str]], truncated: int) -> str:
    out: list[str] = []
    for i, (negative, body) in enumerate(rendered):
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    if truncated:
        out.append(f"+ ... ({truncated} more terms)")
    return " ".join(out)


class BiPoly:
    """A sparse polynomial in the commuting variables x and s.

    Terms live in a map ``{(deg_x, deg_s): coefficient}``; zero coefficients
    are never stored, so the zero polynomial is the empty map.  All operations
    return new instances in canonical form.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Rat] | None = None) -> None:
        data: dict[tuple[int, int], Rat] = {}
        if terms:
            for (dx, ds), raw in terms.items():
                c = _coeff(raw)
                if c:
                    data[(_exponent(dx), _exponent(ds))] = c
        self._terms = data
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> BiPoly:
        return cls()

    @classmethod
    def one(cls) -> BiPoly:
        return cls({(0, 0): 1})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def s(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: Rat) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: Rat, deg_x: int, deg_s: int) -> BiPoly:
        return cls({(deg_x, deg_s): c})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, int], Rat]]:
        """Yield ((deg_x, deg_s), coefficient) in canonical order."""
        for key in sorted(self._terms, key=lambda k: (-k[0], -k[1])):
            yield key, self._terms[key]

    def coefficient(self, deg_x: int, deg_s: int) -> Rat:
        return self._terms.get((deg_x, deg_s), 0)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(isinstance(c, int) for c in self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: BiPoly | Rat) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            v = acc.get(key, 0) + c
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return BiPoly(acc)

    __radd__ = __add__

    def __sub__(self, other: BiPoly | Rat) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            v = acc.get(key, 0) - c
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return BiPoly(acc)

    def __rsub__(self, other: Rat) -> BiPoly:
        return (-self) + other

    def __neg__(self) -> BiPoly:
        return BiPoly({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: BiPoly | Rat) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[tuple[int, int], Rat] = {}
        for (ax, asdeg), ac in a.items():
            for (bx, bs), bc in b.items():
                key = (ax + bx, asdeg + bs)
                v = acc.get(key, 0) + ac * bc
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return BiPoly(acc)

    __rmul__ = __mul__

    def scale(self, c: Rat) -> BiPoly:
        c = _coeff(c)
        if not c:
            return BiPoly()
        return BiPoly({key: v * c for key, v in self._terms.items()})

    def __pow__(self, k: int) -> BiPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = BiPoly.one()
        for _ in range(k):
            result = result * self
        return result

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x0: Rat, s0: Rat) -> Fraction:
        """Exact value of the polynomial at the rational point (x0, s0)."""
        x0 = _coeff(x0)
        s0 = _coeff(s0)
        total: Rat = 0
        for (dx, ds), c in self._terms.items():
            total += c * x0**dx * s0**ds
        return Fraction(total)

    def substitute_s(self, s0: Rat) -> UniPoly:
        """Specialize s to a rational, leaving a polynomial in x alone."""
        s0 = _coeff(s0)
        acc: dict[int, Rat] = {}
        for (dx, ds), c in self._terms.items():
            v = acc.get(dx, 0) + c * s0**ds
            if v:
                acc[dx] = v
            else:
                acc.pop(dx, None)
        return UniPoly(acc)

    def even_substitute(self, q: BiPoly) -> BiPoly:
        """Replace each factor x^(2k) by q^k; degrees in s pass through.

        Every term must have even degree in x, otherwise OddDegreeError is
        raised: the substitution stands in for x -> sqrt(q), which only
        lands back in the ring when the polynomial is even in x.
        """
        if not isinstance(q, BiPoly):
            raise TypeError("substitution target must be a BiPoly")
        if not self._terms:
            return BiPoly()
        half_degrees = []
        for dx, _ in self._terms:
            if dx % 2:
                raise OddDegreeError(
                    f"term with x-degree {dx} is odd; polynomial is not even in x"
                )
            half_degrees.append(dx // 2)
        # q^k by repeated multiplication, built once per power needed.
        powers = [BiPoly.one()]
        for _ in range(max(half_degrees)):
            powers.append(powers[-1] * q)
        acc: dict[tuple[int, int], Rat] = {}
        for (dx, ds), c in self._terms.items():
            for (qx, qs), qc in powers[dx // 2]._terms.items():
                key = (qx, qs + ds)
                v = acc.get(key, 0) + c * qc
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return BiPoly(acc)

    def weighted_degree(self, w_x: int, w_s: int) -> tuple[int, bool]:
        """Max term weight under weights (w_x, w_s), and whether all terms share it."""
        if not (isinstance(w_x, int) and w_x >= 1 and isinstance(w_s, int) and w_s >= 1):
            raise ValueError("weights must be positive integers")
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        weights = {w_x * dx + w_s * ds for dx, ds in self._terms}
        return max(weights), len(weights) == 1

    # -- comparison and rendering --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def render(self, max_terms: int | None = None) -> str:
        """Canonical text form, e.g. ``x^3 + 6*s*x^2 + 9*s^2*x``.

        Descending x-degree then descending s-degree; coefficient 1 and
        exponent 1 are elided; signs are explicit.  ``max_terms`` truncates
        long polynomials for display.
        """
        if not self._terms:
            return "0"
        entries = list(self.terms())
        truncated = 0
        if max_terms is not None and len(entries) > max_terms:
            truncated = len(entries) - max_terms
            entries = entries[:max_terms]
        rendered = []
        for (dx, ds), c in entries:
            negative = c < 0
            mag = -c if negative else c
            vars_part = []
            if ds > 0:
                vars_part.append("s" if ds == 1 else f"s^{ds}")
            if dx > 0:
                vars_part.append("x" if dx == 1 else f"x^{dx}")
            rendered.append((negative, _term_text(mag, vars_part)))
        return _join_terms(rendered, truncated)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BiPoly({self.render(max_terms=12)})"


class UniPoly:
    """A sparse polynomial in the single variable x over the rationals."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, Rat] | None = None) -> None:
        data: dict[int, Rat] = {}
        if coeffs:
            for k, raw in coeffs.items():
                c = _coeff(raw)
                if c:
                    data[_exponent(k)] = c
        self._coeffs = data
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> UniPoly:
        return cls()

    @classmethod
    def one(cls) -> UniPoly:
        return cls({0: 1})

    @classmethod
    def x(cls) -> UniPoly:
        return cls({1: 1})

    @classmethod
    def constant(cls, c: Rat) -> UniPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Rat, degree: int) -> UniPoly:
        return cls({degree: c})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, Rat]]:
        """Yield (degree, coefficient) in descending degree order."""
        for k in sorted(self._coeffs, reverse=True):
            yield k, self._coeffs[k]

    def coefficient(self, degree: int) -> Rat:
        return self._coeffs.get(degree, 0)

    def degree(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(self._coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs.values())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: UniPoly | Rat) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return UniPoly(acc)

    __radd__ = __add__

    def __sub__(self, other: UniPoly | Rat) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rat) -> UniPoly:
        return (-self) + other

    def __neg__(self) -> UniPoly:
        return UniPoly({k: -c for k, c in self._coeffs.items()})

    def __mul__(self, other: UniPoly | Rat) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        acc: dict[int, Rat] = {}
        for ka, ca in self._coeffs.items():
            for kb, cb in other._coeffs.items():
                key = ka + kb
                v = acc.get(key, 0) + ca * cb
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return UniPoly(acc)

    __rmul__ = __mul__

    def scale(self, c: Rat) -> UniPoly:
        c = _coeff(c)
        if not c:
            return UniPoly()
        return UniPoly({k: v * c for k, v in self._coeffs.items()})

    def __pow__(self, k: int) -> UniPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = UniPoly.one()
        for _ in range(k):
            result = result * self
        return result

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x0: Rat) -> Fraction:
        x0 = _coeff(x0)
        total: Rat = 0
        for k, c in self._coeffs.items():
            total += c * x0**k
        return Fraction(total)

    def eval_float(self, x: float) -> float:
        """Double-precision value by the compensated Horner scheme.

        These polynomials have huge alternating coefficients but small values
        on the interval of interest, so naive Horner loses most digits to
        cancellation.  Compensated Horner tracks the rounding error of every
        step with error-free transformations (all in doubles) and folds it
        back in at the end, which behaves like evaluating in twice the
        working precision.
        """
        if not self._coeffs:
            return 0.0
        acc = 0.0
        compensation = 0.0
        for k in range(max(self._coeffs), -1, -1):
            p, err_prod = _two_prod(acc, x)
            acc, err_sum = _two_sum(p, float(self._coeffs.get(k, 0)))
            compensation = compensation * x + (err_prod + err_sum)
        return acc + compensation

    def compose(self, r: UniPoly) -> UniPoly:
        """Exact polynomial composition p(r(x)), by Horner's scheme."""
        if not isinstance(r, UniPoly):
            raise TypeError("composition target must be a UniPoly")
        if not self._coeffs:
            return UniPoly()
        degrees = sorted(self._coeffs, reverse=True)
        acc = UniPoly.constant(self._coeffs[degrees[0]])
        for prev, cur in zip(degrees, degrees[1:]):
            acc = acc * r ** (prev - cur) + self._coeffs[cur]
        return acc * r ** degrees[-1]

    def halve_degrees(self) -> UniPoly:
        """Replace x^(2k) by x^k; raises OddDegreeError unless even throughout."""
        for k in self._coeffs:
            if k % 2:
                raise OddDegreeError(f"term of degree {k} is odd; polynomial is not even")
        return UniPoly({k // 2: c for k, c in self._coeffs.items()})

    # -- comparison and rendering --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == UniPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def render(self, max_terms: int | None = None) -> str:
        """Canonical text form in descending degree, same conventions as BiPoly."""
        if not self._coeffs:
            return "0"
        entries = list(self.terms())
        truncated = 0
        if max_terms is not None and len(entries) > max_terms:
            truncated = len(entries) - max_terms
            entries = entries[:max_terms]
        rendered = []
        for k, c in entries:
            negative = c < 0
            mag = -c if negative else c
            vars_part = []
            if k > 0:
                vars_part.append("x" if k == 1 else f"x^{k}")
            rendered.append((negative, _term_text(mag, vars_part)))
        return _join_terms(rendered, truncated)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"UniPoly({self.render(max_terms=12)})"
