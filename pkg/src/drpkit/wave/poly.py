"""Sparse multivariate polynomials over the traveling-wave unknowns.

The unknown set is fixed: the ansatz amplitudes U1, V1, the offset V0, the
wave speed v and the integration constant C.  Monomials are exponent
tuples in that order; coefficients are floats.  Total degree stays at or
below four for every system built here, so nothing fancier than dict
arithmetic is needed.
"""

from __future__ import annotations

import math
from collections.abc import Mapping

SYMBOLS = ("U1", "V1", "V0", "v", "C")
_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
_ZERO_MONO = (0,) * len(SYMBOLS)

#: Magnitude below which a numerically produced constant counts as zero.
COEFF_TOL = 1e-12


def _check_symbol(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError(f"unknown symbol {name!r}; expected one of {SYMBOLS}") from None


class Poly:
    """Polynomial with float coefficients over the fixed unknowns."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], float] | None = None):
        pruned: dict[tuple[int, ...], float] = {}
        if terms:
            for mono, coeff in terms.items():
                c = float(coeff)
                if c != 0.0:
                    pruned[tuple(mono)] = c
        self.terms = pruned

    @classmethod
    def const(cls, value: float) -> "Poly":
        return cls({_ZERO_MONO: float(value)})

    @classmethod
    def var(cls, name: str) -> "Poly":
        idx = _check_symbol(name)
        mono = tuple(1 if i == idx else 0 for i in range(len(SYMBOLS)))
        return cls({mono: 1.0})

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, float)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0.0) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], float] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0.0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self, tol: float = 0.0) -> bool:
        if not self.terms:
            return True
        if tol > 0.0:
            return all(abs(c) <= tol for c in self.terms.values())
        return False

    def constant_value(self) -> float | None:
        """The value of a constant polynomial, else None."""
        if not self.terms:
            return 0.0
        if len(self.terms) == 1 and _ZERO_MONO in self.terms:
            return self.terms[_ZERO_MONO]
        return None

    def variables(self) -> set[str]:
        out = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e > 0:
                    out.add(SYMBOLS[i])
        return out

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in one symbol; zero poly has degree -1."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(mono) for mono in self.terms)
        idx = _check_symbol(name)
        return max(mono[idx] for mono in self.terms)

    def coefficient_poly(self, name: str, power: int) -> "Poly":
        """Collect the coefficient of name**power as a polynomial in the rest."""
        idx = _check_symbol(name)
        out: dict[tuple[int, ...], float] = {}
        for mono, coeff in self.terms.items():
            if mono[idx] == power:
                reduced = tuple(0 if i == idx else e for i, e in enumerate(mono))
                out[reduced] = out.get(reduced, 0.0) + coeff
        return Poly(out)

    def substitute(self, name: str, value) -> "Poly":
        """Replace one symbol by a number or another Poly."""
        idx = _check_symbol(name)
        repl = value if isinstance(value, Poly) else Poly.const(value)
        result = Poly()
        # group by power so repl**k is computed once per power
        powers: dict[int, Poly] = {}
        for mono, coeff in self.terms.items():
            k = mono[idx]
            reduced = tuple(0 if i == idx else e for i, e in enumerate(mono))
            powers.setdefault(k, Poly())
            powers[k] = powers[k] + Poly({reduced: coeff})
        acc = Poly.const(1.0)
        last = 0
        for k in sorted(powers):
            for _ in range(k - last):
                acc = acc * repl
            last = k
            result = result + powers[k] * acc
        return result

    def evaluate(self, values: Mapping[str, float]) -> float:
        total = 0.0
        for mono, coeff in sorted(self.terms.items()):
            term = coeff
            for i, e in enumerate(mono):
                if e:
                    term *= values[SYMBOLS[i]] ** e
            total += term
        return total

    def divide_linear(self, name: str, root: float) -> "Poly | None":
        """Exact quotient by (name - root), or None if the remainder is nonzero.

        Synthetic division treating the polynomial as univariate in ``name``
        with Poly coefficients.  Remainders are compared against zero with a
        small tolerance relative to the coefficient scale.
        """
        _check_symbol(name)
        deg = self.degree(name)
        if deg < 1:
            return None if not self.is_zero() else Poly()
        coeffs = [self.coefficient_poly(name, k) for k in range(deg + 1)]
        quot: list[Poly] = [Poly()] * deg
        carry = coeffs[deg]
        for k in range(deg - 1, -1, -1):
            quot[k] = carry
            carry = coeffs[k] + carry * root
        scale = max((abs(c) for c in self.terms.values()), default=1.0)
        if not carry.is_zero(tol=COEFF_TOL * max(1.0, scale, abs(root))):
            return None
        out = Poly()
        unit = Poly.var(name)
        acc = Poly.const(1.0)
        for k in range(deg):
            out = out + quot[k] * acc
            acc = acc * unit
        return out

    def divide_symbol(self, name: str) -> "Poly | None":
        """Exact quotient by ``name`` when every term contains it, else None."""
        idx = _check_symbol(name)
        if not self.terms:
            return Poly()
        out = {}
        for mono, coeff in self.terms.items():
            if mono[idx] < 1:
                return None
            out[tuple(e - 1 if i == idx else e for i, e in enumerate(mono))] = coeff
        return Poly(out)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __repr__(self):
        return f"Poly({self.as_string()})"

    def as_string(self) -> str:
        """Canonical deterministic rendering, e.g. '-0.5*v^2*V1 + 1.2'."""
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            factors = [
                SYMBOLS[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e > 0
            ]
            if factors:
                body = "*".join(factors)
                if coeff == 1.0:
                    parts.append(body)
                elif coeff == -1.0:
                    parts.append(f"-{body}")
                else:
                    parts.append(f"{coeff!r}*{body}")
            else:
                parts.append(repr(coeff))
        rendered = " + ".join(parts).replace("+ -", "- ")
        return rendered


def poly_from_symbols() -> tuple[Poly, Poly, Poly, Poly, Poly]:
    """Convenience: the five unknowns as Poly objects, in SYMBOLS order."""
    return tuple(Poly.var(name) for name in SYMBOLS)  # type: ignore[return-value]


class Rational:
    """Quotient of two Polys; denominators are guaranteed nonzero by the caller."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    def evaluate(self, values: Mapping[str, float]) -> float:
        den = self.den.evaluate(values)
        if den == 0.0 or not math.isfinite(den):
            raise ZeroDivisionError("rational assignment evaluated at a pole")
        return self.num.evaluate(values) / den

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    def as_string(self) -> str:
        return f"({self.num.as_string()}) / ({self.den.as_string()})"

    def __repr__(self):
        return f"Rational({self.as_string()})"
