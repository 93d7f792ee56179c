"""Exact Laurent polynomials in one formal variable with integer coefficients.

Used for the deformation variable (z on the weight side, q on the word side).
Coefficients are Python ints, so all arithmetic is exact; zero coefficients
are never stored.
"""

from __future__ import annotations


class Laurent:
    """Sparse Laurent polynomial: mapping exponent -> nonzero integer."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    self.c[int(e)] = int(v)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def term(coeff: int, exp: int = 0) -> "Laurent":
        return Laurent({exp: coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def sole_term(self):
        """(exponent, coefficient) of a monomial; raises otherwise."""
        if len(self.c) != 1:
            raise ValueError("not a monomial: %r" % self)
        [(e, v)] = self.c.items()
        return e, v

    def coeff(self, exp: int) -> int:
        return self.c.get(exp, 0)

    def exponents(self):
        return sorted(self.c)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        r = Laurent()
        r.c = out
        return r

    def __neg__(self) -> "Laurent":
        r = Laurent()
        r.c = {e: -v for e, v in self.c.items()}
        return r

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Laurent()
            r = Laurent()
            r.c = {e: v * other for e, v in self.c.items()}
            return r
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        r = Laurent()
        r.c = out
        return r

    __rmul__ = __mul__

    def shift(self, delta: int) -> "Laurent":
        """Multiply by the variable to the power delta."""
        r = Laurent()
        r.c = {e + delta: v for e, v in self.c.items()}
        return r

    def conj(self) -> "Laurent":
        """Formal conjugation: the variable maps to its inverse."""
        r = Laurent()
        r.c = {-e: v for e, v in self.c.items()}
        return r

    def negate_odd(self) -> "Laurent":
        """Substitute variable -> -variable."""
        r = Laurent()
        r.c = {e: (-v if e % 2 else v) for e, v in self.c.items()}
        return r

    # -- evaluation ----------------------------------------------------------

    def at_one(self) -> int:
        return sum(self.c.values())

    def evaluate(self, x: complex) -> complex:
        if x == 0 and any(e < 0 for e in self.c):
            raise ZeroDivisionError("negative exponent at zero base")
        total = 0j
        for e in sorted(self.c):
            total += self.c[e] * x ** e
        return total

    # -- comparison / io -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return "Laurent(%r)" % (self.c,)

    def pretty(self, var: str = "z") -> str:
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                bits.append(str(v))
            else:
                head = "" if v == 1 else ("-" if v == -1 else str(v) + "*")
                pow_ = var if e == 1 else "%s^%d" % (var, e)
                bits.append(head + pow_)
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self) -> dict:
        """Exponent -> decimal coefficient string (ints can exceed JSON range)."""
        return {str(e): str(v) for e, v in sorted(self.c.items())}

    @staticmethod
    def from_json(data: dict) -> "Laurent":
        return Laurent({int(e): int(v) for e, v in data.items()})
