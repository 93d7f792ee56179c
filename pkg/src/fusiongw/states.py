"""Finitely supported vectors over weight or word bases with Laurent coefficients."""

from __future__ import annotations

from .laurent import Laurent
from .partitions import AffineWeight


WEIGHT = "weight"
WORD = "word"


class State:
    """Sparse linear combination of basis labels.

    Labels are AffineWeight instances (kind 'weight') or 01-word tuples
    (kind 'word'); coefficients are exact Laurent polynomials in the model's
    deformation variable.  Instances are treated as immutable by convention.
    """

    __slots__ = ("kind", "terms")

    def __init__(self, kind: str, terms=None):
        if kind not in (WEIGHT, WORD):
            raise ValueError("unknown basis kind %r" % kind)
        self.kind = kind
        self.terms = {}
        if terms:
            for label, coeff in terms.items():
                self._check(label)
                if isinstance(coeff, int):
                    coeff = Laurent.term(coeff)
                if not coeff.is_zero():
                    self.terms[label] = coeff

    def _check(self, label):
        if self.kind == WEIGHT and not isinstance(label, AffineWeight):
            raise ValueError("weight-basis label expected, got %r" % (label,))
        if self.kind == WORD and not isinstance(label, tuple):
            raise ValueError("word-basis label expected, got %r" % (label,))

    @staticmethod
    def basis(kind: str, label) -> "State":
        return State(kind, {label: Laurent.one()})

    @staticmethod
    def zero(kind: str) -> "State":
        return State(kind)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "State") -> "State":
        if self.kind != other.kind:
            raise ValueError("basis mismatch: %s vs %s" % (self.kind, other.kind))
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            s = out.get(label, Laurent.zero()) + coeff
            if s.is_zero():
                out.pop(label, None)
            else:
                out[label] = s
        r = State(self.kind)
        r.terms = out
        return r

    def __sub__(self, other: "State") -> "State":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "State":
        if isinstance(factor, int):
            factor = Laurent.term(factor)
        r = State(self.kind)
        if not factor.is_zero():
            r.terms = {lb: c * factor for lb, c in self.terms.items()}
        return r

    def shifted(self, delta: int) -> "State":
        """Multiply every coefficient by variable^delta."""
        r = State(self.kind)
        r.terms = {lb: c.shift(delta) for lb, c in self.terms.items()}
        return r

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, label) -> Laurent:
        return self.terms.get(label, Laurent.zero())

    def items(self):
        """Deterministic iteration order."""
        return sorted(self.terms.items(), key=lambda kv: _label_key(kv[0]))

    def support(self):
        return [lb for lb, _ in self.items()]

    def map_labels(self, fn) -> "State":
        """Push forward along a basis map label -> label (no signs)."""
        out = State(self.kind)
        for lb, c in self.terms.items():
            lb2 = fn(lb)
            s = out.terms.get(lb2, Laurent.zero()) + c
            if s.is_zero():
                out.terms.pop(lb2, None)
            else:
                out.terms[lb2] = s
        return out

    def map_coeffs(self, fn) -> "State":
        out = State(self.kind)
        for lb, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                out.terms[lb] = c2
        return out

    def __eq__(self, other):
        return (
            isinstance(other, State)
            and self.kind == other.kind
            and self.terms == other.terms
        )

    def __repr__(self):
        bits = ["%r: %s" % (lb, c.pretty()) for lb, c in self.items()]
        return "State(%s; %s)" % (self.kind, ", ".join(bits) or "0")


def _label_key(label):
    if isinstance(label, AffineWeight):
        return (label.n, label.finite_partition())
    return label


def inner(u: State, v: State) -> Laurent:
    """Scalar product, conjugate linear in the first slot.

    Basis labels are orthonormal; conjugation inverts the formal variable.
    """
    if u.kind != v.kind:
        raise ValueError("basis mismatch: %s vs %s" % (u.kind, v.kind))
    total = Laurent.zero()
    for label, cu in u.terms.items():
        cv = v.terms.get(label)
        if cv is not None:
            total = total + cu.conj() * cv
    return total


def apply_linear(state: State, label_fn) -> State:
    """Extend a basis-label rule linearly.

    label_fn maps a label to a list of (label, Laurent) pairs (or to an empty
    list when the operator kills the basis vector).
    """
    out = State(state.kind)
    for label, coeff in state.terms.items():
        for lb2, factor in label_fn(label):
            s = out.terms.get(lb2, Laurent.zero()) + coeff * factor
            if s.is_zero():
                out.terms.pop(lb2, None)
            else:
                out.terms[lb2] = s
    return out
