"""Formal linear combinations of planar diagrams.

A TLElement is a finite sum of loop-free diagrams of one dimension with
LaurentPoly coefficients, all in the same variable.  Multiplication
distributes over the terms, composes diagram pairs and converts every
closed loop produced by the stacking into one factor of a caller-supplied
loop polynomial (the symbol d itself, or its bracket value in A).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .composition import compose
from .diagrams import PlanarDiagram
from .laurent import LaurentPoly


@dataclass(frozen=True)
class TLElement:
    """Sum of coeff * diagram terms, zero coefficients dropped, terms kept
    in canonical diagram order."""

    dimension: int
    variable: str
    terms: tuple[tuple[PlanarDiagram, LaurentPoly], ...]

    def __post_init__(self) -> None:
        for diagram, coeff in self.terms:
            if diagram.dimension != self.dimension:
                raise ValueError("all terms must share the element's dimension")
            if coeff.variable != self.variable:
                raise ValueError("all coefficients must share the element's variable")
            if coeff.is_zero():
                raise ValueError("zero terms must not be stored")
        keys = [d.pairing for d, _ in self.terms]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("terms must be sorted by diagram and duplicate-free")

    @classmethod
    def from_terms(
        cls,
        dimension: int,
        variable: str,
        terms: Iterable[tuple[PlanarDiagram, LaurentPoly]] | Mapping[PlanarDiagram, LaurentPoly],
    ) -> TLElement:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[PlanarDiagram, LaurentPoly] = {}
        for diagram, coeff in items:
            acc[diagram] = acc.get(diagram, LaurentPoly.zero(variable)) + coeff
        kept = tuple(
            sorted(
                ((d, c) for d, c in acc.items() if not c.is_zero()),
                key=lambda item: item[0].pairing,
            )
        )
        return cls(dimension, variable, kept)

    @classmethod
    def zero(cls, dimension: int, variable: str) -> TLElement:
        return cls(dimension, variable, ())

    @classmethod
    def from_diagram(
        cls, diagram: PlanarDiagram, coeff: LaurentPoly | None = None, variable: str = "d"
    ) -> TLElement:
        coeff = LaurentPoly.one(variable) if coeff is None else coeff
        return cls.from_terms(diagram.dimension, coeff.variable, [(diagram, coeff)])

    def coefficient(self, diagram: PlanarDiagram) -> LaurentPoly:
        for d, c in self.terms:
            if d == diagram:
                return c
        return LaurentPoly.zero(self.variable)

    def is_zero(self) -> bool:
        return not self.terms

    def _require_compatible(self, other: TLElement) -> None:
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        if self.variable != other.variable:
            raise ValueError("coefficient variable mismatch")

    def __add__(self, other: TLElement) -> TLElement:
        self._require_compatible(other)
        acc = {d: c for d, c in self.terms}
        for d, c in other.terms:
            acc[d] = acc.get(d, LaurentPoly.zero(self.variable)) + c
        return TLElement.from_terms(self.dimension, self.variable, acc)

    def __neg__(self) -> TLElement:
        return TLElement(
            self.dimension, self.variable, tuple((d, -c) for d, c in self.terms)
        )

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scaled(self, factor: LaurentPoly | int) -> TLElement:
        if isinstance(factor, int):
            factor = LaurentPoly.constant(self.variable, factor)
        if factor.variable != self.variable:
            raise ValueError("coefficient variable mismatch")
        return TLElement.from_terms(
            self.dimension,
            self.variable,
            [(d, c * factor) for d, c in self.terms],
        )


def multiply(a: TLElement, b: TLElement, loop_value: LaurentPoly) -> TLElement:
    """The algebra product a.b, right factor acting first (stacked at the
    bottom), each closed loop becoming one ``loop_value`` factor.

    With loop_value the monomial d this is multiplication in TL_N(d); the
    bracket image uses d's value -A^2 - A^-2 instead.
    """
    a._require_compatible(b)
    if loop_value.variable != a.variable:
        raise ValueError("loop value must use the coefficient variable")
    acc: dict[PlanarDiagram, LaurentPoly] = {}
    for da, ca in a.terms:
        for db, cb in b.terms:
            stacked = compose(db, da)
            coeff = ca * cb * loop_value**stacked.loop_exponent
            d = stacked.diagram
            acc[d] = acc.get(d, LaurentPoly.zero(a.variable)) + coeff
    return TLElement.from_terms(a.dimension, a.variable, acc)
