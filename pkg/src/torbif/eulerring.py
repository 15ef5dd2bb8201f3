"""The Euler ring of a torus.

Elements are finite integer combinations of generators chi(T^r/H+), one
per closed subgroup H.  The star product of two generators is the
generator of the intersection when the dimensions are transversal
(dim H + dim H' = r + dim(H n H')) and zero otherwise, extended
bilinearly; the unit is the full-torus generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Mapping, Sequence

from .errors import InputError
from .intlat import TorusSubgroup, extend_by_full_torus, subgroup_canonical, subgroup_intersect
from .torusrep import TorusRep


@dataclass(frozen=True)
class EulerElement:
    ambient_rank: int
    terms: tuple[tuple[TorusSubgroup, int], ...]

    @staticmethod
    def make(
        ambient_rank: int,
        terms: Mapping[TorusSubgroup, int] | Iterable[tuple[TorusSubgroup, int]] = (),
    ) -> "EulerElement":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[TorusSubgroup, int] = {}
        for h, c in items:
            if h.ambient_rank != ambient_rank:
                raise InputError("generator subgroup has wrong ambient rank")
            acc[h] = acc.get(h, 0) + int(c)
        cleaned = tuple(sorted(((h, c) for h, c in acc.items() if c), key=lambda t: t[0].sort_key()))
        return EulerElement(ambient_rank, cleaned)

    @staticmethod
    def zero(r: int) -> "EulerElement":
        return EulerElement(r, ())

    @staticmethod
    def unit(r: int) -> "EulerElement":
        return EulerElement.make(r, [(TorusSubgroup.full_torus(r), 1)])

    @staticmethod
    def generator(h: TorusSubgroup, coeff: int = 1) -> "EulerElement":
        return EulerElement.make(h.ambient_rank, [(h, coeff)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def term_dict(self) -> dict[TorusSubgroup, int]:
        return dict(self.terms)

    def coefficient(self, h: TorusSubgroup) -> int:
        return dict(self.terms).get(h, 0)

    def unit_coefficient(self) -> int:
        return self.coefficient(TorusSubgroup.full_torus(self.ambient_rank))

    def __add__(self, other: "EulerElement") -> "EulerElement":
        if self.ambient_rank != other.ambient_rank:
            raise InputError("cannot add elements of different rings")
        return EulerElement.make(self.ambient_rank, self.terms + other.terms)

    def __neg__(self) -> "EulerElement":
        return EulerElement(self.ambient_rank, tuple((h, -c) for h, c in self.terms))

    def __sub__(self, other: "EulerElement") -> "EulerElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "EulerElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return EulerElement.make(self.ambient_rank, tuple((h, scalar * c) for h, c in self.terms))

    def star(self, other: "EulerElement") -> "EulerElement":
        return star(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for h, c in self.terms:
            gen = "I" if h.is_full else f"chi({h})"
            if c == 1:
                parts.append(gen)
            elif c == -1:
                parts.append(f"-{gen}")
            else:
                parts.append(f"{c}*{gen}")
        return " + ".join(parts).replace("+ -", "- ")


def linear_combine(scalars: Sequence[int], elements: Sequence[EulerElement]) -> EulerElement:
    if len(scalars) != len(elements):
        raise InputError("scalar and element counts differ")
    if not elements:
        raise InputError("empty combination has no ambient rank")
    r = elements[0].ambient_rank
    acc: list[tuple[TorusSubgroup, int]] = []
    for s, e in zip(scalars, elements):
        if e.ambient_rank != r:
            raise InputError("mixed ambient ranks in combination")
        acc.extend((h, s * c) for h, c in e.terms)
    return EulerElement.make(r, acc)


def star(a: EulerElement, b: EulerElement) -> EulerElement:
    """Ring product; bilinear extension of the generator rule."""
    if a.ambient_rank != b.ambient_rank:
        raise InputError("cannot multiply elements of different rings")
    r = a.ambient_rank
    acc: dict[TorusSubgroup, int] = {}
    for ha, ca in a.terms:
        for hb, cb in b.terms:
            hi = subgroup_intersect(ha, hb)
            if ha.dim + hb.dim == r + hi.dim:
                acc[hi] = acc.get(hi, 0) + ca * cb
    return EulerElement.make(r, acc)


def deg_minus_id(v: TorusRep) -> EulerElement:
    """Gradient degree of -Id on the unit ball of the representation.

    Computed as the ring product over the irreducible summands:
    (-1)^k0 times the product of (I - chi(T^r/H_m+))^mult over the
    nonzero canonical weights m of v, where H_m is the kernel of the
    character m.
    """
    r = v.ambient_rank
    out = EulerElement.unit(r)
    if v.trivial_mult % 2:
        out = -out
    for m, k in v.weights:
        factor = EulerElement.unit(r) - EulerElement.generator(subgroup_canonical(r, [m]))
        for _ in range(k):
            out = star(out, factor)
    return out


def codim_part(x: EulerElement, c: int) -> EulerElement:
    """Keep exactly the terms whose subgroup has codimension ``c``."""
    return EulerElement(x.ambient_rank, tuple((h, k) for h, k in x.terms if h.codim == c))


def lift(x: EulerElement, l: int) -> EulerElement:
    """Image in U(T^(r+l)) under the extra torus acting trivially."""
    return EulerElement.make(
        x.ambient_rank + l,
        tuple((extend_by_full_torus(h, l), c) for h, c in x.terms),
    )
