"""Orthogonal torus representations as canonical weight multisets.

A representation of T^r is stored as a trivial multiplicity plus a map
from sign-canonical nonzero weights m in Z^r to multiplicities; the planar
rotation block of weight m and the one of weight -m are equivalent, so the
canonical map determines the representation up to equivalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Mapping, Sequence

from .errors import InputError
from .intlat import Vector


def canonical_weight(m: Sequence[int]) -> Vector:
    """Flip the sign so the first nonzero coordinate is positive."""
    m = tuple(int(e) for e in m)
    for e in m:
        if e > 0:
            return m
        if e < 0:
            return tuple(-x for x in m)
    return m


@dataclass(frozen=True)
class TorusRep:
    ambient_rank: int
    trivial_mult: int
    weights: tuple[tuple[Vector, int], ...]

    @staticmethod
    def make(
        ambient_rank: int,
        trivial_mult: int = 0,
        weights: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = (),
    ) -> "TorusRep":
        if trivial_mult < 0:
            raise InputError("trivial multiplicity must be nonnegative")
        items = weights.items() if isinstance(weights, Mapping) else weights
        acc: dict[Vector, int] = {}
        for m, k in items:
            m = tuple(int(e) for e in m)
            if len(m) != ambient_rank:
                raise InputError(f"weight of length {len(m)} in rank {ambient_rank}")
            if not any(m):
                raise InputError("zero weight: use trivial_mult for trivial blocks")
            cm = canonical_weight(m)
            acc[cm] = acc.get(cm, 0) + int(k)
        for m, k in acc.items():
            if k < 0:
                raise InputError(f"negative multiplicity at weight {m}")
        cleaned = tuple(sorted((m, k) for m, k in acc.items() if k))
        return TorusRep(ambient_rank, trivial_mult, cleaned)

    @staticmethod
    def zero(r: int) -> "TorusRep":
        return TorusRep(r, 0, ())

    @staticmethod
    def trivial(r: int, k: int) -> "TorusRep":
        return TorusRep.make(r, k)

    @staticmethod
    def rotation(k: int, m: Sequence[int]) -> "TorusRep":
        """k copies of the planar rotation block of weight m; trivial if m = 0."""
        m = tuple(int(e) for e in m)
        if not any(m):
            return TorusRep.make(len(m), k)
        return TorusRep.make(len(m), 0, [(m, k)])

    @property
    def dim(self) -> int:
        return self.trivial_mult + 2 * sum(k for _, k in self.weights)

    def weight_dict(self) -> dict[Vector, int]:
        return dict(self.weights)

    def multiplicity(self, m: Sequence[int]) -> int:
        """Multiplicity of the weight; the zero weight reads trivial_mult."""
        m = tuple(int(e) for e in m)
        if len(m) != self.ambient_rank:
            raise InputError("weight length mismatch")
        if not any(m):
            return self.trivial_mult
        return dict(self.weights).get(canonical_weight(m), 0)

    def occurs(self, m: Sequence[int]) -> bool:
        return self.multiplicity(m) >= 1

    def __str__(self) -> str:
        parts = []
        if self.trivial_mult:
            parts.append(f"R[{self.trivial_mult},0]")
        parts.extend(f"R[{k},{m}]" for m, k in self.weights)
        return " + ".join(parts) if parts else "0"


def direct_sum(v: TorusRep, w: TorusRep) -> TorusRep:
    if v.ambient_rank != w.ambient_rank:
        raise InputError("direct sum needs equal ambient ranks")
    acc = v.weight_dict()
    for m, k in w.weights:
        acc[m] = acc.get(m, 0) + k
    return TorusRep.make(v.ambient_rank, v.trivial_mult + w.trivial_mult, acc)


def tensor(w: TorusRep, v: TorusRep) -> TorusRep:
    """External tensor of a T^r and a T^l representation over T^(r+l).

    Weight blocks combine as: trivial x trivial stays trivial; a weight on
    one side pads with zeros on the other; two nonzero weights m, n split
    into the pair (m, n) and (m, -n), each with the product multiplicity.
    """
    r, l = w.ambient_rank, v.ambient_rank
    acc: dict[Vector, int] = {}

    def add(m: Vector, k: int) -> None:
        cm = canonical_weight(m)
        acc[cm] = acc.get(cm, 0) + k

    for m, lm in w.weights:
        if v.trivial_mult:
            add(m + (0,) * l, lm * v.trivial_mult)
    for n, kn in v.weights:
        if w.trivial_mult:
            add((0,) * r + n, w.trivial_mult * kn)
    for m, lm in w.weights:
        for n, kn in v.weights:
            add(m + n, kn * lm)
            add(m + tuple(-x for x in n), kn * lm)
    return TorusRep.make(r + l, w.trivial_mult * v.trivial_mult, acc)


def character(v: TorusRep, q: Sequence[Fraction | int]) -> float:
    """Real character at the torus element exp(2*pi*i*q).

    Floating point; intended as an oracle, all structural operations on
    representations stay exact.
    """
    if len(q) != v.ambient_rank:
        raise InputError(f"point of length {len(q)} in rank {v.ambient_rank}")
    qf = [Fraction(x) for x in q]
    total = float(v.trivial_mult)
    for m, k in v.weights:
        phase = sum(mi * qi for mi, qi in zip(m, qf)) % 1
        total += 2.0 * k * math.cos(2.0 * math.pi * float(phase))
    return total
