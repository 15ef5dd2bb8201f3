"""Problem specifications and built-in spectral providers.

A problem couples the eigendata of the symmetric coefficient matrix (over
the system torus T^r) with Laplace-Beltrami eigendata of the domain (over
the domain torus T^l), a completeness cutoff for the stored spectrum, and
the equivariant degrees of the right-hand side at the origin for each sign
of the parameter.  Everything spectral is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, isqrt

from .errors import InputError
from .eulerring import EulerElement
from .intlat import Vector
from .torusrep import TorusRep, canonical_weight

N2_IRREDUCIBLE = "irreducible-flags"
N2_FIXED_FREE = "no-torus-fixed-vectors"
N2_VACUOUS = "vacuous"


@dataclass(frozen=True)
class MatrixEigenData:
    """One eigenvalue of the coefficient matrix with its eigenspace."""

    alpha: Fraction
    eigenspace: TorusRep
    marker_weight: Vector | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.eigenspace.dim < 1:
            raise InputError("eigenspace must have positive dimension")
        if self.marker_weight is not None:
            mw = tuple(int(e) for e in self.marker_weight)
            if len(mw) != self.eigenspace.ambient_rank:
                raise InputError("marker weight length does not match rank")
            object.__setattr__(self, "marker_weight", mw)


@dataclass(frozen=True)
class LaplaceEigenData:
    """One Laplace-Beltrami eigenvalue with its eigenspace data.

    ``irreducible_nontrivial`` is the user's certification that the full
    symmetry group acts irreducibly and nontrivially on the eigenspace;
    the library stores only the torus restriction and cannot check it.
    """

    beta: Fraction
    eigenspace: TorusRep
    irreducible_nontrivial: bool = False
    highest_weight: Vector | None = None

    def __post_init__(self):
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.beta < 0:
            raise InputError("Laplace eigenvalues are nonnegative")
        if self.eigenspace.dim < 1:
            raise InputError("eigenspace must have positive dimension")
        if self.highest_weight is not None:
            hw = tuple(int(e) for e in self.highest_weight)
            if len(hw) != self.eigenspace.ambient_rank:
                raise InputError("highest weight length does not match rank")
            object.__setattr__(self, "highest_weight", hw)


@dataclass(frozen=True)
class ProblemSpec:
    r: int
    l: int
    p: int
    matrix_spectrum: tuple[MatrixEigenData, ...]
    laplace_spectrum: tuple[LaplaceEigenData, ...]
    beta_cutoff: Fraction
    origin_degree_pos: EulerElement
    origin_degree_neg: EulerElement

    def __post_init__(self):
        if self.l < 1:
            raise InputError("domain torus rank must be at least 1")
        if self.r < 0:
            raise InputError("system torus rank must be nonnegative")
        object.__setattr__(self, "beta_cutoff", Fraction(self.beta_cutoff))
        object.__setattr__(
            self, "matrix_spectrum", tuple(sorted(self.matrix_spectrum, key=lambda e: e.alpha))
        )
        object.__setattr__(
            self, "laplace_spectrum", tuple(sorted(self.laplace_spectrum, key=lambda e: e.beta))
        )
        for e in self.matrix_spectrum:
            if e.eigenspace.ambient_rank != self.r:
                raise InputError("matrix eigenspace rank differs from r")
        for e in self.laplace_spectrum:
            if e.eigenspace.ambient_rank != self.l:
                raise InputError("Laplace eigenspace rank differs from l")
        for deg in (self.origin_degree_pos, self.origin_degree_neg):
            if deg.ambient_rank != self.r:
                raise InputError("origin degree lives in the wrong ring")

    def max_abs_alpha(self) -> Fraction:
        return max((abs(e.alpha) for e in self.matrix_spectrum), default=Fraction(0))


@dataclass(frozen=True)
class ValidationReport:
    n1: bool
    n2: bool
    n2_method: str | None
    e_holds: bool
    e_witnesses: tuple[tuple[Fraction, Vector], ...] | None
    structural_errors: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.structural_errors


def flat_torus_spectrum(d: int, cutoff: int) -> tuple[LaplaceEigenData, ...]:
    """Laplace spectrum of the flat torus T^d up to ``cutoff``.

    Eigenvalues are the squared lattice norms |m|^2 <= cutoff; the
    eigenspace of a positive eigenvalue is one rotation block per
    sign-canonical lattice point on the sphere of that radius.
    """
    if d < 1:
        raise InputError("dimension must be at least 1")
    if cutoff < 0:
        raise InputError("cutoff must be nonnegative")
    s = isqrt(cutoff)
    by_beta: dict[int, dict[Vector, int]] = {}
    for m in product(range(-s, s + 1), repeat=d):
        q = sum(x * x for x in m)
        if q > cutoff:
            continue
        if not any(m):
            by_beta.setdefault(0, {})
            continue
        if canonical_weight(m) != m:
            continue  # count each +-pair once
        by_beta.setdefault(q, {})[m] = 1
    entries = []
    for beta in sorted(by_beta):
        weights = by_beta[beta]
        if beta == 0:
            entries.append(
                LaplaceEigenData(
                    beta=Fraction(0),
                    eigenspace=TorusRep.make(d, 1),
                    irreducible_nontrivial=False,
                    highest_weight=(0,) * d,
                )
            )
        else:
            single = len(weights) == 1
            entries.append(
                LaplaceEigenData(
                    beta=Fraction(beta),
                    eigenspace=TorusRep.make(d, 0, weights),
                    irreducible_nontrivial=single,
                    highest_weight=next(iter(weights)) if single else None,
                )
            )
    return tuple(entries)


def _sym_power_weights(base: list[Vector], k: int) -> dict[Vector, int]:
    """Weight multiset of the k-th symmetric power of a sum of lines."""
    if not base:
        return {} if k else {(): 1}
    rank = len(base[0])
    zero = (0,) * rank
    state: list[dict[Vector, int]] = [{} for _ in range(k + 1)]
    state[0][zero] = 1
    for w in base:
        nxt: list[dict[Vector, int]] = [{} for _ in range(k + 1)]
        for used in range(k + 1):
            for vec, mult in state[used].items():
                extra = 0
                cur = vec
                while used + extra <= k:
                    nxt[used + extra][cur] = nxt[used + extra].get(cur, 0) + mult
                    extra += 1
                    cur = tuple(a + b for a, b in zip(cur, w))
        state = nxt
    return state[k]


def sphere_spectrum(n: int, cutoff_k: int) -> tuple[LaplaceEigenData, ...]:
    """Laplace spectrum of the round sphere S^(n-1), levels k = 0..cutoff_k.

    The level-k eigenvalue is k(k+n-2).  Torus weights (rank floor(n/2))
    are obtained from the weight multisets of the symmetric powers of the
    standard n-dimensional representation: level k carries Sym^k minus
    Sym^(k-2).  The highest weight is k times the first basis character.
    """
    if n < 2:
        raise InputError("ambient dimension must be at least 2")
    if cutoff_k < 0:
        raise InputError("cutoff level must be nonnegative")
    l = n // 2
    base: list[Vector] = []
    for i in range(l):
        e = [0] * l
        e[i] = 1
        base.append(tuple(e))
        base.append(tuple(-x for x in e))
    if n % 2:
        base.append((0,) * l)
    zero = (0,) * l
    entries = []
    for k in range(cutoff_k + 1):
        cw = dict(_sym_power_weights(base, k))
        if k >= 2:
            for w, mult in _sym_power_weights(base, k - 2).items():
                cw[w] = cw.get(w, 0) - mult
        trivial = cw.pop(zero, 0)
        folded: dict[Vector, int] = {}
        for w, mult in cw.items():
            if mult == 0:
                continue
            cwc = canonical_weight(w)
            if cwc == w:
                neg = tuple(-x for x in w)
                if cw.get(neg, 0) != mult:
                    raise InputError("asymmetric complex weight multiset")
                folded[w] = mult
        highest = tuple(k if i == 0 else 0 for i in range(l))
        entries.append(
            LaplaceEigenData(
                beta=Fraction(k * (k + n - 2)),
                eigenspace=TorusRep.make(l, trivial, folded),
                irreducible_nontrivial=k >= 1,
                highest_weight=highest,
            )
        )
    return tuple(entries)


def sphere_harmonic_dim(n: int, k: int) -> int:
    """Closed-form dimension of the level-k eigenspace on S^(n-1), n >= 3."""
    if n < 3:
        raise InputError("closed form requires n >= 3")
    if k == 0:
        return 1
    return comb(n - 2 + k, k) * (n - 2 + 2 * k) // (n - 2 + k)


def validate(spec: ProblemSpec) -> ValidationReport:
    """Check the structural and hypothesis-level properties of a spec.

    Never raises: structural problems are reported as messages.  The
    hypothesis flags are: N1 (origin nondegenerate, no zero matrix
    eigenvalue), N2 (no fixed vectors in positive Laplace eigenspaces,
    certified either by irreducibility flags or the stronger
    torus-fixed-point-free criterion), and (E) (each matrix eigenvalue
    owns a marker weight occurring in its eigenspace and in no other).
    """
    errors: list[str] = []
    total = sum(e.eigenspace.dim for e in spec.matrix_spectrum)
    if total != spec.p:
        errors.append(f"DIM_MISMATCH: matrix eigenspace dimensions sum to {total}, expected p={spec.p}")
    if not spec.matrix_spectrum:
        errors.append("SCHEMA: empty matrix spectrum")
    if not spec.laplace_spectrum:
        errors.append("SCHEMA: empty Laplace spectrum")
    alphas = [e.alpha for e in spec.matrix_spectrum]
    if len(set(alphas)) != len(alphas):
        errors.append("SCHEMA: repeated matrix eigenvalue")
    betas = [e.beta for e in spec.laplace_spectrum]
    if len(set(betas)) != len(betas):
        errors.append("SCHEMA: repeated Laplace eigenvalue")
    for b in betas:
        if b > spec.beta_cutoff:
            errors.append(f"CUTOFF_INSUFFICIENT: eigenvalue {b} exceeds declared cutoff {spec.beta_cutoff}")
    if spec.origin_degree_pos.is_zero:
        errors.append("B6_TRIVIAL: origin degree for positive levels is zero")
    if spec.origin_degree_neg.is_zero:
        errors.append("B6_TRIVIAL: origin degree for negative levels is zero")

    n1 = all(a != 0 for a in alphas) and bool(alphas)

    positive = [e for e in spec.laplace_spectrum if e.beta > 0]
    if not positive:
        n2, n2_method = True, N2_VACUOUS
    elif all(e.irreducible_nontrivial for e in positive):
        n2, n2_method = True, N2_IRREDUCIBLE
    elif all(e.eigenspace.trivial_mult == 0 for e in positive):
        n2, n2_method = True, N2_FIXED_FREE
    else:
        n2, n2_method = False, None

    e_holds = bool(spec.matrix_spectrum)
    witnesses: list[tuple[Fraction, Vector]] = []
    for e in spec.matrix_spectrum:
        if e.marker_weight is None or not e.eigenspace.occurs(e.marker_weight):
            e_holds = False
            break
        for other in spec.matrix_spectrum:
            if other is not e and other.eigenspace.occurs(e.marker_weight):
                e_holds = False
                break
        if not e_holds:
            break
        witnesses.append((e.alpha, e.marker_weight))

    return ValidationReport(
        n1=n1,
        n2=n2,
        n2_method=n2_method,
        e_holds=e_holds,
        e_witnesses=tuple(witnesses) if e_holds else None,
        structural_errors=tuple(errors),
    )
