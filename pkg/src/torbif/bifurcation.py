"""Bifurcation analysis over the product torus T^(r+l).

Candidate parameter levels are the exact quotients beta/alpha of Laplace
and matrix eigenvalues.  At each level the kernel and negative-space
representations of the Hessian on the trivial branch are assembled from
tensor blocks, the bifurcation index is computed in the Euler ring, and a
verdict records global bifurcation, symmetry breaking, the local-or-global
alternative, and an unboundedness certificate when the highest-weight
hypotheses can be machine-checked.

The crossing widths never appear numerically: the index is computed from
the exact eigenvalue decompositions on both sides of a level, which is all
the defining difference of degrees depends on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .errors import ConsistencyError, CutoffError, InputError
from .eulerring import EulerElement, deg_minus_id, lift, star
from .intlat import TorusSubgroup, Vector, subgroup_canonical
from .spectra import LaplaceEigenData, MatrixEigenData, ProblemSpec, ValidationReport, validate
from .torusrep import TorusRep, canonical_weight, direct_sum, tensor

REASON_INDEX = "index-nonzero"
REASON_DOMAIN = "nontrivial-domain-weight"
REASON_ODD = "odd-kernel-dimension"
ALTERNATIVE_LOCAL_OR_GLOBAL = "local-or-global"
ALTERNATIVE_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CandidateLevel:
    lambda0: Fraction
    witnesses: tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class UnboundednessCertificate:
    """Machine-checked evidence that the continuum at a level is unbounded.

    For nonzero levels this pins the subgroup cut out by the combined
    marker/highest-weight character, the (verified) coefficient it carries
    in the bifurcation index, and the scan showing the weight is absent
    from every kernel strictly between 0 and the level.  At level 0 the
    certificate records the odd-dimension route.
    """

    kind: str  # "highest-weight" | "zero-level"
    subgroup: TorusSubgroup | None
    coefficient: int | None
    multiplicity: int | None
    witness: tuple[Fraction, Fraction, Vector, Vector] | None
    excluded_levels: tuple[Fraction, ...]


@dataclass(frozen=True)
class Verdict:
    lambda0: Fraction
    global_bifurcation: bool
    reasons: tuple[str, ...]
    symmetry_breaking: bool
    alternative: str | None
    unbounded: UnboundednessCertificate | None
    unbounded_reason: str | None
    zero_level_parity: str | None


@dataclass(frozen=True)
class LevelAnalysis:
    lambda0: Fraction
    kernel: TorusRep
    negative_below: TorusRep
    negative_above: TorusRep
    index: EulerElement
    verdict: Verdict


@dataclass(frozen=True)
class HessianEigenvalue:
    value: Fraction
    multiplicity: int
    rep: TorusRep


def _require_valid(spec: ProblemSpec) -> ValidationReport:
    report = validate(spec)
    if report.structural_errors:
        raise InputError("; ".join(report.structural_errors), code="SCHEMA")
    return report


def _check_cutoff(spec: ProblemSpec, lam: Fraction) -> None:
    needed = abs(lam) * spec.max_abs_alpha()
    if needed > spec.beta_cutoff:
        raise CutoffError(
            f"analysis at level {lam} needs Laplace data up to {needed}, "
            f"declared cutoff is {spec.beta_cutoff}"
        )


def candidate_levels(spec: ProblemSpec) -> tuple[CandidateLevel, ...]:
    """All exact quotients beta/alpha, deduplicated with witness sets."""
    _require_valid(spec)
    acc: dict[Fraction, set[tuple[Fraction, Fraction]]] = {}
    for me in spec.matrix_spectrum:
        if me.alpha == 0:
            continue
        for le in spec.laplace_spectrum:
            lam = le.beta / me.alpha
            acc.setdefault(lam, set()).add((me.alpha, le.beta))
    return tuple(
        CandidateLevel(lam, tuple(sorted(ws))) for lam, ws in sorted(acc.items())
    )


def _witness_pairs(
    spec: ProblemSpec, lam0: Fraction
) -> list[tuple[MatrixEigenData, LaplaceEigenData]]:
    out = []
    for me in spec.matrix_spectrum:
        if me.alpha == 0:
            continue
        for le in spec.laplace_spectrum:
            if le.beta != 0 and le.beta == lam0 * me.alpha:
                out.append((me, le))
    return out


def kernel_rep(spec: ProblemSpec, lambda0: Fraction | int | str) -> TorusRep:
    """Kernel of the Hessian at the level, orthogonal to constants.

    Direct sum of the tensor blocks (matrix eigenspace) x (Laplace
    eigenspace) over the witness pairs with positive Laplace eigenvalue;
    the zero representation when the level is not a candidate.
    """
    lam0 = Fraction(lambda0)
    _check_cutoff(spec, lam0)
    out = TorusRep.zero(spec.r + spec.l)
    for me, le in _witness_pairs(spec, lam0):
        out = direct_sum(out, tensor(me.eigenspace, le.eigenspace))
    return out


def negative_rep(
    spec: ProblemSpec, lambda0: Fraction | int | str, side: Literal["below", "above"]
) -> TorusRep:
    """Negative eigenspace of the Hessian just below or above the level.

    For a positive level the space accumulates the kernels at candidates
    in (0, lambda0), including lambda0 itself on the upper side; mirrored
    for negative levels; zero at level 0 (crossing widths are symbolic, so
    no other candidate ever sits inside the gap).
    """
    if side not in ("below", "above"):
        raise InputError("side must be 'below' or 'above'")
    lam0 = Fraction(lambda0)
    _check_cutoff(spec, lam0)
    quotients = sorted(
        {
            le.beta / me.alpha
            for me in spec.matrix_spectrum
            if me.alpha != 0
            for le in spec.laplace_spectrum
            if le.beta != 0
        }
    )
    if lam0 > 0:
        chosen = [t for t in quotients if 0 < t < lam0]
        if side == "above":
            chosen.append(lam0)
    elif lam0 < 0:
        chosen = [t for t in quotients if lam0 < t < 0]
        if side == "below":
            chosen.append(lam0)
    else:
        chosen = []
    out = TorusRep.zero(spec.r + spec.l)
    for t in chosen:
        out = direct_sum(out, kernel_rep(spec, t))
    return out


def hessian_spectrum(
    spec: ProblemSpec, lam: Fraction | int | str
) -> tuple[HessianEigenvalue, ...]:
    """Exact eigenvalues (beta - lambda*alpha)/(1 + beta) with tensor blocks."""
    lam = Fraction(lam)
    _check_cutoff(spec, lam)
    acc: dict[Fraction, TorusRep] = {}
    for me in spec.matrix_spectrum:
        for le in spec.laplace_spectrum:
            value = (le.beta - lam * me.alpha) / (1 + le.beta)
            block = tensor(me.eigenspace, le.eigenspace)
            acc[value] = direct_sum(acc.get(value, TorusRep.zero(spec.r + spec.l)), block)
    return tuple(
        HessianEigenvalue(v, rep.dim, rep) for v, rep in sorted(acc.items())
    )


def _product_route(spec: ProblemSpec, lam0: Fraction) -> EulerElement:
    total = spec.r + spec.l
    below = deg_minus_id(negative_rep(spec, lam0, "below"))
    kernel_deg = deg_minus_id(kernel_rep(spec, lam0))
    lifted = lift(spec.origin_degree_pos, spec.l)
    return star(star(lifted, below), kernel_deg - EulerElement.unit(total))


def bif_index(spec: ProblemSpec, lambda0: Fraction | int | str) -> EulerElement:
    """Bifurcation index at a candidate level, in U(T^(r+l)).

    Primary route: lifted origin degree times the difference of the
    degrees of -Id on the negative spaces above and below the level.  For
    positive levels the equivalent product route through the kernel degree
    is recomputed and must agree exactly.
    """
    _require_valid(spec)
    lam0 = Fraction(lambda0)
    _check_cutoff(spec, lam0)
    if lam0 != 0 and not _witness_pairs(spec, lam0):
        raise InputError(f"{lam0} is not a candidate level")
    total = spec.r + spec.l
    above = deg_minus_id(negative_rep(spec, lam0, "above"))
    below = deg_minus_id(negative_rep(spec, lam0, "below"))
    if lam0 > 0:
        diff = star(lift(spec.origin_degree_pos, spec.l), above - below)
        prod = _product_route(spec, lam0)
        if prod != diff:
            raise ConsistencyError(f"index routes disagree at level {lam0}")
        return diff
    if lam0 < 0:
        return star(lift(spec.origin_degree_neg, spec.l), above - below)
    pos = star(lift(spec.origin_degree_pos, spec.l), above)
    neg = star(lift(spec.origin_degree_neg, spec.l), below)
    return pos - neg


def sum_indices(spec: ProblemSpec, levels: Iterable[Fraction | int | str]) -> EulerElement:
    """Ring sum of bifurcation indices over a set of levels."""
    out = EulerElement.zero(spec.r + spec.l)
    for lam in levels:
        out = out + bif_index(spec, lam)
    return out


def _domain_part_nonzero(spec: ProblemSpec, rep: TorusRep) -> bool:
    return any(any(w[spec.r :]) for w, _ in rep.weights)


def _uniqueness_scan(spec: ProblemSpec) -> str | None:
    """Check declared highest weights are new at their own level."""
    for le in spec.laplace_spectrum:
        if le.beta <= 0:
            continue
        if not le.irreducible_nontrivial:
            return f"eigenspace at {le.beta} not certified irreducible"
        if le.highest_weight is None:
            return f"no highest weight declared at {le.beta}"
        if not any(le.highest_weight):
            return f"zero highest weight at {le.beta}"
        for lower in spec.laplace_spectrum:
            if lower.beta < le.beta and lower.eigenspace.occurs(le.highest_weight):
                return (
                    f"highest weight {le.highest_weight} of level {le.beta} "
                    f"already occurs at {lower.beta}"
                )
    return None


def unboundedness_certificate(
    spec: ProblemSpec, lambda0: Fraction | int | str
) -> tuple[UnboundednessCertificate | None, str | None]:
    """Certificate that the continuum at the level is unbounded, or a reason.

    Hypotheses checked: (E) with markers, irreducibility flags and fresh
    highest weights for every positive Laplace eigenvalue, and a nonzero
    unit coefficient in the origin degree on the relevant side.  The
    certified coefficient at the combined-character subgroup is verified
    against the expected closed form, and the weight is scanned out of
    every kernel strictly between 0 and the level.
    """
    report = _require_valid(spec)
    lam0 = Fraction(lambda0)
    return _unboundedness(spec, report, lam0)


def _unboundedness(
    spec: ProblemSpec, report: ValidationReport, lam0: Fraction
) -> tuple[UnboundednessCertificate | None, str | None]:
    if not report.e_holds:
        return None, "(E) fails: markers missing or not unique"
    scan_reason = _uniqueness_scan(spec)
    if scan_reason is not None:
        return None, scan_reason

    if lam0 == 0:
        if not report.n1:
            return None, "origin degenerate (N1 fails)"
        if spec.p % 2 == 0:
            return None, "p is even"
        if bif_index(spec, 0).is_zero:
            return None, "index at level 0 vanishes despite odd p"
        return (
            UnboundednessCertificate(
                kind="zero-level",
                subgroup=None,
                coefficient=None,
                multiplicity=None,
                witness=None,
                excluded_levels=(),
            ),
            None,
        )

    side = spec.origin_degree_pos if lam0 > 0 else spec.origin_degree_neg
    n0 = side.unit_coefficient()
    if n0 == 0:
        return None, "unit coefficient of the origin degree vanishes"

    pairs = _witness_pairs(spec, lam0)
    if not pairs:
        raise InputError(f"{lam0} is not a nonzero candidate level")
    me, le = min(pairs, key=lambda p: p[1].beta)
    mu = me.marker_weight
    nu = le.highest_weight
    assert mu is not None and nu is not None
    combined = canonical_weight(mu + nu)
    mirrored = canonical_weight(mu + tuple(-x for x in nu))
    h_star = subgroup_canonical(spec.r + spec.l, [combined])

    kernel = kernel_rep(spec, lam0)
    mult = kernel.multiplicity(combined)
    index = bif_index(spec, lam0)
    coeff = index.coefficient(h_star)
    if lam0 > 0:
        expected = -n0 * (-1) ** negative_rep(spec, lam0, "above").dim * mult
    else:
        expected = n0 * (-1) ** negative_rep(spec, lam0, "below").dim * mult
    if mult < 1 or coeff != expected or coeff == 0:
        raise ConsistencyError(
            f"certificate coefficient at {h_star} is {coeff}, expected {expected}"
        )

    between = [
        c.lambda0
        for c in candidate_levels(spec)
        if (0 < c.lambda0 < lam0) or (lam0 < c.lambda0 < 0)
    ]
    for lam in between:
        v = kernel_rep(spec, lam)
        if v.occurs(combined) or v.occurs(mirrored):
            raise ConsistencyError(
                f"weight {combined} leaks into the kernel at intermediate level {lam}"
            )
    return (
        UnboundednessCertificate(
            kind="highest-weight",
            subgroup=h_star,
            coefficient=coeff,
            multiplicity=mult,
            witness=(me.alpha, le.beta, mu, nu),
            excluded_levels=tuple(between),
        ),
        None,
    )


def verdict(spec: ProblemSpec, lambda0: Fraction | int | str) -> Verdict:
    """Outcome record for one level.

    ``global_bifurcation`` is exactly nonvanishing of the index; the
    reason tags additionally record which sufficient hypotheses hold
    (a kernel weight with nonzero domain part, or odd kernel dimension,
    each on top of N1 or N2).  Symmetry breaking is N2 at a nonzero
    level.  When neither N1 nor N2 is certified the verdict degrades to
    the local-or-global alternative.
    """
    report = _require_valid(spec)
    lam0 = Fraction(lambda0)
    index = bif_index(spec, lam0)
    kernel = kernel_rep(spec, lam0)
    certified = report.n1 or report.n2
    domain_action = _domain_part_nonzero(spec, kernel)
    odd = kernel.dim % 2 == 1

    glob = not index.is_zero
    reasons: list[str] = []
    if glob:
        reasons.append(REASON_INDEX)
    if certified and domain_action:
        reasons.append(REASON_DOMAIN)
    if certified and odd:
        reasons.append(REASON_ODD)

    alternative = None
    if not certified and (domain_action or odd):
        alternative = ALTERNATIVE_LOCAL_OR_GLOBAL
    elif certified and lam0 != 0 and not glob and not domain_action and not odd:
        # trivial domain action with even kernel dimension: undecided here
        alternative = ALTERNATIVE_INCONCLUSIVE

    zero_parity = None
    if lam0 == 0 and report.n1:
        zero_parity = "p-odd" if spec.p % 2 else "p-even"

    cert, reason = _unboundedness(spec, report, lam0)
    return Verdict(
        lambda0=lam0,
        global_bifurcation=glob,
        reasons=tuple(reasons),
        symmetry_breaking=report.n2 and lam0 != 0,
        alternative=alternative,
        unbounded=cert,
        unbounded_reason=reason,
        zero_level_parity=zero_parity,
    )


def analyze_level(spec: ProblemSpec, lambda0: Fraction | int | str) -> LevelAnalysis:
    """Full per-level record: kernel, side spaces, index, verdict."""
    lam0 = Fraction(lambda0)
    return LevelAnalysis(
        lambda0=lam0,
        kernel=kernel_rep(spec, lam0),
        negative_below=negative_rep(spec, lam0, "below"),
        negative_above=negative_rep(spec, lam0, "above"),
        index=bif_index(spec, lam0),
        verdict=verdict(spec, lam0),
    )
