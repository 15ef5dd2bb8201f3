"""Exact equivariant bifurcation indices for symmetric elliptic systems.

The symbolic pipeline runs entirely over arbitrary-precision integers and
rationals: integer lattices and torus subgroups (``intlat``), torus
representations as weight multisets (``torusrep``), the Euler ring of a
torus (``eulerring``), spectral problem data (``spectra``), and the
bifurcation analysis itself (``bifurcation``).  ``corroborate`` checks the
predictions numerically on a closed-form circle model, ``oracle`` houses
the randomized verification suites, and ``cli``/``problemfile`` expose the
JSON and command-line surfaces.
"""

from .bifurcation import (
    CandidateLevel,
    LevelAnalysis,
    UnboundednessCertificate,
    Verdict,
    analyze_level,
    bif_index,
    candidate_levels,
    hessian_spectrum,
    kernel_rep,
    negative_rep,
    sum_indices,
    unboundedness_certificate,
    verdict,
)
from .errors import ConsistencyError, CutoffError, InputError, RefusalError, TorbifError
from .eulerring import EulerElement, codim_part, deg_minus_id, lift, linear_combine, star
from .intlat import (
    IntMatrix,
    Lattice,
    SmithDecomposition,
    TorusSubgroup,
    codim_generators,
    contains,
    extend_by_full_torus,
    snf,
    subgroup_canonical,
    subgroup_intersect,
)
from .spectra import (
    LaplaceEigenData,
    MatrixEigenData,
    ProblemSpec,
    ValidationReport,
    flat_torus_spectrum,
    sphere_spectrum,
    validate,
)
from .torusrep import TorusRep, character, direct_sum, tensor

__all__ = [
    "CandidateLevel",
    "ConsistencyError",
    "CutoffError",
    "EulerElement",
    "InputError",
    "IntMatrix",
    "LaplaceEigenData",
    "Lattice",
    "LevelAnalysis",
    "MatrixEigenData",
    "ProblemSpec",
    "RefusalError",
    "SmithDecomposition",
    "TorbifError",
    "TorusRep",
    "TorusSubgroup",
    "UnboundednessCertificate",
    "ValidationReport",
    "Verdict",
    "analyze_level",
    "bif_index",
    "candidate_levels",
    "character",
    "codim_generators",
    "codim_part",
    "contains",
    "deg_minus_id",
    "direct_sum",
    "extend_by_full_torus",
    "flat_torus_spectrum",
    "hessian_spectrum",
    "kernel_rep",
    "lift",
    "linear_combine",
    "negative_rep",
    "snf",
    "sphere_spectrum",
    "star",
    "subgroup_canonical",
    "subgroup_intersect",
    "sum_indices",
    "tensor",
    "unboundedness_certificate",
    "validate",
    "verdict",
]
