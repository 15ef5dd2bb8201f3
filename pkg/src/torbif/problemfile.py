"""JSON problem files and analysis reports.

Parsing is total: every violation maps to an InputError with a located
message and a distinct code (MALFORMED_JSON, SCHEMA, DIM_MISMATCH,
B6_TRIVIAL, CUTOFF_INSUFFICIENT).  Exact rationals travel as strings
"num/den" or integers; floating point is rejected in the symbolic
pipeline.  Reports serialize losslessly and deterministically.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

from .bifurcation import (
    LevelAnalysis,
    Verdict,
    analyze_level,
    candidate_levels,
)
from .errors import CutoffError, InputError
from .eulerring import EulerElement
from .intlat import TorusSubgroup, subgroup_canonical
from .spectra import (
    LaplaceEigenData,
    MatrixEigenData,
    ProblemSpec,
    flat_torus_spectrum,
    sphere_spectrum,
    validate,
)
from .torusrep import TorusRep


def parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got a boolean", code="SCHEMA")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(
            f"{where}: floating point is not allowed in the symbolic pipeline", code="SCHEMA"
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}: bad rational {value!r} ({exc})", code="SCHEMA")
    raise InputError(f"{where}: expected a rational, got {type(value).__name__}", code="SCHEMA")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def _expect_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer", code="SCHEMA")
    return value


def _expect_list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list", code="SCHEMA")
    return value


def _int_vector(value: Any, where: str) -> tuple[int, ...]:
    return tuple(_expect_int(e, f"{where}[{i}]") for i, e in enumerate(_expect_list(value, where)))


def _parse_rep(doc: dict, rank: int, where: str) -> TorusRep:
    weights: list[tuple[tuple[int, ...], int]] = []
    for i, item in enumerate(_expect_list(doc.get("weights", []), f"{where}.weights")):
        if not isinstance(item, dict):
            raise InputError(f"{where}.weights[{i}]: expected an object", code="SCHEMA")
        m = _int_vector(item.get("m"), f"{where}.weights[{i}].m")
        mult = _expect_int(item.get("mult", 1), f"{where}.weights[{i}].mult")
        weights.append((m, mult))
    trivial = _expect_int(doc.get("trivial_mult", 0), f"{where}.trivial_mult")
    try:
        return TorusRep.make(rank, trivial, weights)
    except InputError as exc:
        raise InputError(f"{where}: {exc}", code="SCHEMA")


def _parse_degree(value: Any, r: int, where: str, code_if_zero: str) -> EulerElement:
    terms = []
    for i, item in enumerate(_expect_list(value, where)):
        if not isinstance(item, dict):
            raise InputError(f"{where}[{i}]: expected an object", code="SCHEMA")
        rows = [
            _int_vector(row, f"{where}[{i}].characters[{j}]")
            for j, row in enumerate(_expect_list(item.get("characters", []), f"{where}[{i}].characters"))
        ]
        coeff = _expect_int(item.get("coeff"), f"{where}[{i}].coeff")
        try:
            terms.append((subgroup_canonical(r, rows), coeff))
        except InputError as exc:
            raise InputError(f"{where}[{i}]: {exc}", code="SCHEMA")
    element = EulerElement.make(r, terms)
    if element.is_zero:
        raise InputError(f"{where}: degree is the zero element", code=code_if_zero)
    return element


def _parse_laplace(doc: Any, l: int, cutoff: Fraction) -> tuple[LaplaceEigenData, ...]:
    if isinstance(doc, dict):
        provider = doc.get("provider")
        params = doc.get("params", {})
        if not isinstance(params, dict):
            raise InputError("laplace.params: expected an object", code="SCHEMA")
        if provider == "flat_torus":
            d = _expect_int(params.get("d"), "laplace.params.d")
            pcut = _expect_int(params.get("cutoff"), "laplace.params.cutoff")
            if d != l:
                raise InputError(
                    f"laplace.params.d={d} does not match l={l}", code="SCHEMA"
                )
            if Fraction(pcut) < cutoff:
                raise InputError(
                    f"flat torus provider enumerates up to {pcut}, below beta_cutoff {cutoff}",
                    code="CUTOFF_INSUFFICIENT",
                )
            entries = flat_torus_spectrum(d, pcut)
        elif provider == "sphere":
            n = _expect_int(params.get("n"), "laplace.params.n")
            kmax = _expect_int(params.get("cutoff_k"), "laplace.params.cutoff_k")
            if n // 2 != l:
                raise InputError(
                    f"sphere provider has torus rank {n // 2}, spec says l={l}", code="SCHEMA"
                )
            top = (kmax + 1) * (kmax + n - 1)
            if Fraction(top) <= cutoff:
                raise InputError(
                    f"sphere provider stops below beta_cutoff {cutoff}; raise cutoff_k",
                    code="CUTOFF_INSUFFICIENT",
                )
            entries = sphere_spectrum(n, kmax)
        else:
            raise InputError(f"laplace.provider: unknown provider {provider!r}", code="SCHEMA")
        return tuple(e for e in entries if e.beta <= cutoff)
    out = []
    for i, item in enumerate(_expect_list(doc, "laplace")):
        where = f"laplace[{i}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object", code="SCHEMA")
        beta = parse_rational(item.get("beta"), f"{where}.beta")
        rep = _parse_rep(item, l, where)
        hw = item.get("highest_weight")
        try:
            out.append(
                LaplaceEigenData(
                    beta=beta,
                    eigenspace=rep,
                    irreducible_nontrivial=bool(item.get("irreducible", False)),
                    highest_weight=_int_vector(hw, f"{where}.highest_weight") if hw is not None else None,
                )
            )
        except InputError as exc:
            raise InputError(f"{where}: {exc}", code="SCHEMA")
        if beta > cutoff:
            raise InputError(
                f"{where}: eigenvalue {beta} exceeds beta_cutoff {cutoff}",
                code="CUTOFF_INSUFFICIENT",
            )
    return tuple(out)


_ERROR_CODES = ("DIM_MISMATCH", "B6_TRIVIAL", "CUTOFF_INSUFFICIENT", "SCHEMA")


def parse_problem_dict(doc: Any) -> ProblemSpec:
    if not isinstance(doc, dict):
        raise InputError("top level: expected an object", code="SCHEMA")
    r = _expect_int(doc.get("r"), "r")
    l = _expect_int(doc.get("l"), "l")
    p = _expect_int(doc.get("p"), "p")
    cutoff = parse_rational(doc.get("beta_cutoff"), "beta_cutoff")

    matrix = []
    for i, item in enumerate(_expect_list(doc.get("matrix_spectrum"), "matrix_spectrum")):
        where = f"matrix_spectrum[{i}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object", code="SCHEMA")
        alpha = parse_rational(item.get("alpha"), f"{where}.alpha")
        rep = _parse_rep(item, r, where)
        marker = item.get("marker")
        try:
            matrix.append(
                MatrixEigenData(
                    alpha=alpha,
                    eigenspace=rep,
                    marker_weight=_int_vector(marker, f"{where}.marker") if marker is not None else None,
                )
            )
        except InputError as exc:
            raise InputError(f"{where}: {exc}", code="SCHEMA")

    laplace = _parse_laplace(doc.get("laplace"), l, cutoff)
    deg_pos = _parse_degree(doc.get("degF_pos"), r, "degF_pos", "B6_TRIVIAL")
    deg_neg = _parse_degree(doc.get("degF_neg"), r, "degF_neg", "B6_TRIVIAL")

    try:
        spec = ProblemSpec(
            r=r,
            l=l,
            p=p,
            matrix_spectrum=tuple(matrix),
            laplace_spectrum=laplace,
            beta_cutoff=cutoff,
            origin_degree_pos=deg_pos,
            origin_degree_neg=deg_neg,
        )
    except InputError as exc:
        raise InputError(str(exc), code="SCHEMA")

    report = validate(spec)
    if report.structural_errors:
        first = report.structural_errors[0]
        code = next((c for c in _ERROR_CODES if first.startswith(c)), "SCHEMA")
        raise InputError("; ".join(report.structural_errors), code=code)
    return spec


def parse_problem(path: str | Path) -> ProblemSpec:
    """Load and validate a problem file; raises InputError with a code."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}", code="INPUT")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: {exc}", code="MALFORMED_JSON")
    return parse_problem_dict(doc)


# ---------------------------------------------------------------------------
# serialization


def _rep_doc(rep: TorusRep) -> dict:
    return {
        "trivial_mult": rep.trivial_mult,
        "weights": [{"m": list(m), "mult": k} for m, k in rep.weights],
    }


def _subgroup_doc(h: TorusSubgroup) -> list[list[int]]:
    return [list(row) for row in h.annihilator.basis]


def _element_doc(x: EulerElement) -> list[dict]:
    return [{"characters": _subgroup_doc(h), "coeff": c} for h, c in x.terms]


def serialize_problem(spec: ProblemSpec) -> dict:
    """Inverse of :func:`parse_problem_dict` on valid specs."""
    return {
        "r": spec.r,
        "l": spec.l,
        "p": spec.p,
        "matrix_spectrum": [
            {
                "alpha": format_rational(e.alpha),
                **_rep_doc(e.eigenspace),
                "marker": list(e.marker_weight) if e.marker_weight is not None else None,
            }
            for e in spec.matrix_spectrum
        ],
        "laplace": [
            {
                "beta": format_rational(e.beta),
                **_rep_doc(e.eigenspace),
                "irreducible": e.irreducible_nontrivial,
                "highest_weight": list(e.highest_weight) if e.highest_weight is not None else None,
            }
            for e in spec.laplace_spectrum
        ],
        "beta_cutoff": format_rational(spec.beta_cutoff),
        "degF_pos": _element_doc(spec.origin_degree_pos),
        "degF_neg": _element_doc(spec.origin_degree_neg),
    }


def _verdict_doc(v: Verdict) -> dict:
    cert = None
    if v.unbounded is not None:
        c = v.unbounded
        cert = {
            "kind": c.kind,
            "subgroup": _subgroup_doc(c.subgroup) if c.subgroup is not None else None,
            "coefficient": c.coefficient,
            "multiplicity": c.multiplicity,
            "witness": None
            if c.witness is None
            else {
                "alpha": format_rational(c.witness[0]),
                "beta": format_rational(c.witness[1]),
                "marker": list(c.witness[2]),
                "highest_weight": list(c.witness[3]),
            },
            "excluded_levels": [format_rational(x) for x in c.excluded_levels],
        }
    return {
        "global_bifurcation": v.global_bifurcation,
        "reasons": list(v.reasons),
        "symmetry_breaking": v.symmetry_breaking,
        "alternative": v.alternative,
        "unbounded": cert,
        "unbounded_reason": v.unbounded_reason,
        "zero_level_parity": v.zero_level_parity,
    }


def _analysis_doc(a: LevelAnalysis, witnesses) -> dict:
    return {
        "lambda0": format_rational(a.lambda0),
        "witnesses": [[format_rational(al), format_rational(be)] for al, be in witnesses],
        "kernel": {**_rep_doc(a.kernel), "dim": a.kernel.dim},
        "negative_below": {**_rep_doc(a.negative_below), "dim": a.negative_below.dim},
        "negative_above": {**_rep_doc(a.negative_above), "dim": a.negative_above.dim},
        "index": _element_doc(a.index),
        "verdict": _verdict_doc(a.verdict),
    }


def _validation_doc(spec: ProblemSpec) -> dict:
    rep = validate(spec)
    return {
        "N1": rep.n1,
        "N2": rep.n2,
        "N2_method": rep.n2_method,
        "E": rep.e_holds,
        "E_witnesses": None
        if rep.e_witnesses is None
        else [
            {"alpha": format_rational(a), "marker": list(m)} for a, m in rep.e_witnesses
        ],
        "structural_errors": list(rep.structural_errors),
    }


def build_report(
    spec: ProblemSpec,
    levels: Iterable[Fraction | int | str] | None = None,
    parallel: bool = True,
    refusals_as_records: bool = True,
) -> dict:
    """Full machine-readable report: validation block plus level records.

    Level analyses are independent and fan out across a thread pool; the
    output ordering is by level regardless of completion order.  A level
    whose cutoff guard refuses is recorded in place unless
    ``refusals_as_records`` is off, in which case the refusal propagates.
    """
    cands = candidate_levels(spec)
    witness_map = {c.lambda0: c.witnesses for c in cands}
    wanted = (
        sorted(Fraction(x) for x in levels) if levels is not None else [c.lambda0 for c in cands]
    )

    def one(lam: Fraction) -> dict:
        try:
            return _analysis_doc(analyze_level(spec, lam), witness_map.get(lam, ()))
        except CutoffError as exc:
            if not refusals_as_records:
                raise
            return {"lambda0": format_rational(lam), "refused": str(exc)}

    if parallel and len(wanted) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(wanted))) as pool:
            records = list(pool.map(one, wanted))
    else:
        records = [one(lam) for lam in wanted]
    return {"validation": _validation_doc(spec), "levels": records}


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def _format_element_terms(terms: list[dict]) -> str:
    if not terms:
        return "0"
    parts = []
    for t in terms:
        gen = "I" if not t["characters"] else "chi(H" + str(t["characters"]) + ")"
        parts.append(f"{t['coeff']:+d}*{gen}")
    return " ".join(parts)


def render_text(report: dict) -> str:
    """Human-readable summary of a report dict."""
    lines = []
    val = report["validation"]
    lines.append(
        "validation: N1=%s N2=%s(%s) E=%s"
        % (val["N1"], val["N2"], val["N2_method"], val["E"])
    )
    for err in val["structural_errors"]:
        lines.append(f"  structural error: {err}")
    for rec in report["levels"]:
        if "refused" in rec:
            lines.append(f"level {rec['lambda0']}: refused ({rec['refused']})")
            continue
        v = rec["verdict"]
        lines.append(f"level {rec['lambda0']}:")
        lines.append(
            "  kernel dim %d, negative dim %d -> %d across the level"
            % (rec["kernel"]["dim"], rec["negative_below"]["dim"], rec["negative_above"]["dim"])
        )
        lines.append("  index: " + _format_element_terms(rec["index"]))
        flags = []
        flags.append("global bifurcation" if v["global_bifurcation"] else "no index jump")
        if v["symmetry_breaking"]:
            flags.append("symmetry breaking")
        if v["alternative"]:
            flags.append(f"alternative: {v['alternative']}")
        if v["zero_level_parity"]:
            flags.append(v["zero_level_parity"])
        lines.append("  verdict: " + "; ".join(flags) + f" (reasons: {', '.join(v['reasons']) or '-'})")
        if v["unbounded"] is not None:
            c = v["unbounded"]
            if c["kind"] == "highest-weight":
                lines.append(
                    "  unbounded: certified at H%s with coefficient %d (excluded levels: %s)"
                    % (c["subgroup"], c["coefficient"], ", ".join(c["excluded_levels"]) or "-")
                )
            else:
                lines.append("  unbounded: certified through the zero-level parity route")
        elif v["unbounded_reason"]:
            lines.append(f"  unbounded: no certificate ({v['unbounded_reason']})")
    return "\n".join(lines)
