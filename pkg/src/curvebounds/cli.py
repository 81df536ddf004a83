"""Command line front end.

Subcommands: `bounds` (closed-form bound table over a genus range),
`penner` (trace report for one genus), `pf` (matrix file analysis) and
`track` (track file validation).  Exit status: 0 when every verdict in the
run passes, 1 when a verdict fails or a table row degrades to an error
marker, 2 for unusable input.  Exact rationals are printed as "p/q"; the
only float in any JSON report is the flm_upper_float64 field.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fileio import (
    MatrixFileError,
    TrackFileError,
    frac_str,
    load_matrix,
    load_track,
    track_to_json,
)
from .penner import trace
from .pfmatrix import (
    BlockTransition,
    cover_time,
    full_spread_power,
    is_irreducible,
    min_positive_diagonal_power,
    primitivity_exponent,
)
from .surfaces import (
    BoundReport,
    SporadicSurfaceError,
    SurfaceSig,
    flm_upper_bound,
    punctured_genus2_upper_bound,
    translation_length_lower_bound,
    translation_length_upper_bound,
)
from .penner import penner_upper_bound
from .traintrack import (
    TrackStructureError,
    branch_count_report,
    classify_regions,
    is_recurrent,
    total_cusps,
)

__all__ = ["main", "run_bounds", "run_penner", "run_pf", "run_track"]


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# --- bounds -----------------------------------------------------------------


def _bounds_row(genus: int, punctures: int) -> dict:
    row: dict = {"genus": genus, "punctures": punctures}
    try:
        sig = SurfaceSig(genus, punctures)
        lower = translation_length_lower_bound(sig)
        row["lower"] = frac_str(lower)
        if punctures == 0:
            upper = translation_length_upper_bound(genus)
            k, penner_bound = penner_upper_bound(genus)
            BoundReport(
                surface=sig,
                lower=lower,
                upper_closed=upper,
                upper_flm=flm_upper_bound(genus),
                upper_penner=penner_bound,
                certificate_k=k,
            ).validate()
            row["upper_closed"] = frac_str(upper)
            row["flm_upper_float64"] = flm_upper_bound(genus)
            row["penner_k"] = k
            row["penner_upper"] = frac_str(penner_bound)
        if genus == 2 and punctures >= 5:
            row["genus2_upper"] = frac_str(punctured_genus2_upper_bound(punctures))
    except SporadicSurfaceError:
        return {"genus": genus, "punctures": punctures, "error": "sporadic"}
    except ValueError as exc:
        return {"genus": genus, "punctures": punctures, "error": str(exc)}
    return row


def run_bounds(genus_min: int, genus_max: int, punctures: int, as_json: bool) -> int:
    rows = [_bounds_row(g, punctures) for g in range(genus_min, genus_max + 1)]
    lines = []
    for row in rows:
        if "error" in row:
            lines.append(
                f"g={row['genus']} n={row['punctures']}  error: {row['error']}"
            )
            continue
        cells = [f"g={row['genus']} n={row['punctures']}", f"lower={row['lower']}"]
        if "upper_closed" in row:
            cells.append(f"upper={row['upper_closed']}")
            cells.append(f"flm={row['flm_upper_float64']:.9f}")
            cells.append(f"penner_k={row['penner_k']}")
            cells.append(f"penner={row['penner_upper']}")
        if "genus2_upper" in row:
            cells.append(f"genus2_punctured={row['genus2_upper']}")
        lines.append("  ".join(cells))
    _emit({"rows": rows}, as_json, lines)
    return 0 if all("error" not in row for row in rows) else 1


# --- penner -----------------------------------------------------------------


def run_penner(genus: int, cap: int | None, as_json: bool) -> int:
    result = trace(genus, cap)
    upper = translation_length_upper_bound(genus)
    ok = result.bound is not None and result.bound <= upper
    supports = [
        sorted(str(c) for c in s) for s in result.supports
    ]
    payload = {
        "genus": genus,
        "cap": result.cap,
        "supports": supports,
        "certificates": [[k, str(w)] for k, w in result.certificates],
        "best_k": result.best_k,
        "bound": frac_str(result.bound) if result.bound is not None else None,
        "upper_closed": frac_str(upper),
        "pass": ok,
    }
    lines = [f"penner trace, genus {genus}, cap {result.cap}"]
    for k, s in enumerate(supports):
        lines.append(f"S_{k} = {{{' '.join(s)}}}")
    for k, w in result.certificates:
        lines.append(f"certified k={k} witness={w}")
    lines.append(f"best_k={result.best_k} bound={payload['bound']}")
    verdict = "PASS" if ok else "FAIL"
    lines.append(
        f"2/{result.best_k} <= 4/(g^2+g-4) = {frac_str(upper)}: {verdict}"
    )
    _emit(payload, as_json, lines)
    return 0 if ok else 1


# --- pf ---------------------------------------------------------------------


def run_pf(input_path: str, as_json: bool) -> int:
    try:
        doc = load_matrix(input_path)
    except (MatrixFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    m = doc.matrix
    if m.rows != m.cols:
        print(f"error: matrix is {m.rows}x{m.cols}, analysis needs square", file=sys.stderr)
        return 2
    if (doc.real_set is None) != (doc.surface is None):
        print('error: "real:" and "surface:" lines must appear together', file=sys.stderr)
        return 2
    irr = is_irreducible(m)
    exponent = primitivity_exponent(m)
    payload: dict = {
        "dim": m.rows,
        "irreducible": irr,
        "q": min_positive_diagonal_power(m) if irr else None,
        "primitivity_exponent": exponent,
    }
    lines = [
        f"matrix {m.rows}x{m.cols}",
        f"irreducible: {'yes' if irr else 'no'}",
        f"q (least power with a positive diagonal entry): {payload['q']}",
        "primitivity exponent: "
        + (str(exponent) if exponent is not None else "not primitive"),
    ]
    exit_code = 0
    if doc.real_set is not None:
        try:
            bt = BlockTransition(m, doc.real_set, doc.surface)
            i = cover_time(bt)
            k = full_spread_power(bt)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        chi = doc.surface.chi
        coeff = 162 if doc.surface.punctures == 0 else 18
        k_bound = coeff * chi * chi
        ok = k < k_bound
        rq = min_positive_diagonal_power(bt.restriction())
        payload["block"] = {
            "r": bt.r,
            "q": rq,
            "cover_time": i,
            "k": k,
            "k_bound": k_bound,
            "k_ok": ok,
        }
        lines.append(f"real branches r={bt.r}, restriction q={rq}")
        lines.append(f"cover time i={i}")
        lines.append(
            f"k = 2rq+i = {k} < {coeff}*chi^2 = {k_bound}: "
            + ("PASS" if ok else "FAIL")
        )
        if not ok:
            exit_code = 1
    _emit(payload, as_json, lines)
    return exit_code


# --- track ------------------------------------------------------------------


def run_track(input_path: str, as_json: bool) -> int:
    try:
        doc = load_track(input_path)
    except (TrackFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload: dict = {}
    lines: list[str] = []
    checks: dict[str, bool] = {}
    try:
        track, attachment = doc.build()
    except TrackStructureError as exc:
        checks["structure"] = False
        payload["checks"] = checks
        payload["structure_error"] = str(exc)
        lines.append(f"structure (valences, sides, slots): FAIL ({exc})")
        _emit(payload, as_json, lines)
        return 1
    checks["structure"] = True
    lines.append("structure (valences, sides, slots): PASS")
    payload["echo"] = track_to_json(track, attachment)

    sig = attachment.surface
    try:
        report = classify_regions(track, attachment)
    except TrackStructureError as exc:
        checks["euler"] = False
        payload["euler_error"] = str(exc)
        lines.append(f"euler consistency: FAIL ({exc})")
        report = None
    else:
        checks["euler"] = True
        lines.append("euler consistency: PASS")
        payload["regions"] = [r.label for r in report.regions]
        payload["large"] = report.is_large
        payload["maximal"] = report.is_maximal
        lines.append("regions: " + ", ".join(r.label for r in report.regions))
        lines.append(
            f"large: {'yes' if report.is_large else 'no'}  "
            f"maximal: {'yes' if report.is_maximal else 'no'}"
        )

    recurrent, witness = is_recurrent(track)
    checks["recurrent"] = recurrent
    if recurrent:
        payload["witness"] = {name: frac_str(w) for name, w in sorted(witness.items())}
        lines.append("recurrence: PASS (positive witness measure found)")
    else:
        payload["witness"] = None
        lines.append("recurrence: FAIL (no strictly positive measure)")

    counts = branch_count_report(track, sig)
    checks["branch_total"] = counts.total_ok
    checks["real_count"] = counts.real_ok
    payload["branch_counts"] = {
        "total": counts.total,
        "total_bound": counts.total_bound,
        "real": counts.real,
        "real_bound": counts.real_bound,
    }
    lines.append(
        f"branch total {counts.total} <= {counts.total_bound}: "
        + ("PASS" if counts.total_ok else "FAIL")
    )
    lines.append(
        f"real branches {counts.real} < {counts.real_bound}: "
        + ("PASS" if counts.real_ok else "FAIL")
    )

    cusps = total_cusps(track)
    cusp_bound = 6 * abs(sig.chi)
    checks["cusp_count"] = cusps <= cusp_bound
    payload["cusps"] = {"total": cusps, "bound": cusp_bound}
    lines.append(
        f"cusps {cusps} <= {cusp_bound}: "
        + ("PASS" if checks["cusp_count"] else "FAIL")
    )

    payload["checks"] = checks
    _emit(payload, as_json, lines)
    return 0 if all(checks.values()) else 1


# --- entry point ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvebounds",
        description="Exact bounds and certificates for curve-graph translation lengths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="bound table over a genus range")
    b.add_argument("--genus-min", type=int, required=True)
    b.add_argument("--genus-max", type=int, required=True)
    b.add_argument("--punctures", type=int, default=0)
    b.add_argument("--json", action="store_true")

    p = sub.add_parser("penner", help="support trace and distance certificates")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--json", action="store_true")

    f = sub.add_parser("pf", help="transition matrix analysis")
    f.add_argument("--input", required=True)
    f.add_argument("--json", action="store_true")

    t = sub.add_parser("track", help="train track file validation")
    t.add_argument("--input", required=True)
    t.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds":
        if args.genus_min > args.genus_max:
            parser.error("empty genus range")
        if args.punctures < 0:
            parser.error("punctures must be nonnegative")
        if args.punctures == 0 and args.genus_min < 2:
            parser.error("closed-surface table needs genus >= 2")
        if args.punctures > 0 and args.genus_min < 0:
            parser.error("genus must be nonnegative")
        return run_bounds(args.genus_min, args.genus_max, args.punctures, args.json)
    if args.command == "penner":
        if args.genus < 2:
            parser.error("penner trace needs genus >= 2")
        if args.cap is not None and args.cap < 1:
            parser.error("cap must be at least 1")
        return run_penner(args.genus, args.cap, args.json)
    if args.command == "pf":
        return run_pf(args.input, args.json)
    return run_track(args.input, args.json)


if __name__ == "__main__":
    sys.exit(main())
