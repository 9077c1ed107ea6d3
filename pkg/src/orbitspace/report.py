"""Reports for the command line: a JSON-ready dict and a text rendering."""

import json

from .problem import echo, format_vector
from .ppdivisor import classify, search, stratum_cone

REPORT_SCHEMA_VERSION = 1

FACTORIALITY_WARNING = (
    "projective/toric_embeddable flags are the combinatorial criteria on stratum cones; "
    "they describe the orbit space only when the affine variety is factorial, "
    "which is not checked"
)
NO_IDENTIFICATIONS_NOTE = (
    "no identifications declared: all contraction maps are treated as trivial, "
    "so every admissible collection counts as coherent"
)


def _cone_entry(cone):
    return {
        "rays": [list(r) for r in cone.rays],
        "inequalities": [list(u) for u in cone.inequalities],
    }


def strata_labels(divisor, strat):
    return [[divisor.labels[i] for i in sorted(I)] for I in strat.ordered()]


def enumerate_report(desc, divisor, strat, *, classify_flags=False, workers=None):
    admissible, collections = search(divisor, strat, workers)
    entries = []
    for c in collections:
        entry = {"vertices": [format_vector(v) for v in c.choices]}
        if classify_flags:
            rec = classify(divisor, strat, c)
            cones = rec.stratum_cones
            entry["projective"] = rec.projective
            entry["toric_embeddable"] = rec.toric_embeddable
            entry["witness"] = list(rec.witness) if rec.witness is not None else None
        else:
            cones = {I: stratum_cone(divisor, c, I) for I in strat.ordered()}
        entry["stratum_cones"] = [
            {"stratum": [divisor.labels[i] for i in sorted(I)], **_cone_entry(cone)}
            for I, cone in cones.items()
        ]
        entries.append(entry)
    warnings = []
    if not strat.identifications:
        warnings.append(NO_IDENTIFICATIONS_NOTE)
    if classify_flags:
        warnings.append(FACTORIALITY_WARNING)
    out = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": "enumerate",
        "problem": echo(desc),
        "labels": list(divisor.labels),
        "strata": strata_labels(divisor, strat),
        "admissible_count": admissible,
        "coherent_count": len(entries),
        "collections": entries,
        "warnings": warnings,
    }
    if classify_flags:
        out["projective_count"] = sum(e["projective"] for e in entries)
        out["non_toric_embeddable_count"] = sum(not e["toric_embeddable"] for e in entries)
    return out


def strata_report(desc, strata_before, strata_after):
    def fmt(family):
        return [sorted(s) for s in sorted(family, key=lambda s: (len(s), sorted(s)))]

    out = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": "strata",
        "problem": echo(desc),
        "strata": fmt(strata_after),
    }
    if strata_before is not None:
        out["strata_before_splitting"] = fmt(strata_before)
    return out


def dumps(report):
    return json.dumps(report, indent=2) + "\n"


def _vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _family(strata):
    return "{" + ", ".join("{" + ",".join(s) + "}" for s in strata) + "}"


def render_text(report):
    lines = []
    if report["command"] == "strata":
        if "strata_before_splitting" in report:
            lines.append(f"strata before splitting ({len(report['strata_before_splitting'])}):")
            lines.append("  " + _family(report["strata_before_splitting"]))
        lines.append(f"strata ({len(report['strata'])}):")
        lines.append("  " + _family(report["strata"]))
        return "\n".join(lines) + "\n"

    labels = report["labels"]
    lines.append(f"coefficients: {', '.join(labels) if labels else '(none)'}")
    lines.append(f"strata ({len(report['strata'])}): {_family(report['strata'])}")
    lines.append(f"admissible collections: {report['admissible_count']}")
    lines.append(f"coherent collections: {report['coherent_count']}")
    for k, entry in enumerate(report["collections"], 1):
        verts = ", ".join(_vec(v) for v in entry["vertices"])
        line = f"  [{k}] {{{verts}}}"
        if "projective" in entry:
            flags = ["projective" if entry["projective"] else "not projective"]
            flags.append("toric-embeddable" if entry["toric_embeddable"] else "not toric-embeddable")
            line += "  " + ", ".join(flags)
            if entry["witness"] is not None:
                line += f"  witness {_vec(entry['witness'])}"
        lines.append(line)
    if "projective_count" in report:
        lines.append(f"projective: {report['projective_count']}")
        lines.append(f"not toric-embeddable: {report['non_toric_embeddable_count']}")
    for w in report["warnings"]:
        lines.append(f"note: {w}")
    return "\n".join(lines) + "\n"
