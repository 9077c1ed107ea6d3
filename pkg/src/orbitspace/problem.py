"""Problem files: parsing, validation, canonical echo.

A problem is a JSON object::

    {
      "schema_version": 1,
      "rank": 2,
      "tail_rays": [[-1, 1], [5, -1]],
      "coefficients": [{"label": "1", "vertices": [[0, 0], [2, -1]]}, ...],

      # stratification source: either an explicit list of label sets ...
      "strata": [["1", "3"], ["2", "3", "4"], ...],
      # ... or a fan with a ray marking and optional splitting
      "fan": {"rays": {"v1": [1, 0, 0, 0], ...},
              "maximal_cones": [["v1", "a2", "a1", "v3"], ...]},
      "marking": {"1": "v1", ...},
      "splitting": {"3": {"parts": ["3a", "3b"], "meet": false}},

      "identifications": [{"stratum_a": ["1"], "stratum_b": ["2"],
                           "u_cone_rays": [[1, 2], [1, 3]]}]
    }

Numbers are integers or strings ``"p/q"``; floats are rejected.
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone, GeometryError
from .polyhedra import NotAVertex, Polyhedron
from .ppdivisor import Identification, PPDivisor, Stratification
from .toric import DivisorMarking, Fan, Split, SplittingSpec, apply_splitting, occurring_strata, validate_fan

SCHEMA_VERSION = 1

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Issue:
    code: str
    location: str
    message: str

    def __str__(self):
        return f"{self.location}: [{self.code}] {self.message}"


class ProblemError(ValueError):
    """Validation failure; ``issues`` lists every problem found."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("\n".join(str(i) for i in self.issues))


@dataclass(frozen=True)
class FanSource:
    rays: tuple  # ((name, coords), ...)
    maximal_cones: tuple  # ((name, ...), ...)
    marking: tuple  # ((label, ray name), ...)
    splitting: tuple  # ((label, parts, meet), ...)


@dataclass(frozen=True)
class ProblemDescription:
    rank: int
    tail_rays: tuple
    coefficients: tuple  # ((label, vertices), ...)
    strata: tuple = None  # explicit source: tuple of label tuples
    fan: FanSource = None
    identifications: tuple = ()  # ((labels_a, labels_b, rays), ...)

    @property
    def labels(self):
        return tuple(label for label, _ in self.coefficients)


def format_number(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v):
    return [format_number(x) for x in v]


class _Reader:
    def __init__(self):
        self.issues = []

    def fail(self, code, where, msg):
        self.issues.append(Issue(code, where, msg))

    def number(self, x, where):
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            self.fail("malformed-number", where, f"expected an integer or a 'p/q' string, got {x!r}")
            return None
        if isinstance(x, int):
            return Fraction(x)
        m = _RATIONAL.match(x)
        if not m or (m.group(2) is not None and int(m.group(2)) == 0):
            self.fail("malformed-number", where, f"cannot read {x!r} as a rational number")
            return None
        return Fraction(int(m.group(1)), int(m.group(2) or 1))

    def vector(self, v, rank, where):
        if not isinstance(v, list):
            self.fail("schema", where, "expected an array of numbers")
            return None
        if rank is not None and len(v) != rank:
            self.fail("rank-mismatch", where, f"vector has length {len(v)}, expected {rank}")
            return None
        out = [self.number(x, f"{where}/{i}") for i, x in enumerate(v)]
        return None if any(x is None for x in out) else tuple(out)

    def vectors(self, vs, rank, where):
        if not isinstance(vs, list):
            self.fail("schema", where, "expected an array of vectors")
            return None
        out = [self.vector(v, rank, f"{where}/{i}") for i, v in enumerate(vs)]
        return None if any(v is None for v in out) else out

    def labels(self, ls, where):
        if not isinstance(ls, list) or not all(isinstance(x, str) for x in ls):
            self.fail("schema", where, "expected an array of label strings")
            return None
        return tuple(sorted(set(ls)))


def _read_fan(rd, data):
    fan = data["fan"]
    if not isinstance(fan, dict) or not isinstance(fan.get("rays"), dict):
        rd.fail("schema", "/fan", "expected an object with 'rays' (name -> vector) and 'maximal_cones'")
        return None
    rays = []
    fan_rank = None
    for name, v in fan["rays"].items():
        if fan_rank is None and isinstance(v, list):
            fan_rank = len(v)
        vec = rd.vector(v, fan_rank, f"/fan/rays/{name}")
        if vec is not None:
            if any(x.denominator != 1 for x in vec):
                rd.fail("malformed-number", f"/fan/rays/{name}", "fan rays must be integral")
            rays.append((name, tuple(int(x) for x in vec)))
    names = {n for n, _ in fan["rays"].items()}
    cones = []
    mc = fan.get("maximal_cones")
    if not isinstance(mc, list):
        rd.fail("schema", "/fan/maximal_cones", "expected an array of ray-name arrays")
        mc = []
    for k, c in enumerate(mc):
        labels = rd.labels(c, f"/fan/maximal_cones/{k}")
        if labels is None:
            continue
        for n in labels:
            if n not in names:
                rd.fail("unknown-label", f"/fan/maximal_cones/{k}", f"unknown ray {n!r}")
        cones.append(tuple(c))
    marking = data.get("marking", {})
    if not isinstance(marking, dict):
        rd.fail("schema", "/marking", "expected an object label -> ray name")
        marking = {}
    used = {}
    for label, ray in marking.items():
        if not isinstance(ray, str) or ray not in names:
            rd.fail("unknown-label", f"/marking/{label}", f"unknown ray {ray!r}")
        elif ray in used:
            rd.fail("schema", f"/marking/{label}", f"ray {ray!r} already marked by {used[ray]!r}")
        used[ray] = label
    splitting = []
    raw_split = data.get("splitting", {})
    if not isinstance(raw_split, dict):
        rd.fail("schema", "/splitting", "expected an object label -> {parts, meet}")
        raw_split = {}
    for label, spec in raw_split.items():
        where = f"/splitting/{label}"
        if not isinstance(spec, dict) or not isinstance(spec.get("parts"), list):
            rd.fail("schema", where, "expected {'parts': [...], 'meet': bool}")
            continue
        parts = spec["parts"]
        if len(parts) < 2 or not all(isinstance(p, str) for p in parts) or len(set(parts)) != len(parts):
            rd.fail("schema", where, "a split needs at least two distinct part labels")
            continue
        meet = spec.get("meet", False)
        if not isinstance(meet, bool):
            rd.fail("schema", f"{where}/meet", "expected true or false")
            continue
        if label not in marking:
            rd.fail("unknown-label", where, f"label {label!r} is not marked")
        splitting.append((label, tuple(parts), meet))
    all_parts = [p for _, parts, _ in splitting for p in parts]
    if len(all_parts) != len(set(all_parts)) or set(all_parts) & set(marking):
        rd.fail("schema", "/splitting", "part labels must be globally unique")
    return FanSource(
        rays=tuple(rays),
        maximal_cones=tuple(cones),
        marking=tuple(sorted(marking.items())),
        splitting=tuple(sorted(splitting)),
    )


def parse_problem(text):
    """Parse and validate a problem; raises :class:`ProblemError`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError([Issue("schema", f"line {exc.lineno} column {exc.colno}", exc.msg)]) from None
    return parse_problem_data(data)


def parse_problem_data(data):
    rd = _Reader()
    if not isinstance(data, dict):
        raise ProblemError([Issue("schema", "/", "expected a JSON object")])
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        rd.fail("schema", "/schema_version", f"unsupported schema version {version!r}")
    rank = data.get("rank")
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 0:
        raise ProblemError([Issue("schema", "/rank", "expected a nonnegative integer")])

    tail_rays = rd.vectors(data.get("tail_rays", []), rank, "/tail_rays")
    tail = None
    if tail_rays is not None:
        tail = Cone.from_generators(tail_rays, rank)
        if not tail.is_pointed:
            rd.fail("non-pointed-tail", "/tail_rays", "the tail cone must be pointed")
            tail = None

    coefficients = []
    raw_coeffs = data.get("coefficients", [])
    if not isinstance(raw_coeffs, list):
        rd.fail("schema", "/coefficients", "expected an array")
        raw_coeffs = []
    seen = set()
    for k, entry in enumerate(raw_coeffs):
        where = f"/coefficients/{k}"
        if not isinstance(entry, dict) or not isinstance(entry.get("label"), str):
            rd.fail("schema", where, "expected {'label': str, 'vertices': [...]}")
            continue
        label = entry["label"]
        if label in seen:
            rd.fail("schema", f"{where}/label", f"duplicate label {label!r}")
        seen.add(label)
        verts = rd.vectors(entry.get("vertices"), rank, f"{where}/vertices")
        if verts is None:
            continue
        if not verts:
            rd.fail("schema", f"{where}/vertices", "a coefficient needs at least one vertex")
            continue
        verts = sorted(set(verts))
        if tail is not None:
            try:
                Polyhedron(verts, tail)
            except NotAVertex as exc:
                rd.fail("non-vertex", f"{where}/vertices", f"coefficient {label!r}: {exc}")
        coefficients.append((label, tuple(verts)))
    labels = {label for label, _ in coefficients}

    strata = None
    fan = None
    if "strata" in data and "fan" in data:
        rd.fail("schema", "/", "give either 'strata' or 'fan', not both")
    elif "strata" in data:
        raw = data["strata"]
        if not isinstance(raw, list):
            rd.fail("schema", "/strata", "expected an array of label arrays")
        else:
            found = set()
            for k, s in enumerate(raw):
                ls = rd.labels(s, f"/strata/{k}")
                if ls is None:
                    continue
                for label in ls:
                    if label not in labels:
                        rd.fail("unknown-label", f"/strata/{k}", f"unknown coefficient label {label!r}")
                found.add(ls)
            strata = tuple(sorted(found, key=lambda s: (len(s), s)))
    elif "fan" in data:
        fan = _read_fan(rd, data)
    else:
        for key in ("marking", "splitting"):
            if key in data:
                rd.fail("schema", f"/{key}", f"'{key}' needs a 'fan'")

    identifications = []
    raw_ids = data.get("identifications", [])
    if not isinstance(raw_ids, list):
        rd.fail("schema", "/identifications", "expected an array")
        raw_ids = []
    for k, ident in enumerate(raw_ids):
        where = f"/identifications/{k}"
        if not isinstance(ident, dict):
            rd.fail("schema", where, "expected an object")
            continue
        a = rd.labels(ident.get("stratum_a"), f"{where}/stratum_a")
        b = rd.labels(ident.get("stratum_b"), f"{where}/stratum_b")
        rays = rd.vectors(ident.get("u_cone_rays"), rank, f"{where}/u_cone_rays")
        if a is None or b is None or rays is None:
            continue
        for label in a + b:
            if label not in labels:
                rd.fail("unknown-label", where, f"unknown coefficient label {label!r}")
        u_cone = Cone.from_generators(rays, rank)
        if tail is not None:
            omega_ok = all(all(sum(x * y for x, y in zip(g, r)) >= 0 for r in tail.rays) for g in u_cone.generators)
            if not omega_ok:
                rd.fail("schema", f"{where}/u_cone_rays", "the u-cone must lie in the weight cone")
        identifications.append((a, b, u_cone.generators))

    if rd.issues:
        raise ProblemError(rd.issues)
    return ProblemDescription(
        rank=rank,
        tail_rays=tail.rays,
        coefficients=tuple(coefficients),
        strata=strata,
        fan=fan,
        identifications=tuple(sorted(identifications)),
    )


def echo(desc):
    """Canonical JSON-ready dict; ``parse_problem_data(echo(d)) == d``."""
    out = {
        "schema_version": SCHEMA_VERSION,
        "rank": desc.rank,
        "tail_rays": [list(r) for r in desc.tail_rays],
        "coefficients": [
            {"label": label, "vertices": [format_vector(v) for v in verts]}
            for label, verts in desc.coefficients
        ],
    }
    if desc.strata is not None:
        out["strata"] = [list(s) for s in desc.strata]
    if desc.fan is not None:
        out["fan"] = {
            "rays": {name: list(v) for name, v in desc.fan.rays},
            "maximal_cones": [list(c) for c in desc.fan.maximal_cones],
        }
        out["marking"] = dict(desc.fan.marking)
        if desc.fan.splitting:
            out["splitting"] = {
                label: {"parts": list(parts), "meet": meet} for label, parts, meet in desc.fan.splitting
            }
    if desc.identifications:
        out["identifications"] = [
            {"stratum_a": list(a), "stratum_b": list(b), "u_cone_rays": [list(r) for r in rays]}
            for a, b, rays in desc.identifications
        ]
    return out


def build_fan(desc):
    names = [name for name, _ in desc.fan.rays]
    fan_rank = len(desc.fan.rays[0][1]) if desc.fan.rays else 0
    fan = Fan.build(
        fan_rank,
        [v for _, v in desc.fan.rays],
        [[names.index(n) for n in c] for c in desc.fan.maximal_cones],
    )
    marking = DivisorMarking({label: names.index(ray) for label, ray in desc.fan.marking})
    spec = SplittingSpec({label: Split(parts, meet) for label, parts, meet in desc.fan.splitting})
    return fan, marking, spec


def derive_strata(desc):
    """Label-set strata of the description, before the implicit additions.

    Fan-derived strata may raise :class:`orbitspace.toric.UnsupportedInput`.
    """
    if desc.strata is not None:
        return {frozenset(s) for s in desc.strata}
    if desc.fan is None:
        return {frozenset()}
    fan, marking, spec = build_fan(desc)
    problems = validate_fan(fan)
    if problems:
        raise ProblemError([Issue("invalid-fan", "/fan", p) for p in problems])
    strata = occurring_strata(fan, marking)
    if spec.splits:
        try:
            strata = apply_splitting(strata, spec)
        except KeyError as exc:
            raise ProblemError([Issue("unknown-label", "/splitting", exc.args[0])]) from None
    return strata


def build(desc):
    """``(PPDivisor, Stratification)`` for a parsed description."""
    tail = Cone.from_generators(desc.tail_rays, desc.rank)
    divisor = PPDivisor(tail, [(label, Polyhedron(verts, tail)) for label, verts in desc.coefficients])
    index = {label: i for i, label in enumerate(divisor.labels)}
    issues = []
    strata = []
    for s in derive_strata(desc):
        unknown = [label for label in s if label not in index]
        if unknown:
            issues.append(Issue("unknown-label", "/strata", f"derived stratum uses unknown label {unknown[0]!r}"))
            continue
        strata.append({index[label] for label in s})
    if issues:
        raise ProblemError(issues)
    idents = [
        Identification(
            frozenset(index[x] for x in a),
            frozenset(index[x] for x in b),
            Cone.from_generators(rays, desc.rank),
        )
        for a, b, rays in desc.identifications
    ]
    for ident in idents:
        for side in (ident.stratum_a, ident.stratum_b):
            if len(side) > 1 and side not in {frozenset(s) for s in strata}:
                issues.append(Issue("unknown-label", "/identifications", f"stratum {sorted(divisor.labels[i] for i in side)} does not occur"))
    if issues:
        raise ProblemError(issues)
    try:
        return divisor, Stratification.build(len(divisor), strata, idents)
    except GeometryError as exc:
        raise ProblemError([Issue("schema", "/", str(exc))]) from None
