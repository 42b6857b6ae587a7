"""
Knot catalog and the exceptional-slope pipeline.

Records come from JSON files (see ``data/``).  A record is either concrete,
with a fixed list of exceptional slopes, or parametric: its family and
slopes are affine expressions in integer parameters such as ``"2n+1"`` or
``"4n+6"``, subject to per-parameter constraints.  The pipeline decides
parametric records exactly by solving the affine equations instead of
sampling parameter values.

Schema of one record (optional keys may be omitted)::

    {"name": "M(-1/2,1/3,2/7)",
     "family": {"type": "montesinos", "fractions": ["-1/2", "1/3", "2/7"]},
     "genus": 2,
     "alexander": [[-2, 1], [-1, -1], [0, 1], [1, -1], [2, 1]],
     "v3": -5,
     "amphicheiral": false,
     "exceptional_slopes": ["-2", "-1", "0", "1"],
     "surgery_manifolds": {"-1": {"base": "sphere", "fibers": [[3, 1], [4, 1], [7, -4]]}},
     "slope_provenance": "..."}

Parametric records add ``"parameters": {"n": {"exclude": [...],
"abs_gt": 2, "parity": "even"}}`` and write family entries and slopes as
affine strings.  A file holds either a bare list of records or
``{"catalog_version": ..., "description": ..., "records": [...]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import count

from .alexander import (LaurentPolynomial, NotLSpaceForm, is_symmetric_normalized,
                        lspace_gaps)
from .obstructions import THM3_SLOPES, thm3_enumerate
from .seifert import Chirality, SeifertData, sfs_chiral_compare
from .slopes import Slope, SlopePair, mirror, parse_slope, reduce

__all__ = [
    "CatalogError",
    "Affine",
    "Family",
    "ParamConstraint",
    "KnotRecord",
    "Catalog",
    "load_catalog",
    "dump_catalog",
    "bundled_catalog",
    "alternating_exceptional_slopes",
    "CandidateReport",
    "PipelineReport",
    "chirally_cosmetic_candidates",
    "thm4_pipeline",
]

BUNDLED_FILES = ("table1.json", "alternating.json", "toroidal.json")

FAMILY_KEYS = {
    "torus": ("p", "q"),
    "two_bridge": ("b_list",),
    "pretzel": ("q_list",),
    "montesinos": ("fractions",),
    "figure_eight": (),
    "other": (),
}

RECORD_KEYS = ("name", "family", "parameters", "genus", "alexander", "v3",
               "amphicheiral", "exceptional_slopes", "surgery_manifolds",
               "slope_provenance")


class CatalogError(ValueError):
    pass


_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?([a-z]\w*)?")


@dataclass(frozen=True)
class Affine:
    """const + sum coeff * param, with rational coefficients."""

    const: Fraction
    coeffs: tuple = ()  # sorted (name, coefficient) pairs, no zeros

    @classmethod
    def parse(cls, text):
        if isinstance(text, int):
            return cls(Fraction(text))
        s = str(text).replace(" ", "")
        if not s:
            raise ValueError("empty expression")
        const = Fraction(0)
        coeffs = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse affine expression {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing operator in {text!r}")
            c = sign * Fraction(m.group(2) or 1)
            if m.group(3):
                coeffs[m.group(3)] = coeffs.get(m.group(3), 0) + c
            else:
                const += c
            pos = m.end()
        return cls(const, tuple(sorted((k, v) for k, v in coeffs.items() if v)))

    @property
    def params(self):
        return {k for k, _ in self.coeffs}

    def coefficient(self, name):
        return dict(self.coeffs).get(name, Fraction(0))

    def evaluate(self, env):
        return self.const + sum((c * env[k] for k, c in self.coeffs), Fraction(0))


@dataclass(frozen=True)
class ParamConstraint:
    exclude: tuple = ()
    abs_gt: int | None = None
    parity: str | None = None

    @classmethod
    def from_json(cls, obj):
        parity = obj.get("parity")
        if parity not in (None, "even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
        return cls(tuple(obj.get("exclude", ())), obj.get("abs_gt"), parity)

    def to_json(self):
        out = {}
        if self.exclude:
            out["exclude"] = list(self.exclude)
        if self.abs_gt is not None:
            out["abs_gt"] = self.abs_gt
        if self.parity is not None:
            out["parity"] = self.parity
        return out

    def allows(self, v):
        if Fraction(v).denominator != 1:
            return False
        v = int(v)
        if v in self.exclude:
            return False
        if self.abs_gt is not None and abs(v) <= self.abs_gt:
            return False
        if self.parity == "even" and v % 2:
            return False
        if self.parity == "odd" and v % 2 == 0:
            return False
        return True

    def witness(self):
        # every constraint set here excludes finitely many values per parity class
        for k in count():
            for v in (k, -k):
                if self.allows(v):
                    return v


@dataclass(frozen=True)
class Family:
    kind: str
    fields: dict = field(default_factory=dict, hash=False)

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "type" not in obj:
            raise ValueError("family must be an object with a 'type'")
        kind = obj["type"]
        if kind not in FAMILY_KEYS:
            raise ValueError(f"unknown family type {kind!r}")
        missing = [k for k in FAMILY_KEYS[kind] if k not in obj]
        if missing:
            raise ValueError(f"family {kind} is missing {missing}")
        return cls(kind, {k: v for k, v in obj.items() if k != "type"})

    def to_json(self):
        return {"type": self.kind, **self.fields}

    def entries(self):
        """The family's parameter list as affine expressions."""
        if self.kind == "torus":
            raw = [self.fields["p"], self.fields["q"]]
        elif self.kind in ("two_bridge", "pretzel", "montesinos"):
            raw = self.fields[FAMILY_KEYS[self.kind][0]]
        else:
            raw = []
        return [Affine.parse(x) for x in raw]


@dataclass(frozen=True)
class KnotRecord:
    name: str
    family: Family
    exceptional_slopes: tuple = ()
    slope_templates: tuple = ()  # raw strings, parametric records only
    parameters: dict = field(default_factory=dict, hash=False)
    genus: int | None = None
    alexander: LaurentPolynomial | None = None
    v3: int | None = None
    amphicheiral: bool | None = None
    surgery_manifolds: dict = field(default_factory=dict, hash=False)
    slope_provenance: str = ""

    @property
    def is_parametric(self):
        return bool(self.parameters)

    @property
    def templates(self):
        return tuple(Affine.parse(t) for t in self.slope_templates)

    def validate(self):
        if self.is_parametric:
            templates = self.templates
            used = set().union(set(), *(t.params for t in templates))
            used |= set().union(set(), *(e.params for e in self.family.entries()))
            unknown = used - set(self.parameters)
            if unknown:
                raise CatalogError(f"undeclared parameters {sorted(unknown)}")
            if len(set(templates)) != len(templates):
                raise CatalogError("duplicate slope templates")
            return
        slopes = self.exceptional_slopes
        if len(set(slopes)) != len(slopes):
            raise CatalogError("duplicate exceptional slopes")
        if self.amphicheiral:
            missing = [s for s in slopes if mirror(s) not in slopes]
            if missing:
                raise CatalogError(
                    "amphicheiral knot with asymmetric slopes: "
                    f"{', '.join(map(str, missing))} lack their negatives")
        if self.genus is not None and self.genus < 1:
            raise CatalogError("genus must be positive")
        if self.alexander is not None:
            if not is_symmetric_normalized(self.alexander):
                raise CatalogError("alexander polynomial is not symmetric normalized")
            if self.genus is not None:
                try:
                    gaps = lspace_gaps(self.alexander)
                except NotLSpaceForm:
                    gaps = None
                if gaps is not None and gaps.genus != self.genus:
                    raise CatalogError(
                        f"genus {self.genus} disagrees with top gap {gaps.genus}")
        for key in self.surgery_manifolds:
            if key not in slopes:
                raise CatalogError(f"surgery manifold given for non-exceptional slope {key}")

    def to_json(self):
        out = {"name": self.name, "family": self.family.to_json()}
        if self.parameters:
            out["parameters"] = {k: c.to_json() for k, c in self.parameters.items()}
        if self.genus is not None:
            out["genus"] = self.genus
        if self.alexander is not None:
            out["alexander"] = self.alexander.to_pairs()
        if self.v3 is not None:
            out["v3"] = self.v3
        if self.amphicheiral is not None:
            out["amphicheiral"] = self.amphicheiral
        if self.is_parametric:
            out["exceptional_slopes"] = list(self.slope_templates)
        else:
            out["exceptional_slopes"] = [str(s) for s in self.exceptional_slopes]
        if self.surgery_manifolds:
            out["surgery_manifolds"] = {
                str(k): v.to_json() for k, v in self.surgery_manifolds.items()}
        if self.slope_provenance:
            out["slope_provenance"] = self.slope_provenance
        return out


def _record_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("record must be an object")
    unknown = set(obj) - set(RECORD_KEYS)
    if unknown:
        raise KeyError(sorted(unknown)[0])
    for key in ("name", "family", "exceptional_slopes"):
        if key not in obj:
            raise KeyError(key)

    def checked(key, kind, label):
        v = obj.get(key)
        if v is not None and (not isinstance(v, kind) or isinstance(v, bool) != (kind is bool)):
            raise TypeError(f"{key} must be {label}")
        return v

    name = checked("name", str, "a string")
    family = Family.from_json(obj["family"])
    params = {k: ParamConstraint.from_json(v) for k, v in obj.get("parameters", {}).items()}
    raw_slopes = obj["exceptional_slopes"]
    if not isinstance(raw_slopes, list):
        raise TypeError("exceptional_slopes must be a list")
    alexander = obj.get("alexander")
    kwargs = dict(
        name=name,
        family=family,
        parameters=params,
        genus=checked("genus", int, "an integer"),
        alexander=None if alexander is None else LaurentPolynomial.from_pairs(alexander),
        v3=checked("v3", int, "an integer"),
        amphicheiral=checked("amphicheiral", bool, "a boolean"),
        slope_provenance=checked("slope_provenance", str, "a string") or "",
    )
    if params:
        for s in raw_slopes:
            Affine.parse(s)
        return KnotRecord(slope_templates=tuple(str(s) for s in raw_slopes), **kwargs)
    slopes = tuple(parse_slope(s) for s in raw_slopes)
    manifolds = {parse_slope(k): SeifertData.from_json(v)
                 for k, v in obj.get("surgery_manifolds", {}).items()}
    return KnotRecord(exceptional_slopes=slopes, surgery_manifolds=manifolds, **kwargs)


class Catalog(list):
    """A list of :class:`KnotRecord` plus the file's header fields."""

    def __init__(self, records=(), meta=None):
        super().__init__(records)
        self.meta = dict(meta or {})


def load_catalog(source) -> Catalog:
    """Parse and validate catalog JSON from bytes, text or a binary file object.

    Errors name the record index and the offending field.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"malformed JSON: {exc}") from None
    meta = {}
    if isinstance(data, dict):
        if "records" not in data:
            raise CatalogError("catalog object has no 'records'")
        meta = {k: v for k, v in data.items() if k != "records"}
        data = data["records"]
    if not isinstance(data, list):
        raise CatalogError("catalog must be a list of records")
    out = Catalog(meta=meta)
    for i, obj in enumerate(data):
        try:
            rec = _record_from_json(obj)
        except KeyError as exc:
            raise CatalogError(f"record {i}: field {exc.args[0]!r}: missing or unknown") from None
        except (TypeError, ValueError) as exc:
            raise CatalogError(f"record {i}: {exc}") from None
        try:
            rec.validate()
        except CatalogError as exc:
            raise CatalogError(f"record {i} ({rec.name}): {exc}") from None
        out.append(rec)
    return out


def dump_catalog(catalog) -> str:
    records = [r.to_json() for r in catalog]
    meta = getattr(catalog, "meta", None)
    data = {**meta, "records": records} if meta else records
    return json.dumps(data, indent=2) + "\n"


def _read_bundled(name):
    return resources.files("cosmetic").joinpath("data").joinpath(name).read_bytes()


def bundled_catalog(files=BUNDLED_FILES) -> Catalog:
    out = Catalog(meta={"sources": list(files)})
    for name in files:
        out.extend(load_catalog(_read_bundled(name)))
    return out


# matching concrete families against parametric case records

def _unify(patterns, values, constraints):
    """Solve pattern_i(env) = value_i for single-parameter affine patterns."""
    if len(patterns) != len(values):
        return None
    env = {}
    for pat, val in zip(patterns, values):
        params = pat.params
        if not params:
            if pat.const != val:
                return None
            continue
        if len(params) > 1:
            raise NotImplementedError("family entries with several parameters")
        (name,) = params
        x = (val - pat.const) / pat.coefficient(name)
        if name in env and env[name] != x:
            return None
        env[name] = x
    if set(env) != set(constraints):
        return None
    if not all(constraints[k].allows(v) for k, v in env.items()):
        return None
    return {k: int(v) for k, v in env.items()}


def _family_variants(family):
    values = [e.const for e in family.entries()]
    if family.kind != "pretzel":
        return [values]
    # pretzel knots are unchanged by cyclic permutation and reversal
    out = []
    for seq in (values, values[::-1]):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            if rot not in out:
                out.append(rot)
    return out


def _as_slope(x):
    x = Fraction(x)
    return reduce(x.numerator, x.denominator)


def alternating_exceptional_slopes(family: Family, cases=None):
    """Exceptional slopes of a hyperbolic alternating knot in one of the listed cases.

    ``cases`` defaults to the bundled ``alternating.json``.  Raises
    ValueError when the parameters match no case.
    """
    if isinstance(family, dict):
        family = Family.from_json(family)
    if any(e.params for e in family.entries()):
        raise ValueError("family parameters must be concrete integers")
    if cases is None:
        cases = load_catalog(_read_bundled("alternating.json"))
    for case in cases:
        if case.family.kind != family.kind:
            continue
        if not case.is_parametric:
            if case.family.entries() == family.entries():
                return sorted(case.exceptional_slopes, key=lambda s: s.as_fraction())
            continue
        for values in _family_variants(family):
            env = _unify(case.family.entries(), values, case.parameters)
            if env is not None:
                slopes = {_as_slope(t.evaluate(env)) for t in case.templates}
                return sorted(slopes, key=lambda s: s.as_fraction())
    raise ValueError(f"{family.to_json()} matches no alternating case")


# the pipeline

def _solve_pair(record, ti, tj, r):
    """An assignment with ti = r and tj = -r inside the constraints, or None."""
    params = ti.params | tj.params
    if len(params) > 1:
        raise NotImplementedError(
            f"{record.name}: pairs of slopes depending on several parameters")
    target = r.as_fraction()
    if not params:
        return {} if ti.const == target and tj.const == -target else None
    (name,) = params
    value = None
    for t, goal in ((ti, target), (tj, -target)):
        a = t.coefficient(name)
        if a == 0:
            if t.const != goal:
                return None
            continue
        x = (goal - t.const) / a
        if value is not None and x != value:
            return None
        value = x
    constraint = record.parameters[name]
    if value is None:
        return {name: constraint.witness()}
    return {name: int(value)} if constraint.allows(value) else None


@dataclass
class CandidateReport:
    name: str
    candidates: list = field(default_factory=list)
    filters: list = field(default_factory=list)
    removed: list = field(default_factory=list)
    surviving: list = field(default_factory=list)
    realized: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def survives(self):
        return bool(self.surviving)

    def to_json(self):
        def pr(p):
            return [str(p.first), str(p.second)]
        return {
            "name": self.name,
            "candidates": [pr(p) for p in self.candidates],
            "filters": [{"filter": f, "outcome": o} for f, o in self.filters],
            "removed": [{"pair": pr(p), "reason": why} for p, why in self.removed],
            "surviving": [pr(p) for p in self.surviving],
            "realized": [pr(p) for p in self.realized],
            "witnesses": {f"{p.first},{p.second}": env for p, env in self.witnesses.items()},
        }


def chirally_cosmetic_candidates(k: KnotRecord) -> CandidateReport:
    """Mirror pairs (r, -r) of exceptional slopes that survive every filter."""
    report = CandidateReport(k.name)
    found = {}
    if k.is_parametric:
        for r in THM3_SLOPES:
            templates = k.templates
            for i, ti in enumerate(templates):
                for j, tj in enumerate(templates):
                    if i == j:
                        continue
                    env = _solve_pair(k, ti, tj, r)
                    if env is not None:
                        found.setdefault(SlopePair(r, mirror(r)), env)
    else:
        slopes = set(k.exceptional_slopes)
        for r in THM3_SLOPES:
            if r in slopes and mirror(r) in slopes:
                found[SlopePair(r, mirror(r))] = {}
    pairs = sorted(found, key=lambda p: p.first.as_fraction())
    report.candidates = list(pairs)
    report.witnesses = {p: env for p, env in found.items() if env}
    report.filters.append(
        ("thm3", f"{len(pairs)} mirror pair(s) with r in "
                 f"{{{', '.join(map(str, THM3_SLOPES))}}}"))

    alive = list(pairs)
    if k.v3 is None:
        report.filters.append(("v3", "filter skipped: datum absent"))
    elif k.v3 != 0:
        ones = SlopePair(Slope(1, 1), Slope(-1, 1))
        if ones in alive:
            alive.remove(ones)
            report.removed.append((ones, f"v3 obstruction: v3 = {k.v3} != 0"))
        report.filters.append(("v3", f"v3 = {k.v3} != 0 rules out (1, -1)"))
    else:
        report.filters.append(("v3", "v3 = 0: no obstruction"))

    # runs on every candidate, so a pair may be removed by both routes
    realized = []
    compared = 0
    for pair in pairs:
        a = k.surgery_manifolds.get(pair.first)
        b = k.surgery_manifolds.get(pair.second)
        if a is None or b is None:
            continue
        compared += 1
        verdict = sfs_chiral_compare(a, b)
        if verdict == Chirality.ORIENTATION_REVERSING:
            if pair in alive:
                realized.append(pair)
            continue
        if pair in alive:
            alive.remove(pair)
        report.removed.append((pair, f"surgered manifolds compare as {verdict.value}"))
    report.filters.append(
        ("sfs", f"compared {compared} pair(s)" if compared else "filter skipped: datum absent"))

    if k.amphicheiral is None:
        report.filters.append(("amphicheiral", "filter skipped: datum absent"))
    elif k.amphicheiral:
        realized.extend(p for p in alive if p not in realized)
        report.filters.append(("amphicheiral", "mirror pairs are realized"))
    else:
        report.filters.append(("amphicheiral", "not amphicheiral: no shortcut"))

    report.surviving = alive
    report.realized = sorted(realized, key=lambda p: p.first.as_fraction())
    return report


@dataclass
class PipelineReport:
    entries: list
    survivors: list

    def to_json(self):
        return {
            "survivors": [
                {"name": e.name,
                 "pairs": [[str(p.first), str(p.second)] for p in e.surviving]}
                for e in self.entries if e.survives
            ],
            "entries": [e.to_json() for e in self.entries],
        }


def thm4_pipeline(catalog) -> PipelineReport:
    entries = sorted((chirally_cosmetic_candidates(k) for k in catalog),
                     key=lambda e: e.name)
    allowed = set(thm3_enumerate())
    for e in entries:
        for pair in e.surviving:
            if pair not in allowed:
                raise AssertionError(f"{e.name}: surviving pair {pair} is not admissible")
    return PipelineReport(entries, [e.name for e in entries if e.survives])
