"""JSON space files: carrier, named soft sets, a topology and an ideal.

Schema::

    {
      "universe":   ["x", "y", "z"],
      "parameters": ["alpha", "beta"],
      "sets":       {"R1": {"alpha": ["x"], "beta": ["y"]}, ...},
      "topology":   {"opens": [...]} | {"subbase": [...]},
      "ideal":      {"top": ref} | {"generators": [...]} | {"family": [...]}
    }

A set reference is a name from ``sets``, one of the reserved names ``Phi``
and ``X`` (null and absolute set), a fiber map object, or a textual literal
such as ``"{alpha: {x}, beta: {}}"``.  ``topology`` and ``ideal`` are optional.
"""

from __future__ import annotations

import json
from importlib import resources
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import Carrier, SoftSet, make_soft_set, parse_soft_set
from .errors import InputError
from .ideal import IdealVerdict, SoftIdeal, ideal_from_generators, validate_ideal_family
from .topology import (
    SoftTopology,
    TopologyVerdict,
    generate_from_subbase,
    validate_topology,
)

RESERVED = ("Phi", "X")


@dataclass
class SpaceBundle:
    carrier: Carrier
    sets: dict[str, SoftSet]
    topology_source: str | None = None  # "opens" | "subbase"
    topology_family: list[SoftSet] = field(default_factory=list)
    topology_verdict: TopologyVerdict | None = None
    topology: SoftTopology | None = None
    ideal_source: str | None = None  # "top" | "generators" | "family"
    ideal_family: list[SoftSet] = field(default_factory=list)
    ideal_verdict: IdealVerdict | None = None
    ideal: SoftIdeal | None = None

    def resolve(self, name: str) -> SoftSet:
        if name == "Phi":
            return self.carrier.null()
        if name == "X":
            return self.carrier.absolute()
        try:
            return self.sets[name]
        except KeyError:
            raise InputError(f"unresolved set name {name!r}") from None

    @property
    def valid(self) -> bool:
        t_ok = self.topology_verdict is None or self.topology_verdict.valid
        i_ok = self.ideal_verdict is None or self.ideal_verdict.valid
        return t_ok and i_ok


def _ref(bundle: SpaceBundle, ref: Any, where: str) -> SoftSet:
    if isinstance(ref, dict):
        return make_soft_set(bundle.carrier, ref)
    if isinstance(ref, str):
        if ref.strip().startswith("{"):
            return parse_soft_set(bundle.carrier, ref)
        return bundle.resolve(ref)
    raise InputError(f"{where}: set reference must be a name, literal or fiber map, got {ref!r}")


def _labels(data: dict, key: str) -> list[str]:
    value = data.get(key)
    if not isinstance(value, list) or not all(isinstance(v, (str, int)) for v in value):
        raise InputError(f"'{key}' must be a list of labels")
    return [str(v) for v in value]


def bundle_from_dict(data: Any) -> SpaceBundle:
    if not isinstance(data, dict):
        raise InputError("space file must contain a JSON object")
    unknown = set(data) - {"universe", "parameters", "sets", "topology", "ideal"}
    if unknown:
        raise InputError(f"unknown top-level keys: {', '.join(sorted(unknown))}")
    carrier = Carrier(tuple(_labels(data, "universe")), tuple(_labels(data, "parameters")))
    bundle = SpaceBundle(carrier, {})
    raw_sets = data.get("sets", {})
    if not isinstance(raw_sets, dict):
        raise InputError("'sets' must be an object mapping names to fiber maps")
    for name, fibers in raw_sets.items():
        if name in RESERVED:
            raise InputError(f"set name {name!r} is reserved")
        if not isinstance(fibers, (dict, str)):
            raise InputError(f"set {name!r}: expected a fiber map")
        try:
            bundle.sets[name] = _ref(bundle, fibers, f"set {name!r}")
        except InputError as exc:
            raise InputError(f"set {name!r}: {exc}") from None

    topo = data.get("topology")
    if topo is not None:
        if not isinstance(topo, dict) or len(topo) != 1 or next(iter(topo)) not in ("opens", "subbase"):
            raise InputError("'topology' must be {\"opens\": [...]} or {\"subbase\": [...]}")
        source, refs = next(iter(topo.items()))
        if not isinstance(refs, list):
            raise InputError(f"topology {source} must be a list")
        family = [_ref(bundle, r, f"topology {source}") for r in refs]
        bundle.topology_source = source
        bundle.topology_family = family
        if source == "opens":
            bundle.topology_verdict = validate_topology(family, carrier)
            if bundle.topology_verdict.valid:
                bundle.topology = SoftTopology.from_opens(carrier, family)
        else:
            bundle.topology = generate_from_subbase(carrier, family)
            bundle.topology_verdict = validate_topology(bundle.topology.opens, carrier)

    ideal = data.get("ideal")
    if ideal is not None:
        if not isinstance(ideal, dict) or len(ideal) != 1 or \
                next(iter(ideal)) not in ("top", "generators", "family"):
            raise InputError("'ideal' must have exactly one of 'top', 'generators', 'family'")
        source, value = next(iter(ideal.items()))
        bundle.ideal_source = source
        if source == "top":
            top = _ref(bundle, value, "ideal top")
            bundle.ideal = SoftIdeal(carrier, top)
            bundle.ideal_verdict = IdealVerdict(True, top=top)
        else:
            if not isinstance(value, list):
                raise InputError(f"ideal {source} must be a list")
            family = [_ref(bundle, r, f"ideal {source}") for r in value]
            bundle.ideal_family = family
            if source == "generators":
                bundle.ideal = ideal_from_generators(carrier, family)
                bundle.ideal_verdict = IdealVerdict(True, top=bundle.ideal.top)
            else:
                bundle.ideal_verdict = validate_ideal_family(family, carrier)
                if bundle.ideal_verdict.valid:
                    bundle.ideal = SoftIdeal(carrier, bundle.ideal_verdict.top)
    return bundle


def _line_col(text: str, pos: int) -> str:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return f"line {line}, column {col}"


def loads(text: str) -> SpaceBundle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at {_line_col(text, exc.pos)}: {exc.msg}") from None
    return bundle_from_dict(data)


def parse_space_file(path) -> SpaceBundle:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def fixture_names() -> list[str]:
    """Names of the space files shipped in ``softcluster/fixtures``."""
    root = resources.files("softcluster") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str):
    """Path of a shipped space file, given with or without the ``.json`` suffix."""
    stem = name[:-5] if name.endswith(".json") else name
    if stem not in fixture_names():
        raise InputError(f"no shipped fixture {name!r}; known: {', '.join(fixture_names())}")
    return resources.files("softcluster") / "fixtures" / f"{stem}.json"


def bundle_to_dict(bundle: SpaceBundle) -> dict:
    """Canonical dictionary form; ``bundle_from_dict`` inverts it."""
    out: dict[str, Any] = {
        "universe": list(bundle.carrier.universe),
        "parameters": list(bundle.carrier.parameters),
        "sets": {name: s.to_fiber_map() for name, s in bundle.sets.items()},
    }
    if bundle.topology_source is not None:
        out["topology"] = {bundle.topology_source: [str(s) for s in bundle.topology_family]}
    if bundle.ideal_source == "top":
        out["ideal"] = {"top": str(bundle.ideal.top)}
    elif bundle.ideal_source is not None:
        out["ideal"] = {bundle.ideal_source: [str(s) for s in bundle.ideal_family]}
    return out


def dumps(bundle: SpaceBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), indent=2, ensure_ascii=False)


def sample_to_dict(sample) -> dict:
    """Space-file form of a harness sample (opens listed explicitly, ideal by top)."""
    return {
        "universe": list(sample.carrier.universe),
        "parameters": list(sample.carrier.parameters),
        "sets": {},
        "topology": {"opens": [str(s) for s in sample.topology.opens]},
        "ideal": {"top": str(sample.ideal.top)},
    }


def sample_from_dict(data: dict):
    from .harness.spaces import SpaceSample

    bundle = bundle_from_dict(data)
    if bundle.topology is None or bundle.ideal is None:
        raise InputError("sample needs a valid topology and ideal")
    return SpaceSample(bundle.carrier, bundle.topology, bundle.ideal, "deserialized")
