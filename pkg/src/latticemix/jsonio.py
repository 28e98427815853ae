"""JSON documents for polygons, diagram sections and Plücker verdicts.

Each ``*_to_json`` has a matching ``*_from_json``; ``to(from(doc)) == doc``
holds for every document the writers produce.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from .diagram import DiagramTriple, SectionBounds, SectionStatus, SectionVerdict, section_bounds
from .exactgeom import LatticePolygon
from .mixedarea import MixedAreaReport
from .pluecker import (
    GapExclusion,
    NonRealizabilityCertificate,
    PlueckerStatus,
    PlueckerVector,
    RealizabilityStatus,
    RealizabilityVerdict,
    RealizationWitness,
    StatusKind,
)


class FormatError(ValueError):
    """A document does not have the expected shape."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _need(doc: dict, *keys: str) -> None:
    if not isinstance(doc, dict):
        raise FormatError(f"expected a JSON object, got {type(doc).__name__}")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise FormatError(f"missing keys {missing}")


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"expected an integer, got {x!r}")
    return x


# -- polygons -----------------------------------------------------------------------

def polygon_to_json(P: LatticePolygon) -> dict:
    return {"vertices": [[x, y] for x, y in P.vertices]}


def polygon_from_json(doc) -> LatticePolygon:
    """Accepts ``{"vertices": [...]}`` or a bare list of points; canonicalizes."""
    pts = doc["vertices"] if isinstance(doc, dict) and "vertices" in doc else doc
    if not isinstance(pts, list) or not pts:
        raise FormatError("a polygon needs a non-empty list of vertices")
    out = []
    for p in pts:
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"vertex {p!r} is not a pair")
        out.append((_int(p[0]), _int(p[1])))
    return LatticePolygon(out)


def report_to_json(r: MixedAreaReport) -> dict:
    return r.to_json()


def report_from_json(doc) -> MixedAreaReport:
    _need(doc, "value", "agreement", "polarization", "support")
    r = MixedAreaReport(_int(doc["value"]), _int(doc["polarization"]), _int(doc["support"]))
    if r.method_agreement != doc["agreement"]:
        raise FormatError("agreement flag contradicts the recorded values")
    return r


# -- diagram sections ----------------------------------------------------------------

def bounds_to_json(b: SectionBounds) -> dict:
    return b.to_json()


def _bounds_from_json(doc, w1: int, w2: int) -> SectionBounds:
    _need(doc, "d", "alpha", "beta")
    b = section_bounds(w1, w2)
    if b.to_json() != {k: doc[k] for k in ("d", "alpha", "beta")}:
        raise FormatError(f"bounds {doc} do not match widths ({w1}, {w2})")
    return b


@dataclass
class SectionEntry:
    v: int
    status: SectionStatus
    witness: Optional[tuple[LatticePolygon, LatticePolygon]] = None
    search: Optional[dict] = None


@dataclass
class SectionReport:
    w1: int
    w2: int
    bounds: SectionBounds
    values: list[SectionEntry] = field(default_factory=list)

    @classmethod
    def from_verdicts(cls, w1: int, w2: int, verdicts: Sequence[SectionVerdict]) -> SectionReport:
        return cls(w1, w2, section_bounds(w1, w2),
                   [SectionEntry(x.triple.v, x.status, x.witness, x.search) for x in verdicts])


def section_report_to_json(rep: SectionReport) -> dict:
    values = []
    for e in rep.values:
        item = {"v": e.v, "status": e.status.value,
                "witness": None if e.witness is None else
                {"P": polygon_to_json(e.witness[0]), "Q": polygon_to_json(e.witness[1])}}
        if e.search is not None:
            item["search"] = dict(e.search)
        values.append(item)
    return {"w1": rep.w1, "w2": rep.w2, "bounds": bounds_to_json(rep.bounds), "values": values}


def section_report_from_json(doc) -> SectionReport:
    _need(doc, "w1", "w2", "bounds", "values")
    w1, w2 = _int(doc["w1"]), _int(doc["w2"])
    rep = SectionReport(w1, w2, _bounds_from_json(doc["bounds"], w1, w2))
    for item in doc["values"]:
        _need(item, "v", "status", "witness")
        try:
            status = SectionStatus(item["status"])
        except ValueError:
            raise FormatError(f"unknown section status {item['status']!r}") from None
        wit = item["witness"]
        pair = None if wit is None else (polygon_from_json(wit["P"]), polygon_from_json(wit["Q"]))
        rep.values.append(SectionEntry(_int(item["v"]), status, pair, item.get("search")))
    return rep


# -- Plücker vectors and verdicts -------------------------------------------------------

def pluecker_to_json(v: PlueckerVector) -> dict:
    return {"v": list(v.as_tuple())}


def pluecker_from_json(doc) -> PlueckerVector:
    vals = doc["v"] if isinstance(doc, dict) and "v" in doc else doc
    if not isinstance(vals, list) or len(vals) != 6:
        raise FormatError("a Plücker vector is a list of six integers")
    try:
        return PlueckerVector(*(_int(x) for x in vals))
    except ValueError as e:
        raise FormatError(str(e)) from None


def status_to_json(v: PlueckerVector, st: PlueckerStatus) -> dict:
    return {"v": list(v.as_tuple()), "status": st.kind.value,
            "products": list(st.products), "equalities": list(st.equalities)}


def status_from_json(doc) -> tuple[PlueckerVector, PlueckerStatus]:
    _need(doc, "v", "status", "products", "equalities")
    v = pluecker_from_json(doc)
    st = PlueckerStatus(StatusKind(doc["status"]), tuple(doc["products"]), tuple(doc["equalities"]))
    return v, st


def certificate_to_json(c: NonRealizabilityCertificate) -> dict:
    (a, b), (x, y) = c.escape
    return {
        "v": list(c.v.as_tuple()),
        "unitEdge": list(c.unit_edge),
        "triangleEscapeRefuted": {"first": [a, b], "second": [x, y]},
        "gapExclusions": [{"triple": list(g.triple), "bounds": bounds_to_json(g.bounds)}
                          for g in c.gap_exclusions],
    }


def certificate_from_json(doc) -> NonRealizabilityCertificate:
    _need(doc, "v", "unitEdge", "triangleEscapeRefuted", "gapExclusions")
    esc = doc["triangleEscapeRefuted"]
    _need(esc, "first", "second")
    gaps = []
    for g in doc["gapExclusions"]:
        _need(g, "triple", "bounds")
        t = DiagramTriple(*(_int(x) for x in g["triple"]))
        gaps.append(GapExclusion(t, _bounds_from_json(g["bounds"], t.w1, t.w2)))
    if len(gaps) != 2:
        raise FormatError("a certificate carries exactly two gap exclusions")
    cert = NonRealizabilityCertificate(
        pluecker_from_json(doc), tuple(doc["unitEdge"]),
        (tuple(esc["first"]), tuple(esc["second"])), tuple(gaps))
    if not cert.check():
        raise FormatError("certificate does not re-verify")
    return cert


def witness_to_json(w: RealizationWitness) -> dict:
    return {f"P{i}": polygon_to_json(P) for i, P in enumerate(w.polygons, start=1)}


def verdict_to_json(r: RealizabilityVerdict) -> dict:
    return {
        "v": list(r.v.as_tuple()),
        "status": r.status.value,
        "method": r.method,
        "witness": None if r.witness is None else witness_to_json(r.witness),
        "certificate": None if r.certificate is None else certificate_to_json(r.certificate),
        "searchBudget": None if r.search_budget is None else dict(r.search_budget),
    }


def verdict_from_json(doc) -> RealizabilityVerdict:
    """Parse a verdict; a witness is re-verified on load."""
    from .pluecker import make_witness

    _need(doc, "v", "status", "witness", "certificate", "searchBudget")
    v = pluecker_from_json(doc)
    wit = doc["witness"]
    witness = None
    if wit is not None:
        polys = [polygon_from_json(wit[f"P{i}"]) for i in range(1, 5)]
        witness = make_witness(polys, v.as_tuple())
    cert = None if doc["certificate"] is None else certificate_from_json(doc["certificate"])
    return RealizabilityVerdict(v, RealizabilityStatus(doc["status"]), witness, cert,
                                doc["searchBudget"], doc.get("method", ""))
