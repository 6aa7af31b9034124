"""Rotary pairs up to map isomorphism, and catalog scans for prescribed Euler characteristic."""
from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import automorphisms
from .errors import BirotaryError, CapExceeded, ParseError
from .maps import RotaryPair, make_map, maps_isomorphic, negative_prime_power
from .perm import Permutation, PermutationGroup, default_cap, generate

CSV_COLUMNS = ["group", "order", "k", "m", "chi", "orientable", "p", "n", "orbit_size", "x", "y", "status"]


def enumerate_rotary_pairs(G: PermutationGroup, cap: int | None = None) -> list[RotaryPair]:
    """Every (x, y) with |y| = 2 and <x, y> = G, ordered by (x, y) as image tuples."""
    G.materialize(cap)
    n = G.order()
    elems = sorted(G.elements)
    invs = [g for g in elems if g.order() == 2]
    out = []
    for x in elems:
        for y in invs:
            if generate([x, y], G.degree, cap=n).order() == n:
                out.append(RotaryPair(x, y))
    return out


def _key(pair: RotaryPair) -> tuple:
    return (tuple(pair.x), tuple(pair.y))


@dataclass
class PairOrbit:
    representative: RotaryPair
    members: list[RotaryPair]
    k: int
    m: int
    chi: int
    orientable: bool

    @property
    def size(self) -> int:
        return len(self.members)


def pair_orbits(G: PermutationGroup, pairs: list[RotaryPair], verify: bool = True) -> list[PairOrbit]:
    """Partition pairs under the diagonal action of Aut(G).

    Each orbit is represented by its lexicographically least pair; the
    map invariants are checked to be constant along the orbit.
    """
    auts = automorphisms(G)
    tables = [a.table for a in auts]
    remaining = {_key(p): p for p in pairs}
    orbits = []
    for key in sorted(remaining):
        if key not in remaining:
            continue
        pair = remaining[key]
        images = {}
        for t in tables:
            img = RotaryPair(t[pair.x], t[pair.y])
            images[_key(img)] = img
        members = [images[k] for k in sorted(images)]
        for k in images:
            remaining.pop(k, None)
        rep = members[0]
        M = make_map(G, rep.x, rep.y)
        if verify:
            for other in members[1:]:
                M2 = make_map(G, other.x, other.y)
                if (M2.k, M2.m, M2.chi, M2.orientable) != (M.k, M.m, M.chi, M.orientable):
                    raise BirotaryError("map invariants are not constant on an automorphism orbit")
        orbits.append(PairOrbit(rep, members, M.k, M.m, M.chi, M.orientable))
    return orbits


@dataclass
class CensusRecord:
    group: str
    order: int | None
    x: Permutation | None = None
    y: Permutation | None = None
    k: int | None = None
    m: int | None = None
    chi: int | None = None
    orientable: bool | None = None
    prime_power: tuple[int, int] | None = None
    orbit_size: int | None = None
    classification: str | None = None
    status: str = "ok"
    merged_with: list[str] = field(default_factory=list)

    def sort_key(self) -> tuple:
        return (self.order or 0, self.chi if self.chi is not None else 0, self.k or 0, self.m or 0,
                tuple(self.x or ()), tuple(self.y or ()), self.group)

    def row(self) -> dict:
        pp = self.prime_power
        return {"group": self.group, "order": self.order, "k": self.k, "m": self.m, "chi": self.chi,
                "orientable": self.orientable, "p": pp[0] if pp else None, "n": pp[1] if pp else None,
                "orbit_size": self.orbit_size,
                "x": " ".join(map(str, self.x)) if self.x is not None else None,
                "y": " ".join(map(str, self.y)) if self.y is not None else None,
                "status": self.status}

    def to_dict(self) -> dict:
        out = self.row()
        out["x"] = list(self.x) if self.x is not None else None
        out["y"] = list(self.y) if self.y is not None else None
        out["xCycles"] = self.x.cycle_string() if self.x is not None else None
        out["yCycles"] = self.y.cycle_string() if self.y is not None else None
        out["classification"] = self.classification
        out["mergedWith"] = list(self.merged_with)
        return out


# chi filters

def chi_filter(spec: str):
    """'all', 'negative', 'prime-power', 'prime-power:<p>', 'chi=<int>', 'chi<0' style comparisons."""
    spec = spec.strip().replace(" ", "")
    if spec in ("all", ""):
        return lambda chi: True
    if spec == "negative":
        return lambda chi: chi < 0
    if spec == "prime-power":
        return lambda chi: negative_prime_power(chi) is not None
    m = re.fullmatch(r"prime-power:(\d+)", spec)
    if m:
        p = int(m.group(1))
        return lambda chi: (negative_prime_power(chi) or (None,))[0] == p
    m = re.fullmatch(r"chi(<=|>=|=|<|>)(-?\d+)", spec)
    if m:
        op, v = m.group(1), int(m.group(2))
        return {"=": lambda c: c == v, "<": lambda c: c < v, ">": lambda c: c > v,
                "<=": lambda c: c <= v, ">=": lambda c: c >= v}[op]
    raise ParseError(f"unknown chi filter {spec!r}")


def _summary(G: PermutationGroup, pair: RotaryPair, pp) -> str | None:
    if pp is None:
        return None
    from .classify import classify
    try:
        c = classify(G, pair.x, pair.y, pp[0])
    except BirotaryError as exc:
        return f"error: {type(exc).__name__}"
    if c.branch == "solvable":
        return f"solvable row {c.row}"
    if c.branch == "nonsolvable":
        return f"nonsolvable case {c.case}"
    return c.branch + (f" ({c.tag})" if c.tag else "")


def scan_group(name: str, G: PermutationGroup, keep, cap: int | None = None,
               classify_records: bool = False) -> list[CensusRecord]:
    """Records for the orbits of one group whose chi passes the filter."""
    limit = default_cap() if cap is None else cap
    try:
        G.materialize(limit)
    except CapExceeded as exc:
        return [CensusRecord(name, exc.found, status="skipped(cap)")]
    # an already materialized group skips the closure, so compare directly
    if G.order() > limit:
        return [CensusRecord(name, G.order(), status="skipped(cap)")]
    pairs = enumerate_rotary_pairs(G, cap)
    n = G.order()
    # chi depends only on |x| and |[x,y]|, so filter before the orbit computation
    wanted = []
    for pr in pairs:
        k, m = pr.x.order(), 2 * pr.commutator.order()
        if keep(n // k - n // 2 + n // m):
            wanted.append(pr)
    out = []
    for orb in pair_orbits(G, wanted):
        pp = negative_prime_power(orb.chi)
        rec = CensusRecord(name, n, orb.representative.x, orb.representative.y, orb.k, orb.m, orb.chi,
                           orb.orientable, pp, orb.size)
        if classify_records:
            rec.classification = _summary(G, orb.representative, pp)
        out.append(rec)
    return out


def _scan_spec(args) -> list[CensusRecord]:
    spec, filter_spec, cap, classify_records = args
    from .groupio import parse_construction
    try:
        built = parse_construction(spec, cap=cap)
    except CapExceeded as exc:
        return [CensusRecord(spec, exc.found, status="skipped(cap)")]
    return scan_group(spec, built.group, chi_filter(filter_spec), cap, classify_records)


def merge_isomorphic(records: list[CensusRecord], groups: dict[str, PermutationGroup]) -> None:
    """Note records from different groups whose maps are isomorphic via a pinned isomorphism."""
    ok = [r for r in records if r.status == "ok"]
    for i, r in enumerate(ok):
        for s in ok[i + 1:]:
            if r.group == s.group or (r.order, r.k, r.m, r.chi) != (s.order, s.k, s.m, s.chi):
                continue
            M1 = make_map(groups[r.group], r.x, r.y)
            M2 = make_map(groups[s.group], s.x, s.y)
            if maps_isomorphic(M1, M2) is not None:
                r.merged_with.append(s.group)
                s.merged_with.append(r.group)


def census_scan(catalog, filter_spec: str = "all", cap: int | None = None, jobs: int = 1,
                classify_records: bool = False, merge: bool = False) -> list[CensusRecord]:
    """Scan catalog entries, either construction strings or (name, group) pairs.

    A group over the cap yields a single 'skipped(cap)' record and the scan
    goes on.  Output order is independent of jobs.
    """
    keep = chi_filter(filter_spec)
    records: list[CensusRecord] = []
    groups: dict[str, PermutationGroup] = {}
    if jobs > 1 and all(isinstance(e, str) for e in catalog):
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for recs in pool.map(_scan_spec, [(e, filter_spec, cap, classify_records) for e in catalog]):
                records.extend(recs)
        if merge:
            from .groupio import parse_construction
            names = {r.group for r in records if r.status == "ok"}
            groups = {e: parse_construction(e, cap=cap).group for e in catalog if e in names}
    else:
        from .groupio import parse_construction
        for entry in catalog:
            if isinstance(entry, str):
                try:
                    G = parse_construction(entry, cap=cap).group
                except CapExceeded as exc:
                    records.append(CensusRecord(entry, exc.found, status="skipped(cap)"))
                    continue
                name = entry
            else:
                name, G = entry
            groups[name] = G
            records.extend(scan_group(name, G, keep, cap, classify_records))
    records.sort(key=CensusRecord.sort_key)
    if merge:
        merge_isomorphic(records, groups)
    return records


def records_to_csv(records: list[CensusRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow({k: ("" if v is None else v) for k, v in r.row().items()})
    return buf.getvalue()


def records_to_json(records: list[CensusRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2, sort_keys=True)
