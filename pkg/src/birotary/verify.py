"""Named verification suites run by `birotary verify`."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .classify import classify
from .constructions import abelian_map, order16_groups, torus_group, torus_order
from .errors import UnknownSuite
from .families import SOLVABLE_LINES, a5_group, a5_pair, identity_check, psl7_pair, solvable_example
from .maps import make_map
from .pclass import is_p1_plus


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def _order16() -> tuple[bool, str]:
    want = {"SD16 (x,y)": ((8, 8), -4), "SD16 (xy,y)": ((4, 8), -2), "M16 (x,y)": ((8, 4), -2)}
    got = {}
    for G, pair, label in order16_groups():
        M = make_map(G, pair.x, pair.y)
        got[label] = (M.type, M.chi)
    return got == want, "; ".join(f"{k}: type {v[0]}, chi {v[1]}" for k, v in got.items())


def _abelian() -> tuple[bool, str]:
    for n in range(1, 51):
        B = make_map(*_pair_args(abelian_map(n, "bouquet")))
        D = make_map(*_pair_args(abelian_map(n, "dipole")))
        if ((B.vertices, B.edges, B.faces, B.chi, B.orientable) != (1, n, n, 1, False)
                or (D.vertices, D.edges, D.faces, D.chi, D.orientable) != (2, n, n, 2, True)):
            return False, f"mismatch at n = {n}"
    return True, "bouquets and dipoles for n <= 50"


def _pair_args(built):
    G, pair = built
    return G, pair.x, pair.y


def _torus() -> tuple[bool, str]:
    done = []
    for f in range(1, 7):
        for eps in (0, 1):
            if torus_order(f, eps) > 20000:
                continue
            G, pair = torus_group(f, eps)
            M = make_map(G, pair.x, pair.y)
            if M.order != torus_order(f, eps) or M.type != (4, 4) or M.chi != 0:
                return False, f"torus({f},{eps}) gives order {M.order}, type {M.type}, chi {M.chi}"
            done.append(f"({f},{eps})")
    return True, "type (4,4), chi 0 for " + ", ".join(done)


def _a5() -> tuple[bool, str]:
    pair = a5_pair()
    G = a5_group()
    M = make_map(G, pair.x, pair.y)
    c = classify(G, pair.x, pair.y, 2)
    return M.chi == -4 and c.case == "ii", f"chi {M.chi}, case {c.case}"


def _psl7() -> tuple[bool, str]:
    G, pair = psl7_pair()
    M = make_map(G, pair.x, pair.y)
    ok = (M.k, pair.commutator.order(), M.chi) == (3, 4, -7) and is_p1_plus(G, pair.x, pair.y, 7)
    return ok, f"type {M.type}, chi {M.chi}"


def _identities() -> tuple[bool, str]:
    bad = []
    for fam in SOLVABLE_LINES:
        for f in (1, 2):
            rep = identity_check(fam, f)
            if fam == "line1":
                if rep.passed or not rep.flagged_discrepancies:
                    bad.append(f"{fam}({f}) should flag the exponent")
            elif not rep.passed:
                bad.append(f"{fam}({f})")
    return not bad, "lines 2-7 pass, line 1 flags its exponent" if not bad else ", ".join(bad)


def _pipeline() -> tuple[bool, str]:
    out = []
    ok = True
    for line, p, row in ((1, 23, 1), (3, 2, 3)):
        inst = solvable_example(line, 1)
        c = classify(inst.group, inst.pair.x, inst.pair.y, p)
        s = c.solvable
        good = s is not None and s.row == row and s.formula_type == s.computed_type
        ok &= good
        out.append(f"line{line}: row {c.row}, type {s.computed_type if s else None}")
    return ok, "; ".join(out)


SUITES = {
    "paper-examples": [
        ("order-16 trio", _order16),
        ("bouquets and dipoles", _abelian),
        ("torus family", _torus),
        ("A5 example", _a5),
        ("PSL(2,7) example", _psl7),
        ("solvable identities", _identities),
        ("solvable pipeline", _pipeline),
    ],
}
SUITES["examples"] = SUITES["paper-examples"]
SUITES["quick"] = [c for c in SUITES["paper-examples"] if c[0] in ("order-16 trio", "A5 example")]


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    results = []
    for label, check in SUITES[name]:
        t0 = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as exc:  # a crash is a failed check, reported like any other
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(label, passed, detail, time.perf_counter() - t0))
    return results
