"""Group files, generator words and the construction grammar used by the command line."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from . import constructions as cons
from .errors import BirotaryError, CapExceeded, ParseError
from .fields import pgl2, psigmal2, psl2
from .maps import RotaryPair
from .perm import Permutation, PermutationGroup, default_cap


@dataclass
class Constructed:
    spec: str
    group: PermutationGroup
    generators: dict[str, Permutation] = field(default_factory=dict)
    pair: RotaryPair | None = None


def _named(G: PermutationGroup, pair: RotaryPair | None = None) -> dict[str, Permutation]:
    out = {f"g{i + 1}": g for i, g in enumerate(G.generators)}
    if pair is not None:
        out["x"], out["y"] = pair.x, pair.y
    return out


def _ints(args: str, count: int, spec: str) -> list[int]:
    parts = [a.strip() for a in args.split(",")] if args.strip() else []
    if len(parts) != count or not all(re.fullmatch(r"-?\d+", a) for a in parts):
        raise ParseError(f"{spec!r}: expected {count} integer argument(s)")
    return [int(a) for a in parts]


def _atom(spec: str, cap: int) -> Constructed:
    s = spec.strip()
    m = re.fullmatch(r"([A-Za-z]+\w*?)\s*(?:\((.*)\))?", s)
    if not m:
        raise ParseError(f"cannot parse construction {spec!r}")
    head, args = m.group(1), m.group(2)
    low = head.lower()
    try:
        if args is None:
            mm = re.fullmatch(r"(Z|D|A|S|SD|M)(\d+)", head)
            if mm:
                head, args, low = mm.group(1), mm.group(2), mm.group(1).lower()
        if low == "z":
            G = cons.cyclic(*_ints(args or "", 1, spec))
            return Constructed(s, G, _named(G))
        if low == "d":
            (n2,) = _ints(args or "", 1, spec)
            if n2 < 2 or n2 % 2:
                raise ParseError(f"{spec!r}: dihedral order must be even and at least 2")
            G = cons.dihedral_group(n2 // 2)
            return Constructed(s, G, _named(G))
        if low == "v4" or (low == "v" and args == "4"):
            G = cons.klein_four()
            return Constructed(s, G, _named(G))
        if low in ("sd", "m") and args == "16" or low in ("sd16", "m16"):
            G, x, y = cons.semidihedral16() if low.startswith("sd") else cons.modular16()
            pair = RotaryPair(x, y)
            return Constructed(s, G, _named(G, pair), pair)
        if low == "a" or low == "s":
            (n,) = _ints(args or "", 1, spec)
            G = cons.alternating_group(n) if low == "a" else cons.symmetric_group(n)
            pair = None
            if low == "a" and n == 5:
                from .families import a5_pair
                pair = a5_pair()
            return Constructed(s, G, _named(G, pair), pair)
        if low in ("psl", "pgl", "psigmal"):
            two, q = _ints(args or "", 2, spec)
            if two != 2:
                raise ParseError(f"{spec!r}: only dimension 2 is supported")
            G = {"psl": psl2, "pgl": pgl2, "psigmal": psigmal2}[low](q)
            pair = None
            if low == "psl" and q == 7:
                from .families import psl7_pair
                pair = psl7_pair()[1]
            return Constructed(s, G, _named(G, pair), pair)
        if low == "torus":
            f, eps = _ints(args or "", 2, spec)
            G, pair = cons.torus_group(f, eps, cap=cap)
            return Constructed(s, G, _named(G, pair), pair)
        if low == "composite":
            parts = [a.strip() for a in (args or "").split(",")]
            if len(parts) != 2 or not parts[0].isdigit():
                raise ParseError(f"{spec!r}: expected composite(exponent, seed)")
            G, pair = cons.composite_two_group(int(parts[0]), parts[1], cap=cap)
            return Constructed(s, G, _named(G, pair), pair)
        if low in ("bouquet", "dipole"):
            (n,) = _ints(args or "", 1, spec)
            G, pair = cons.abelian_map(n, low)
            return Constructed(s, G, _named(G, pair), pair)
        if low == "meta":
            n, mm_, r = _ints(args or "", 3, spec)
            sd = cons.metacyclic(n, mm_, r)
            G = sd.group
            named = _named(G)
            named["a"], named["b"] = sd.normal_generators[0], sd.complement_generators[0]
            return Constructed(s, G, named)
        mline = re.fullmatch(r"line([1-7])", low)
        if mline:
            from .families import solvable_example
            (f,) = _ints(args or "", 1, spec)
            inst = solvable_example(int(mline.group(1)), f, cap=cap)
            if inst.group is None:
                raise CapExceeded(s, cap, inst.analytic_order)
            inst.group.name = s
            return Constructed(s, inst.group, _named(inst.group, inst.pair), inst.pair)
        if low == "desk":
            from .families import desk_analogue
            (line,) = _ints(args or "", 1, spec)
            G, x, y, _p = desk_analogue(line)
            pair = RotaryPair(x, y)
            return Constructed(s, G, _named(G, pair), pair)
        if low == "nonsolv":
            from .families import nonsolvable_example
            parts = [a.strip() for a in (args or "").split(",")]
            inst = nonsolvable_example(parts[0], parts[1] if len(parts) > 1 else "")
            if inst.group is None:
                raise CapExceeded(s, cap, inst.analytic_order)
            return Constructed(s, inst.group, _named(inst.group, inst.pair), inst.pair)
    except BirotaryError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(f"{spec!r}: {exc}") from None
    raise ParseError(f"unknown construction {spec!r}")


def _split_product(spec: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    i = 0
    while i < len(spec):
        ch = spec[i]
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and (ch == "×" or spec.startswith(" x ", i)):
            parts.append(cur)
            cur = ""
            i += 1 if ch == "×" else 3
            continue
        cur += ch
        i += 1
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_construction(spec: str, cap: int | None = None) -> Constructed:
    """Build a group from a construction string such as 'SD16', 'PSL(2,7)' or 'Z(25) x D(168)'."""
    cap = default_cap() if cap is None else cap
    factors = _split_product(spec)
    if any(not f for f in factors):
        raise ParseError(f"empty factor in {spec!r}")
    if len(factors) == 1:
        built = _atom(factors[0], cap)
    else:
        G = _atom(factors[0], cap).group
        for f in factors[1:]:
            G = cons.direct_product(G, _atom(f, cap).group)
        built = Constructed(spec.strip(), G, _named(G))
    G = built.group
    G.name = G.name or spec.strip()
    if G.analytic_order is not None and G.analytic_order > cap:
        raise CapExceeded(spec, cap, G.analytic_order)
    G.materialize(cap)
    return built


# words and explicit permutations

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<op>[*^()]))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character in word {text!r} at {pos}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def parse_word(text: str, generators: dict[str, Permutation], degree: int) -> Permutation:
    """Evaluate a word such as 'x*y^3' or '(x*y)^-1' in the named generators."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (expected is not None and tok[1] != expected):
            raise ParseError(f"malformed word {text!r}")
        pos += 1
        return tok

    def atom() -> Permutation:
        kind, val = peek()
        if val == "(":
            take("(")
            g = word()
            take(")")
        elif kind == "name":
            take()
            if val in generators:
                g = generators[val]
            elif val in ("e", "id", "1"):
                g = Permutation.identity(degree)
            else:
                raise ParseError(f"unknown generator {val!r}; known: {', '.join(sorted(generators))}")
        elif kind == "int" and val == "1":
            take()
            g = Permutation.identity(degree)
        else:
            raise ParseError(f"malformed word {text!r}")
        if peek()[1] == "^":
            take("^")
            kind, val = take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {text!r}")
            g = g ** int(val)
        return g

    def word() -> Permutation:
        g = atom()
        while peek()[1] == "*":
            take("*")
            g = g * atom()
        return g

    result = word()
    if pos != len(toks):
        raise ParseError(f"trailing input in word {text!r}")
    return result


def parse_element(text: str, generators: dict[str, Permutation], degree: int) -> Permutation:
    """A generator word, cycle notation '(0 1 2)(3 4)', or an image list '[1, 2, 0]'."""
    t = text.strip()
    if t.startswith("["):
        try:
            imgs = json.loads(t)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad image list {text!r}: {exc}") from None
        if len(imgs) != degree:
            raise ParseError(f"image list has length {len(imgs)}, expected {degree}")
        return Permutation(imgs)
    if re.fullmatch(r"[\d\s(),]*", t) and t.startswith("("):
        try:
            return Permutation.from_cycles(t, degree)
        except (BirotaryError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    return parse_word(t, generators, degree)


# group files

def group_to_json(built: Constructed) -> dict:
    G = built.group
    return {
        "name": G.name,
        "spec": built.spec,
        "degree": G.degree,
        "order": G.order(),
        "generators": {k: list(v) for k, v in built.generators.items()},
        "cycles": {k: v.cycle_string() for k, v in built.generators.items()},
        "pair": ["x", "y"] if built.pair is not None else None,
    }


def group_from_json(data: dict) -> Constructed:
    try:
        degree = int(data["degree"])
        named = {k: Permutation(v) for k, v in data["generators"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed group file: {exc}") from None
    gens = [g for k, g in named.items() if k not in ("x", "y")] or list(named.values())
    G = PermutationGroup(gens, degree, name=data.get("name", ""), order=data.get("order"))
    pair = RotaryPair(named["x"], named["y"]) if data.get("pair") and "x" in named else None
    return Constructed(data.get("spec", G.name), G, named, pair)


def load_group(source: str, cap: int | None = None) -> Constructed:
    """A group file path, or failing that a construction string."""
    import os
    if os.path.exists(source):
        with open(source) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{source}: {exc}") from None
        built = group_from_json(data)
        built.group.materialize(cap)
        return built
    return parse_construction(source, cap=cap)


DEFAULT_CATALOG = ("SD16", "M16", "A5", "PSL(2,7)")


def load_catalog(spec: str | None) -> list[str]:
    """Comma-separated constructions, '@file' with one per line, or 'default'."""
    if spec is None or spec == "default":
        return list(DEFAULT_CATALOG)
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            lines = [ln.strip() for ln in fh]
        return [ln for ln in lines if ln and not ln.startswith("#")]
    out, depth, cur = [], 0, ""
    for ch in spec:
        depth += ch == "("
        depth -= ch == ")"
        if ch in ",;" and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    return [c for c in out if c]
