"""Plain-text system and basis files.

    p 65521
    vars 2 x y
    weights 2 3
    # x*y and x^3 + y^2
    1*1,1
    1*3,0 + 1*0,2

Each term is `c*e1,...,en`; terms are joined by ` + `.  A basis file adds
`order lex|wgrevlex` and, for truncated runs, `truncation <d>` right after
the weights line.  `0` is the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .monomials import WeightSystem
from .polynomial import ORDERS, PolySystem, Polynomial, Ring, default_names


class FormatError(ValueError):
    def __init__(self, msg, lineno=None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


@dataclass
class SystemFile:
    ring: Ring
    polys: list
    order: str | None = None
    truncation: int | None = None
    names_given: bool = False
    comments: list = field(default_factory=list)

    def system(self) -> PolySystem:
        return PolySystem(self.ring, [f for f in self.polys if not f.is_zero()])


def _int(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer for {what}, got {tok!r}", lineno) from None


def _parse_poly(line, ring, lineno) -> Polynomial:
    if line.strip() == "0":
        return ring.zero()
    terms = {}
    for tok in line.split(" + "):
        tok = tok.strip()
        if "*" not in tok:
            raise FormatError(f"term {tok!r} is not of the form c*e1,...,en", lineno)
        c, exps = tok.split("*", 1)
        c = _int(c, lineno, "a coefficient")
        e = tuple(_int(x, lineno, "an exponent") for x in exps.split(","))
        if len(e) != ring.n:
            raise FormatError(f"term {tok!r} has {len(e)} exponents, expected {ring.n}", lineno)
        if any(a < 0 for a in e):
            raise FormatError(f"negative exponent in {tok!r}", lineno)
        if e in terms:
            raise FormatError(f"monomial {e} repeated", lineno)
        terms[e] = c
    return Polynomial(ring, terms)


def parse(text: str) -> SystemFile:
    lines = []
    comments = []
    for k, raw in enumerate(text.splitlines(), 1):
        body, hash_, note = raw.partition("#")
        if hash_:
            comments.append(note.strip())
        if body.strip():
            lines.append((k, body.strip()))
    header = {}
    i = 0
    while i < len(lines):
        k, line = lines[i]
        word = line.split()[0]
        if word not in ("p", "vars", "weights", "order", "truncation"):
            break
        if word in header:
            raise FormatError(f"duplicate {word!r} line", k)
        header[word] = (k, line.split()[1:])
        i += 1
    for req in ("p", "vars"):
        if req not in header:
            raise FormatError(f"missing {req!r} header")
    k, args = header["p"]
    if len(args) != 1:
        raise FormatError("expected `p <prime>`", k)
    p = _int(args[0], k, "p")
    k, args = header["vars"]
    if not args:
        raise FormatError("expected `vars <n> [names...]`", k)
    n = _int(args[0], k, "n")
    if n < 1:
        raise FormatError("need at least one variable", k)
    names = tuple(args[1:]) or None
    if names is not None and len(names) != n:
        raise FormatError(f"{len(names)} names for {n} variables", k)
    if "weights" in header:
        k, args = header["weights"]
        ws = tuple(_int(a, k, "a weight") for a in args)
        if len(ws) != n:
            raise FormatError(f"{len(ws)} weights for {n} variables", k)
    else:
        ws = (1,) * n
    order = None
    if "order" in header:
        k, args = header["order"]
        if len(args) != 1 or args[0] not in ORDERS:
            raise FormatError(f"order must be one of {ORDERS}", k)
        order = args[0]
    trunc = None
    if "truncation" in header:
        k, args = header["truncation"]
        if len(args) != 1:
            raise FormatError("expected `truncation <d>`", k)
        trunc = _int(args[0], k, "truncation")
    try:
        ring = Ring(p, WeightSystem(ws), order or "wgrevlex", names)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    polys = [_parse_poly(line, ring, k) for k, line in lines[i:]]
    return SystemFile(ring, polys, order, trunc, names is not None, comments)


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    return " + ".join(f"{c}*{','.join(map(str, m))}" for m, c in f.terms.items())


def format_header(ring: Ring, names=True) -> list:
    out = [f"p {ring.p}"]
    if names and tuple(ring.names) != default_names(ring.n):
        out.append(f"vars {ring.n} " + " ".join(ring.names))
    else:
        out.append(f"vars {ring.n}")
    out.append("weights " + " ".join(map(str, ring.weights.weights)))
    return out


def format_system(F) -> str:
    polys = list(getattr(F, "polys", F))
    ring = F.ring if hasattr(F, "ring") else polys[0].ring
    lines = format_header(ring) + [format_poly(f) for f in polys]
    return "\n".join(lines) + "\n"


def format_basis(G) -> str:
    lines = format_header(G.ring)
    lines.append(f"order {G.order}")
    if G.truncation_wdeg is not None:
        lines.append(f"truncation {G.truncation_wdeg}")
    lines += [format_poly(g) for g in G.polys]
    return "\n".join(lines) + "\n"


def read_system(path) -> SystemFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
