"""Plain-text presentation files.

Line oriented; ``#`` starts a comment::

    name: U
    generators: x:1 y:1
    order: deglex x < y
    relator: x^3*y - 3*x^2*y*x + 3*x*y*x^2 - y*x^3
    relator: b^2*a = a*b^2

Any other ``label:`` prefix introduces a labelled relation
(``1: X4*X8 = X8*Y8 - 3*X7*X8 + 3*X6*X8``); this is how relation lists such as
the Veronese appendix data are stored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import List, Optional, Sequence, Tuple

from .core import Alphabet, Generator, MonomialOrder, NcPoly, Word

KEYWORDS = ("name", "generators", "order", "relator")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message, self.line, self.col = message, line, col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    order_kind: str = "deglex"
    relators: Tuple[NcPoly, ...] = ()
    labels: Tuple[Optional[str], ...] = ()
    name: str = ""
    comments: Tuple[str, ...] = ()
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        labels = tuple(self.labels) or (None,) * len(self.relators)
        if len(labels) != len(self.relators):
            raise ValueError("labels and relators differ in length")
        object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder(self.order_kind, self.alphabet)

    def rewrite_system(self):
        from .rewrite import RewriteSystem

        return RewriteSystem.from_relators(self.relators, self.order)


# ---------------------------------------------------------------------------
# polynomial expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str, line: int | None, offset: int):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = offset + m.start(m.lastindex) + 1
        if m.group(1):
            toks.append(("num", int(m.group(1)), col))
        elif m.group(2):
            toks.append(("ident", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^=":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            toks.append((ch, ch, col))
        pos = m.end()
    toks.append(("end", None, offset + len(text) + 1))
    return toks


class _PolyParser:
    def __init__(self, text: str, alphabet: Alphabet, line=None, offset=0):
        self.alphabet = alphabet
        self.names = {n: i for i, n in enumerate(alphabet.names)}
        self.line = line
        self.toks = _tokenize(text, line, offset)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of line" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", self.line, tok[2])
        self.i += 1
        return tok

    def error(self, msg):
        raise ParseError(msg, self.line, self.peek()[2])

    def parse(self) -> NcPoly:
        lhs = self.poly()
        if self.peek()[0] == "=":
            self.take()
            lhs = lhs - self.poly()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return lhs

    def poly(self) -> NcPoly:
        terms: dict = {}
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            c, w = self.term()
            terms[w] = terms.get(w, 0) + sign * c
            if self.peek()[0] in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
            else:
                return NcPoly(terms)

    def term(self):
        coef = Fraction(1)
        word: Word = ()
        while True:
            kind, val, col = self.peek()
            if kind == "num":
                self.take()
                num = Fraction(val)
                if self.peek()[0] == "/":
                    self.take()
                    den = self.take("num")
                    if den[1] == 0:
                        raise ParseError("zero denominator", self.line, den[2])
                    num /= den[1]
                coef *= num
            elif kind == "ident":
                self.take()
                if val not in self.names:
                    raise ParseError(f"unknown generator {val!r}", self.line, col)
                power = 1
                if self.peek()[0] == "^":
                    self.take()
                    power = self.take("num")[1]
                word += (self.names[val],) * power
            else:
                what = "end of line" if kind == "end" else repr(val)
                raise ParseError(f"expected a coefficient or generator, found {what}", self.line, col)
            if self.peek()[0] == "*":
                self.take()
                continue
            return coef, word


def parse_poly(text: str, alphabet: Alphabet, line: int | None = None, offset: int = 0) -> NcPoly:
    """Parse ``±c*w ± ...`` (optionally ``lhs = rhs``) over ``alphabet``."""
    return _PolyParser(text, alphabet, line, offset).parse()


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_word(w: Word, alphabet: Alphabet) -> str:
    if not w:
        return "1"
    names = alphabet.names
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(names[w[i]] + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "*".join(parts)


def format_poly(p: NcPoly, alphabet: Alphabet, order: MonomialOrder | None = None) -> str:
    if not p:
        return "0"
    order = order or MonomialOrder("deglex", alphabet)
    out = []
    for k, w in enumerate(p.words_sorted(order)):
        c = p[w]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not w:
            body = _format_coef(c)
        elif c == 1:
            body = format_word(w, alphabet)
        else:
            body = f"{_format_coef(c)}*{format_word(w, alphabet)}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# files


def _strip_comment(raw: str) -> str:
    k = raw.find("#")
    return raw if k < 0 else raw[:k]


def _parse_generators(body: str, lineno: int, offset: int) -> List[Generator]:
    gens = []
    for m in re.finditer(r"\S+", body):
        tok = m.group(0)
        col = offset + m.start() + 1
        gm = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?::(\d+))?", tok)
        if not gm:
            raise ParseError(f"bad generator declaration {tok!r}", lineno, col)
        deg = int(gm.group(2)) if gm.group(2) else 1
        if deg < 1:
            raise ParseError(f"generator {gm.group(1)!r} needs a positive degree", lineno, col)
        if any(g.name == gm.group(1) for g in gens):
            raise ParseError(f"duplicate generator {gm.group(1)!r}", lineno, col)
        gens.append(Generator(gm.group(1), deg))
    if not gens:
        raise ParseError("generators: needs at least one generator", lineno, offset + 1)
    return gens


def parse_presentation(text: str, alphabet: Alphabet | None = None) -> Presentation:
    """Parse a presentation file.

    ``alphabet`` supplies the generators when the text has no
    ``generators:`` line (relation-list files).
    """
    name = ""
    comments: List[str] = []
    gens: Optional[List[Generator]] = list(alphabet) if alphabet is not None else None
    order_kind, order_names = "deglex", None
    pending: List[Tuple[int, int, str, Optional[str]]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped.startswith("#") and not seen_content:
            comments.append(stripped[1:].strip())
            continue
        line = _strip_comment(raw)
        if not line.strip():
            continue
        seen_content = True
        m = re.match(r"\s*([^:\s]+)\s*:", line)
        if not m:
            raise ParseError("expected 'keyword:' or 'label:'", lineno, 1)
        key, offset = m.group(1), m.end()
        body = line[offset:]
        if key == "name":
            name = body.strip()
        elif key == "generators":
            gens = _parse_generators(body, lineno, offset)
        elif key == "order":
            om = re.fullmatch(r"\s*(deglex|shortlex)\s*(.*?)\s*", body)
            if not om:
                raise ParseError("order must be 'deglex ...' or 'shortlex ...'", lineno, offset + 1)
            order_kind = om.group(1)
            names = [s.strip() for s in om.group(2).split("<")] if om.group(2) else []
            order_names = (lineno, [n for n in names if n])
        elif key == "relator":
            pending.append((lineno, offset, body, None))
        else:
            pending.append((lineno, offset, body, key))

    if gens is None:
        raise ParseError("missing generators: line")
    if order_names is not None and order_names[1]:
        lineno, names = order_names
        if sorted(names) != sorted(g.name for g in gens):
            raise ParseError("order must list every generator exactly once", lineno)
        by_name = {g.name: g for g in gens}
        gens = [by_name[n] for n in names]
    alpha = Alphabet(tuple(gens))

    relators, labels, warnings = [], [], []
    for lineno, offset, body, label in pending:
        p = parse_poly(body, alpha, lineno, offset)
        if not p:
            warnings.append(f"line {lineno}: relator is zero")
        relators.append(p)
        labels.append(label)
    return Presentation(alpha, order_kind, tuple(relators), tuple(labels), name,
                        tuple(comments), tuple(warnings))


def parse_relation_lines(text: str, alphabet: Alphabet):
    """Parse ``label: lhs = rhs`` lines one at a time.

    Returns ``(label, poly_or_None, error_or_None)`` triples so that a bad
    line does not abort the rest of the file.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = re.match(r"\s*([^:\s]+)\s*:", line)
        if not m:
            out.append((f"line{lineno}", None, ParseError("missing label", lineno, 1)))
            continue
        key = m.group(1)
        if key in KEYWORDS:
            continue
        try:
            out.append((key, parse_poly(line[m.end():], alphabet, lineno, m.end()), None))
        except ParseError as exc:
            out.append((key, None, exc))
    return out


def format_presentation(p: Presentation) -> str:
    lines = [f"# {c}" if c else "#" for c in p.comments]
    if p.name:
        lines.append(f"name: {p.name}")
    lines.append("generators: " + " ".join(f"{g.name}:{g.degree}" for g in p.alphabet))
    lines.append(f"order: {p.order_kind} " + " < ".join(p.alphabet.names))
    for label, rel in zip(p.labels, p.relators):
        lines.append(f"{label or 'relator'}: {format_poly(rel, p.alphabet, p.order)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# built-in corpus


def data_text(filename: str) -> str:
    return resources.files("ncgrowth").joinpath("data").joinpath(filename).read_text(encoding="utf-8")


BUILTINS = {"U": "U.pres", "A": "A.pres", "M": "M.pres"}


def load_presentation(spec: str) -> Presentation:
    """``builtin:U``, ``builtin:A`` or a filesystem path."""
    if spec.startswith("builtin:"):
        key = spec.split(":", 1)[1]
        if key not in BUILTINS:
            raise KeyError(f"no built-in presentation {key!r} (have {sorted(BUILTINS)})")
        return parse_presentation(data_text(BUILTINS[key]))
    with open(spec, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
