"""Run configurations: a sectioned key-value format with a small bundle
expression grammar.

Grammar for bundle expressions::

    expr    := term (+ term)*
    term    := [INT *] factor
    factor  := U | Q | O | O(a[,b,...]) | p<N>*U | p<N>*Q | p<N>*O(a)
             | dual(expr) | det(expr) | wedge(expr, k) | sym(expr, k)
             | tensor(expr, expr) | ( expr )

Parse errors carry the 1-based line and column of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import expr as ex


class ConfigError(Exception):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {col}" if col else "") + ")"
        super().__init__(message + where)


# ---------------------------------------------------------------------------
# expression grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(-?\d+|[A-Za-z_]\w*|[()*+,])")


def _tokenize(text, line=None):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ConfigError(f"bad character {text[pos]!r} in expression",
                              line, pos + 1)
        toks.append((m.group(1), m.start(1) + 1))
        pos = m.end()
    return toks


def parse_expr(text, line=None) -> ex.Expr:
    toks = _tokenize(text, line)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise ConfigError("unexpected end of expression", line)
        tok, col = toks[pos]
        if expected is not None and tok != expected:
            raise ConfigError(f"expected {expected!r}, found {tok!r}", line, col)
        pos += 1
        return tok, col

    def int_arg():
        tok, col = take()
        if not re.fullmatch(r"-?\d+", tok):
            raise ConfigError(f"expected an integer, found {tok!r}", line, col)
        return int(tok)

    def factor():
        tok, col = take()
        if re.fullmatch(r"p\d+", tok) and peek() == "*":
            take("*")
            inner = factor()
            return _with_factor(inner, int(tok[1:]), line, col)
        if tok == "(":
            e = expression()
            take(")")
            return e
        if tok in ("dual", "det"):
            take("(")
            inner = expression()
            take(")")
            return ex.Dual(inner) if tok == "dual" else ex.Det(inner)
        if tok in ("wedge", "sym"):
            take("(")
            inner = expression()
            take(",")
            k = int_arg()
            take(")")
            return ex.Wedge(inner, k) if tok == "wedge" else ex.SymPow(inner, k)
        if tok == "tensor":
            take("(")
            a = expression()
            take(",")
            b = expression()
            take(")")
            return ex.Tensor(a, b)
        if tok == "O":
            if peek() == "(":
                take("(")
                degs = [int_arg()]
                while peek() == ",":
                    take(",")
                    degs.append(int_arg())
                take(")")
                return ex.Line(tuple(degs))
            return ex.Line((0,))
        if tok in ("U", "Q"):
            return ex.Taut(tok)
        raise ConfigError(f"unknown name {tok!r} in expression", line, col)

    def term():
        if re.fullmatch(r"\d+", peek() or ""):
            n, col = take()
            take("*")
            f = factor()
            return ex.Scale(int(n), f)
        return factor()

    def expression():
        parts = [term()]
        while peek() == "+":
            take("+")
            parts.append(term())
        return parts[0] if len(parts) == 1 else ex.Sum(parts)

    out = expression()
    if pos != len(toks):
        tok, col = toks[pos]
        raise ConfigError(f"trailing token {tok!r} in expression", line, col)
    return out


def _with_factor(inner, n, line, col):
    """Push a p<n>* prefix down to the tautological and line leaves."""
    if isinstance(inner, ex.Taut):
        if inner.factor:
            raise ConfigError("nested factor prefixes", line, col)
        return ex.Taut(inner.name, n)
    if isinstance(inner, ex.Line):
        degs = inner.degrees
        if len(degs) != 1:
            raise ConfigError("a factor-prefixed O takes a single degree", line, col)
        return _FactorLine(degs[0], n)
    if isinstance(inner, ex.Dual):
        return ex.Dual(_with_factor(inner.inner, n, line, col))
    if isinstance(inner, ex.Det):
        return ex.Det(_with_factor(inner.inner, n, line, col))
    if isinstance(inner, ex.Wedge):
        return ex.Wedge(_with_factor(inner.inner, n, line, col), inner.k)
    if isinstance(inner, ex.SymPow):
        return ex.SymPow(_with_factor(inner.inner, n, line, col), inner.k)
    if isinstance(inner, ex.Scale):
        return ex.Scale(inner.n, _with_factor(inner.inner, n, line, col))
    if isinstance(inner, ex.Sum):
        return ex.Sum([_with_factor(p, n, line, col) for p in inner.parts])
    if isinstance(inner, ex.Tensor):
        return ex.Tensor(_with_factor(inner.left, n, line, col),
                         _with_factor(inner.right, n, line, col))
    raise ConfigError("factor prefixes apply to bundle expressions", line, col)


class _FactorLine(ex.Expr):
    """O(a) pulled back from factor n of a product; resolved against the
    number of factors at evaluation time."""

    def __init__(self, degree, factor):
        self.degree = degree
        self.factor = factor

    def __repr__(self):
        return f"p{self.factor}*O({self.degree})"

    def resolve(self, nfactors):
        degs = [0] * nfactors
        degs[self.factor - 1] = self.degree
        return ex.Line(tuple(degs))


def _resolve_factor_lines(e, nfactors):
    if isinstance(e, _FactorLine):
        return e.resolve(nfactors)
    for attr in ("inner", "left", "right"):
        if hasattr(e, attr):
            setattr(e, attr, _resolve_factor_lines(getattr(e, attr), nfactors))
    if isinstance(e, ex.Sum):
        e.parts = [_resolve_factor_lines(p, nfactors) for p in e.parts]
    return e


# ---------------------------------------------------------------------------
# run configuration
# ---------------------------------------------------------------------------

_SECTIONS = {
    "variety": {"ambient", "cuts", "fibration"},
    "bundle": {"E", "L"},
    "locus": {"type", "orbit", "partition"},
    "output": {"json"},
}

_AMBIENT = re.compile(
    r"projective_space\((\d+)\)|grassmannian\((\d+),\s*(\d+)\)|quadric\((\d+)\)"
    r"|product\((.+)\)")


@dataclass
class RunConfig:
    ambient: str
    cuts: list = field(default_factory=list)
    fibration: str = None        # "grassmann(k, F-expression)"
    bundle_E: str = None
    bundle_L: str = None
    locus_type: str = "forms-y2"
    orbit: int = None
    partition: tuple = None
    json_out: str = None

    def ambient_factors(self):
        return [f.strip() for f in _split_product(self.ambient)]

    def flag_spec(self):
        """Short spec string (P5, Gr(2,7), products) for the ambient."""
        parts = []
        for f in self.ambient_factors():
            m = _AMBIENT.fullmatch(f)
            if m is None:
                raise ConfigError(f"unknown ambient constructor {f!r}")
            if m.group(1) is not None:
                parts.append(f"P{m.group(1)}")
            elif m.group(2) is not None:
                parts.append(f"Gr({m.group(2)},{m.group(3)})")
            elif m.group(4) is not None:
                parts.append(f"Q{m.group(4)}")
        return "x".join(parts)

    def nfactors(self):
        return len(self.ambient_factors())

    def cut_exprs(self):
        return [_resolve_factor_lines(parse_expr(c), self.nfactors())
                for c in self.cuts]

    def E_expr(self):
        if self.bundle_E is None:
            raise ConfigError("missing key E in [bundle]")
        return _resolve_factor_lines(parse_expr(self.bundle_E), self.nfactors())

    def L_expr(self):
        if self.bundle_L is None:
            return None
        return _resolve_factor_lines(parse_expr(self.bundle_L), self.nfactors())

    def fibration_parts(self):
        if self.fibration is None:
            return None
        m = re.fullmatch(r"grassmann\((\d+)\s*,\s*(.+)\)", self.fibration.strip())
        if m is None:
            raise ConfigError("fibration must look like grassmann(k, F-expression)")
        return int(m.group(1)), parse_expr(m.group(2))


def _split_product(text):
    m = re.fullmatch(r"product\((.+)\)", text.strip())
    if m is None:
        return [text.strip()]
    return _split_top(m.group(1))


def _split_top(text):
    """Split on top-level commas (outside parentheses)."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur).strip())
    return [p for p in parts if p]


def parse_config(text: str) -> RunConfig:
    section = None
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ConfigError("unterminated section header", lineno)
            section = stripped[1:-1].strip()
            if section not in _SECTIONS:
                raise ConfigError(f"unknown section [{section}]", lineno)
            continue
        if section is None:
            raise ConfigError("key outside of any section", lineno)
        if "=" not in stripped:
            raise ConfigError("expected key = value", lineno)
        key, val = (s.strip() for s in stripped.split("=", 1))
        if key not in _SECTIONS[section]:
            raise ConfigError(f"unknown key {key!r} in section [{section}]", lineno)
        if (section, key) in values:
            raise ConfigError(f"duplicate key {key!r}", lineno)
        values[(section, key)] = (val, lineno)

    def get(section, key, default=None):
        return values.get((section, key), (default, None))[0]

    ambient = get("variety", "ambient")
    if ambient is None:
        raise ConfigError("missing ambient in [variety]")
    cfg = RunConfig(
        ambient=ambient,
        cuts=_split_top(get("variety", "cuts", "") or ""),
        fibration=get("variety", "fibration"),
        bundle_E=get("bundle", "E"),
        bundle_L=get("bundle", "L"),
        locus_type=get("locus", "type", "forms-y2"),
        json_out=get("output", "json"),
    )
    if cfg.locus_type not in ("forms-y2", "richardson"):
        _, ln = values.get(("locus", "type"), (None, None))
        raise ConfigError(f"unknown locus type {cfg.locus_type!r}", ln)
    orbit = get("locus", "orbit")
    if orbit is not None:
        if not re.fullmatch(r"\d+", orbit):
            raise ConfigError("orbit must be an integer",
                              values[("locus", "orbit")][1])
        cfg.orbit = int(orbit)
    part = get("locus", "partition")
    if part is not None:
        try:
            cfg.partition = tuple(int(x) for x in part.split(","))
        except ValueError:
            raise ConfigError("partition must be a comma list of integers",
                              values[("locus", "partition")][1])
    # validate the expressions eagerly so errors carry positions
    for (sec, key), (val, ln) in values.items():
        if key in ("E", "L") or (sec, key) == ("variety", "cuts"):
            for piece in (_split_top(val) if key == "cuts" else [val]):
                parse_expr(piece, line=ln)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig):
    if cfg.locus_type == "forms-y2":
        E = cfg.E_expr()
        rank = _shallow_rank(E)
        if rank is not None and rank != 6:
            raise ConfigError(f"forms-y2 needs a rank-6 bundle, E has rank {rank}")
    if cfg.locus_type == "richardson":
        if cfg.orbit is None and cfg.partition is None:
            raise ConfigError("richardson loci need an orbit id or a partition")


def _shallow_rank(e):
    """Rank when computable without a flag (no bare U/Q tautologicals)."""
    try:
        return ex.rank_of(e, None)
    except (ValueError, KeyError):
        return None


def serialize(cfg: RunConfig) -> str:
    lines = ["[variety]", f"ambient = {cfg.ambient}"]
    if cfg.cuts:
        lines.append("cuts = " + ", ".join(cfg.cuts))
    if cfg.fibration:
        lines.append(f"fibration = {cfg.fibration}")
    lines.append("")
    lines.append("[bundle]")
    if cfg.bundle_E is not None:
        lines.append(f"E = {cfg.bundle_E}")
    if cfg.bundle_L is not None:
        lines.append(f"L = {cfg.bundle_L}")
    lines.append("")
    lines.append("[locus]")
    lines.append(f"type = {cfg.locus_type}")
    if cfg.orbit is not None:
        lines.append(f"orbit = {cfg.orbit}")
    if cfg.partition is not None:
        lines.append("partition = " + ",".join(str(x) for x in cfg.partition))
    if cfg.json_out is not None:
        lines.extend(["", "[output]", f"json = {cfg.json_out}"])
    return "\n".join(lines) + "\n"
