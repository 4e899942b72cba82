"""Expression trees for tautological bundle formulas.

The same expression evaluates two ways: to a SheafClass on a Variety (for
characteristic-class work) and to a GL character on a flag space (for
Bott-type cohomology).  Factors of product spaces are addressed with a
`p<i>*` prefix on tautological names.
"""

from __future__ import annotations

from . import sheaves, symfun
from .chow import line_bundle


class Expr:
    def __add__(self, other):
        return Sum([self, other])

    def __rmul__(self, n):
        if isinstance(n, int):
            return Scale(n, self)
        return NotImplemented


class Taut(Expr):
    """Named tautological bundle; factor is 1-based on products, 0 = whole."""

    def __init__(self, name, factor=0):
        self.name = name
        self.factor = factor

    def __repr__(self):
        return f"p{self.factor}*{self.name}" if self.factor else self.name


class Line(Expr):
    """O(a) on one factor, or O(a_1, ..., a_k) on a product."""

    def __init__(self, degrees):
        self.degrees = tuple(degrees)

    def __repr__(self):
        if all(d == 0 for d in self.degrees):
            return "O"
        return "O(" + ",".join(str(d) for d in self.degrees) + ")"


class Dual(Expr):
    def __init__(self, inner):
        self.inner = inner

    def __repr__(self):
        return f"dual({self.inner!r})"


class Sum(Expr):
    def __init__(self, parts):
        flat = []
        for p in parts:
            if isinstance(p, Sum):
                flat.extend(p.parts)
            else:
                flat.append(p)
        self.parts = flat

    def __repr__(self):
        return " + ".join(map(repr, self.parts))


class Scale(Expr):
    def __init__(self, n, inner):
        self.n = n
        self.inner = inner

    def __repr__(self):
        return f"{self.n}*{self.inner!r}"


class Tensor(Expr):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __repr__(self):
        return f"tensor({self.left!r},{self.right!r})"


class Wedge(Expr):
    def __init__(self, inner, k):
        self.inner = inner
        self.k = k

    def __repr__(self):
        return f"wedge({self.inner!r},{self.k})"


class SymPow(Expr):
    def __init__(self, inner, k):
        self.inner = inner
        self.k = k

    def __repr__(self):
        return f"sym({self.inner!r},{self.k})"


class SchurW(Expr):
    """Schur functor for a dominant integer weight (negatives allowed)."""

    def __init__(self, inner, weight):
        self.inner = inner
        self.weight = tuple(weight)

    def __repr__(self):
        return f"schur({self.inner!r},{self.weight})"


class Det(Expr):
    def __init__(self, inner):
        self.inner = inner

    def __repr__(self):
        return f"det({self.inner!r})"


O = Line((0,))


def schur_weight_sheaf(E, weight):
    """S_w(E) for a dominant integer weight w, det-shifting negatives away."""
    weight = tuple(weight)
    shift = min(weight) if weight else 0
    if shift > 0:
        shift = 0
    body = sheaves.schur(E, tuple(x - shift for x in weight))
    if shift:
        body = sheaves.tensor(body, sheaves.tensor_power(sheaves.det(E), shift))
    return body


def to_sheaf(e: Expr, X):
    """Evaluate on a Variety, resolving tautological names in X.taut."""
    if isinstance(e, Taut):
        key = f"p{e.factor}*{e.name}" if e.factor else e.name
        if key not in X.taut:
            raise KeyError(f"no tautological bundle {key} on {X.name}")
        return X.taut[key]
    if isinstance(e, Line):
        if all(d == 0 for d in e.degrees):
            return sheaves.trivial(X.ring, 1)
        return line_bundle(X, e.degrees)
    if isinstance(e, Dual):
        return sheaves.dual(to_sheaf(e.inner, X))
    if isinstance(e, Sum):
        out = None
        for p in e.parts:
            s = to_sheaf(p, X)
            out = s if out is None else sheaves.sum_(out, s)
        return out
    if isinstance(e, Scale):
        if e.n < 1:
            raise ValueError("scale must be positive")
        return e.n * to_sheaf(e.inner, X)
    if isinstance(e, Tensor):
        return sheaves.tensor(to_sheaf(e.left, X), to_sheaf(e.right, X))
    if isinstance(e, Wedge):
        return sheaves.wedge(to_sheaf(e.inner, X), e.k)
    if isinstance(e, SymPow):
        return sheaves.sym(to_sheaf(e.inner, X), e.k)
    if isinstance(e, SchurW):
        return schur_weight_sheaf(to_sheaf(e.inner, X), e.weight)
    if isinstance(e, Det):
        return sheaves.det(to_sheaf(e.inner, X))
    raise TypeError(f"not an expression: {e!r}")


def to_character(e: Expr, flag):
    """Evaluate to a GLCharacter on a FlagSpace (see bott.FlagSpace)."""
    GL = symfun.GLCharacter
    if isinstance(e, Taut):
        return flag.taut_character(e.name, e.factor)
    if isinstance(e, Line):
        return flag.line_character(e.degrees)
    if isinstance(e, Dual):
        return to_character(e.inner, flag).dual()
    if isinstance(e, Sum):
        out = None
        for p in e.parts:
            c = to_character(p, flag)
            out = c if out is None else out + c
        return out
    if isinstance(e, Scale):
        return e.n * to_character(e.inner, flag)
    if isinstance(e, Tensor):
        return to_character(e.left, flag) * to_character(e.right, flag)
    if isinstance(e, Wedge):
        return to_character(e.inner, flag).wedge(e.k)
    if isinstance(e, SymPow):
        return to_character(e.inner, flag).sym(e.k)
    if isinstance(e, SchurW):
        return to_character(e.inner, flag).schur_functor(e.weight)
    if isinstance(e, Det):
        return to_character(e.inner, flag).det()
    raise TypeError(f"not an expression: {e!r}")


def rank_of(e: Expr, flag_or_none=None):
    """Rank of an expression, computed combinatorially."""
    from math import comb
    if isinstance(e, Taut):
        if flag_or_none is not None:
            return flag_or_none.taut_rank(e.name, e.factor)
        raise ValueError("need a flag space to size tautological bundles")
    if isinstance(e, Line):
        return 1
    if isinstance(e, Dual):
        return rank_of(e.inner, flag_or_none)
    if isinstance(e, Sum):
        return sum(rank_of(p, flag_or_none) for p in e.parts)
    if isinstance(e, Scale):
        return e.n * rank_of(e.inner, flag_or_none)
    if isinstance(e, Tensor):
        return rank_of(e.left, flag_or_none) * rank_of(e.right, flag_or_none)
    if isinstance(e, Wedge):
        return comb(rank_of(e.inner, flag_or_none), e.k)
    if isinstance(e, SymPow):
        r = rank_of(e.inner, flag_or_none)
        return comb(r + e.k - 1, e.k)
    if isinstance(e, SchurW):
        return symfun.weyl_dim(e.weight, rank_of(e.inner, flag_or_none))
    if isinstance(e, Det):
        return 1
    raise TypeError(f"not an expression: {e!r}")
