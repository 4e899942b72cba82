"""Graded rings with rational coefficients and the varieties built on them.

A ring is a truncated graded-commutative Q-algebra with a distinguished
basis; classes are sparse dicts from basis keys to Fractions.  Varieties
bundle a ring with a dimension, a tangent class, named tautological sheaf
classes and an integration functional.  Relative constructions (projective,
Grassmann and flag bundles) extend the ring by one generator per step;
Grassmann bundles are modelled on their full flag tower, with integrals
corrected by the fibre point class.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import symfun

QQ = Fraction


def _intize(cls_dict):
    """Clear denominators: return (integer dict, common denominator).

    Python integer arithmetic is far cheaper than Fraction arithmetic, so
    the multiplication kernels convolve integers and normalize once.
    """
    den = 1
    for v in cls_dict.values():
        d = v.denominator
        den = den // gcd(den, d) * d
    if den == 1:
        return {k: (v if isinstance(v, int) else v.numerator)
                for k, v in cls_dict.items()}, 1
    return {k: int(v * den) for k, v in cls_dict.items()}, den


def _fractionize(int_dict, den):
    if den == 1:
        return {k: QQ(v) for k, v in int_dict.items() if v}
    return {k: QQ(v, den) for k, v in int_dict.items() if v}


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------

class FreeRing:
    """Free graded-commutative polynomial ring on named generators,
    truncated above degree `cap`.  No integration."""

    def __init__(self, cap, gens):
        self.cap = cap
        self.gen_names = [name for name, _ in gens]
        self.gen_degrees = [deg for _, deg in gens]

    def one_key(self):
        return (0,) * len(self.gen_names)

    def gen_key(self, i):
        e = [0] * len(self.gen_names)
        e[i] = 1
        return tuple(e)

    def key_degree(self, key):
        return sum(e * d for e, d in zip(key, self.gen_degrees))

    def mul_keys(self, a, b):
        key = tuple(x + y for x, y in zip(a, b))
        if self.key_degree(key) > self.cap:
            return None
        return key

    def mul(self, a, b):
        ia, da = _intize(a)
        ib, db = _intize(b)
        degs = {k: self.key_degree(k) for k in ia}
        degs_b = {k: self.key_degree(k) for k in ib}
        out = {}
        cap = self.cap
        for ka, ca in ia.items():
            da_ = degs[ka]
            for kb, cb in ib.items():
                if da_ + degs_b[kb] > cap:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return _fractionize(out, da * db)

    def key_integral(self, key):
        raise RuntimeError("a generic base has no integration functional")

    def key_str(self, key):
        parts = []
        for name, e in zip(self.gen_names, key):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class HyperplaneRing:
    """Q[h]/(h^(cap+1)) with a configurable top integral (1 for projective
    space, 2 for an odd quadric)."""

    def __init__(self, cap, top=1):
        self.cap = cap
        self.top = QQ(top)

    def one_key(self):
        return 0

    def key_degree(self, key):
        return key

    def mul(self, a, b):
        ia, da = _intize(a)
        ib, db = _intize(b)
        out = {}
        cap = self.cap
        for ka, ca in ia.items():
            for kb, cb in ib.items():
                k = ka + kb
                if k > cap:
                    continue
                out[k] = out.get(k, 0) + ca * cb
        return _fractionize(out, da * db)

    def key_integral(self, key):
        return self.top

    def key_str(self, key):
        return "1" if key == 0 else ("h" if key == 1 else f"h^{key}")


class SchubertRing:
    """Chow ring of Gr(k, k+m) in the Schur basis, partitions in a k x m box."""

    def __init__(self, k, m):
        self.k = k
        self.m = m
        self.cap = k * m
        self.box = tuple([m] * k)
        self._prod_cache = {}

    def one_key(self):
        return ()

    def key_degree(self, key):
        return sum(key)

    def in_box(self, lam):
        return len(lam) <= self.k and (not lam or lam[0] <= self.m)

    def mul(self, a, b):
        ia, da = _intize(a)
        ib, db = _intize(b)
        out = {}
        for ka, ca in ia.items():
            for kb, cb in ib.items():
                prod = self._basis_product(ka, kb)
                if not prod:
                    continue
                cab = ca * cb
                for lam, c in prod:
                    out[lam] = out.get(lam, 0) + cab * c
        return _fractionize(out, da * db)

    def _basis_product(self, ka, kb):
        key = (ka, kb)
        cached = self._prod_cache.get(key)
        if cached is None:
            cached = tuple((lam, c) for lam, c in symfun._mult_basis(ka, kb)
                           if self.in_box(lam))
            self._prod_cache[key] = cached
        return cached

    def key_integral(self, key):
        return QQ(1)

    def key_str(self, key):
        return "s" + str(tuple(key)) if key else "1"


class ProductRing:
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.cap = left.cap + right.cap

    def one_key(self):
        return (self.left.one_key(), self.right.one_key())

    def key_degree(self, key):
        return self.left.key_degree(key[0]) + self.right.key_degree(key[1])

    def mul(self, a, b):
        # group by factor keys and delegate to the factor rings
        out = {}
        for (la, ra), ca in a.items():
            for (lb, rb), cb in b.items():
                lprod = self.left.mul({la: QQ(1)}, {lb: QQ(1)})
                rprod = self.right.mul({ra: QQ(1)}, {rb: QQ(1)})
                for lk, lc in lprod.items():
                    for rk, rc in rprod.items():
                        k = (lk, rk)
                        v = out.get(k, 0) + ca * cb * lc * rc
                        if v:
                            out[k] = v
                        elif k in out:
                            del out[k]
        return out

    def key_integral(self, key):
        return self.left.key_integral(key[0]) * self.right.key_integral(key[1])

    def key_str(self, key):
        return f"{self.left.key_str(key[0])}(x){self.right.key_str(key[1])}"


class TowerRing:
    """base[H] / (H^r + rel_1 H^(r-1) + ... + rel_r), keys (base_key, j)."""

    def __init__(self, base, relation, r):
        self.base = base
        self.rel = relation  # rel[i-1] = c_i, so H^r = -sum_i rel[i-1] H^(r-i)
        self.r = r
        self.cap = base.cap + r - 1

    def one_key(self):
        return (self.base.one_key(), 0)

    def key_degree(self, key):
        return self.base.key_degree(key[0]) + key[1]

    def split(self, cls):
        coeffs = [dict() for _ in range(self.r)]
        for (bk, j), c in cls.items():
            coeffs[j][bk] = c
        return coeffs

    def join(self, coeffs):
        out = {}
        for j, layer in enumerate(coeffs):
            for bk, c in layer.items():
                if c:
                    out[(bk, j)] = c
        return out

    def mul(self, a, b):
        ca, cb = self.split(a), self.split(b)
        prod = [dict() for _ in range(2 * self.r - 1)]
        for i, la in enumerate(ca):
            if not la:
                continue
            for j, lb in enumerate(cb):
                if not lb:
                    continue
                p = self.base.mul(la, lb)
                tgt = prod[i + j]
                for k, v in p.items():
                    w = tgt.get(k, 0) + v
                    if w:
                        tgt[k] = w
                    elif k in tgt:
                        del tgt[k]
        # reduce H^p for p >= r via H^r = -sum rel_i H^(r-i)
        for p in range(2 * self.r - 2, self.r - 1, -1):
            layer = prod[p]
            if not layer:
                continue
            prod[p] = {}
            for i in range(1, self.r + 1):
                ci = self.rel[i - 1]
                if not ci:
                    continue
                corr = self.base.mul(ci, layer)
                tgt = prod[p - i]
                for k, v in corr.items():
                    w = tgt.get(k, 0) - v
                    if w:
                        tgt[k] = w
                    elif k in tgt:
                        del tgt[k]
        return self.join(prod[: self.r])

    def push_top(self, cls):
        """Coefficient of H^(r-1), as a base class."""
        return self.split(cls)[self.r - 1]

    def pull(self, base_cls):
        return {(bk, 0): c for bk, c in base_cls.items()}

    def key_integral(self, key):
        bk, j = key
        if j != self.r - 1:
            return QQ(0)
        return self.base.key_integral(bk)

    def key_str(self, key):
        bk, j = key
        b = self.base.key_str(bk)
        if j == 0:
            return b
        h = "H" if j == 1 else f"H^{j}"
        return h if b == "1" else f"{b}*{h}"


# ---------------------------------------------------------------------------
# graded classes
# ---------------------------------------------------------------------------

class GradedClass:
    """Sparse element of a graded ring: dict basis key -> Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        for k, v in (terms or {}).items():
            v = QQ(v)
            if v:
                self.terms[k] = v

    @classmethod
    def one(cls, ring):
        return cls(ring, {ring.one_key(): QQ(1)})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return GradedClass(self.ring, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) - v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return GradedClass(self.ring, out)

    def __neg__(self):
        return GradedClass(self.ring, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedClass):
            return GradedClass(self.ring, self.ring.mul(self.terms, other.terms))
        return GradedClass(self.ring, {k: v * QQ(other) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n):
        out = GradedClass.one(self.ring)
        for _ in range(n):
            out = out * self
        return out

    def component(self, d):
        return GradedClass(
            self.ring,
            {k: v for k, v in self.terms.items() if self.ring.key_degree(k) == d},
        )

    def max_degree(self):
        return max((self.ring.key_degree(k) for k in self.terms), default=0)

    def constant_term(self):
        return self.terms.get(self.ring.one_key(), QQ(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=lambda k: (self.ring.key_degree(k), str(k))):
            c = self.terms[k]
            ks = self.ring.key_str(k)
            if ks == "1":
                bits.append(str(c))
            elif c == 1:
                bits.append(ks)
            else:
                bits.append(f"{c}*{ks}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# varieties
# ---------------------------------------------------------------------------

class Variety:
    """A computational model of a smooth variety.

    `correction` carries everything integration has to tack on: top Chern
    classes of cutting bundles for zero loci and the fibre point class of
    flag towers standing in for Grassmann bundles.
    """

    def __init__(self, name, ring, dim, tangent=None, taut=None,
                 point_class=None, correction=None, parent=None):
        self.name = name
        self.ring = ring
        self.dim = dim
        self.tangent = tangent
        self.taut = dict(taut or {})
        self.point_class = point_class
        self.correction = correction if correction is not None else GradedClass.one(ring)
        self.parent = parent

    def one(self):
        return GradedClass.one(self.ring)

    def zero(self):
        return GradedClass(self.ring)

    def integrate(self, cls) -> Fraction:
        if cls.ring is not self.ring:
            raise ValueError("class does not live on this variety")
        total = QQ(0)
        work = self.ring.mul(cls.terms, self.correction.terms)
        cap = self.ring.cap
        for k, v in work.items():
            if self.ring.key_degree(k) == cap:
                total += v * self.ring.key_integral(k)
        return total

    def sheaf(self, rank, chern_terms):
        from .sheaves import SheafClass
        return SheafClass(rank, GradedClass(self.ring, chern_terms))

    def __repr__(self):
        return f"<{self.name}, dim {self.dim}>"


def _line_sheaf(ring, c1_terms):
    from .sheaves import SheafClass
    one = ring.one_key()
    terms = {one: QQ(1)}
    for k, v in c1_terms.items():
        terms[k] = terms.get(k, 0) + QQ(v)
    return SheafClass(1, GradedClass(ring, terms))


def projective_space(n) -> Variety:
    from .sheaves import dual, tensor, trivial, difference
    if n < 1:
        raise ValueError("need n >= 1")
    ring = HyperplaneRing(n, top=1)
    X = Variety(f"P{n}", ring, n)
    h = GradedClass(ring, {1: 1})
    U = _line_sheaf(ring, {1: -1})
    O1 = _line_sheaf(ring, {1: 1})
    Q = difference(trivial(ring, n + 1), U)
    X.taut = {"U": U, "Q": Q, "O(1)": O1}
    X.tangent = tensor(dual(U), Q)
    X.point_class = GradedClass(ring, {n: 1})
    X.hyperplane = h
    return X


def quadric(n) -> Variety:
    """Smooth quadric of odd dimension; the four-dimensional one is served
    by its Grassmannian model Gr(2,4)."""
    from .sheaves import SheafClass
    if n == 4:
        X = grassmannian(2, 4)
        X.name = "Q4"
        X.hyperplane = X.taut["O(1)"].chern.component(1)
        return X
    if n < 1 or n % 2 == 0:
        raise ValueError("only odd-dimensional quadrics (and Q4) are supported")
    ring = HyperplaneRing(n, top=2)
    X = Variety(f"Q{n}", ring, n)
    h = GradedClass(ring, {1: 1})
    O1 = _line_sheaf(ring, {1: 1})
    # c(T) = (1+h)^(n+2) / (1+2h)
    num = (GradedClass.one(ring) + h) ** (n + 2)
    inv = _invert_series(GradedClass.one(ring) + 2 * h)
    X.tangent = SheafClass(n, num * inv)
    X.taut = {"O(1)": O1}
    X.point_class = GradedClass(ring, {n: QQ(1, 2)})
    X.hyperplane = h
    return X


def _invert_series(cls):
    """Inverse of a class with constant term 1, up to the ring cap."""
    ring = cls.ring
    tail = cls - GradedClass.one(ring)
    out = GradedClass.one(ring)
    power = GradedClass.one(ring)
    sign = 1
    for _ in range(ring.cap):
        power = power * tail
        sign = -sign
        if power.is_zero():
            break
        out = out + sign * power
    return out


def grassmannian(k, n) -> Variety:
    from .sheaves import SheafClass, dual, tensor
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    ring = SchubertRing(k, n - k)
    X = Variety(f"Gr({k},{n})", ring, k * (n - k))
    cU = {(): QQ(1)}
    for i in range(1, k + 1):
        cU[tuple([1] * i)] = QQ((-1) ** i)
    cQ = {(): QQ(1)}
    for i in range(1, n - k + 1):
        cQ[(i,)] = QQ(1)
    U = SheafClass(k, GradedClass(ring, cU))
    Q = SheafClass(n - k, GradedClass(ring, cQ))
    O1 = _line_sheaf(ring, {(1,): 1})
    X.taut = {"U": U, "Q": Q, "O(1)": O1}
    X.tangent = tensor(dual(U), Q)
    X.point_class = GradedClass(ring, {ring.box: 1})
    return X


def product(A: Variety, B: Variety) -> Variety:
    from .sheaves import SheafClass
    ring = ProductRing(A.ring, B.ring)
    X = Variety(f"{A.name}x{B.name}", ring, A.dim + B.dim)
    nA = getattr(A, "nfactors", 1)
    nB = getattr(B, "nfactors", 1)
    X.nfactors = nA + nB

    def lift_left(cls):
        return GradedClass(ring, {(k, B.ring.one_key()): v for k, v in cls.terms.items()})

    def lift_right(cls):
        return GradedClass(ring, {(A.ring.one_key(), k): v for k, v in cls.terms.items()})

    def lift_sheaf(E, side):
        lift = lift_left if side == 0 else lift_right
        return SheafClass(E.rank, lift(E.chern))

    def renumber(name, offset):
        import re
        m = re.fullmatch(r"p(\d+)\*(.*)", name)
        if m:
            return f"p{int(m.group(1)) + offset}*{m.group(2)}"
        return f"p{1 + offset}*{name}"

    taut = {}
    for name, E in A.taut.items():
        taut[renumber(name, 0)] = lift_sheaf(E, 0)
    for name, E in B.taut.items():
        taut[renumber(name, nA)] = lift_sheaf(E, 1)
    X.taut = taut
    from .sheaves import sum_ as sheaf_sum
    X.tangent = sheaf_sum(lift_sheaf(A.tangent, 0), lift_sheaf(B.tangent, 1))
    if A.point_class is not None and B.point_class is not None:
        X.point_class = lift_left(A.point_class) * lift_right(B.point_class)
    X.correction = lift_left(A.correction) * lift_right(B.correction)
    X.factors = (A, B)
    X._lifts = (lift_left, lift_right)
    return X


def line_bundle(X: Variety, degrees) -> "SheafClass":
    """O(d_1, ..., d_k) on a product (or O(d) on a single factor)."""
    from .sheaves import tensor_power, tensor
    degrees = tuple(degrees)
    names = [n for n in X.taut if n.endswith("O(1)")]
    if len(degrees) == 1 and "O(1)" in X.taut:
        return tensor_power(X.taut["O(1)"], degrees[0])
    lines = []
    for i, d in enumerate(degrees):
        name = f"p{i+1}*O(1)"
        if name not in X.taut:
            raise ValueError(f"no factor {i+1} on {X.name}")
        lines.append(tensor_power(X.taut[name], d))
    out = lines[0]
    for L in lines[1:]:
        out = tensor(out, L)
    return out


def pull_class(V: Variety, cls: GradedClass) -> GradedClass:
    """Pull a class on the construction parent back to a tower variety."""
    return GradedClass(V.ring, V.ring.pull(cls.terms))


def pull_sheaf(V: Variety, E):
    from .sheaves import SheafClass
    return SheafClass(E.rank, pull_class(V, E.chern))


def projective_bundle(X: Variety, E) -> Variety:
    """P(E) of rank-one subsheaves: O(-1) c theta^*E, H = c1(O(1)),
    Grothendieck relation sum_i c_i(E) H^(r-i) = 0."""
    from .sheaves import SheafClass, dual, tensor, difference, sum_ as sheaf_sum
    r = E.rank
    if r < 1:
        raise ValueError("rank must be positive")
    rel = [E.chern.component(i).terms for i in range(1, r + 1)]
    ring = TowerRing(X.ring, rel, r)
    V = Variety(f"P({X.name}-bundle)", ring, X.dim + r - 1, parent=X)
    H = GradedClass(ring, {(X.ring.one_key(), 1): 1})
    U = SheafClass(1, GradedClass.one(ring) - H)
    Qrel = difference(pull_sheaf(V, E), U)
    V.taut = {"H": H, "U": U, "Q": Qrel, "O(1)": dual(U)}
    V.tangent = sheaf_sum(pull_sheaf(V, X.tangent), tensor(dual(U), Qrel))
    V.correction = pull_class(V, X.correction)
    if X.point_class is not None:
        V.point_class = pull_class(V, X.point_class) * H ** (r - 1)
    V.rel_rank = r
    V.H = H
    return V


def _theta_star_once(V: Variety, cls: GradedClass) -> GradedClass:
    return GradedClass(V.ring.base, V.ring.push_top(cls.terms))


def pushforward(V: Variety, cls: GradedClass) -> GradedClass:
    """theta_* to the construction parent of a relative variety."""
    chain = getattr(V, "chain", None)
    if chain is not None:
        out = cls
        for stage in reversed(chain):
            out = pushforward(stage, out)
        return out
    if not isinstance(V.ring, TowerRing):
        raise ValueError("not a relative variety")
    beta = getattr(V, "beta", None)
    if beta is not None:
        cls = cls * beta
    steps = getattr(V, "tower_steps", 1)
    ring = V.ring
    terms = cls.terms
    for _ in range(steps):
        terms = ring.push_top(terms)
        ring = ring.base
    return GradedClass(ring, terms)


def grassmann_bundle(X: Variety, F, k) -> Variety:
    """Gr(k, F) -> X, modelled on its relative full flag tower.

    The variety's ring is the k-step projective tower of flags inside the
    tautological subbundle; integrals against the stored fibre point class
    reproduce Grassmann-bundle integrals for classes symmetric in the flag.
    """
    from .sheaves import SheafClass, dual, tensor, difference, sum_ as sheaf_sum
    n = F.rank
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < rank(F)")
    cur = X
    rest = F
    lines = []  # c1 of the dual tautological lines, in the current ring
    for _ in range(k):
        cur = projective_bundle(cur, rest)
        lines = [pull_class(cur, c) for c in lines]
        lines.append(cur.H)
        rest = cur.taut["Q"]
    ring = cur.ring
    V = Variety(f"Gr({k},{X.name}-bundle)", ring, X.dim + k * (n - k), parent=X)
    beta = GradedClass.one(ring)
    for i, h in enumerate(lines):
        beta = beta * h ** (k - 1 - i)
    V.beta = beta
    V.tower_steps = k
    # tautologicals: U = sum of the flag lines, Q = theta^*F - U
    Usum = None
    for h in lines:
        L = SheafClass(1, _exp_line(ring, -1 * h))
        Usum = L if Usum is None else sheaf_sum(Usum, L)
    theta_F = SheafClass(F.rank, _lift_terms(ring, X.ring, F.chern.terms))
    Q = difference(theta_F, Usum)
    O1 = dual(_det_from_lines(ring, lines))
    V.taut = {"U": Usum, "Q": Q, "O(1)": O1}
    theta_T = SheafClass(X.tangent.rank, _lift_terms(ring, X.ring, X.tangent.chern.terms))
    V.tangent = sheaf_sum(theta_T, tensor(dual(Usum), Q))
    V.correction = _lift_terms(ring, X.ring, X.correction.terms) * beta
    if X.point_class is not None:
        pt = _lift_terms(ring, X.ring, X.point_class.terms)
        for h in lines:
            pt = pt * h ** (n - k)
        V.point_class = pt
    V.rel_dim = k * (n - k)
    return V


def _lift_terms(target_ring, source_ring, terms) -> GradedClass:
    """Pull a class dict up a chain of tower rings from source to target."""
    rings = []
    r = target_ring
    while r is not source_ring:
        if not isinstance(r, TowerRing):
            raise ValueError("source ring is not below the target ring")
        rings.append(r)
        r = r.base
    for r in reversed(rings):
        terms = r.pull(terms)
    return GradedClass(target_ring, terms)


def lift(V: Variety, cls):
    """Pull a class or sheaf class from an ancestor ring onto V's ring."""
    from .sheaves import SheafClass
    if isinstance(cls, SheafClass):
        return SheafClass(cls.rank, _lift_terms(V.ring, cls.chern.ring, cls.chern.terms))
    return _lift_terms(V.ring, cls.ring, cls.terms)


def _exp_line(ring, c1):
    terms = {ring.one_key(): QQ(1)}
    for kk, v in c1.terms.items():
        terms[kk] = terms.get(kk, 0) + v
    return GradedClass(ring, terms)


def _det_from_lines(ring, lines):
    from .sheaves import SheafClass
    c1 = GradedClass(ring)
    for h in lines:
        c1 = c1 + (-1) * h
    return SheafClass(1, _exp_line(ring, c1))


def flag_bundle(X: Variety, E, dims) -> Variety:
    """Relative flag bundle F_dims(E) as a chain of Grassmann bundles.

    dims is the strictly increasing tuple of subspace dimensions; the
    relative cotangent class is exposed as `omega_rel`.
    """
    from .sheaves import dual, tensor, sum_ as sheaf_sum
    dims = tuple(dims)
    if not dims or any(dims[i] >= dims[i + 1] for i in range(len(dims) - 1)):
        raise ValueError("dims must be strictly increasing")
    if dims[-1] >= E.rank:
        raise ValueError("flag dimensions must stay below the rank")
    cur = X
    rest = E
    rel_tans = []
    chain = []
    jumps = [dims[0]] + [dims[i + 1] - dims[i] for i in range(len(dims) - 1)]
    for j in jumps:
        cur = grassmann_bundle(cur, rest, j)
        chain.append(cur)
        rel_tans = [pull_sheaf(cur, t) for t in rel_tans]
        rel_tans.append(tensor(dual(cur.taut["U"]), cur.taut["Q"]))
        rest = cur.taut["Q"]

    ring = cur.ring
    rel_dim = sum(step.rel_dim for step in chain)
    V = Variety(f"F{dims}({X.name}-bundle)", ring, X.dim + rel_dim, parent=X)
    V.correction = cur.correction
    V.chain = chain
    rel_tangent = rel_tans[0]
    for t in rel_tans[1:]:
        rel_tangent = sheaf_sum(rel_tangent, t)
    V.rel_tangent = rel_tangent
    V.omega_rel = dual(rel_tangent)
    theta_T = lift(V, X.tangent)
    V.tangent = sheaf_sum(theta_T, rel_tangent)
    V.rel_dim = rel_dim
    V.taut = dict(cur.taut)
    return V


def zero_locus(Xp: Variety, V) -> Variety:
    """Zero locus of a general section of V, sharing the ambient ring."""
    from .sheaves import difference
    if V.rank > Xp.dim:
        raise ValueError("rank exceeds the ambient dimension")
    ctop = V.chern.component(V.rank)
    Z = Variety(f"Z({Xp.name})", Xp.ring, Xp.dim - V.rank, parent=Xp)
    Z.tangent = difference(Xp.tangent, V)
    Z.taut = dict(Xp.taut)
    Z.correction = Xp.correction * ctop
    Z.cut = V
    Z.point_class = None
    for attr in ("hyperplane", "H", "factors", "_lifts", "beta", "tower_steps",
                 "rel_tangent", "omega_rel", "rel_dim", "chain", "_stack"):
        if hasattr(Xp, attr):
            setattr(Z, attr, getattr(Xp, attr))
    return Z


def generic_base(dim, symbols) -> Variety:
    """Formal smooth base with free Chern-class generators per symbol.

    symbols: list of (name, rank); symbol S of rank r contributes generators
    S1..S_min(r, dim) in degrees 1..min(r, dim).  No integration.
    """
    from .sheaves import SheafClass
    if dim > 12:
        raise ValueError("generic bases are capped at dimension 12")
    gens = []
    spans = {}
    for name, rank in symbols:
        lo = len(gens)
        for i in range(1, min(rank, dim) + 1):
            gens.append((f"{name.lower()}{i}", i))
        spans[name] = (lo, len(gens), rank)
    ring = FreeRing(dim, gens)
    X = Variety(f"generic({dim})", ring, dim)
    X.taut = {}
    for name, (lo, hi, rank) in spans.items():
        terms = {ring.one_key(): QQ(1)}
        for idx in range(lo, hi):
            terms[ring.gen_key(idx)] = QQ(1)
        X.taut[name] = SheafClass(rank, GradedClass(ring, terms))
    if "T" in X.taut:
        X.tangent = X.taut["T"]
    X.point_class = None
    return X


def parse_poly(text, ring: FreeRing) -> GradedClass:
    """Parse a polynomial in the ring's named generators.

    Supports + - * ^, parentheses, integer and p/q rational constants.
    Used for the textual reference polynomials of the verification data.
    """
    import re
    toks = re.findall(r"\d+/\d+|\d+|[A-Za-z]\w*|[-+*^()]", text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    one = GradedClass.one(ring)

    def atom():
        t = take()
        if t == "(":
            e = expr_()
            if take() != ")":
                raise ValueError("unbalanced parenthesis")
            return e
        if "/" in t:
            a, b = t.split("/")
            return QQ(int(a), int(b)) * one
        if t.isdigit():
            return int(t) * one
        if t not in ring.gen_names:
            raise ValueError(f"unknown generator {t!r}")
        return GradedClass(ring, {ring.gen_key(ring.gen_names.index(t)): 1})

    def power():
        e = atom()
        if peek() == "^":
            take()
            return e ** int(take())
        return e

    def term():
        e = power()
        while peek() == "*":
            take()
            e = e * power()
        return e

    def expr_():
        sign = -1 if peek() == "-" else 1
        if peek() in ("+", "-"):
            take()
        e = sign * term()
        while peek() in ("+", "-"):
            s = -1 if take() == "-" else 1
            e = e + s * term()
        return e

    out = expr_()
    if pos != len(toks):
        raise ValueError("trailing tokens in polynomial")
    return out


def integrate(X: Variety, cls: GradedClass) -> Fraction:
    return X.integrate(cls)


def euler_characteristic(X: Variety, F) -> int:
    """chi(F) by Hirzebruch-Riemann-Roch; asserts integrality."""
    from .sheaves import ch, todd
    val = X.integrate(ch(F) * todd(X.tangent))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral chi = {val}")
    return int(val)
