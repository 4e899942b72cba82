"""Lambda-ring calculus on formal sheaf classes.

A SheafClass is a rank (possibly negative, for virtual classes) together
with a total Chern class whose degree-zero part is 1.  Sums use the Whitney
formula, differences divide total Chern classes, and tensor, exterior,
symmetric and Schur operations are carried out on the Chern character with
Adams operations; nothing ever adjoins splitting variables.
"""

from __future__ import annotations

from fractions import Fraction

from . import symfun
from .chow import GradedClass, _invert_series

QQ = Fraction


class SheafClass:
    """Rank plus characteristic data, kept lazily in whichever of the two
    equivalent forms (total Chern class, Chern character) is cheapest."""

    __slots__ = ("rank", "_chern", "_ch", "_ring")

    def __init__(self, rank, chern: GradedClass = None, ch: GradedClass = None):
        if chern is None and ch is None:
            raise ValueError("need a Chern class or a Chern character")
        if chern is not None and chern.constant_term() != 1:
            raise ValueError("total Chern class must start with 1")
        self.rank = rank
        self._chern = chern
        self._ch = ch
        self._ring = (chern if chern is not None else ch).ring

    @property
    def ring(self):
        return self._ring

    @property
    def chern(self) -> GradedClass:
        if self._chern is None:
            self._chern = _chern_terms_from_ch(self._ch)
        return self._chern

    def c(self, i):
        return self.chern.component(i)

    def c1(self):
        if self._chern is None and self._ch is not None:
            return self._ch.component(1)
        return self.chern.component(1)

    def ctop(self):
        if self.rank < 0:
            raise ValueError("virtual class has no top Chern class")
        return self.chern.component(self.rank)

    def __add__(self, other):
        return sum_(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __mul__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = trivial(self.ring, 0)
        for _ in range(n):
            out = sum_(out, self)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.rank == other.rank and self.chern == other.chern

    def __repr__(self):
        return f"<sheaf class rank {self.rank}, c = {self.chern}>"


def _chern_terms_from_ch(chclass: GradedClass) -> GradedClass:
    """Total Chern class from a character, by Newton's identities."""
    ring = chclass.ring
    cap = ring.cap
    p = [GradedClass(ring)]
    fact = 1
    for m in range(1, cap + 1):
        fact *= m
        p.append(fact * chclass.component(m))
    e = [GradedClass.one(ring)]
    for m in range(1, cap + 1):
        acc = GradedClass(ring)
        for i in range(1, m + 1):
            acc = acc + (-1) ** (i - 1) * (e[m - i] * p[i])
        e.append(QQ(1, m) * acc)
    total = GradedClass(ring)
    for em in e:
        total = total + em
    return total


def trivial(ring, rank) -> SheafClass:
    return SheafClass(rank, GradedClass.one(ring))


def line(ring, c1: GradedClass) -> SheafClass:
    return SheafClass(1, GradedClass.one(ring) + c1)


def dual(E: SheafClass) -> SheafClass:
    terms = {}
    ring = E.ring
    for k, v in E.chern.terms.items():
        terms[k] = v * (-1) ** ring.key_degree(k)
    return SheafClass(E.rank, GradedClass(ring, terms))


def sum_(E: SheafClass, F: SheafClass) -> SheafClass:
    return SheafClass(E.rank + F.rank, E.chern * F.chern)


def difference(E: SheafClass, F: SheafClass) -> SheafClass:
    return SheafClass(E.rank - F.rank, E.chern * _invert_series(F.chern))


def det(E: SheafClass) -> SheafClass:
    return line(E.ring, E.c1())


def tensor_line(E: SheafClass, L: SheafClass) -> SheafClass:
    if L.rank != 1:
        raise ValueError("twist must have rank one")
    return tensor(E, L)


def tensor_power(L: SheafClass, n: int) -> SheafClass:
    """L^n for a line class, any integer n."""
    if L.rank != 1:
        raise ValueError("rank-one class required")
    return line(L.ring, n * L.c1())


# ---------------------------------------------------------------------------
# Chern character and Todd class
# ---------------------------------------------------------------------------

def _power_sums(E: SheafClass, upto: int):
    """Newton power sums p_1..p_upto of the Chern roots."""
    c = [E.chern.component(i) for i in range(upto + 1)]
    zero = GradedClass(E.ring)
    p = [zero]
    for m in range(1, upto + 1):
        acc = GradedClass(E.ring)
        for i in range(1, m):
            acc = acc + (-1) ** (i - 1) * (c[i] * p[m - i])
        acc = acc + (-1) ** (m - 1) * (m * c[m])
        p.append(acc)
    return p


def ch(E: SheafClass) -> GradedClass:
    """Chern character: rank + c1 + (c1^2 - 2 c2)/2 + ... (cached)."""
    if E._ch is not None:
        return E._ch
    ring = E.ring
    cap = ring.cap
    p = _power_sums(E, cap)
    out = GradedClass(ring, {ring.one_key(): QQ(E.rank)})
    fact = 1
    for m in range(1, cap + 1):
        fact *= m
        out = out + QQ(1, fact) * p[m]
    E._ch = out
    return out


def chern_from_ch(chclass: GradedClass) -> SheafClass:
    """Invert ch: recover (rank, total Chern class) up to truncation."""
    ring = chclass.ring
    cap = ring.cap
    rank = chclass.constant_term()
    if rank.denominator != 1:
        raise ValueError("rank must be an integer")
    p = [GradedClass(ring)]
    fact = 1
    for m in range(1, cap + 1):
        fact *= m
        p.append(fact * chclass.component(m))
    # m e_m = sum_{i=1..m} (-1)^(i-1) e_{m-i} p_i
    e = [GradedClass.one(ring)]
    for m in range(1, cap + 1):
        acc = GradedClass(ring)
        for i in range(1, m + 1):
            acc = acc + (-1) ** (i - 1) * (e[m - i] * p[i])
        e.append(QQ(1, m) * acc)
    total = GradedClass(ring)
    for em in e:
        total = total + em
    return SheafClass(int(rank), total)


def _series_mul(a, b, cap):
    out = [QQ(0)] * (cap + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += x * y
    return out


def _series_inverse(a, cap):
    assert a[0] == 1
    inv = [QQ(0)] * (cap + 1)
    inv[0] = QQ(1)
    for m in range(1, cap + 1):
        s = QQ(0)
        for i in range(1, m + 1):
            s += a[i] * inv[m - i]
        inv[m] = -s
    return inv


def _series_log(a, cap):
    """log of a power series with constant term 1."""
    # l' = a'/a
    d = [i * a[i] for i in range(1, cap + 1)] + [QQ(0)]
    inv = _series_inverse(a, cap)
    dl = _series_mul(d, inv, cap)
    out = [QQ(0)] * (cap + 1)
    for m in range(1, cap + 1):
        out[m] = dl[m - 1] / m
    return out


_todd_log_cache = {}


def _todd_log_coeffs(cap):
    """Coefficients a_m with log(x / (1 - e^-x)) = sum a_m x^m."""
    if cap in _todd_log_cache:
        return _todd_log_cache[cap]
    # (1 - e^-x)/x = sum_{k>=0} (-1)^k x^k / (k+1)!
    series = []
    fact = 1
    for k in range(cap + 1):
        fact *= k + 1
        series.append(QQ((-1) ** k, fact))
    q = _series_inverse(series, cap)
    out = _series_log(q, cap)
    _todd_log_cache[cap] = out
    return out


def _exp_class(cls: GradedClass) -> GradedClass:
    """exp of a class with no degree-zero part."""
    ring = cls.ring
    out = GradedClass.one(ring)
    power = GradedClass.one(ring)
    fact = 1
    for m in range(1, ring.cap + 1):
        power = power * cls
        if power.is_zero():
            break
        fact *= m
        out = out + QQ(1, fact) * power
    return out


def todd(E: SheafClass) -> GradedClass:
    """Todd class: 1 + c1/2 + (c1^2 + c2)/12 + ..."""
    ring = E.ring
    cap = ring.cap
    a = _todd_log_coeffs(cap)
    p = _power_sums(E, cap)
    log_td = GradedClass(ring)
    for m in range(1, cap + 1):
        if a[m]:
            log_td = log_td + a[m] * p[m]
    return _exp_class(log_td)


def todd_from_ch(chclass: GradedClass) -> GradedClass:
    """Todd class straight from a Chern character (power sums are just
    scaled character components, so no Chern-class conversion is needed)."""
    ring = chclass.ring
    cap = ring.cap
    a = _todd_log_coeffs(cap)
    log_td = GradedClass(ring)
    fact = 1
    for m in range(1, cap + 1):
        fact *= m
        if a[m]:
            log_td = log_td + (a[m] * fact) * chclass.component(m)
    return _exp_class(log_td)


_kos_log_cache = {}


def _koszul_log_coeffs(cap):
    """Coefficients b_m with log((1 - e^-x)/x) = sum b_m x^m."""
    if cap in _kos_log_cache:
        return _kos_log_cache[cap]
    series = []
    fact = 1
    for k in range(cap + 1):
        fact *= k + 1
        series.append(QQ((-1) ** k, fact))
    out = _series_log(series, cap)
    _kos_log_cache[cap] = out
    return out


def koszul_factor(W: SheafClass, ch_W: GradedClass = None) -> GradedClass:
    """c_top(W) / td(W), the factor turning ambient Riemann-Roch integrals
    into integrals over the zero locus of a section of W."""
    ring = W.ring
    cap = ring.cap
    if ch_W is None:
        ch_W = ch(W)
    b = _koszul_log_coeffs(cap)
    log_f = GradedClass(ring)
    fact = 1
    for m in range(1, cap + 1):
        fact *= m
        if b[m]:
            log_f = log_f + (b[m] * fact) * ch_W.component(m)
    return W.ctop() * _exp_class(log_f)


def exp_class(cls: GradedClass) -> GradedClass:
    return _exp_class(cls)


def dual_ch(chclass: GradedClass) -> GradedClass:
    ring = chclass.ring
    return GradedClass(ring, {k: v * (-1) ** ring.key_degree(k)
                              for k, v in chclass.terms.items()})


def wedge_ch(chclass: GradedClass, k: int) -> GradedClass:
    return _wedge_ch_levels(chclass, k)[k]


# ---------------------------------------------------------------------------
# tensor, exterior, symmetric and Schur operations
# ---------------------------------------------------------------------------

def tensor(E: SheafClass, F: SheafClass) -> SheafClass:
    return chern_from_ch(ch(E) * ch(F))


def _adams_ch(chclass: GradedClass, j: int) -> GradedClass:
    ring = chclass.ring
    terms = {}
    for k, v in chclass.terms.items():
        terms[k] = v * j ** ring.key_degree(k)
    return GradedClass(ring, terms)


def _wedge_ch_levels(chE: GradedClass, k: int):
    """Chern characters of wedge^0..wedge^k via the Newton recursion."""
    ring = chE.ring
    one = GradedClass.one(ring)
    levels = [one]
    psis = [None] + [_adams_ch(chE, j) for j in range(1, k + 1)]
    for m in range(1, k + 1):
        acc = GradedClass(ring)
        for j in range(1, m + 1):
            term = levels[m - j] * psis[j]
            acc = acc + ((-1) ** (j - 1)) * term
        levels.append(QQ(1, m) * acc)
    return levels


def wedge(E: SheafClass, k: int) -> SheafClass:
    if k < 0:
        raise ValueError("negative exterior power")
    return chern_from_ch(_wedge_ch_levels(ch(E), k)[k])


def sym(E: SheafClass, k: int) -> SheafClass:
    if k < 0:
        raise ValueError("negative symmetric power")
    chE = ch(E)
    ring = chE.ring
    levels = [GradedClass.one(ring)]
    psis = [None] + [_adams_ch(chE, j) for j in range(1, k + 1)]
    for m in range(1, k + 1):
        acc = GradedClass(ring)
        for j in range(1, m + 1):
            acc = acc + levels[m - j] * psis[j]
        levels.append(QQ(1, m) * acc)
    return chern_from_ch(levels[k])


def schur(E: SheafClass, lam) -> SheafClass:
    """Schur functor S_lam(E) via the dual Jacobi-Trudi determinant in
    exterior powers, multiplied at Chern-character level."""
    lam = symfun.partition(lam)
    if not lam:
        return trivial(E.ring, 1)
    conj = symfun.conjugate(lam)
    ell = len(conj)
    kmax = max(conj[i] - i + (ell - 1) for i in range(ell))
    levels = _wedge_ch_levels(ch(E), max(kmax, 0))
    import itertools
    ring = E.ring
    out = GradedClass(ring)
    for perm in itertools.permutations(range(ell)):
        sign = symfun._perm_sign(perm)
        term = GradedClass.one(ring)
        zero = False
        for i in range(ell):
            k = conj[i] - i + perm[i]
            if k < 0:
                zero = True
                break
            term = term * levels[k]
        if not zero:
            out = out + sign * term
    return chern_from_ch(out)


def adjoint_sl(E: SheafClass) -> SheafClass:
    """Traceless endomorphisms: E (x) E^* minus a trivial line."""
    if E.rank < 2:
        raise ValueError("need rank at least two")
    return difference(tensor(E, dual(E)), trivial(E.ring, 1))


def cotangent_of_zero_locus(ambient_tangent: SheafClass, normal: SheafClass,
                            p: int) -> SheafClass:
    """K-class of Omega^p on a zero locus: wedge^p of
    (Omega^1 ambient - dual normal), restricted."""
    omega1 = difference(dual(ambient_tangent), dual(normal))
    return wedge(omega1, p)
