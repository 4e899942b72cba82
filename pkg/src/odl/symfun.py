"""Partition combinatorics, Schur functions and character-level plethysm.

Everything here is exact: partitions are plain tuples of ints, symmetric
functions live in sparse dicts with integer coefficients, and GL characters
are dicts mapping exponent vectors to multiplicities.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

# A partition is a weakly decreasing tuple of positive ints (no trailing zeros).
Partition = tuple

# A SchurVector is a sparse integer combination of partitions.
SchurVector = dict


def partition(parts) -> Partition:
    """Normalize an iterable of nonnegative ints into a partition tuple."""
    p = tuple(x for x in parts if x != 0)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not weakly decreasing: {parts}")
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts}")
    return p


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """True if the diagram of mu fits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def hook_product(lam: Partition) -> int:
    conj = conjugate(lam)
    h = 1
    for i, row in enumerate(lam):
        for j in range(row):
            h *= row - j + conj[j] - i - 1
    return h


def weyl_dim(lam, n: int) -> int:
    """Dimension of the irreducible GL(n) module with highest weight lam.

    lam may be any weakly decreasing integer vector of length <= n; a
    determinant twist is split off first.  A partition longer than n gives 0.
    """
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not dominant: {lam}")
    shift = min(lam) if lam else 0
    if shift < 0:
        lam = tuple(x - shift for x in lam)
    lam = partition(lam)
    if len(lam) > n:
        return 0
    num = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
    d = Fraction(num, hook_product(lam))
    assert d.denominator == 1
    return int(d)


def partitions_of(n: int, max_part=None, max_len=None):
    """Yield all partitions of n, largest part first."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem, cap, room):
        if rem == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(cap, rem), 0, -1):
            for rest in rec(rem - first, first, room - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_len)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}, by tableau count.

    Counts skew semistandard tableaux of shape lam/mu and content nu whose
    reverse reading word is a lattice word.  Returns 0 on size mismatch.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if size(lam) != size(mu) + size(nu) or not contains(lam, mu):
        return 0
    if not nu:
        return 1
    rows = len(lam)
    mu_full = mu + (0,) * (rows - len(mu))
    # cells in reading order: top row to bottom, right to left within a row
    cells = []
    for i in range(rows):
        for j in range(lam[i] - 1, mu_full[i] - 1, -1):
            cells.append((i, j))

    filling = {}
    counts = [0] * (len(nu) + 1)  # counts[v] = how many v's placed so far
    total = 0

    def ok(i, j, v):
        # content bound
        if v > len(nu) or counts[v] >= nu[v - 1]:
            return False
        # lattice condition on the reverse reading word
        if v > 1 and counts[v] >= counts[v - 1]:
            return False
        # weakly increasing along the row (right neighbour already placed)
        right = filling.get((i, j + 1))
        if right is not None and v > right:
            return False
        # strictly increasing down the column
        up = filling.get((i - 1, j))
        if i > 0 and j >= mu_full[i - 1]:
            if up is None or v <= up:
                return False
        return True

    def rec(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        for v in range(1, len(nu) + 1):
            if ok(i, j, v):
                filling[(i, j)] = v
                counts[v] += 1
                rec(idx + 1)
                counts[v] -= 1
                del filling[(i, j)]

    rec(0)
    return total


@lru_cache(maxsize=None)
def _mult_basis(mu: Partition, nu: Partition):
    """All (lam, c^lam_{mu,nu}) with nonzero coefficient, as a tuple."""
    n = size(mu) + size(nu)
    width = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    depth = len(mu) + len(nu)
    out = []
    for lam in partitions_of(n, max_part=width, max_len=depth):
        if not contains(lam, mu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def schur_product(a: SchurVector, b: SchurVector, box=None) -> SchurVector:
    """Product of Schur vectors; partitions outside an optional (rows, cols)
    box are discarded."""
    out: SchurVector = {}
    for mu, ca in a.items():
        for nu, cb in b.items():
            for lam, c in _mult_basis(partition(mu), partition(nu)):
                if box is not None:
                    rows, cols = box
                    if len(lam) > rows or (lam and lam[0] > cols):
                        continue
                out[lam] = out.get(lam, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Schur polynomials in the elementary basis (dual Jacobi-Trudi)
# ---------------------------------------------------------------------------

def _e_monomial(k: int, n_max: int):
    """Exponent tuple of the single symbol e_k, or None when it vanishes."""
    if k == 0:
        return (0,) * n_max
    if k < 0 or k > n_max:
        return None
    exp = [0] * n_max
    exp[k - 1] = 1
    return tuple(exp)


def _poly_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def schur_in_elementary(lam: Partition, n_max: int) -> dict:
    """Expand s_lam as a polynomial in e_1..e_{n_max}.

    Returns a dict from exponent tuples (one slot per e_i) to integer
    coefficients; e_k with k > n_max is treated as zero.
    """
    lam = partition(lam)
    if not lam:
        return {(0,) * n_max: 1}
    conj = conjugate(lam)
    ell = len(conj)
    # det(e_{conj_i - i + j}), expanded over permutations
    out = {}
    import itertools
    for perm in itertools.permutations(range(ell)):
        sign = _perm_sign(perm)
        term = {(0,) * n_max: 1}
        zero = False
        for i in range(ell):
            m = _e_monomial(conj[i] - i + perm[i], n_max)
            if m is None:
                zero = True
                break
            term = _poly_mul(term, {m: 1})
        if zero:
            continue
        for mono, c in term.items():
            out[mono] = out.get(mono, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_vector_in_elementary(vec: SchurVector, n_max: int) -> dict:
    out = {}
    for lam, c in vec.items():
        for mono, coef in schur_in_elementary(partition(lam), n_max).items():
            out[mono] = out.get(mono, 0) + c * coef
    return {k: v for k, v in out.items() if v}


def elementary_values(values) -> list:
    """e_0..e_n evaluated at an explicit tuple of numbers."""
    vals = list(values)
    e = [1] + [0] * len(vals)
    for v in vals:
        for k in range(len(vals), 0, -1):
            e[k] = e[k] + v * e[k - 1]
    return e


def schur_evaluate(lam: Partition, values) -> int:
    """s_lam at an explicit point, via the monomial (tableau) expansion."""
    vals = list(values)
    total = 0
    for mono, mult in schur_monomials(partition(lam), len(vals)).items():
        term = mult
        for x, a in zip(vals, mono):
            term *= x ** a
        total += term
    return total


# ---------------------------------------------------------------------------
# Monomial expansions and GL characters
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def schur_monomials(lam: Partition, n: int) -> dict:
    """Monomial expansion of s_lam(x_1..x_n): exponent tuple -> multiplicity.

    Peels horizontal strips off for the last variable and recurses.
    """
    lam = partition(lam)
    if len(lam) > n:
        return {}
    if n == 0:
        return {(): 1} if not lam else {}
    out = {}
    for mu in _horizontal_substrips(lam):
        k = size(lam) - size(mu)
        for mono, mult in schur_monomials(mu, n - 1).items():
            key = mono + (k,)
            out[key] = out.get(key, 0) + mult
    return out


def _horizontal_substrips(lam: Partition):
    """All mu <= lam with lam/mu a horizontal strip."""
    rows = len(lam)

    def rec(i, prev_floor):
        if i == rows:
            yield ()
            return
        hi = lam[i]
        lo = lam[i + 1] if i + 1 < rows else 0
        for v in range(min(hi, prev_floor), lo - 1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for mu in rec(0, lam[0] if lam else 0):
        yield partition(mu)


class GLCharacter:
    """Formal character of a GL(n)-module: exponent vectors with multiplicity.

    Exponents may be negative (determinant twists).  Supports exactly the
    operations the engine needs: sums, products, Adams scaling and the
    exterior/symmetric power plethysms.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def standard(cls, n):
        terms = {}
        for i in range(n):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = 1
        return cls(n, terms)

    @classmethod
    def schur(cls, lam, n, block_offset=0, total=None):
        """Character of S_lam(C^n); lam may have negative parts.

        With block_offset/total the n variables are embedded into a larger
        exponent vector (used for block characters on flag spaces).
        """
        lam = tuple(lam)
        shift = min(lam) if lam else 0
        if shift > 0:
            shift = 0
        base = partition(tuple(x - shift for x in lam))
        total = total or n
        terms = {}
        for mono, mult in schur_monomials(base, n).items():
            e = [0] * total
            for i, a in enumerate(mono):
                e[block_offset + i] = a + shift
            terms[tuple(e)] = terms.get(tuple(e), 0) + mult
        return cls(total, terms)

    def dim(self):
        return sum(self.terms.values())

    def __eq__(self, other):
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GLCharacter(self.n, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return GLCharacter(self.n, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return GLCharacter(self.n, {k: v * other for k, v in self.terms.items()})
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + va * vb
        return GLCharacter(self.n, out)

    __rmul__ = __mul__

    def dual(self):
        return GLCharacter(self.n, {tuple(-x for x in k): v for k, v in self.terms.items()})

    def adams(self, j):
        """psi^j: scale every exponent vector by j."""
        out = {}
        for k, v in self.terms.items():
            kk = tuple(j * x for x in k)
            out[kk] = out.get(kk, 0) + v
        return GLCharacter(self.n, out)

    def wedge(self, i):
        return wedge_of_character(self, i)

    def sym(self, i):
        return sym_of_character(self, i)

    def det(self):
        """Character of the top exterior power (must be one-dimensional)."""
        d = self.dim()
        top = self.wedge(d)
        if len(top.terms) != 1 or set(top.terms.values()) != {1}:
            raise ValueError("character has no line determinant")
        return top

    def schur_functor(self, lam):
        """S_lam applied to this character, via dual Jacobi-Trudi in wedges."""
        lam = tuple(lam)
        shift = min(lam) if lam else 0
        if shift > 0:
            shift = 0
        base = partition(tuple(x - shift for x in lam))
        conj = conjugate(base)
        ell = len(conj)
        import itertools
        wedges = {}

        def wedge_cached(k):
            if k not in wedges:
                wedges[k] = self.wedge(k) if 0 <= k <= self.dim() else None
            return wedges[k]

        out = GLCharacter(self.n)
        for perm in itertools.permutations(range(ell)):
            sign = _perm_sign(perm)
            term = GLCharacter.one(self.n)
            zero = False
            for i in range(ell):
                k = conj[i] - i + perm[i]
                w = wedge_cached(k)
                if w is None:
                    zero = True
                    break
                term = term * w
            if not zero:
                out = out + sign * term
        if shift < 0:
            out = out * self.det().adams(shift)
        return out

    def check_symmetric(self, blocks=None):
        """Verify invariance under permutations (within each block)."""
        if blocks is None:
            blocks = [self.n]
        starts = []
        s = 0
        for b in blocks:
            starts.append(s)
            s += b
        groups = {}
        for k, v in self.terms.items():
            key = tuple(
                tuple(sorted(k[st:st + b], reverse=True))
                for st, b in zip(starts, blocks)
            )
            groups.setdefault(key, {})[k] = v
        import math as _m
        for key, members in groups.items():
            orbit = 1
            for block in key:
                counts = {}
                for x in block:
                    counts[x] = counts.get(x, 0) + 1
                o = factorial(len(block))
                for c in counts.values():
                    o //= factorial(c)
                orbit *= o
            mults = set(members.values())
            if len(mults) != 1 or len(members) != orbit:
                raise ValueError("character is not symmetric")
        return True


def wedge_of_character(chi: GLCharacter, i: int) -> GLCharacter:
    """Plethysm e_i(chi) by the Newton recursion
    i * e_i(chi) = sum_{j=1..i} (-1)^(j-1) e_{i-j}(chi) * psi^j(chi)."""
    if i < 0:
        raise ValueError("negative exterior power")
    if any(v < 0 for v in chi.terms.values()):
        raise ValueError("negative multiplicity in character")
    levels = [GLCharacter.one(chi.n)]
    psis = [None] + [chi.adams(j) for j in range(1, i + 1)]
    for k in range(1, i + 1):
        acc = GLCharacter(chi.n)
        for j in range(1, k + 1):
            term = levels[k - j] * psis[j]
            acc = acc + (term if j % 2 == 1 else (-1) * term)
        terms = {}
        for key, v in acc.terms.items():
            q, r = divmod(v, k)
            if r:
                raise ArithmeticError("wedge recursion left a remainder")
            terms[key] = q
        levels.append(GLCharacter(chi.n, terms))
    return levels[i]


def sym_of_character(chi: GLCharacter, i: int) -> GLCharacter:
    """Plethysm h_i(chi): i * h_i(chi) = sum_j h_{i-j}(chi) * psi^j(chi)."""
    if i < 0:
        raise ValueError("negative symmetric power")
    levels = [GLCharacter.one(chi.n)]
    psis = [None] + [chi.adams(j) for j in range(1, i + 1)]
    for k in range(1, i + 1):
        acc = GLCharacter(chi.n)
        for j in range(1, k + 1):
            acc = acc + levels[k - j] * psis[j]
        terms = {}
        for key, v in acc.terms.items():
            q, r = divmod(v, k)
            if r:
                raise ArithmeticError("sym recursion left a remainder")
            terms[key] = q
        levels.append(GLCharacter(chi.n, terms))
    return levels[i]


def schur_decompose(chi: GLCharacter, blocks=None, check=True):
    """Decompose a (blockwise) symmetric character into Schur summands.

    Returns a list of (weight, multiplicity) where weight is a tuple of
    dominant integer vectors, one per block.  Subtracts the character of the
    lexicographically leading monomial repeatedly; a negative multiplicity
    means the input was not a genuine module character and raises.
    """
    if blocks is None:
        blocks = [chi.n]
    if check:
        chi.check_symmetric(blocks)
    starts = []
    s = 0
    for b in blocks:
        starts.append(s)
        s += b
    rest = GLCharacter(chi.n, dict(chi.terms))
    out = []
    while rest.terms:
        lead = max(rest.terms)
        mult = rest.terms[lead]
        if mult < 0:
            raise ValueError("not a polynomial character (negative leading term)")
        weight = tuple(tuple(lead[st:st + b]) for st, b in zip(starts, blocks))
        for w in weight:
            if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
                raise ValueError(f"leading weight {weight} is not blockwise dominant")
        piece = GLCharacter.one(chi.n)
        for w, st, b in zip(weight, starts, blocks):
            piece = piece * GLCharacter.schur(w, b, block_offset=st, total=chi.n)
        rest = rest - mult * piece
        out.append((weight, mult))
    return out


# ---------------------------------------------------------------------------
# Closed-form numerology for rank loci and decomposable forms
# ---------------------------------------------------------------------------

def rank_variety_numerology(lam: Partition, r: int):
    """(d_lam, r_lam) for the rank-r locus cut by the lam-functor of a bundle:
    r_lam is the hook-content dimension, d_lam = |lam| * r_lam / r."""
    lam = partition(lam)
    if len(lam) > r:
        raise ValueError("partition longer than the rank")
    r_lam = weyl_dim(lam, r)
    d = Fraction(size(lam) * r_lam, r)
    assert d.denominator == 1, "d_lam must be integral"
    return int(d), r_lam


def n_value(k: int, ell: int, d: int, r: int) -> int:
    """Determinant exponent for the subbundle of (k+ell)-forms built from a
    rank-r subspace: the crepancy condition holds exactly when this equals d.
    """
    if not (0 <= k <= r <= d and k + ell <= d and ell >= 0):
        raise ValueError("need 0 <= k <= r <= d and k + ell <= d")
    total = Fraction(0)
    for i in range(min(r - k, ell) + 1):
        num = factorial(r - 1) * factorial(d - r - 1)
        den = (factorial(k + i) * factorial(r - k - i)
               * factorial(ell - i) * factorial(d - r - ell + i))
        total += Fraction(num, den) * ((k + i) * d - (k + ell) * r)
    assert total.denominator == 1
    return int(total)
