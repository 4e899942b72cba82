"""Cohomology of homogeneous bundles on type-A flag spaces and products.

Weights are written blockwise against the duals of the tautological
sub/quotient bundles: on Gr(k,n) the weight (a | b) with a of length k and
b of length n-k labels S_a(U^*) (x) S_b(Q^*).  The rho-shift rule computes
the unique nonvanishing cohomological degree, and the answers are labelled
by dominant weights nu, standing for S_nu of the dual of the defining
bundle.  Composite bundles are decomposed into irreducibles at character
level first.

The Koszul assembly reports honest dimension intervals: when several
spectral-sequence entries could interact, the possible cancellation is
bounded by a small max-flow, never guessed.
"""

from __future__ import annotations

from . import expr as ex
from . import symfun

# ---------------------------------------------------------------------------
# flag spaces
# ---------------------------------------------------------------------------


class FlagSpace:
    """Product of type-A Grassmannians Gr(k_i, n_i); P^m is Gr(1, m+1)."""

    def __init__(self, factors, name=None):
        self.factors = [tuple(f) for f in factors]  # (k, n) pairs
        for k, n in self.factors:
            if not 1 <= k < n:
                raise ValueError("need 1 <= k < n in every factor")
        self.blocks = []
        self.offsets = []
        off = 0
        for k, n in self.factors:
            self.offsets.append(off)
            self.blocks.extend([k, n - k])
            off += n
        self.nvars = off
        self.name = name or "x".join(f"Gr({k},{n})" for k, n in self.factors)

    def __repr__(self):
        return self.name

    @property
    def dim(self):
        return sum(k * (n - k) for k, n in self.factors)

    def _factor_index(self, factor):
        if factor == 0:
            if len(self.factors) != 1:
                raise ValueError("factor index required on a product")
            return 0
        return factor - 1

    def taut_rank(self, name, factor=0):
        k, n = self.factors[self._factor_index(factor)]
        if name == "U":
            return k
        if name == "Q":
            return n - k
        raise KeyError(name)

    def taut_character(self, name, factor=0):
        i = self._factor_index(factor)
        k, n = self.factors[i]
        off = self.offsets[i]
        GL = symfun.GLCharacter
        if name == "U":
            return GL.schur((0,) * (k - 1) + (-1,), k,
                            block_offset=off, total=self.nvars)
        if name == "Q":
            return GL.schur((0,) * (n - k - 1) + (-1,), n - k,
                            block_offset=off + k, total=self.nvars)
        raise KeyError(f"unknown tautological bundle {name}")

    def line_character(self, degrees):
        degrees = tuple(degrees)
        if len(degrees) != len(self.factors):
            if len(degrees) == 1 and all(d == 0 for d in degrees):
                degrees = (0,) * len(self.factors)
            else:
                raise ValueError("one degree per factor required")
        e = [0] * self.nvars
        for i, d in enumerate(degrees):
            k, n = self.factors[i]
            off = self.offsets[i]
            for j in range(k):
                e[off + j] = d
        return symfun.GLCharacter(self.nvars, {tuple(e): 1})

    def split_weight(self, w):
        """Concatenated weight -> tuple of per-factor weights."""
        out = []
        for i, (k, n) in enumerate(self.factors):
            off = self.offsets[i]
            out.append(tuple(w[off:off + n]))
        return tuple(out)

    def omega1(self):
        """Cotangent bundle as an expression (sum over factors)."""
        parts = []
        for i in range(len(self.factors)):
            f = i + 1 if len(self.factors) > 1 else 0
            parts.append(ex.Tensor(ex.Taut("U", f), ex.Dual(ex.Taut("Q", f))))
        return parts[0] if len(parts) == 1 else ex.Sum(parts)

    def canonical_degrees(self):
        """c1(K) in the basis of the factor hyperplane classes: -n per factor."""
        return tuple(-n for k, n in self.factors)

    def variety(self):
        from . import chow
        vs = []
        for k, n in self.factors:
            vs.append(chow.projective_space(n - 1) if k == 1 else chow.grassmannian(k, n))
        X = vs[0]
        for v in vs[1:]:
            X = chow.product(X, v)
        return X


def flag_space(spec: str) -> FlagSpace:
    """Parse 'P5', 'Gr(2,7)', or products like 'P4xP4'."""
    import re
    factors = []
    for part in spec.split("x"):
        part = part.strip()
        m = re.fullmatch(r"[Pp](\d+)", part)
        if m:
            factors.append((1, int(m.group(1)) + 1))
            continue
        m = re.fullmatch(r"[Gg]r\((\d+),(\d+)\)", part)
        if m:
            factors.append((int(m.group(1)), int(m.group(2))))
            continue
        raise ValueError(f"cannot parse flag space {part!r}")
    return FlagSpace(factors, name=spec)


# ---------------------------------------------------------------------------
# the dominance-shift rule
# ---------------------------------------------------------------------------

def _inversions(v):
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])


def bott_factor(n, w):
    """One factor: weight of length n -> None or (q, dominant weight)."""
    rho = tuple(range(n - 1, -1, -1))
    v = tuple(a + b for a, b in zip(w, rho))
    if len(set(v)) != n:
        return None
    q = _inversions(v)
    dom = tuple(a - b for a, b in zip(sorted(v, reverse=True), rho))
    return q, dom


def bott_cohomology(flag: FlagSpace, w):
    """Cohomology of the irreducible bundle with blockwise weight w.

    w is either a concatenated weight of length flag.nvars or a tuple of
    per-factor weights.  Returns None (no cohomology) or (q, dominants, dim)
    with dominants a tuple of per-factor dominant weights labelling duals.
    """
    if len(w) == flag.nvars and not isinstance(w[0], tuple):
        parts = flag.split_weight(w)
    else:
        parts = tuple(tuple(p) for p in w)
    q = 0
    doms = []
    dim = 1
    for (k, n), wf in zip(flag.factors, parts):
        if len(wf) != n:
            raise ValueError("weight length does not match the factor")
        for block in (wf[:k], wf[k:]):
            if any(block[i] < block[i + 1] for i in range(len(block) - 1)):
                raise ValueError(f"weight {wf} is not blockwise dominant")
        res = bott_factor(n, wf)
        if res is None:
            return None
        qf, dom = res
        q += qf
        doms.append(dom)
        dim *= symfun.weyl_dim(dom, n)
    return q, tuple(doms), dim


def decompose(e, flag: FlagSpace, dim_bound=50000):
    """Exact multiset of irreducible summands of a bundle expression."""
    chi = ex.to_character(e, flag)
    if chi.dim() > dim_bound:
        raise ValueError(f"character dimension {chi.dim()} exceeds bound")
    out = symfun.schur_decompose(chi, blocks=flag.blocks, check=False)
    # regroup the per-block weights into per-factor weights
    regrouped = []
    for weight, mult in out:
        per_factor = []
        for i in range(len(flag.factors)):
            per_factor.append(tuple(weight[2 * i]) + tuple(weight[2 * i + 1]))
        regrouped.append((tuple(per_factor), mult))
    return regrouped


class CohomologyTable:
    """Map from degree to irreducible content, with dimension bounds.

    `entries[q]` lists (weights, multiplicity) contributions before any
    cancellation; `bounds[q]` is the honest [lo, hi] dimension interval.
    The Euler characteristic is exact regardless of ambiguity.
    """

    def __init__(self, entries=None, bounds=None):
        self.entries = {q: list(v) for q, v in (entries or {}).items() if v}
        if bounds is None:
            bounds = {}
        self.bounds = dict(bounds)

    @classmethod
    def exact(cls, dims, entries=None):
        return cls(entries=entries, bounds={q: (d, d) for q, d in dims.items() if d})

    def degrees(self):
        return sorted(set(self.bounds) | set(self.entries))

    def bound(self, q):
        return self.bounds.get(q, (0, 0))

    def dim(self, q):
        lo, hi = self.bound(q)
        if lo != hi:
            raise ValueError(f"degree {q} is ambiguous: [{lo}, {hi}]")
        return lo

    def is_exact(self):
        return all(lo == hi for lo, hi in self.bounds.values())

    def euler(self):
        total = 0
        for q, (lo, hi) in self.bounds.items():
            if lo != hi:
                raise ValueError("euler over ambiguous bounds; use euler_from_entries")
            total += (-1) ** q * lo
        return total

    def as_dict(self):
        return {q: self.bounds[q] for q in sorted(self.bounds)}

    def __repr__(self):
        bits = []
        for q in self.degrees():
            lo, hi = self.bound(q)
            bits.append(f"h^{q}={lo}" if lo == hi else f"h^{q}in[{lo},{hi}]")
        return "{" + ", ".join(bits) + "}"


def bundle_cohomology(e, flag: FlagSpace) -> CohomologyTable:
    """Cohomology of a (completely reducible) bundle expression: exact."""
    dims = {}
    entries = {}
    for weights, mult in decompose(e, flag):
        res = bott_cohomology(flag, weights)
        if res is None:
            continue
        q, doms, dim = res
        dims[q] = dims.get(q, 0) + mult * dim
        entries.setdefault(q, []).append((doms, mult))
    return CohomologyTable.exact(dims, entries)


# ---------------------------------------------------------------------------
# relative pushforward along P(E) -> X for the three-form quotient bundle
# ---------------------------------------------------------------------------

def _fiber_wedge3_dual():
    """Character of the dual of wedge^3 Q on the P^5 fibre, blocks (1|5)."""
    GL = symfun.GLCharacter
    q_dual = GL.schur((1, 0, 0, 0, 0), 5, block_offset=1, total=6)
    return q_dual.wedge(3)


def relative_pushforward(i, G="O"):
    """Direct images R^q theta_* of wedge^i(dual of wedge^3 Q) (x) G along
    P(E) -> X, as pairs (q, nu) with nu labelling S_nu applied to the dual
    of E; G is one of "O", "W*" (the dual quotient bundle itself) or
    "omega" (the relative cotangent bundle)."""
    if not 0 <= i <= 10:
        raise ValueError("need 0 <= i <= 10")
    GL = symfun.GLCharacter
    w3d = _fiber_wedge3_dual()
    chi = w3d.wedge(i)
    if G == "O":
        pass
    elif G == "W*":
        chi = chi * w3d
    elif G == "omega":
        u = GL.schur((-1,), 1, block_offset=0, total=6)
        qd = GL.schur((1, 0, 0, 0, 0), 5, block_offset=1, total=6)
        chi = chi * (u * qd)
    else:
        raise ValueError("G must be one of O, W*, omega")
    out = []
    for weight, mult in symfun.schur_decompose(chi, blocks=[1, 5], check=False):
        w = tuple(weight[0]) + tuple(weight[1])
        res = bott_factor(6, w)
        if res is None:
            continue
        q, dom = res
        out.append((q, dom, mult))
    out.sort(key=lambda t: (t[0], tuple(-x for x in t[1])))
    return out


# ---------------------------------------------------------------------------
# interval bookkeeping for spectral assemblies
# ---------------------------------------------------------------------------

def _max_flow(sources, sinks, edges):
    """Integer max-flow between two layers of capacitated nodes.

    sources/sinks: dict node -> capacity; edges: set of (src, snk) pairs
    with unlimited capacity.  Small graphs only.
    """
    caps = {}
    S, T = ("S",), ("T",)
    for v, c in sources.items():
        caps[(S, ("a", v))] = c
    for v, c in sinks.items():
        caps[(("b", v), T)] = c
    for a, b in edges:
        caps[(("a", a), ("b", b))] = sum(sinks.values()) + sum(sources.values())
    flow = 0
    while True:
        # BFS for an augmenting path
        prev = {S: None}
        queue = [S]
        while queue:
            u = queue.pop(0)
            if u == T:
                break
            for (x, y), c in caps.items():
                if x == u and c > 0 and y not in prev:
                    prev[y] = (u, (x, y))
                    queue.append(y)
        if T not in prev:
            return flow
        # bottleneck
        path = []
        node = T
        while prev[node] is not None:
            u, edge = prev[node]
            path.append(edge)
            node = u
        aug = min(caps[e] for e in path)
        for e in path:
            caps[e] -= aug
            rev = (e[1], e[0])
            caps[rev] = caps.get(rev, 0) + aug
        flow += aug


def chain_solve(base, xdom, valid_lo=None, valid_hi=None, pins=None):
    """Bounds on node values along a cancellation chain.

    Node m carries an unknown value v_m = r_m - x_m - x_{m+1} where r_m
    ranges over the interval base[m] and the boundary variable x_j ranges
    over xdom[j] (a pair of bounds).  Every v_m must be >= 0, v_m must be 0
    outside [valid_lo, valid_hi], and v_m is fixed wherever `pins` says so.
    Returns, for each in-range node, the exact min/max of v_m over the
    feasible region.
    """
    if not base:
        return {}
    pins = pins or {}
    ms = sorted(set(base) | set(pins))
    lo_m, hi_m = ms[0], ms[-1]
    bvars = list(range(lo_m, hi_m + 2))  # x_j for j = lo_m .. hi_m+1

    def dom(j):
        lo, hi = xdom.get(j, (0, 0))
        return set(range(lo, hi + 1))

    def node_ok(m, u, v):
        blo, bhi = base.get(m, (0, 0))
        s = u + v
        if m in pins:
            return blo <= s + pins[m] <= bhi
        if valid_lo is not None and (m < valid_lo or m > valid_hi):
            return blo <= s <= bhi
        return s <= bhi

    fwd = {bvars[0]: dom(bvars[0])}
    for j in bvars[1:]:
        prev = fwd[j - 1]
        cur = set()
        for v in dom(j):
            if any(node_ok(j - 1, u, v) for u in prev):
                cur.add(v)
        fwd[j] = cur
    bwd = {bvars[-1]: dom(bvars[-1])}
    for j in reversed(bvars[:-1]):
        nxt = bwd[j + 1]
        cur = set()
        for u in dom(j):
            if any(node_ok(j, u, v) for v in nxt):
                cur.add(u)
        bwd[j] = cur
    if not fwd[bvars[-1]]:
        raise ValueError("infeasible cancellation chain")

    out = {}
    for m in ms:
        if valid_lo is not None and (m < valid_lo or m > valid_hi):
            continue
        if m in pins:
            out[m] = (pins[m], pins[m])
            continue
        blo, bhi = base.get(m, (0, 0))
        best_lo, best_hi = None, None
        for u in fwd.get(m, set()):
            for v in bwd.get(m + 1, set()):
                if not node_ok(m, u, v):
                    continue
                s = u + v
                cand_hi = bhi - s
                cand_lo = max(0, blo - s)
                if best_hi is None or cand_hi > best_hi:
                    best_hi = cand_hi
                if best_lo is None or cand_lo < best_lo:
                    best_lo = cand_lo
        if best_hi is None:
            raise ValueError("infeasible cancellation chain")
        if best_hi > 0:
            out[m] = (best_lo, best_hi)
    return out


class SpectralGrid:
    """First page of a spectral assembly: nodes at grid positions carrying
    dimension intervals.  `total` maps a position to its total degree and
    `edge` says whether some page differential can run between two nodes
    (always raising total degree by one).  Assembled bounds allow exactly
    the cancellations that some chain of differential ranks could realize,
    including those forced by vanishing outside the valid degree range.
    """

    def __init__(self, total, edge):
        self.nodes = {}
        self.total = total
        self.edge = edge

    def add(self, pos, lo, hi=None):
        if hi is None:
            hi = lo
        if hi == 0:
            return
        old = self.nodes.get(pos, (0, 0))
        self.nodes[pos] = (old[0] + lo, old[1] + hi)

    def assemble(self, valid_lo=None, valid_hi=None, pins=None) -> CohomologyTable:
        base = {}
        for pos, (lo, hi) in self.nodes.items():
            m = self.total(pos)
            old = base.get(m, (0, 0))
            base[m] = (old[0] + lo, old[1] + hi)
        if not base:
            return CohomologyTable()
        xdom = {}
        for j in range(min(base), max(base) + 2):
            cap = self._flow(j - 1, j)
            xdom[j] = (0, cap)
        bounds = chain_solve(base, xdom, valid_lo, valid_hi, pins=pins)
        return CohomologyTable(bounds=bounds)

    def _flow(self, m_src, m_tgt):
        srcs = {pos: hi for pos, (lo, hi) in self.nodes.items() if self.total(pos) == m_src}
        tgts = {pos: hi for pos, (lo, hi) in self.nodes.items() if self.total(pos) == m_tgt}
        if not srcs or not tgts:
            return 0
        edges = {(a, b) for a in srcs for b in tgts if self.edge(a, b)}
        if not edges:
            return 0
        return _max_flow(srcs, tgts, edges)


def koszul_grid() -> SpectralGrid:
    """Grid for Koszul hypercohomology: position (i, q), total degree q - i,
    differentials lower the wedge step by any r >= 1."""
    return SpectralGrid(total=lambda p: p[1] - p[0],
                        edge=lambda a, b: b[0] < a[0])


def leray_grid() -> SpectralGrid:
    """Grid for a Leray assembly: position (p, q), total degree p + q,
    differentials (p, q) -> (p + r, q - r + 1) for r >= 2."""
    return SpectralGrid(total=lambda p: p[0] + p[1],
                        edge=lambda a, b: b[1] < a[1] and b[0] - a[0] >= 2)


def koszul_bounds(term_tables, top=None) -> CohomologyTable:
    """Hypercohomology bounds for a Koszul-type complex.

    term_tables[j] holds the bounds of the j-th wedge term (j = 0 is the
    structure-sheaf end); the j-th term contributes in total degree q - j.
    `top` is the dimension of the zero locus the complex resolves: degrees
    outside [0, top] are forced to cancel completely.
    """
    cx = koszul_grid()
    for j, table in enumerate(term_tables):
        if table is None:
            continue
        bounds = table.bounds if isinstance(table, CohomologyTable) else table
        for q, (lo, hi) in bounds.items():
            cx.add((j, q), lo, hi)
    return cx.assemble(valid_lo=0 if top is not None else None, valid_hi=top)


def cohomology_on_ambient(flag: FlagSpace, cuts, F) -> CohomologyTable:
    """Cohomology of F restricted to the zero locus of the cut bundles
    inside the flag space, assembled from the Koszul complex."""
    if not cuts:
        return bundle_cohomology(F, flag)
    V = cuts[0] if len(cuts) == 1 else ex.Sum(list(cuts))
    r = ex.rank_of(V, flag)
    tables = []
    for j in range(r + 1):
        term = ex.Wedge(ex.Dual(V), j) if j else None
        full = F if term is None else ex.Tensor(term, F)
        tables.append(bundle_cohomology(full, flag))
    return koszul_bounds(tables, top=flag.dim - r)


# ---------------------------------------------------------------------------
# interval arithmetic over long exact sequences
# ---------------------------------------------------------------------------

def _get(bounds, k):
    return bounds.get(k, (0, 0))


def les_quotient(A, B, top):
    """Bounds for C^0..C^top in 0 -> A -> B -> C -> 0, from bounds for A, B.

    c_k = b_k + a_{k+1} - r_k - r_{k+1} with r_k = rank(A^k -> B^k); r_0 is
    forced to all of a_0, and C vanishes above `top`.  Solved exactly over
    the feasible rank chains.
    """
    A = {k: v for k, v in A.items() if v != (0, 0)}
    B = {k: v for k, v in B.items() if v != (0, 0)}
    kmax = max([k for k in list(A) + list(B)] + [top]) + 1
    base = {}
    xdom = {}
    for k in range(0, kmax + 1):
        a1 = _get(A, k + 1)
        b = _get(B, k)
        base[k] = (b[0] + a1[0], b[1] + a1[1])
        a = _get(A, k)
        xdom[k] = (0, min(a[1], b[1]))
    a0 = _get(A, 0)
    xdom[0] = (a0[0], min(a0[1], _get(B, 0)[1]))
    if xdom[0][0] > xdom[0][1]:
        raise ValueError("sequence cannot be exact: A^0 does not inject")
    xdom[kmax + 1] = (0, 0)
    return chain_solve(base, xdom, valid_lo=0, valid_hi=top)


def les_middle(A, C, top):
    """Bounds for B^0..B^top in 0 -> A -> B -> C -> 0, from bounds for A, C.

    b_k = a_k + c_k - d_{k-1} - d_k with d_k = rank of the connecting map
    C^k -> A^{k+1}, bounded by min(c_k, a_{k+1}); B vanishes above `top`.
    """
    A = {k: v for k, v in A.items() if v != (0, 0)}
    C = {k: v for k, v in C.items() if v != (0, 0)}
    kmax = max([k for k in list(A) + list(C)] + [top]) + 1
    base = {}
    xdom = {}
    for k in range(0, kmax + 1):
        a = _get(A, k)
        c = _get(C, k)
        base[k] = (a[0] + c[0], a[1] + c[1])
        # x_k stands for d_{k-1} = rank(C^{k-1} -> A^k)
        xdom[k] = (0, min(_get(C, k - 1)[1], a[1]))
    xdom[kmax + 1] = (0, 0)
    return chain_solve(base, xdom, valid_lo=0, valid_hi=top)


def refine_with_euler(bounds, euler):
    """If exactly one degree is ambiguous, pin it with the alternating sum."""
    amb = [k for k, (lo, hi) in bounds.items() if lo != hi]
    if len(amb) != 1:
        return bounds
    k = amb[0]
    rest = sum((-1) ** j * lo for j, (lo, hi) in bounds.items() if j != k)
    val = (euler - rest) * (-1) ** k
    out = dict(bounds)
    lo, hi = bounds[k]
    if lo <= val <= hi:
        out[k] = (val, val)
    return out
