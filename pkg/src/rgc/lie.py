"""Exact root systems and Weyl machinery for simple types A-G, products, central tori.

Coordinates: epsilon-basis realizations for the classical series, the standard
8-dimensional realization for the E series, explicit rational matrices for F4
and G2.  Simple roots are numbered so that V(omega_1) has minimal dimension
within each series convention (F4 runs from the short end; the E chains carry
the branch node at position rank-3 attached as the last index).  The standard
dot product of each realization is Weyl-invariant and serves as the inner
product throughout.  Central torus characters occupy extra coordinates after
the semisimple block.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .linalg import (
    Lattice, frac, is_zero, solve_linear, subspace_basis, subspace_contains,
    vadd, vdot, vec, vscale, vsub, vzero,
)


class LieError(ValueError):
    pass


VALID_SERIES = "ABCDEFG"


class LieType:
    """A reductive type: simple factors plus a central torus rank."""

    def __init__(self, factors, torus_rank=0):
        factors = [(s.upper(), int(r)) for s, r in factors]
        for s, r in factors:
            if s not in VALID_SERIES:
                raise LieError(f"unknown series {s!r}")
            if r < 1:
                raise LieError(f"rank must be positive, got {s}{r}")
            if s == "D" and r < 3:
                raise LieError("D requires rank >= 3")
            if s == "E" and r not in (6, 7, 8):
                raise LieError("E requires rank 6, 7 or 8")
            if s == "F" and r != 4:
                raise LieError("F requires rank 4")
            if s == "G" and r != 2:
                raise LieError("G requires rank 2")
        if torus_rank < 0:
            raise LieError("torus rank must be nonnegative")
        if not factors and torus_rank == 0:
            raise LieError("need at least one simple factor or a torus")
        self.factors = tuple(factors)
        self.torus_rank = int(torus_rank)

    @property
    def rank(self):
        return sum(r for _, r in self.factors) + self.torus_rank

    def __str__(self):
        s = "x".join(f"{a}{r}" for a, r in self.factors)
        if self.torus_rank:
            s = (s + "+" if s else "") + f"T{self.torus_rank}"
        return s

    def __repr__(self):
        return f"LieType({self})"

    def __eq__(self, other):
        return (isinstance(other, LieType) and self.factors == other.factors
                and self.torus_rank == other.torus_rank)

    def __hash__(self):
        return hash((self.factors, self.torus_rank))


_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


def parse_lie_type(s):
    """Parse "A3", "B3xA1+T1" style type strings."""
    s = s.strip()
    torus = 0
    if "+" in s:
        main, _, tpart = s.partition("+")
        tpart = tpart.strip()
        m = re.fullmatch(r"[Tt](\d+)", tpart)
        if not m:
            raise LieError(f"bad torus part {tpart!r} in {s!r}")
        torus = int(m.group(1))
    else:
        main = s
    main = main.strip()
    factors = []
    if main and not re.fullmatch(r"[Tt]\d*", main):
        for part in main.split("x"):
            part = part.strip()
            m = _TYPE_RE.fullmatch(part.upper())
            if not m:
                raise LieError(f"bad factor {part!r} in type string {s!r}")
            factors.append((m.group(1), int(m.group(2))))
    elif main:
        m = re.fullmatch(r"[Tt](\d+)", main)
        torus += int(m.group(1))
    return LieType(factors, torus)


# ---------------------------------------------------------------------------
# simple root data per series (rational epsilon realizations)
# ---------------------------------------------------------------------------

def _series_data(series, l):
    """Return (ambient_dim, simple_roots, fundamental_weights) as Fraction tuples."""
    F = Fraction
    if series == "A":
        n = l + 1
        roots = []
        for i in range(l):
            r = [F(0)] * n
            r[i], r[i + 1] = F(1), F(-1)
            roots.append(tuple(r))
        fund = []
        for k in range(1, l + 1):
            w = [F(-k, n)] * n
            for i in range(k):
                w[i] += 1
            fund.append(tuple(w))
        return n, roots, fund
    if series == "B":
        roots = []
        for i in range(l - 1):
            r = [F(0)] * l
            r[i], r[i + 1] = F(1), F(-1)
            roots.append(tuple(r))
        r = [F(0)] * l
        r[l - 1] = F(1)
        roots.append(tuple(r))
        fund = []
        for k in range(1, l):
            fund.append(tuple(F(1) if i < k else F(0) for i in range(l)))
        fund.append(tuple(F(1, 2) for _ in range(l)))
        return l, roots, fund
    if series == "C":
        roots = []
        for i in range(l - 1):
            r = [F(0)] * l
            r[i], r[i + 1] = F(1), F(-1)
            roots.append(tuple(r))
        r = [F(0)] * l
        r[l - 1] = F(2)
        roots.append(tuple(r))
        fund = [tuple(F(1) if i < k else F(0) for i in range(l)) for k in range(1, l + 1)]
        return l, roots, fund
    if series == "D":
        roots = []
        for i in range(l - 1):
            r = [F(0)] * l
            r[i], r[i + 1] = F(1), F(-1)
            roots.append(tuple(r))
        r = [F(0)] * l
        r[l - 2], r[l - 1] = F(1), F(1)
        roots.append(tuple(r))
        fund = [tuple(F(1) if i < k else F(0) for i in range(l)) for k in range(1, l - 1)]
        fund.append(tuple([F(1, 2)] * (l - 1) + [F(-1, 2)]))
        fund.append(tuple([F(1, 2)] * l))
        return l, roots, fund
    if series == "G":
        # inside the sum-zero plane of Q^3; alpha_1 short, alpha_2 long
        roots = [(F(1), F(-1), F(0)), (F(-2), F(1), F(1))]
        fund = [(F(0), F(-1), F(1)), (F(-1), F(-1), F(2))]
        return 3, roots, fund
    if series == "F":
        # short end first so that V(omega_1) is the 26-dimensional module
        roots = [
            (F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2)),
            (F(0), F(0), F(0), F(1)),
            (F(0), F(0), F(1), F(-1)),
            (F(0), F(1), F(-1), F(0)),
        ]
        fund = [
            (F(1), F(0), F(0), F(0)),
            (F(3, 2), F(1, 2), F(1, 2), F(1, 2)),
            (F(2), F(1), F(1), F(0)),
            (F(1), F(1), F(0), F(0)),
        ]
        return 4, roots, fund
    if series == "E":
        # standard E8 realization; chains reordered so the branch node is the
        # last index, attached at position rank-3
        e8 = [
            None,
            (F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(1, 2)),
            (F(1), F(1), F(0), F(0), F(0), F(0), F(0), F(0)),
            (F(-1), F(1), F(0), F(0), F(0), F(0), F(0), F(0)),
            (F(0), F(-1), F(1), F(0), F(0), F(0), F(0), F(0)),
            (F(0), F(0), F(-1), F(1), F(0), F(0), F(0), F(0)),
            (F(0), F(0), F(0), F(-1), F(1), F(0), F(0), F(0)),
            (F(0), F(0), F(0), F(0), F(-1), F(1), F(0), F(0)),
            (F(0), F(0), F(0), F(0), F(0), F(-1), F(1), F(0)),
        ]
        order = {
            6: [1, 3, 4, 5, 6, 2],
            7: [7, 6, 5, 4, 3, 1, 2],
            8: [8, 7, 6, 5, 4, 3, 1, 2],
        }[l]
        roots = [e8[i] for i in order]
        # fundamental weights solved from the Cartan matrix inside span(roots)
        fund = _solve_fundamentals(roots)
        return 8, roots, fund
    raise LieError(f"unhandled series {series}")


def _coroot(alpha):
    n2 = vdot(alpha, alpha)
    return vscale(Fraction(2) / n2, alpha)


def _solve_fundamentals(roots):
    l = len(roots)
    cor = [_coroot(a) for a in roots]
    cartan = [[vdot(roots[j], cor[i]) for j in range(l)] for i in range(l)]
    fund = []
    for i in range(l):
        rhs = [Fraction(1) if j == i else Fraction(0) for j in range(l)]
        coeff = solve_linear(cartan, rhs)
        w = vzero(len(roots[0]))
        for c, a in zip(coeff, roots):
            w = vadd(w, vscale(c, a))
        fund.append(w)
    return fund


_WEYL_ORDER = {
    "A": lambda l: factorial(l + 1),
    "B": lambda l: 2 ** l * factorial(l),
    "C": lambda l: 2 ** l * factorial(l),
    "D": lambda l: 2 ** (l - 1) * factorial(l),
    "G": lambda l: 12,
    "F": lambda l: 1152,
    "E": lambda l: {6: 51840, 7: 2903040, 8: 696729600}[l],
}


class RootSystem:
    """Exact root data for a reductive type, with scaled-integer fast paths."""

    def __init__(self, lie_type):
        self.lie_type = lie_type
        blocks = []
        dim = 0
        simple_roots = []
        fundamental_weights = []
        self.factor_ranges = []  # (first simple root index, last+1) per factor
        idx = 0
        for series, l in lie_type.factors:
            d, roots, fund = _series_data(series, l)
            blocks.append((dim, d))
            simple_roots += [self._embed(r, dim, d) for r in roots]
            fundamental_weights += [self._embed(w, dim, d) for w in fund]
            self.factor_ranges.append((idx, idx + l))
            idx += l
            dim += d
        self.semisimple_dim = dim
        dim += lie_type.torus_rank
        self.ambient_dim = dim
        self.simple_roots = tuple(tuple(r) + (Fraction(0),) * (dim - len(r))
                                  for r in simple_roots)
        self.fundamental_weights = tuple(tuple(w) + (Fraction(0),) * (dim - len(w))
                                         for w in fundamental_weights)
        self.torus_chars = tuple(
            tuple(Fraction(1) if j == self.semisimple_dim + i else Fraction(0)
                  for j in range(dim))
            for i in range(lie_type.torus_rank))
        self.num_simple = len(self.simple_roots)
        self.rank = self.num_simple + lie_type.torus_rank
        self.simple_coroots = tuple(_coroot(a) for a in self.simple_roots)
        self.cartan = tuple(
            tuple(int(vdot(self.simple_roots[j], self.simple_coroots[i]))
                  for j in range(self.num_simple))
            for i in range(self.num_simple))
        # common denominator for lattice weights; the extra factor 2 keeps
        # half-sums of roots (rho of any Levi subsystem) integral when scaled
        denom = 1
        for v in self.simple_roots + self.fundamental_weights + self.torus_chars:
            for x in v:
                denom = denom * x.denominator // gcd(denom, x.denominator)
        denom *= 2
        self.denom = denom
        self._sroots = tuple(tuple(int(x * denom) for x in a) for a in self.simple_roots)
        # integerized coroots: coroot = num / cden
        self._icoroots = []
        for c in self.simple_coroots:
            m = 1
            for x in c:
                m = m * x.denominator // gcd(m, x.denominator)
            self._icoroots.append((tuple(int(x * m) for x in c), m * denom))
        self._pos_roots = None
        self._all_roots = None

    @staticmethod
    def _embed(v, offset, d):
        return (Fraction(0),) * offset + tuple(v)

    # -- scaled-integer representation -------------------------------------
    def scale(self, w):
        sw = tuple(frac(x) * self.denom for x in w)
        if any(x.denominator != 1 for x in sw):
            raise LieError(f"weight {w} is not in the admissible lattice")
        return tuple(int(x) for x in sw)

    def unscale(self, sw):
        return tuple(Fraction(x, self.denom) for x in sw)

    def pairing_s(self, sw, i):
        num, den = self._icoroots[i]
        v = sum(a * b for a, b in zip(sw, num))
        q, r = divmod(v, den)
        if r:
            raise LieError("non-integral coroot pairing for a lattice weight")
        return q

    def reflect_s(self, sw, i):
        p = self.pairing_s(sw, i)
        if p == 0:
            return sw
        root = self._sroots[i]
        return tuple(a - p * b for a, b in zip(sw, root))

    # -- rational API -------------------------------------------------------
    def pairing(self, w, i):
        return vdot(vec(w), self.simple_coroots[i])

    def reflect(self, w, i):
        p = self.pairing(w, i)
        return vsub(vec(w), vscale(p, self.simple_roots[i]))

    def is_dominant(self, w, simple_subset=None):
        idxs = range(self.num_simple) if simple_subset is None else simple_subset
        return all(self.pairing(w, i) >= 0 for i in idxs)

    def inner(self, v, w):
        return vdot(vec(v), vec(w))

    def weyl_order(self):
        n = 1
        for series, l in self.lie_type.factors:
            n *= _WEYL_ORDER[series](l)
        return n

    def roots(self):
        """All roots (cached), as Fraction tuples."""
        if self._all_roots is None:
            seen = set()
            frontier = list(self._sroots) + [tuple(-x for x in r) for r in self._sroots]
            seen.update(frontier)
            while frontier:
                nxt = []
                for sw in frontier:
                    for i in range(self.num_simple):
                        r = self.reflect_s(sw, i)
                        if r not in seen:
                            seen.add(r)
                            nxt.append(r)
                frontier = nxt
            self._all_roots = tuple(sorted(self.unscale(sw) for sw in seen))
        return self._all_roots

    def root_coords(self, v):
        """Coordinates of v in the simple-root basis, or None if outside the span."""
        if not self.simple_roots:
            return None if not is_zero(vec(v)) else ()
        cols = [tuple(a[i] for a in self.simple_roots) for i in range(self.ambient_dim)]
        return solve_linear(cols, list(vec(v)))

    def positive_roots(self, simple_subset=None):
        if simple_subset is None:
            if self._pos_roots is None:
                pos = []
                for r in self.roots():
                    c = self.root_coords(r)
                    if c is not None and all(x >= 0 for x in c):
                        pos.append(r)
                self._pos_roots = tuple(pos)
            return self._pos_roots
        sub = [self.simple_roots[i] for i in simple_subset]
        if not sub:
            return ()
        span = subspace_basis(sub)
        return tuple(r for r in self.positive_roots() if subspace_contains(span, vec(r)))

    def rho(self, simple_subset=None):
        h = vzero(self.ambient_dim)
        for r in self.positive_roots(simple_subset):
            h = vadd(h, r)
        return vscale(Fraction(1, 2), h)

    def highest_root(self):
        if len(self.lie_type.factors) != 1 or self.lie_type.torus_rank:
            raise LieError("highest root is defined for a single simple factor")
        best = None
        for r in self.positive_roots():
            c = self.root_coords(r)
            h = sum(c)
            if best is None or h > best[0]:
                best = (h, r)
        return best[1]

    def __repr__(self):
        return f"RootSystem({self.lie_type})"


@lru_cache(maxsize=None)
def _cached_system(lie_type):
    return RootSystem(lie_type)


def build_root_system(t):
    """Construct (and cache) the root system of a LieType or type string."""
    if isinstance(t, str):
        t = parse_lie_type(t)
    return _cached_system(t)


# ---------------------------------------------------------------------------
# Weyl orbit / dominant representative
# ---------------------------------------------------------------------------

def dominant_reflect(rs, w):
    """Dominant Weyl representative and the determinant sign of the shortest
    Weyl element achieving it; sign 0 when the weight lies on a wall."""
    sw = rs.scale(w)
    sign = 1
    moved = True
    while moved:
        moved = False
        for i in range(rs.num_simple):
            if rs.pairing_s(sw, i) < 0:
                sw = rs.reflect_s(sw, i)
                sign = -sign
                moved = True
    if any(rs.pairing_s(sw, i) == 0 for i in range(rs.num_simple)):
        sign = 0
    return rs.unscale(sw), sign


def _dominant_s(rs, sw):
    """Scaled-integer dominant representative with sign (hot path)."""
    sign = 1
    moved = True
    while moved:
        moved = False
        for i in range(rs.num_simple):
            if rs.pairing_s(sw, i) < 0:
                sw = rs.reflect_s(sw, i)
                sign = -sign
                moved = True
    return sw, sign


def weyl_orbit(rs, w):
    """The full Weyl orbit of a weight, as a sorted tuple of Fraction tuples."""
    start = rs.scale(w)
    start, _ = _dominant_s(rs, start)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for sw in frontier:
            for i in range(rs.num_simple):
                r = rs.reflect_s(sw, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return tuple(sorted(rs.unscale(sw) for sw in seen))


def stabilizer_order(rs, dominant_w):
    """|Stab_W(w)| for dominant w: the Weyl order of the wall subsystem."""
    walls = [i for i in range(rs.num_simple) if rs.pairing(dominant_w, i) == 0]
    return _subsystem_weyl_order(rs, walls)


def _subsystem_weyl_order(rs, indices):
    n = 1
    for series, l, _chain in levi_components(rs, indices):
        n *= _WEYL_ORDER[series](l)
    return n


# ---------------------------------------------------------------------------
# Levi data
# ---------------------------------------------------------------------------

class LeviDatum:
    """A Levi subgroup: subset of simple roots, component structure, center rank."""

    def __init__(self, rs, simple_root_indices):
        self.rs = rs
        self.simple_root_indices = tuple(sorted(simple_root_indices))
        self.components = levi_components(rs, self.simple_root_indices)
        self.center_rank = rs.rank - len(self.simple_root_indices)

    @property
    def component_types(self):
        return sorted((s, l) for s, l, _ in self.components)

    def describe(self):
        parts = [f"{s}{l}" for s, l, _ in sorted(self.components, key=lambda c: c[2])]
        if self.center_rank:
            parts.append(f"T{self.center_rank}")
        return "x".join(parts) if parts else "T0"

    def __repr__(self):
        return f"LeviDatum({self.describe()})"

    def __eq__(self, other):
        return (isinstance(other, LeviDatum) and self.rs is other.rs
                and self.simple_root_indices == other.simple_root_indices)

    def __hash__(self):
        return hash(self.simple_root_indices)


def levi_datum(rs, w):
    """Levi subgroup data of the centralizer of a dominant weight."""
    if not rs.is_dominant(w):
        raise LieError("levi_datum requires a dominant weight")
    idx = [i for i in range(rs.num_simple) if rs.pairing(w, i) == 0]
    return LeviDatum(rs, idx)


def levi_components(rs, indices):
    """Connected components of a simple-root subset, classified by series.

    Returns a list of (series, rank, ordered_indices) with the ordering
    matching the standard numbering of the detected series.  Rank-2 systems
    with a double bond are reported as B2.
    """
    indices = list(indices)
    if not indices:
        return []
    adj = {i: [] for i in indices}
    for i in indices:
        for j in indices:
            if i != j and rs.cartan[i][j] != 0:
                adj[i].append(j)
    comps = []
    left = set(indices)
    while left:
        start = min(left)
        comp = []
        stack = [start]
        seen = {start}
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        left -= seen
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        out.append(_classify_component(rs, comp, adj))
    return out


def _bond(rs, i, j):
    return rs.cartan[i][j] * rs.cartan[j][i]


def _len2(rs, i):
    return rs.inner(rs.simple_roots[i], rs.simple_roots[i])


def _classify_component(rs, comp, adj):
    k = len(comp)
    if k == 1:
        return ("A", 1, tuple(comp))
    deg = {i: len([j for j in adj[i] if j in comp]) for i in comp}
    branch = [i for i in comp if deg[i] >= 3]
    if not branch:
        ends = [i for i in comp if deg[i] == 1]
        chain = [min(ends)]
        prev = None
        while len(chain) < k:
            cur = chain[-1]
            nxt = [j for j in adj[cur] if j in comp and j != prev]
            prev = cur
            chain.append(nxt[0])
        bonds = [_bond(rs, chain[a], chain[a + 1]) for a in range(k - 1)]
        if all(b == 1 for b in bonds):
            return ("A", k, tuple(chain))
        if 3 in bonds:
            return ("G", 2, tuple(chain))
        dpos = [a for a, b in enumerate(bonds) if b == 2]
        if len(dpos) == 1:
            a = dpos[0]
            if a == 0:
                chain = chain[::-1]
                a = k - 2
            if a == k - 2:
                if k == 2:
                    # B2 = C2: canonical name B2, short root last
                    if _len2(rs, chain[-1]) > _len2(rs, chain[-2]):
                        chain = chain[::-1]
                    return ("B", 2, tuple(chain))
                # short last root -> B; long last root -> C
                if _len2(rs, chain[-1]) < _len2(rs, chain[-2]):
                    return ("B", k, tuple(chain))
                return ("C", k, tuple(chain))
            if k == 4:
                return ("F", 4, tuple(chain))
        raise LieError(f"cannot classify chain component {comp}")
    if len(branch) > 1:
        raise LieError(f"cannot classify component {comp}")
    b = branch[0]
    arms = []
    for first in sorted(j for j in adj[b] if j in comp):
        arm = [first]
        prev = b
        while True:
            cur = arm[-1]
            nxt = [j for j in adj[cur] if j in comp and j != prev]
            if not nxt:
                break
            prev = cur
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=len)
    lens = sorted(len(a) for a in arms)
    if len(arms) == 3 and lens[0] == 1 and lens[1] == 1:
        # D type: chain then the two fork tips
        l = k
        long_arm = arms[2]
        order = list(reversed(long_arm)) + [b, arms[0][0], arms[1][0]]
        return ("D", l, tuple(order))
    if len(arms) == 3 and lens[0] == 1 and lens[1] == 2:
        l = k
        long_arm = arms[2]
        order = list(reversed(long_arm)) + [b] + list(arms[1]) + [arms[0][0]]
        return ("E", l, tuple(order))
    raise LieError(f"cannot classify branched component {comp}")


# ---------------------------------------------------------------------------
# character lattice
# ---------------------------------------------------------------------------

class CharacterLattice:
    """The lattice generated by pairwise differences of the highest weights
    together with the root lattice, plus faithfulness bookkeeping."""

    def __init__(self, rs, weights):
        if not weights:
            raise LieError("need at least one highest weight")
        ws = [vec(w) for w in weights]
        gens = list(rs.simple_roots)
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                d = vsub(ws[i], ws[j])
                if not is_zero(d):
                    gens.append(d)
        if not gens:
            gens = [vzero(rs.ambient_dim)]
        self.lattice = Lattice(gens)
        self.rs = rs
        full = Lattice(list(rs.fundamental_weights) + list(rs.torus_chars))
        self.full_weight_lattice = full
        self.is_full_weight_lattice = (self.lattice.rank == full.rank
                                       and all(full.contains(b) for b in self.lattice.basis())
                                       and all(self.lattice.contains(b) for b in full.basis()))
        # faithful projective action of the adjoint-level image group
        self.faithful = self.lattice.rank == rs.rank

    @property
    def rank(self):
        return self.lattice.rank

    def basis(self):
        return self.lattice.basis()

    def contains(self, v):
        return self.lattice.contains(v)


def character_lattice(rs, weights):
    return CharacterLattice(rs, weights)


# ---------------------------------------------------------------------------
# weight parsing
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(w\d+|t\d+|hr)$")


def parse_weight(rs, s):
    """Parse "w1+2*w3", "hr", "3*w1-t1" into an exact ambient weight vector."""
    text = s.replace(" ", "")
    if not text:
        raise LieError("empty weight string")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", text)
    total = vzero(rs.ambient_dim)
    for term in terms:
        sign = 1
        body = term
        if body[0] == "+":
            body = body[1:]
        elif body[0] == "-":
            sign = -1
            body = body[1:]
        m = _TERM_RE.fullmatch(body)
        if not m:
            pos = text.find(term)
            raise LieError(f"bad weight term {term!r} at position {pos} in {s!r}")
        coef = sign * int(m.group(1) or 1)
        sym = m.group(2)
        if sym == "hr":
            v = rs.highest_root()
        elif sym[0] == "w":
            i = int(sym[1:])
            if not 1 <= i <= rs.num_simple:
                raise LieError(f"fundamental weight index {i} out of range in {s!r}")
            v = rs.fundamental_weights[i - 1]
        else:
            i = int(sym[1:])
            if not 1 <= i <= rs.lie_type.torus_rank:
                raise LieError(f"torus character index {i} out of range in {s!r}")
            v = rs.torus_chars[i - 1]
        total = vadd(total, vscale(coef, v))
    return total


def parse_weights(rs, s):
    """Parse a comma-separated list of weight strings."""
    parts = [p for p in s.split(",") if p.strip()]
    if not parts:
        raise LieError("empty weight list")
    return [parse_weight(rs, p) for p in parts]
