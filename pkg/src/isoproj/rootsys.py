"""Finite root systems of types A-G in simple-root coordinates.

Roots are integer tuples of coefficients over the simple roots.  The inner
product is fixed by a rational Gram matrix on the simple roots, normalized so
that long roots have squared length 2.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Root = tuple  # tuple[int, ...]

LEGAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
MIN_RANK = {"A": 1, "B": 1, "C": 2, "D": 3}

POSITIVE_ROOT_COUNT = {
    "A": lambda p: p * (p + 1) // 2,
    "B": lambda p: p * p,
    "C": lambda p: p * p,
    "D": lambda p: p * (p - 1),
    "E": lambda p: {6: 36, 7: 63, 8: 120}[p],
    "F": lambda p: 24,
    "G": lambda p: 6,
}


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, p = self.series, self.rank
        if s in LEGAL_RANKS:
            ok = p in LEGAL_RANKS[s]
        elif s in MIN_RANK:
            # B1 is kept as the rank-one orthogonal case so(3)
            ok = isinstance(p, int) and p >= MIN_RANK[s]
        else:
            ok = False
        if not ok:
            raise ValueError(f"illegal Cartan type {s}{p}")

    def __str__(self):
        return f"{self.series}{self.rank}"


def _chain(p, lengths):
    """Gram matrix of a path diagram 1-2-...-p with given squared lengths.

    Adjacent nodes get <a_i, a_j> = -max(|a_i|^2, |a_j|^2)/2, which yields
    single, double or triple bonds depending on the length ratio.
    """
    g = [[Fraction(0)] * p for _ in range(p)]
    for i in range(p):
        g[i][i] = Fraction(lengths[i])
    for i in range(p - 1):
        v = -max(Fraction(lengths[i]), Fraction(lengths[i + 1])) / 2
        g[i][i + 1] = g[i + 1][i] = v
    return g


def _link(g, i, j, v=-1):
    g[i][j] = g[j][i] = Fraction(v)


def gram_matrix(ct: CartanType):
    """Gram matrix of the simple roots, labeled as in the classification table.

    F4 is labeled with alpha_1, alpha_2 short and alpha_3, alpha_4 long, so that
    the extended node attaches to alpha_4.  G2 has alpha_1 short.
    """
    s, p = ct.series, ct.rank
    if s == "A":
        return _chain(p, [2] * p)
    if s == "B":
        return _chain(p, [2] * (p - 1) + [1])
    if s == "C":
        return _chain(p, [1] * (p - 1) + [2])
    if s == "D":
        g = _chain(p, [2] * p)
        # alpha_p hangs off alpha_{p-2} instead of alpha_{p-1}
        g[p - 1][p - 2] = g[p - 2][p - 1] = Fraction(0)
        _link(g, p - 1, p - 3)
        return g
    if s == "E":
        # chain 1-3-4-5-...-p with alpha_2 attached to alpha_4
        g = [[Fraction(0)] * p for _ in range(p)]
        for i in range(p):
            g[i][i] = Fraction(2)
        order = [0] + list(range(2, p))
        for a, b in zip(order, order[1:]):
            _link(g, a, b)
        _link(g, 1, 3)
        return g
    if s == "F":
        return _chain(4, [1, 1, 2, 2])
    if s == "G":
        return _chain(2, [Fraction(2, 3), 2])
    raise ValueError(ct)


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    simple_gram: tuple
    positive_roots: tuple
    highest_root: Root
    root_set: frozenset = field(default=frozenset(), compare=False, repr=False)

    @property
    def rank(self):
        return self.cartan_type.rank

    def simple_roots(self):
        p = self.rank
        return tuple(tuple(int(i == j) for j in range(p)) for i in range(p))

    def inner(self, a, b) -> Fraction:
        g = self.simple_gram
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                row = g[i]
                for j, bj in enumerate(b):
                    if bj and row[j]:
                        total += ai * bj * row[j]
        return total

    def cartan_matrix(self):
        p = self.rank
        e = self.simple_roots()
        return tuple(tuple(cartan_pairing(self, e[i], e[j]) for j in range(p)) for i in range(p))

    def is_root(self, v) -> bool:
        return tuple(v) in self.root_set


def _positive_roots(p, cartan):
    """Generate positive roots by climbing root strings.

    For a root b and simple root a_j, b + a_j is a root iff r - <b, a_j^vee> > 0,
    where r is the largest integer with b - r a_j a root.
    """
    neighbours = [[(i, cartan[i][j]) for i in range(p) if i != j and cartan[i][j]] for j in range(p)]
    simple = [tuple(int(i == j) for j in range(p)) for i in range(p)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for j in range(p):
                pair = 2 * b[j] + sum(b[i] * c for i, c in neighbours[j])
                r = 0
                down = list(b)
                while True:
                    down[j] -= 1
                    if tuple(down) in known:
                        r += 1
                    else:
                        break
                if r - pair > 0:
                    up = list(b)
                    up[j] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(known, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    p = ct.rank
    g = gram_matrix(ct)
    cartan = [[2 * g[i][j] / g[j][j] for j in range(p)] for i in range(p)]
    for row in cartan:
        for c in row:
            assert c.denominator == 1
    cartan = [[int(c) for c in row] for row in cartan]
    roots = _positive_roots(p, cartan)
    if len(roots) != POSITIVE_ROOT_COUNT[ct.series](p):
        raise AssertionError(f"{ct}: generated {len(roots)} positive roots")
    highest = roots[-1]
    if not all(all(h >= c for h, c in zip(highest, r)) for r in roots):
        raise AssertionError(f"{ct}: no dominating highest root")
    gram = tuple(tuple(row) for row in g)
    every = frozenset(roots) | frozenset(tuple(-c for c in r) for r in roots)
    return RootSystem(ct, gram, tuple(roots), highest, every)


def cartan_pairing(rs: RootSystem, a, b) -> int:
    """Return 2<a,b>/<b,b>."""
    bb = rs.inner(b, b)
    if bb == 0:
        raise ValueError("second argument must be nonzero")
    v = 2 * rs.inner(a, b) / bb
    if v.denominator != 1:
        raise ValueError(f"non-integral pairing {v}")
    return int(v)


DUAL_H = "h"
EPSILON = "eps"


def _frac(x):
    f = Fraction(x)
    if f.denominator not in (1, 2):
        raise ValueError(f"coordinate {f} has denominator other than 1 or 2")
    return f


@dataclass(frozen=True, order=True)
class TorusPoint:
    """Point of the torus algebra in the h-dual basis or the epsilon basis."""

    basis: str
    coords: tuple

    def __post_init__(self):
        if self.basis not in (DUAL_H, EPSILON):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coords", tuple(_frac(c) for c in self.coords))

    @classmethod
    def h(cls, *coords):
        return cls(DUAL_H, coords)

    @classmethod
    def eps(cls, *coords):
        return cls(EPSILON, coords)

    def __add__(self, other):
        if self.basis != other.basis or len(self.coords) != len(other.coords):
            raise ValueError("incompatible torus points")
        return TorusPoint(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, s):
        return TorusPoint(self.basis, tuple(s * c for c in self.coords))

    def __str__(self):
        return format_point(self)


def basis_point(p, i, c=1, basis=DUAL_H):
    """c times the i-th basis vector (1-based) in dimension p."""
    return TorusPoint(basis, tuple(c if j == i else 0 for j in range(1, p + 1)))


def eval_root(root, t: TorusPoint) -> Fraction:
    if t.basis != DUAL_H:
        raise ValueError("roots are evaluated on h-basis points")
    if len(root) != len(t.coords):
        raise ValueError("dimension mismatch")
    return sum((m * x for m, x in zip(root, t.coords)), Fraction(0))


def format_point(t: TorusPoint, names=None) -> str:
    """Render a point as a signed sum like '-h2+2h1'."""
    if names is None:
        names = [f"{t.basis}{i + 1}" for i in range(len(t.coords))]
    terms = []
    for c, name in zip(t.coords, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        coef = "" if a == 1 else f"{a}"
        terms.append(f"{sign}{coef}{name}")
    if not terms:
        return "0"
    s = "".join(terms)
    return s[1:] if s.startswith("+") else s
