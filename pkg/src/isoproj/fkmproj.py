"""Clifford-system (FKM) families: dimensions, weights, admissible points, classes.

Torus coordinates are orthonormal epsilon coordinates laid out as
(x^s_1..x^s_p | x_1..x_q) or, when m = 0 mod 4, (x^s | x^+ | x^-).  The
symmetry algebra is so(m+1) + h, with h = so(k), u(k), sp(k) or a sum of two
such, depending on m mod 8.  Its representation has weights S + W, where S
are the spin weights 1/2(+-1, ..., +-1) and W the weights of the standard
representation of h.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .perm import close_group, labeled_automorphisms, mat_vec, orbits
from .rootsys import EPSILON, TorusPoint, format_point
from .voganproj import ClassificationError

HALF = Fraction(1, 2)

# m mod 8 -> (division algebra, matrix size, split into two summands)
CLIFFORD_TABLE = {
    0: ("R", 1, True),
    1: ("R", 2, False),
    2: ("C", 2, False),
    3: ("H", 2, False),
    4: ("H", 2, True),
    5: ("H", 4, False),
    6: ("C", 8, False),
    7: ("R", 16, False),
}
ALGEBRA_DIM = {"R": 1, "C": 2, "H": 4}
H_KIND = {0: "so", 1: "so", 2: "u", 3: "sp", 4: "sp", 5: "sp", 6: "u", 7: "so"}
DESCRIPTOR = {
    "so": "Pin(m+1).O(k) on d (x)_R R^k",
    "u": "Pin(m+1).U(k) on d (x)_C C^k",
    "sp": "Pin(m+1).Sp(k) on d (x)_H H^k",
    "so+-": "Spin(m+1).(O(k+) x O(k-)) on d+ (x) R^k+ + d- (x) R^k-",
    "sp+-": "Spin(m+1).(Sp(k+) x Sp(k-)) on d+ (x)_H H^k+ + d- (x)_H H^k-",
}


class ScopeError(ValueError):
    """Requested family lies outside the m1 <= m2 range handled here."""


def clifford_algebra(m):
    """Cl*_{m+1} as (algebra, size, split), using 8-fold periodicity."""
    alg, r, split = CLIFFORD_TABLE[m % 8]
    return alg, r * 16 ** (m // 8), split


def delta(m):
    """Real dimension of an irreducible Cl*_{m+1}-module."""
    alg, r, _ = clifford_algebra(m)
    return r * ALGEBRA_DIM[alg]


@dataclass(frozen=True, order=True)
class FkmFamily:
    m: int
    split: tuple  # (k,) or (k+, k-)

    @property
    def k(self):
        return sum(self.split)

    @property
    def is_split(self):
        return len(self.split) == 2

    @property
    def delta(self):
        return delta(self.m)

    @property
    def dimV(self):
        return self.k * self.delta

    @property
    def n(self):
        return self.dimV // 2 - 1

    @property
    def mult(self):
        return self.m, self.n - self.m

    @property
    def in_scope(self):
        m1, m2 = self.mult
        return m1 <= m2

    @property
    def p(self):
        return (self.m + 1) // 2

    @property
    def kind(self):
        return H_KIND[self.m % 8]

    @property
    def q(self):
        """Rank of h per summand: (q,) or (q+, q-)."""
        if self.kind == "so":
            return tuple(k // 2 for k in self.split)
        return tuple(self.split)

    @property
    def dim(self):
        return self.p + sum(self.q)

    @property
    def extrapolated(self):
        # k- = 0 (or k+ = 0) is accepted but sits at the edge of the stated range
        return self.is_split and 0 in self.split

    @property
    def descriptor(self):
        return DESCRIPTOR[self.kind + ("+-" if self.is_split else "")]

    def coordinate_names(self):
        names = [f"s{i}" for i in range(1, self.p + 1)]
        if self.is_split:
            names += [f"e+{j}" for j in range(1, self.q[0] + 1)]
            names += [f"e-{j}" for j in range(1, self.q[1] + 1)]
        else:
            names += [f"e{j}" for j in range(1, self.q[0] + 1)]
        return names

    def label(self):
        if self.is_split:
            return f"FKM m={self.m} k+={self.split[0]} k-={self.split[1]}"
        return f"FKM m={self.m} k={self.k}"

    def point_str(self, t):
        return format_point(t, self.coordinate_names())


def clifford_family(m, split, require_foliation=True) -> FkmFamily:
    if m < 1:
        raise ValueError("m must be positive")
    if m % 4 == 0:
        if not isinstance(split, (tuple, list)) or len(split) != 2:
            raise ValueError("m = 0 mod 4 needs a split (k+, k-)")
        kp, km = split
        if kp < 0 or km < 0 or kp + km == 0:
            raise ValueError("k+ and k- must be nonnegative with positive sum")
        split = (int(kp), int(km))
    else:
        if isinstance(split, (tuple, list)):
            if len(split) != 1:
                raise ValueError("m != 0 mod 4 takes a single k")
            split = split[0]
        if split < 1:
            raise ValueError("k must be positive")
        split = (int(split),)
    f = FkmFamily(m, split)
    if require_foliation and f.mult[1] <= 0:
        raise ValueError(f"not an FKM foliation: multiplicities {f.mult}")
    return f


def _require_scope(f):
    if not f.in_scope:
        raise ScopeError(f"{f.label()} has m1 > m2; unsupported")


def _unit(dim, i, c=1):
    return tuple(Fraction(c) if j == i else Fraction(0) for j in range(dim))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _blocks(f):
    """Coordinate offset, rank and size of each summand of h."""
    p = f.p
    out, off = [], p
    for k, q in zip(f.split, f.q):
        out.append((off, q, k))
        off += q
    return out


def spin_weights(f):
    p, dim = f.p, f.dim
    out = []
    for signs in product((-1, 1), repeat=p):
        out.append(tuple(HALF * s for s in signs) + (Fraction(0),) * (dim - p))
    return out


def h_weights(f):
    """Weights of the standard representation of h, one list per summand."""
    dim = f.dim
    out = []
    for off, q, k in _blocks(f):
        ws = []
        for j in range(q):
            ws.append(_unit(dim, off + j, 1))
            ws.append(_unit(dim, off + j, -1))
        if f.kind == "so" and k % 2 == 1:
            ws.append((Fraction(0),) * dim)
        out.append(ws)
    return out


def weight_blocks(f):
    """Weights of the complexified representation, grouped by summand of h."""
    spins = spin_weights(f)
    return [[_add(s, w) for s in spins for w in ws] for ws in h_weights(f)]


def weight_system(f: FkmFamily):
    _require_scope(f)
    return [w for block in weight_blocks(f) for w in block]


def simple_roots(f):
    """Simple roots of so(m+1) + h as (name, vector) pairs."""
    dim, p = f.dim, f.p
    roots = []
    for i in range(p - 1):
        roots.append((f"as{i + 1}", _sub(_unit(dim, i), _unit(dim, i + 1))))
    if f.m % 2 == 0:
        roots.append((f"as{p}", _unit(dim, p - 1)))
    elif p >= 2:
        roots.append((f"as{p}", _add(_unit(dim, p - 2), _unit(dim, p - 1))))
    tags = ["+", "-"] if f.is_split else [""]
    for tag, (off, q, k) in zip(tags, _blocks(f)):
        for j in range(q - 1):
            roots.append((f"a{tag}{j + 1}", _sub(_unit(dim, off + j), _unit(dim, off + j + 1))))
        last = off + q - 1
        if f.kind == "so":
            if k % 2 == 1 and q >= 1:
                roots.append((f"a{tag}{q}", _unit(dim, last)))
            elif k % 2 == 0 and q >= 2:
                roots.append((f"a{tag}{q}", _add(_unit(dim, last - 1), _unit(dim, last))))
        elif f.kind == "sp" and q >= 1:
            roots.append((f"a{tag}{q}", _unit(dim, last, 2)))
    return roots


def _grid(bound):
    top = 2 * bound
    return [Fraction(v, 2) for v in range(-top, top + 1)]


def admissible_points_fkm(f: FkmFamily, bound=2):
    _require_scope(f)
    return list(_admissible_points_fkm(f, bound))


@lru_cache(maxsize=4096)
def _admissible_points_fkm(f, bound):
    """Depth-first search for T in the closed chamber with every weight in {+-1}.

    The spin coordinates are fixed first; afterwards each weight s + w only
    depends on the set V of values of s, so an h-coordinate is checked against
    V instead of against all 2^p spin weights.  Since s + w must be +-1 for a
    fixed w and every s, V has at most two elements and max V <= 1; both
    bounds already hold for the partial sums over the spin coordinates fixed
    so far, which prunes the spin part of the search.
    """
    p, dim = f.p, f.dim
    roots = [v for _, v in simple_roots(f)]
    grid = _grid(bound)

    def last(v):
        return max(i for i, c in enumerate(v) if c)

    root_due = [[] for _ in range(dim)]
    for v in roots:
        root_due[last(v)].append(v)
    hws = [w for ws in h_weights(f) for w in ws]
    zero_h = any(not any(w) for w in hws)
    weight_due = [[] for _ in range(dim)]
    for w in hws:
        if any(w):
            weight_due[last(w)].append(w)

    found = []
    x = [Fraction(0)] * dim

    def chamber_ok(i):
        return all(_dot(v, x) >= 0 for v in root_due[i])

    def search(i, vals):
        # vals: values of 1/2(+-x^s_1 +- ... +- x^s_i) over all sign choices
        if i == p and zero_h and not vals <= {1, -1}:
            return
        if i == dim:
            found.append(TorusPoint(EPSILON, tuple(x)))
            return
        for v in grid:
            x[i] = v
            if not chamber_ok(i):
                continue
            if i < p:
                nxt = {u + s * HALF * v for u in vals for s in (-1, 1)}
                if len(nxt) > 2 or max(nxt) > 1:
                    continue
                search(i + 1, nxt)
            else:
                if all(u + _dot(w, x) in (1, -1) for w in weight_due[i] for u in vals):
                    search(i + 1, vals)
        x[i] = Fraction(0)

    search(0, {Fraction(0)})
    return tuple(sorted(found))


def is_admissible_fkm(f, t):
    roots = [v for _, v in simple_roots(f)]
    return all(_dot(w, t.coords) in (1, -1) for w in weight_system(f)) and \
        all(_dot(v, t.coords) >= 0 for v in roots)


@dataclass(frozen=True)
class CoordinateMap:
    name: str
    matrix: tuple

    def __call__(self, t):
        return TorusPoint(t.basis, mat_vec(self.matrix, t.coords))


def _signed_perm(dim, images):
    """Matrix sending basis vector j to sign * basis vector i for images[j] = (i, sign)."""
    a = [[0] * dim for _ in range(dim)]
    for j in range(dim):
        i, s = images.get(j, (j, 1))
        a[i][j] = s
    return tuple(tuple(r) for r in a)


def outpm_generators(f: FkmFamily):
    """Generators of the outer symmetry group acting on torus coordinates."""
    _require_scope(f)
    p, dim, r = f.p, f.dim, f.m % 8
    gens = []
    if f.m % 2 == 1:
        gens.append(CoordinateMap("sigma", _signed_perm(dim, {p - 1: (p - 1, -1)})))
    blocks = _blocks(f)
    if r in (1, 7):
        off, q, k = blocks[0]
        if k % 2 == 0 and q >= 1:
            gens.append(CoordinateMap("phi", _signed_perm(dim, {off + q - 1: (off + q - 1, -1)})))
    elif r in (2, 6):
        off, q, k = blocks[0]
        images = {off + j: (off + k - 1 - j, -1) for j in range(k)}
        gens.append(CoordinateMap("sigma_u", _signed_perm(dim, images)))
    elif r in (0, 4):
        if r == 0:
            for tag, (off, q, k) in zip("+-", blocks):
                if k % 2 == 0 and q >= 1:
                    gens.append(CoordinateMap(f"phi{tag}", _signed_perm(dim, {off + q - 1: (off + q - 1, -1)})))
        (o1, q1, k1), (o2, q2, k2) = blocks
        if k1 == k2:
            images = {}
            for j in range(q1):
                images[o1 + j] = (o2 + j, 1)
                images[o2 + j] = (o1 + j, 1)
            gens.append(CoordinateMap("tau", _signed_perm(dim, images)))
    return gens


def outpm_group(f):
    return close_group([g.matrix for g in outpm_generators(f)], f.dim)


def count_classes_fkm(f: FkmFamily, bound=2):
    pts = admissible_points_fkm(f, bound)
    group = outpm_group(f)
    try:
        orbs = orbits(group, pts, lambda g, t: TorusPoint(t.basis, mat_vec(g, t.coords)))
    except ValueError as exc:
        raise ClassificationError(f"{f.label()}: {exc}") from exc
    return len(orbs), orbs


def closed_form_N(f: FkmFamily) -> int:
    r, k = f.m % 8, f.k
    if r == 0:
        return 2 if all(x % 2 == 0 for x in f.split) else 1
    if r in (1, 7):
        return 2 if k % 2 == 0 else 1
    if r in (2, 6):
        return 2 + k // 2
    return 2


@dataclass(frozen=True)
class LowestWeightDiagram:
    white: tuple  # (name, vector)
    black: tuple  # (name, vector)
    labels: dict

    @property
    def nodes(self):
        return self.white + self.black

    def colors(self):
        return [False] * len(self.white) + [True] * len(self.black)

    def edges(self):
        """Undirected edges as (name_a, name_b, label) with white nodes first."""
        names = [n for n, _ in self.nodes]
        out = []
        for (i, j), lab in sorted(self.labels.items()):
            if i < j:
                out.append((names[i], names[j], lab))
        return out


def _pair(a, b):
    return 2 * _dot(a, b) / _dot(b, b)


def lowest_weights(f):
    """Lowest weights with multiplicity, computed summand by summand."""
    # work with doubled coordinates so the membership tests use plain integers
    def twice(v):
        return tuple(int(2 * c) for c in v)

    roots = [twice(v) for _, v in simple_roots(f)]
    out = []
    for block in weight_blocks(f):
        present = Counter(block)
        doubled = {twice(w) for w in present}
        for w in sorted(present):
            w2 = twice(w)
            if all(tuple(a - b for a, b in zip(w2, r)) not in doubled for r in roots):
                out.extend([w] * present[w])
    return out


def lowest_weight_diagram(f: FkmFamily) -> LowestWeightDiagram:
    _require_scope(f)
    white = tuple(simple_roots(f))
    names = f.coordinate_names()
    black = tuple((format_point(TorusPoint(EPSILON, w), names), w) for w in lowest_weights(f))
    nodes = white + black
    nw = len(white)
    labels = {}
    for i, (_, a) in enumerate(white):
        for j, (_, b) in enumerate(white):
            if i != j and _dot(a, b) != 0:
                labels[(i, j)] = int(_pair(a, b))
        for j, (_, lam) in enumerate(black):
            v = _pair(lam, a)
            if v != 0:
                assert v.denominator == 1
                labels[(i, nw + j)] = labels[(nw + j, i)] = int(v)
    return LowestWeightDiagram(white, black, labels)


def diagram_automorphisms_lwd(d: LowestWeightDiagram):
    """Permutations preserving the graph, the black nodes and all edge labels."""
    return labeled_automorphisms(len(d.nodes), d.colors(), d.labels)


def _solve_linear_map(src, dst):
    """Matrix A with A s = d for all pairs, or None if no such linear map exists."""
    dim = len(src[0])
    # reduce [src | dst] to pick a basis among the source vectors
    basis_rows, images = [], []
    rows = []
    for s, d in zip(src, dst):
        v = list(s)
        w = list(d)
        for (piv, bs, bd) in rows:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, bs)]
                w = [x - c * y for x, y in zip(w, bd)]
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            if any(w):
                return None
            continue
        c = v[piv]
        v = [x / c for x in v]
        w = [x / c for x in w]
        new_rows = []
        for (pv, bs, bd) in rows:
            e = bs[piv]
            if e:
                bs = [x - e * y for x, y in zip(bs, v)]
                bd = [x - e * y for x, y in zip(bd, w)]
            new_rows.append((pv, bs, bd))
        rows = new_rows + [(piv, v, w)]
    if len(rows) < dim:
        raise ClassificationError("diagram nodes do not span the torus")
    # rows now hold unit vectors e_piv -> image; assemble columns
    cols = {piv: bd for piv, bs, bd in rows}
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def realizable_automorphisms(d: LowestWeightDiagram):
    """Distinct torus maps induced by diagram automorphisms that extend linearly
    and orthogonally to the torus."""
    vecs = [v for _, v in d.nodes]
    maps = set()
    for perm in diagram_automorphisms_lwd(d):
        a = _solve_linear_map(vecs, [vecs[perm[i]] for i in range(len(vecs))])
        if a is None:
            continue
        dim = len(a)
        ata = tuple(tuple(sum(a[t][i] * a[t][j] for t in range(dim)) for j in range(dim)) for i in range(dim))
        if ata != tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)):
            continue
        maps.add(tuple(tuple(int(c) if Fraction(c).denominator == 1 else c for c in row) for row in a))
    return sorted(maps)


def families(max_m, max_rank_sum=None, max_k=None, in_scope_only=True):
    """Valid families with m <= max_m, bounded by p + q or by k."""
    out = []
    for m in range(1, max_m + 1):
        p = (m + 1) // 2
        kinds = H_KIND[m % 8]
        kmax = max_k
        if kmax is None:
            room = max_rank_sum - p
            if room < 0:
                continue
            kmax = 2 * room + 1 if kinds == "so" else room
        if m % 4 == 0:
            splits = [(a, b) for a in range(kmax + 1) for b in range(kmax + 1)
                      if a + b > 0 and (max_k is None or a + b <= max_k)]
        else:
            splits = [(k,) for k in range(1, kmax + 1)]
        for sp in splits:
            f = clifford_family(m, sp, require_foliation=False)
            if f.mult[1] <= 0:
                continue
            if max_rank_sum is not None and f.p + sum(f.q) > max_rank_sum:
                continue
            if in_scope_only and not f.in_scope:
                continue
            out.append(f)
    return out


def exceptional_pairs(max_m=10, max_k=4):
    """Families with m1 > m2, and the set of their multiplicity pairs."""
    fams = [f for f in families(max_m, max_k=max_k, in_scope_only=False) if not f.in_scope]
    return fams, sorted({f.mult for f in fams})


def congruence_classes(fams):
    """Identify (k+, k-) with (k-, k+); return one representative per class."""
    seen = {}
    for f in fams:
        key = (f.m, tuple(sorted(f.split)))
        seen.setdefault(key, f)
    return list(seen.values())
