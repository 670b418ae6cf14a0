"""Catalog of irreducible inner compact symmetric pairs.

Each pair is given by a simple root system and one painted simple root nu
(Borel-de Siebenthal data).  Noncompact roots are the positive roots with odd
coefficient at nu; they are the weights of the isotropy representation.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .rootsys import CartanType, build_root_system, cartan_pairing

EXCEPTIONAL = {
    # label: (series, rank, nu, mu, lambda, hermitian)
    "E II": ("E", 6, 2, (1, 2, 2, 3, 2, 1), (1, 1, 2, 3, 2, 1), False),
    "E III": ("E", 6, 6, (1, 2, 2, 3, 2, 1), (1, 2, 2, 3, 2, 1), True),
    "E V": ("E", 7, 2, (2, 2, 3, 4, 3, 2, 1), (1, 1, 2, 3, 3, 2, 1), False),
    "E VI": ("E", 7, 1, (2, 2, 3, 4, 3, 2, 1), (1, 2, 3, 4, 3, 2, 1), False),
    "E VII": ("E", 7, 7, (2, 2, 3, 4, 3, 2, 1), (2, 2, 3, 4, 3, 2, 1), True),
    "E VIII": ("E", 8, 1, (2, 3, 4, 6, 5, 4, 3, 2), (1, 3, 3, 5, 4, 3, 2, 1), False),
    "E IX": ("E", 8, 8, (2, 3, 4, 6, 5, 4, 3, 2), (2, 3, 4, 6, 5, 4, 3, 1), False),
    "F I": ("F", 4, 4, (2, 4, 3, 2), (2, 4, 3, 1), False),
    "F II": ("F", 4, 1, (2, 4, 3, 2), (1, 3, 2, 1), False),
    "G": ("G", 2, 2, (3, 2), (3, 1), False),
}

CLASSICAL = ("A III", "B I", "C I", "C II", "D I", "D III")
LABELS = CLASSICAL + tuple(EXCEPTIONAL)

# closed-form dim(G/K) and rank(G/K), used to prefilter large sweeps; the
# root-level computations below are the source of truth and tests compare both
EXCEPTIONAL_DIM_RANK = {
    "E II": (40, 4), "E III": (32, 2), "E V": (70, 7), "E VI": (64, 4),
    "E VII": (54, 3), "E VIII": (128, 8), "E IX": (112, 4), "F I": (28, 4),
    "F II": (16, 1), "G": (8, 2),
}


@dataclass(frozen=True)
class SymmetricPairRecord:
    label: str
    cartan_type: CartanType
    nu: int
    hermitian: bool
    mu: tuple
    lambda_nc: tuple
    params: tuple = ()
    projective_census: bool = True
    canonical: bool = True
    rank_one: bool = field(default=False)

    @property
    def p(self):
        return self.cartan_type.rank

    @property
    def root_system(self):
        return build_root_system(self.cartan_type)

    def y(self, i):
        """Coefficient of the highest root at alpha_i (1-based)."""
        return self.mu[i - 1]

    def z(self, i):
        """Coefficient of the highest noncompact root at alpha_i (1-based)."""
        return self.lambda_nc[i - 1]

    @property
    def name(self):
        if self.label in EXCEPTIONAL:
            return self.label
        return f"{self.label} (p={self.p}, nu={self.nu})"


def parameter_range(label, p):
    """Legal painted indices nu for a classical label at rank p."""
    if label == "A III":
        return list(range(2, p)) if p >= 3 else []
    if label == "B I":
        if p >= 3:
            return list(range(1, p + 1))
        return [p]
    if label == "C I":
        return [p] if p >= 2 else []
    if label == "C II":
        return list(range(2, p - 1)) if p >= 4 else []
    if label == "D I":
        return list(range(1, p - 1)) if p >= 4 else []
    if label == "D III":
        return [p] if p >= 4 else []
    raise ValueError(f"unknown classical label {label!r}")


def table_data(label, p, nu):
    """Literal (mu, lambda, hermitian) columns for a classical row."""
    if label == "A III":
        mu = (1,) * p
        return mu, mu, True
    if label == "B I":
        mu = (1,) + (2,) * (p - 1)
        return mu, (1,) * nu + (2,) * (p - nu), nu == 1
    if label == "C I":
        mu = (2,) * (p - 1) + (1,)
        return mu, mu, True
    if label == "C II":
        mu = (2,) * (p - 1) + (1,)
        return mu, (1,) * nu + (2,) * (p - nu - 1) + (1,), False
    if label == "D I":
        mu = (1,) + (2,) * (p - 3) + (1, 1)
        return mu, (1,) * nu + (2,) * (p - nu - 2) + (1, 1), nu == 1
    if label == "D III":
        mu = (1,) + (2,) * (p - 3) + (1, 1)
        return mu, mu, True
    raise ValueError(label)


def _is_canonical(label, p, nu):
    # mirror parameters give the same symmetric space; keep one of each pair
    if label == "A III":
        return nu <= p + 1 - nu
    if label in ("C II", "D I"):
        return nu == 1 or nu <= p - nu
    return True


def classical_dim_rank(label, p, nu):
    """Closed-form (dim G/K, rank G/K) for the classical families."""
    if label == "A III":
        return 2 * nu * (p + 1 - nu), min(nu, p + 1 - nu)
    if label == "B I":
        return 2 * nu * (2 * p - 2 * nu + 1), min(2 * nu, 2 * p - 2 * nu + 1)
    if label == "C I":
        return p * (p + 1), p
    if label == "C II":
        return 4 * nu * (p - nu), min(nu, p - nu)
    if label == "D I":
        return 4 * nu * (p - nu), min(2 * nu, 2 * p - 2 * nu)
    if label == "D III":
        return p * (p - 1), p // 2
    raise ValueError(label)


def make_record(label, p=None, nu=None, strict=True) -> SymmetricPairRecord:
    """Build one record, cross-checking the literal table data against roots."""
    if label in EXCEPTIONAL:
        series, p, nu, mu, lam, herm = EXCEPTIONAL[label]
        params = ()
        canonical = True
    elif label in CLASSICAL:
        series = label[0]
        if p is None or nu is None:
            raise ValueError(f"{label} needs p and nu")
        if strict and nu not in parameter_range(label, p):
            raise ValueError(f"{label}: nu={nu} not allowed at p={p}")
        mu, lam, herm = table_data(label, p, nu)
        params = (("p", p), ("nu", nu))
        canonical = _is_canonical(label, p, nu)
    else:
        raise ValueError(f"unknown label {label!r}")
    ct = CartanType(series, p)
    rs = build_root_system(ct)
    if rs.highest_root != mu:
        raise AssertionError(f"{label}: table mu {mu} != highest root {rs.highest_root}")
    nc = _noncompact(rs, nu)
    top = [r for r in nc if all(a >= b for a, b in zip(r, lam))]
    if tuple(lam) not in nc or any(any(a > b for a, b in zip(r, lam)) for r in nc):
        raise AssertionError(f"{label}: table lambda {lam} is not the highest noncompact root")
    assert top == [tuple(lam)]
    if (mu[nu - 1] == 1) != herm:
        raise AssertionError(f"{label}: hermitian flag disagrees with y_nu")
    rank_one = _rank(rs, nu) == 1
    return SymmetricPairRecord(
        label, ct, nu, herm, tuple(mu), tuple(lam), params,
        projective_census=not (label == "F II"), canonical=canonical, rank_one=rank_one,
    )


def _noncompact(rs, nu):
    return tuple(r for r in rs.positive_roots if r[nu - 1] % 2 == 1)


def catalog(max_rank: int):
    if max_rank < 1:
        raise ValueError("max_rank must be positive")
    out = []
    for label in CLASSICAL:
        for p in range(1, max_rank + 1):
            for nu in parameter_range(label, p):
                out.append(make_record(label, p, nu))
    for label, row in EXCEPTIONAL.items():
        if row[1] <= max_rank:
            out.append(make_record(label))
    return out


def noncompact_positive_roots(rec: SymmetricPairRecord):
    return _noncompact(rec.root_system, rec.nu)


def compact_positive_roots(rec: SymmetricPairRecord):
    return tuple(r for r in rec.root_system.positive_roots if r[rec.nu - 1] % 2 == 0)


def _strongly_orthogonal(rs, a, b):
    s = tuple(x + y for x, y in zip(a, b))
    d = tuple(x - y for x, y in zip(a, b))
    return not rs.is_root(s) and not rs.is_root(d) and any(d)


@lru_cache(maxsize=None)
def _rank(rs, nu):
    """Largest family of pairwise strongly orthogonal noncompact roots."""
    nc = _noncompact(rs, nu)
    adj = {a: frozenset(b for b in nc if _strongly_orthogonal(rs, a, b)) for a in nc}
    best = 0

    def grow(size, cand):
        nonlocal best
        if size > best:
            best = size
        if size + len(cand) <= best:
            return
        for a in sorted(cand, reverse=True):
            if size + len(cand) <= best:
                return
            cand = cand - {a}
            grow(size + 1, cand & adj[a])

    grow(0, frozenset(nc))
    return best


def symmetric_rank(rec: SymmetricPairRecord) -> int:
    return _rank(rec.root_system, rec.nu)


def dims(rec: SymmetricPairRecord):
    """Return (dim_p, rank of G/K, n, codimension) with n = dim_p/2 - 1."""
    dim_p = 2 * len(noncompact_positive_roots(rec))
    assert dim_p % 2 == 0
    rank = symmetric_rank(rec)
    return dim_p, rank, dim_p // 2 - 1, rank - 1


def expected_dim_rank(label, p=None, nu=None):
    if label in EXCEPTIONAL_DIM_RANK:
        return EXCEPTIONAL_DIM_RANK[label]
    return classical_dim_rank(label, p, nu)


@dataclass(frozen=True)
class ExtendedDiagram:
    nodes: tuple
    vectors: tuple
    edges: dict = field(compare=False)
    painted: frozenset

    def edge(self, i, j):
        """Pair (c_ij, c_ji) of Cartan integers, or None."""
        if (i, j) in self.edges:
            return self.edges[(i, j)]
        if (j, i) in self.edges:
            a, b = self.edges[(j, i)]
            return b, a
        return None


def build_extended_vogan(rec: SymmetricPairRecord) -> ExtendedDiagram:
    rs = rec.root_system
    p = rec.p
    vectors = (tuple(-c for c in rec.mu),) + rs.simple_roots()
    edges = {}
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            a = cartan_pairing(rs, vectors[i], vectors[j])
            b = cartan_pairing(rs, vectors[j], vectors[i])
            if a or b:
                assert a * b in (1, 2, 3, 4)
                edges[(i, j)] = (a, b)
    painted = frozenset({0, rec.nu} if rec.hermitian else {rec.nu})
    return ExtendedDiagram(tuple(range(p + 1)), vectors, edges, painted)
