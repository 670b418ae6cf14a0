"""Admissible complex structures on inner symmetric pairs and their classes.

A torus element T (in the h-dual basis, alpha_i(h_j) = delta_ij) is admissible
when every noncompact positive root takes the value +1 or -1 on T and T lies
in the closed chamber of k.  Classes are orbits of the automorphism group of
the extended Vogan diagram acting on these points.
"""

from dataclasses import dataclass
from itertools import product

from .perm import close_group, labeled_automorphisms, mat_vec, orbits
from .rootsys import TorusPoint, basis_point, eval_root
from .symcat import SymmetricPairRecord, build_extended_vogan, noncompact_positive_roots


class ClassificationError(RuntimeError):
    """An internal invariant of the classification was violated."""


@dataclass(frozen=True, order=True)
class DiagramAutomorphism:
    perm: tuple  # perm[i] = sigma(i) on nodes 0..p

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.perm))

    def cycles(self):
        seen, out = set(), []
        for i in range(len(self.perm)):
            if i in seen or self.perm[i] == i:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j)
                j = self.perm[j]
            out.append(tuple(c))
        return out

    def __str__(self):
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "id"


@dataclass(frozen=True, order=True)
class InducedTorusMap:
    matrix: tuple  # column i holds the coordinates of phi(h_i)

    def __call__(self, t: TorusPoint) -> TorusPoint:
        return TorusPoint(t.basis, mat_vec(self.matrix, t.coords))


def admissible_points(rec: SymmetricPairRecord):
    """Closed form for the admissible set, sorted."""
    p, nu = rec.p, rec.nu
    base = basis_point(p, nu, -1)
    pts = {base}
    if rec.hermitian:
        pts.add(basis_point(p, nu, 1))
    for i in range(1, p + 1):
        if i == nu or rec.y(i) != 1:
            continue
        if rec.hermitian or rec.z(i) == 1:
            pts.add(base + basis_point(p, i, 2))
    return sorted(pts)


def chamber_roots(rec: SymmetricPairRecord):
    """Simple roots of k: compact simple roots, plus alpha_0 = -mu if non-Hermitian."""
    p = rec.p
    roots = [tuple(int(i == j) for j in range(p)) for i in range(p) if i != rec.nu - 1]
    if not rec.hermitian:
        roots.append(tuple(-c for c in rec.mu))
    return roots


def admissible_points_oracle(rec: SymmetricPairRecord, coord_bound: int = 2):
    """Exhaustive search over integer h-coordinates in [-bound, bound]^p.

    Coordinates are fixed left to right; a constraint is tested as soon as all
    coordinates in its support are fixed.
    """
    if coord_bound < 1:
        raise ValueError("coord_bound must be positive")
    p = rec.p
    noncompact = noncompact_positive_roots(rec)
    chamber = chamber_roots(rec)

    def last(r):
        return max(i for i, c in enumerate(r) if c)

    due = [([], []) for _ in range(p)]
    for r in noncompact:
        due[last(r)][0].append(r)
    for r in chamber:
        due[last(r)][1].append(r)

    values = range(-coord_bound, coord_bound + 1)
    found = []
    x = [0] * p

    def value(r):
        return sum(c * x[i] for i, c in enumerate(r) if c)

    def search(i):
        if i == p:
            found.append(TorusPoint.h(*x))
            return
        for v in values:
            x[i] = v
            ok = all(value(r) in (1, -1) for r in due[i][0]) and all(value(r) >= 0 for r in due[i][1])
            if ok:
                search(i + 1)
        x[i] = 0

    search(0)
    return sorted(found)


def is_admissible(rec: SymmetricPairRecord, t: TorusPoint) -> bool:
    return all(eval_root(r, t) in (1, -1) for r in noncompact_positive_roots(rec)) and \
        all(eval_root(r, t) >= 0 for r in chamber_roots(rec))


def _labels(d):
    labels = {}
    for (i, j), (a, b) in d.edges.items():
        labels[(i, j)] = a
        labels[(j, i)] = b
    return labels


def diagram_automorphisms(d):
    colors = [i in d.painted for i in d.nodes]
    perms = labeled_automorphisms(len(d.nodes), colors, _labels(d))
    return [DiagramAutomorphism(pm) for pm in perms]


def induced_map(rec: SymmetricPairRecord, a: DiagramAutomorphism) -> InducedTorusMap:
    """Torus map phi with alpha_{sigma(i)} o phi = alpha_i on nodes 0..p.

    Column i is phi(h_i) = h_{sigma(i)} - y_i h_{sigma(0)}, where a term with
    index 0 is dropped.  This covers all three cases sigma(0) = 0, nu, or k.
    """
    p = rec.p
    s = a.perm
    if s[0] == rec.nu and not rec.hermitian:
        raise ClassificationError("automorphism moves node 0 onto the painted node")
    cols = []
    for i in range(1, p + 1):
        col = [0] * p
        if s[i] != 0:
            col[s[i] - 1] += 1
        if s[0] != 0:
            col[s[0] - 1] -= rec.y(i)
        cols.append(col)
    matrix = tuple(tuple(cols[j][i] for j in range(p)) for i in range(p))
    return InducedTorusMap(matrix)


def automorphism_group(rec: SymmetricPairRecord):
    """Induced torus maps of all extended-diagram automorphisms, closed under composition."""
    d = build_extended_vogan(rec)
    gens = [induced_map(rec, a).matrix for a in diagram_automorphisms(d)]
    return [InducedTorusMap(m) for m in close_group(gens, rec.p)]


def count_classes(rec: SymmetricPairRecord, admissible=None):
    """Return (N, orbits) for the action on the admissible set."""
    pts = admissible_points(rec) if admissible is None else admissible
    group = automorphism_group(rec)
    try:
        orbs = orbits(group, pts, lambda g, t: g(t))
    except ValueError as exc:
        raise ClassificationError(f"{rec.name}: {exc}") from exc
    return len(orbs), orbs


def h_grid(p, bound):
    """All integer h-points in [-bound, bound]^p (for small brute-force checks)."""
    return [TorusPoint.h(*c) for c in product(range(-bound, bound + 1), repeat=p)]
