"""Reference classification values, transcribed independently of the algorithms.

These are the reference answers that `check --tables` and the test suite compare
the computed results against.
"""

import time
from fractions import Fraction

from .fkmproj import (closed_form_N, count_classes_fkm, admissible_points_fkm, families,
                      lowest_weights)
from .rootsys import EPSILON, TorusPoint, basis_point
from .symcat import catalog
from .voganproj import admissible_points, admissible_points_oracle, count_classes

HALF = Fraction(1, 2)


def pair_table_N(rec):
    """N column of the inner symmetric pair table (None for the rank-one F II row)."""
    p, nu, label = rec.p, rec.nu, rec.label
    if label == "A III":
        if 2 * nu != p + 1:
            return 1 + nu // 2 + (p - nu + 1) // 2
        return 1 + nu // 2
    if label in ("B I", "C I"):
        return 1
    if label in ("C II", "D I"):
        return 1 if 2 * nu == p else 2
    return {"D III": 2, "E II": 2, "E III": 2, "E V": 1, "E VI": 2, "E VII": 1,
            "E VIII": 1, "E IX": 1, "F I": 1, "F II": None, "G": 1}[label]


def _h(p, *terms):
    """Sum of c*h_i for (i, c) pairs."""
    t = TorusPoint.h(*([0] * p))
    for i, c in terms:
        t = t + basis_point(p, i, c)
    return t


def literal_admissible(rec):
    """Admissible sets as listed case by case; None where no list is given."""
    p, nu, label = rec.p, rec.nu, rec.label
    pm = [_h(p, (nu, 1)), _h(p, (nu, -1))]
    if label == "A III":
        return sorted(pm + [_h(p, (nu, -1), (i, 2)) for i in range(1, p + 1) if i != nu])
    if label == "B I":
        if nu == 1:
            return sorted(pm)
        return sorted([_h(p, (nu, -1)), _h(p, (nu, -1), (1, 2))])
    if label == "C I":
        return sorted(pm)
    if label == "C II":
        return sorted([_h(p, (nu, -1)), _h(p, (nu, -1), (p, 2))])
    if label == "D I":
        if nu == 1:
            return sorted(pm + [_h(p, (1, -1), (p - 1, 2)), _h(p, (1, -1), (p, 2))])
        return sorted([_h(p, (nu, -1))] + [_h(p, (nu, -1), (i, 2)) for i in (1, p - 1, p)])
    if label == "D III":
        return sorted(pm + [_h(p, (p, -1), (1, 2)), _h(p, (p, -1), (p - 1, 2))])
    table = {
        "E II": [[(2, -1)], [(2, -1), (1, 2)], [(2, -1), (6, 2)]],
        "E III": [[(6, 1)], [(6, -1)], [(6, -1), (1, 2)]],
        "E V": [[(2, -1)], [(2, -1), (7, 2)]],
        "E VI": [[(1, -1)], [(1, -1), (7, 2)]],
        "E VII": [[(7, 1)], [(7, -1)]],
        "E VIII": [[(1, -1)]],
        "E IX": [[(8, -1)]],
        "F I": [[(4, -1)]],
        "G": [[(2, -1)]],
    }
    if label not in table:
        return None
    return sorted(_h(p, *terms) for terms in table[label])


def _perm(p, pairs):
    s = list(range(p + 1))
    for a, b in pairs:
        s[a], s[b] = b, a
    return tuple(s)


def literal_generators(rec):
    """Listed generators of the extended-diagram symmetry group as node permutations."""
    p, nu, label = rec.p, rec.nu, rec.label
    gens = []
    if label == "A III":
        s = list(range(p + 1))
        for i in range(nu + 1):
            s[i] = nu - i
        for i in range(nu + 1, p + 1):
            s[i] = p + nu - i + 1
        gens.append(tuple(s))
        if 2 * nu == p + 1:
            s = [0] + [p - i + 1 for i in range(1, p + 1)]
            gens.append(tuple(s))
    elif label == "B I" and p >= 2:
        gens.append(_perm(p, [(0, 1)]))
    elif label == "C II" and 2 * nu == p:
        gens.append(tuple(p - i for i in range(p + 1)))
    elif label == "D I":
        gens.append(_perm(p, [(p - 1, p)]))
        gens.append(_perm(p, [(0, 1)]))
        if 2 * nu == p:
            gens.append(tuple(p - i for i in range(p + 1)))
    elif label == "D III":
        gens.append(tuple(p - i for i in range(p + 1)))
    elif label == "E II":
        gens.append(_perm(p, [(1, 6), (3, 5)]))
    elif label == "E V":
        gens.append(_perm(p, [(1, 6), (3, 5), (0, 7)]))
    return gens


def _eps(f, spin=(), h=(), plus=(), minus=()):
    """Point from coordinate pairs (index, value) per block, 1-based."""
    x = [Fraction(0)] * f.dim
    p = f.p
    for i, c in spin:
        x[i - 1] = Fraction(c)
    q = f.q
    for i, c in h:
        x[p + i - 1] = Fraction(c)
    for i, c in plus:
        x[p + i - 1] = Fraction(c)
    for i, c in minus:
        x[p + q[0] + i - 1] = Fraction(c)
    return TorusPoint(EPSILON, tuple(x))


def literal_admissible_fkm(f):
    """Admissible sets of the Clifford families as listed per residue of m mod 8."""
    r = f.m % 8
    top = _eps(f, spin=[(1, 2)])
    out = [top]
    if r == 0:
        kp, km = f.split
        if kp % 2 == 0 and km % 2 == 0:
            qp, qm = f.q
            for fp in ([1, -1] if qp else [1]):
                for fm in ([1, -1] if qm else [1]):
                    plus = [(j, 1) for j in range(1, qp)] + ([(qp, fp)] if qp else [])
                    minus = [(j, 1) for j in range(1, qm)] + ([(qm, fm)] if qm else [])
                    out.append(_eps(f, plus=plus, minus=minus))
    elif r in (1, 7):
        q = f.q[0]
        if f.k % 2 == 0:
            out.append(_eps(f, h=[(j, 1) for j in range(1, q + 1)]))
            out.append(_eps(f, h=[(j, 1) for j in range(1, q)] + [(q, -1)]))
        if f.m == 1:
            out.append(_eps(f, spin=[(1, -2)]))
    elif r in (2, 6):
        k = f.k
        for ones in range(k + 1):
            out.append(_eps(f, h=[(j, 1 if j <= ones else -1) for j in range(1, k + 1)]))
    elif r in (3, 5):
        out.append(_eps(f, h=[(j, 1) for j in range(1, f.k + 1)]))
    elif r == 4:
        qp, qm = f.q
        out.append(_eps(f, plus=[(j, 1) for j in range(1, qp + 1)], minus=[(j, 1) for j in range(1, qm + 1)]))
    return sorted(set(out))


def literal_lowest_weights(f):
    """Lowest weights of the representation as listed per residue of m mod 8."""
    r, p, dim = f.m % 8, f.p, f.dim

    def vec(spin, extra=()):
        x = [Fraction(0)] * dim
        for i, c in enumerate(spin):
            x[i] = c
        for i, c in extra:
            x[i] = Fraction(c)
        return tuple(x)

    base = [-HALF] * p
    flip = [-HALF] * (p - 1) + [HALF]
    out = []
    if r in (0, 4):
        off = p
        for k, q in zip(f.split, f.q):
            if r == 0 and k == 1:
                out.append(vec(base))
            elif k:
                out.append(vec(base, [(off, -1)]))
                if r == 0 and k == 2:
                    out.append(vec(base, [(off, 1)]))
            off += q
    elif r in (1, 7):
        spins = [base, flip]
        k = f.k
        for s in spins:
            if k == 1:
                out.append(vec(s))
            else:
                out.append(vec(s, [(p, -1)]))
                if k == 2:
                    out.append(vec(s, [(p, 1)]))
    elif r in (2, 6):
        out.append(vec(base, [(p, -1)]))
        out.append(vec(base, [(p + f.k - 1, 1)]))
    elif r in (3, 5):
        out.append(vec(base, [(p, -1)]))
        out.append(vec(flip, [(p, -1)]))
    return sorted(out)


class CheckResult:
    def __init__(self, name):
        self.name = name
        self.failures = []
        self.count = 0
        self.seconds = 0.0

    @property
    def ok(self):
        return not self.failures

    def expect(self, cond, detail):
        self.count += 1
        if not cond:
            self.failures.append(detail)

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f"; first failure: {self.failures[0]}"
        return f"{status} {self.name}: {self.count} cases, {self.seconds:.2f}s{extra}"


def _timed(result, fn):
    t0 = time.perf_counter()
    fn(result)
    result.seconds = time.perf_counter() - t0
    return result


def check_tables(max_rank=8, bound=2, max_m=18, max_rank_sum=9, prime_limit=200):
    """Run every golden comparison; returns a list of CheckResult."""
    from .census import all_homogeneous

    records = catalog(max_rank)
    fams = families(max_m, max_rank_sum=max_rank_sum)

    def pair_counts(res):
        for rec in records:
            want = pair_table_N(rec)
            if want is None:
                continue
            got, _ = count_classes(rec)
            res.expect(got == want, f"{rec.name}: N={got}, table says {want}")

    def sets(res):
        for rec in records:
            closed = admissible_points(rec)
            res.expect(closed == admissible_points_oracle(rec, bound), f"{rec.name}: oracle differs")
            lit = literal_admissible(rec)
            if lit is not None:
                res.expect(closed == lit, f"{rec.name}: closed form differs from listed set")

    def lowest(res):
        for f in fams:
            res.expect(sorted(lowest_weights(f)) == literal_lowest_weights(f), f"{f.label()}: lowest weights differ")

    def fkm_sets(res):
        for f in fams:
            res.expect(admissible_points_fkm(f, bound) == literal_admissible_fkm(f),
                       f"{f.label()}: search differs from listed set")

    def fkm_N(res):
        for f in fams:
            got, _ = count_classes_fkm(f, bound)
            res.expect(got == closed_form_N(f), f"{f.label()}: N={got}, closed form {closed_form_N(f)}")

    def primes(res):
        for n in range(1, prime_limit + 1):
            res.expect(all_homogeneous(n) == is_prime(n + 1), f"n={n}")

    jobs = [
        ("symmetric pairs: N per table row", pair_counts),
        ("symmetric pairs: admissible sets (closed form, search, listed)", sets),
        ("Clifford families: lowest weights", lowest),
        ("Clifford families: admissible sets (search vs listed)", fkm_sets),
        ("Clifford families: N vs closed form", fkm_N),
        ("prime criterion for homogeneity", primes),
    ]
    return [_timed(CheckResult(name), fn) for name, fn in jobs]


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
