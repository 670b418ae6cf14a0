"""Homogeneity, existence predicates and the per-n census of foliations on CP^n."""

import csv
import io
import json
from dataclasses import dataclass, fields
from fractions import Fraction

from .fkmproj import count_classes_fkm, clifford_family, delta
from .rootsys import TorusPoint, basis_point
from .symcat import (CLASSICAL, EXCEPTIONAL, SymmetricPairRecord, classical_dim_rank, dims,
                     expected_dim_rank, make_record, parameter_range, symmetric_rank)
from .voganproj import count_classes, is_admissible

YES, NO, UNKNOWN = "yes", "no", "unknown"
GAP_SOURCE = "open-gap (7,8) on S^31"


@dataclass(frozen=True)
class FoliationRecord:
    source_kind: str  # "pair", "fkm" or "gap"
    source: str
    params: str
    n: int
    codim: int
    representative: object  # TorusPoint or None
    orbit_size: object  # int or None
    homogeneous: str
    N_within_source: object  # int or None
    overlap_candidate: bool = False
    extrapolated: bool = False


FIELDS = [f.name for f in fields(FoliationRecord)]


def homogeneity(rec: SymmetricPairRecord, t: TorusPoint) -> bool:
    """True iff the projected foliation through t is homogeneous."""
    if not is_admissible(rec, t):
        raise ValueError(f"{t} is not admissible for {rec.name}")
    if rec.rank_one:
        return True
    p, nu = rec.p, rec.nu
    return rec.hermitian and t in (basis_point(p, nu, 1), basis_point(p, nu, -1))


def inhomog_exists(n: int, q: int) -> bool:
    """Whether CP^n carries an inhomogeneous irreducible foliation of codimension q."""
    if n < 1 or q < 1:
        raise ValueError("n and q must be positive")
    if q == 1:
        return n % 2 == 1 and n >= 3
    return (q + 1) ** 2 <= 2 * (n + 1) and (2 * (n + 1)) % (q + 1) == 0


def codim_bound(n):
    """Largest q with (q+1)^2 <= 2(n+1)."""
    r = 0
    while (r + 1) ** 2 <= 2 * (n + 1):
        r += 1
    return max(r - 1, 1)


def all_homogeneous(n: int) -> bool:
    return not any(inhomog_exists(n, q) for q in range(1, codim_bound(n) + 1))


def witness_record(n, q):
    """The pair used to realize an inhomogeneous codimension-q foliation, if any.

    For q >= 2 this is SO(q+r+1)/SO(q+1)xSO(r) with r = 2(n+1)/(q+1); for q = 1
    it is SU(2+r)/S(U(2)xU(r)) with r = (n+1)/2.
    """
    if not inhomog_exists(n, q):
        return None
    if q == 1:
        r = (n + 1) // 2
        return make_record("A III", r + 1, 2)
    a, b = q + 1, 2 * (n + 1) // (q + 1)
    total = a + b
    even = sorted(x for x in (a, b) if x % 2 == 0)
    if total % 2 == 1:
        return make_record("B I", (total - 1) // 2, even[0] // 2)
    return make_record("D I", total // 2, min(a, b) // 2)


def pair_records_of_dim(dim_p):
    """Canonical catalog records with dim G/K = dim_p and rank >= 2."""
    out = []
    for label in CLASSICAL:
        for p in range(1, dim_p + 1):
            for nu in parameter_range(label, p):
                d, r = classical_dim_rank(label, p, nu)
                if d != dim_p or r < 2:
                    continue
                rec = make_record(label, p, nu)
                if rec.canonical:
                    out.append(rec)
    for label in EXCEPTIONAL:
        d, r = expected_dim_rank(label)
        if d == dim_p and r >= 2:
            out.append(make_record(label))
    for rec in out:
        got = dims(rec)
        if got[0] != dim_p or got[1] != expected_dim_rank(rec.label, rec.p, rec.nu)[1]:
            raise AssertionError(f"{rec.name}: dimension bookkeeping disagrees: {got}")
    return out


def fkm_families_of_dim(dimV):
    """In-scope FKM families with module dimension dimV; (k+, k-) taken with k+ >= k-."""
    out = []
    m = 1
    while delta(m) <= dimV:
        d = delta(m)
        if dimV % d == 0:
            k = dimV // d
            splits = [(a, k - a) for a in range(k, -1, -1) if a >= k - a] if m % 4 == 0 else [k]
            for sp in splits:
                f = clifford_family(m, sp, require_foliation=False)
                if f.mult[1] > 0 and f.in_scope:
                    out.append(f)
        m += 1
    return out


def _params(rec):
    return ";".join(f"{k}={v}" for k, v in rec.params)


def _pair_rows(n, rec):
    _, rank, _, codim = dims(rec)
    N, orbs = count_classes(rec)
    rows = []
    for orb in orbs:
        t = orb[0]
        rows.append(FoliationRecord(
            "pair", rec.label, _params(rec), n, codim, t, len(orb),
            YES if homogeneity(rec, t) else NO, N,
        ))
    return rows


def _fkm_rows(n, f):
    N, orbs = count_classes_fkm(f)
    if f.is_split:
        params = f"m={f.m};k+={f.split[0]};k-={f.split[1]}"
    else:
        params = f"m={f.m};k={f.k}"
    return [FoliationRecord("fkm", "FKM", params, n, 1, orb[0], len(orb), UNKNOWN, N,
                            extrapolated=f.extrapolated) for orb in orbs]


def enumerate_foliations(n: int):
    """All census rows for CP^n, codimension >= 2 first, then codimension one."""
    if n < 1:
        raise ValueError("n must be positive")
    dim = 2 * n + 2
    pairs = pair_records_of_dim(dim)
    high = [r for r in pairs if symmetric_rank(r) >= 3]
    rank2 = [r for r in pairs if symmetric_rank(r) == 2]
    fams = fkm_families_of_dim(dim)
    rows = []
    for rec in high:
        rows.extend(_pair_rows(n, rec))
    # rank-two pairs other than G have four principal curvatures, like FKM
    # foliations, so at a shared n they are candidates for congruence
    four = any(r.label != "G" for r in rank2)
    for rec in rank2:
        for row in _pair_rows(n, rec):
            rows.append(_with(row, overlap_candidate=bool(fams) and rec.label != "G"))
    for f in fams:
        for row in _fkm_rows(n, f):
            rows.append(_with(row, overlap_candidate=four))
    if dim == 32:
        rows.append(FoliationRecord("gap", GAP_SOURCE, "m1=7;m2=8", n, 1, None, None, UNKNOWN, None))
    return rows


def _with(row, **kw):
    data = {f: getattr(row, f) for f in FIELDS}
    data.update(kw)
    return FoliationRecord(**data)


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _row_dict(r: FoliationRecord):
    out = {}
    for name in FIELDS:
        v = getattr(r, name)
        if name == "representative":
            v = None if v is None else {"basis": v.basis, "coords": [_q(c) for c in v.coords]}
        out[name] = v
    return out


def export(records, format="json") -> bytes:
    if format == "json":
        return (json.dumps([_row_dict(r) for r in records], indent=1) + "\n").encode()
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(FIELDS)
        for r in records:
            d = _row_dict(r)
            rep = d["representative"]
            d["representative"] = "" if rep is None else rep["basis"] + ":" + " ".join(rep["coords"])
            w.writerow(["" if d[k] is None else d[k] for k in FIELDS])
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {format!r}")


def _point(v):
    if v is None or v == "":
        return None
    if isinstance(v, str):
        basis, coords = v.split(":")
        v = {"basis": basis, "coords": coords.split()}
    return TorusPoint(v["basis"], tuple(Fraction(c) for c in v["coords"]))


def parse(data: bytes, format="json"):
    """Inverse of export."""
    text = data.decode()
    if format == "json":
        items = json.loads(text)
    elif format == "csv":
        items = []
        for d in csv.DictReader(io.StringIO(text)):
            for name in ("n", "codim", "orbit_size", "N_within_source"):
                d[name] = int(d[name]) if d[name] != "" else None
            for name in ("overlap_candidate", "extrapolated"):
                d[name] = d[name] == "True"
            items.append(d)
    else:
        raise ValueError(f"unknown format {format!r}")
    out = []
    for d in items:
        d = dict(d)
        d["representative"] = _point(d["representative"])
        out.append(FoliationRecord(**{k: d[k] for k in FIELDS}))
    return out
