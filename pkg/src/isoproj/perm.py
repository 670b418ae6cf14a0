"""Labeled-graph automorphisms, group closure and orbit partitions."""

from collections import Counter


def labeled_automorphisms(n, colors, labels):
    """All permutations of range(n) preserving node colors and edge labels.

    `labels` maps ordered pairs (i, j) to a hashable label; missing pairs mean
    no edge.  Permutations are returned as tuples perm[i] = image of i, in
    lexicographic order.
    """
    def signature(i):
        out = Counter(v for (a, _), v in labels.items() if a == i)
        inc = Counter(v for (_, b), v in labels.items() if b == i)
        return colors[i], tuple(sorted(out.items(), key=repr)), tuple(sorted(inc.items(), key=repr))

    sig = [signature(i) for i in range(n)]
    found = []
    image = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            found.append(tuple(image))
            return
        for c in range(n):
            if used[c] or sig[c] != sig[i]:
                continue
            ok = True
            for j in range(i):
                if labels.get((i, j)) != labels.get((c, image[j])) or \
                        labels.get((j, i)) != labels.get((image[j], c)):
                    ok = False
                    break
            if (labels.get((i, i)) != labels.get((c, c))):
                ok = False
            if ok:
                image[i] = c
                used[c] = True
                extend(i + 1)
                used[c] = False
        image[i] = None

    extend(0)
    return found


def mat_mul(a, b):
    n, k = len(a), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(k)) for i in range(n))


def mat_vec(a, v):
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def close_group(generators, dim):
    """Close a set of square matrices under composition, starting from the identity."""
    e = identity(dim)
    group = {e}
    frontier = [e]
    gens = list(generators)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mat_mul(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(group)


def orbits(group, points, act):
    """Partition `points` into orbits; each orbit sorted, orbits ordered by least member.

    Raises ValueError if some group element maps a point outside `points`.
    """
    pts = set(points)
    seen = set()
    result = []
    for x in sorted(pts):
        if x in seen:
            continue
        orb = set()
        for g in group:
            y = act(g, x)
            if y not in pts:
                raise ValueError(f"{y} lies outside the admissible set")
            orb.add(y)
        seen |= orb
        result.append(sorted(orb))
    return result
