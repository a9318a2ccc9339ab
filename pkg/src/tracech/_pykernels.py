"""Pure-Python kernels.  Same API as the compiled ``_ckernels`` module.

``succ`` is a tuple indexed by vertex (index 0 unused) of sorted successor
tuples.  ``weights`` is a 0-based n x n list of ints.
"""

GOOD = 0
SCENARIO_1 = 1
SCENARIO_2 = 2


def closed_walks(succ, n, k):
    """All closed walks with k arcs as vertex tuples (x_0, ..., x_k), x_k = x_0.

    Ordered by start vertex, then lexicographically.
    """
    if k < 1:
        raise ValueError("walk length must be >= 1")
    out = []
    path = [0] * (k + 1)

    def extend(depth, start):
        v = path[depth]
        if depth == k - 1:
            for w in succ[v]:
                if w == start:
                    path[k] = start
                    out.append(tuple(path))
            return
        for w in succ[v]:
            path[depth + 1] = w
            extend(depth + 1, start)

    for start in range(1, n + 1):
        path[0] = start
        extend(0, start)
    return out


def int_walk_weight_sum(weights, n, k):
    """Sum over closed walks of length k of the product of arc weights."""
    if k < 1:
        raise ValueError("walk length must be >= 1")
    rows = [[(j, w) for j, w in enumerate(row) if w] for row in weights]
    total = 0

    def extend(v, depth, prod, start):
        nonlocal total
        if depth == k - 1:
            w = weights[v][start]
            if w:
                total += prod * w
            return
        for j, w in rows[v]:
            extend(j, depth + 1, prod * w, start)

    for start in range(n):
        extend(start, 0, 1, start)
    return total


def classify_walk(walk, member):
    """Scan a closed walk for the first trigger.

    ``member`` is indexable by vertex and truthy for vertices of the
    subdigraph.  Returns ``(GOOD, 0, 0)``, ``(SCENARIO_1, t, y)`` where x_t = y
    is the first walk vertex in the subdigraph, or ``(SCENARIO_2, s, t)`` for
    the first repetition x_s = x_t (s < t) that is not the whole walk closing
    as a simple cycle.  Membership is tested before repetition at each t.
    """
    k = len(walk) - 1
    seen = {}
    for t, x in enumerate(walk):
        if member[x]:
            return (SCENARIO_1, t, x)
        s = seen.get(x)
        if s is not None:
            if s == 0 and t == k:
                return (GOOD, 0, 0)
            return (SCENARIO_2, s, t)
        seen[x] = t
    raise ValueError("walk does not close")
