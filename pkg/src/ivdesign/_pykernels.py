"""Pure-Python kernels. Same contracts and outputs as ``_ckernels.pyx``."""


def mcs_order(n, indptr, indices):
    """Maximum cardinality search; returns vertices in visit order.

    Buckets are LIFO linked lists, so among equally labelled vertices the one
    labelled most recently wins, and vertex 0 is visited first.
    """
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    head = [-1] * (n + 1)
    nxt = [-1] * n
    prv = [-1] * n
    label = [0] * n
    done = [False] * n
    for v in range(n - 1, -1, -1):
        nxt[v] = head[0]
        if head[0] >= 0:
            prv[head[0]] = v
        head[0] = v
    order = []
    top = 0
    for _ in range(n):
        while top > 0 and head[top] < 0:
            top -= 1
        v = head[top]
        # unlink v
        head[top] = nxt[v]
        if nxt[v] >= 0:
            prv[nxt[v]] = -1
        done[v] = True
        order.append(v)
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if done[u]:
                continue
            lu = label[u]
            if prv[u] >= 0:
                nxt[prv[u]] = nxt[u]
            else:
                head[lu] = nxt[u]
            if nxt[u] >= 0:
                prv[nxt[u]] = prv[u]
            lu += 1
            label[u] = lu
            prv[u] = -1
            nxt[u] = head[lu]
            if head[lu] >= 0:
                prv[head[lu]] = u
            head[lu] = u
            if lu > top:
                top = lu
    return order


def peo_violation(order, indptr, indices):
    """First vertex (in ``order``) whose later neighbours are not a clique, or -1."""
    n = len(order)
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[int(v)] = i
    stamp = [-1] * n
    for v in order:
        v = int(v)
        pv = pos[v]
        parent = -1
        best = n
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pv < pos[u] < best:
                best = pos[u]
                parent = u
        if parent < 0:
            continue
        for k in range(indptr[parent], indptr[parent + 1]):
            stamp[indices[k]] = v
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] > best and stamp[u] != v:
                return v
    return -1


def dp_bag(radix, nsep, unit_cost, caps, children, inf):
    """One clique-tree DP step over class labellings of a bag.

    ``radix[p]`` is the number of admissible weight classes at bag position
    ``p``; the first ``nsep`` positions form the separator towards the parent.
    ``unit_cost[p]`` is the cost per unit of class index for a new vertex.
    ``children`` is a list of ``(table, positions, strides)``.  Returns
    ``(table, argmin)`` indexed by the separator labelling; ``argmin`` holds
    the mixed-radix code of the best labelling of the new positions (-1 when
    infeasible).
    """
    b = len(radix)
    radix = [int(r) for r in radix]
    unit_cost = [int(c) for c in unit_cost]
    caps = [int(c) for c in caps]
    sstride = [0] * b
    s = 1
    for p in range(nsep - 1, -1, -1):
        sstride[p] = s
        s *= radix[p]
    size = s
    nstride = [0] * b
    s = 1
    for p in range(b - 1, nsep - 1, -1):
        nstride[p] = s
        s *= radix[p]
    table = [inf] * size
    argmin = [-1] * size
    kids = [(list(t), [int(x) for x in ps], [int(x) for x in st]) for t, ps, st in children]
    # contribution of position p with class j to each child index
    contrib = []
    for p in range(b):
        row = []
        for t, ps, st in kids:
            row.append(st[ps.index(p)] if p in ps else 0)
        contrib.append(row)
    nk = len(kids)
    counts = [0] * len(caps)
    cidx = [0] * nk

    def rec(p, sidx, ncode, cost):
        if p == b:
            total = cost
            for i in range(nk):
                val = kids[i][0][cidx[i]]
                if val >= inf:
                    return
                total += val
            if total < table[sidx]:
                table[sidx] = total
                argmin[sidx] = ncode
            return
        row = contrib[p]
        for j in range(radix[p]):
            if counts[j] >= caps[j]:
                continue
            counts[j] += 1
            for i in range(nk):
                cidx[i] += j * row[i]
            if p < nsep:
                rec(p + 1, sidx + j * sstride[p], ncode, cost)
            else:
                rec(p + 1, sidx, ncode + j * nstride[p], cost + j * unit_cost[p])
            for i in range(nk):
                cidx[i] -= j * row[i]
            counts[j] -= 1

    rec(0, 0, 0, 0)
    return table, argmin
