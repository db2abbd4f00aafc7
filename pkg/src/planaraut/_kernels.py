"""Pure-Python hot kernels; the compiled ``_core`` module mirrors this API."""

from __future__ import annotations


def bfs_code(rot_flat, rot_off, pos, hv_other, vlabel, htype, v0, s0, direction, best):
    """Breadth-first code of a rotation system from a starting half.

    Vertices are numbered in the order BFS reaches them; each vertex
    contributes its label, its degree and, walking its rotation from the
    entry half in ``direction``, (neighbor number, half type) pairs.
    Returns ``(code, order, hseq)`` or ``None`` as soon as the code is
    known to exceed ``best``.
    """
    nv = len(rot_off) - 1
    label = [-1] * nv
    entry = [0] * nv
    label[v0] = 0
    entry[v0] = s0
    order = [v0]
    hseq = []
    code = []
    tie = best is not None
    i = 0
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        off = rot_off[x]
        d = rot_off[x + 1] - off
        for val in (vlabel[x], d):
            if tie:
                b = best[i]
                if val > b:
                    return None
                if val < b:
                    tie = False
            code.append(val)
            i += 1
        s = entry[x]
        for k in range(d):
            h = rot_flat[off + (s + direction * k) % d]
            hseq.append(h)
            y = hv_other[h]
            ly = label[y]
            if ly < 0:
                ly = len(order)
                label[y] = ly
                entry[y] = pos[h ^ 1]
                order.append(y)
            for val in (ly, htype[h]):
                if tie:
                    b = best[i]
                    if val > b:
                        return None
                    if val < b:
                        tie = False
                code.append(val)
                i += 1
    return code, order, hseq


def two_cut_partners(n, adj_flat, adj_off, removed, eligible):
    """Articulation points of the graph with vertex ``removed`` deleted.

    Only articulation points flagged in ``eligible`` are reported.  The
    adjacency lists may contain repeated neighbors (parallel edges).
    """
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if root == removed or disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        # stack of (vertex, parent, next adjacency index, parent edge skipped)
        stack = [[root, -1, adj_off[root], False]]
        while stack:
            top = stack[-1]
            x = top[0]
            if top[2] < adj_off[x + 1]:
                y = adj_flat[top[2]]
                top[2] += 1
                if y == removed:
                    continue
                if y == top[1] and not top[3]:
                    top[3] = True  # skip exactly one copy of the tree edge
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = t
                    t += 1
                    stack.append([y, x, adj_off[y], False])
                    if x == root:
                        children += 1
                elif disc[y] < low[x]:
                    low[x] = disc[y]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[x] < low[p]:
                        low[p] = low[x]
                    if p != root and low[x] >= disc[p] and eligible[p]:
                        out.append(p)
        if children > 1 and eligible[root]:
            out.append(root)
    return sorted(set(out))
