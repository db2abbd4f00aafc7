# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_kernels.py``; same signatures and results."""

from libc.stdlib cimport malloc, free


def bfs_code(list rot_flat, list rot_off, list pos, list hv_other, list vlabel, list htype,
             int v0, int s0, int direction, best):
    cdef int nv = len(rot_off) - 1
    cdef int *label = <int *> malloc(nv * sizeof(int))
    cdef int *entry = <int *> malloc(nv * sizeof(int))
    cdef int *order = <int *> malloc(nv * sizeof(int))
    cdef int *bst = NULL
    cdef Py_ssize_t nbest = 0
    cdef int i = 0, qi = 0, nord = 1, x, off, d, s, k, h, y, ly, val, b, j
    cdef bint tie = best is not None
    cdef list code = []
    cdef list hseq = []
    if label == NULL or entry == NULL or order == NULL:
        raise MemoryError()
    try:
        if tie:
            nbest = len(best)
            bst = <int *> malloc((nbest + 1) * sizeof(int))
            for j in range(nbest):
                bst[j] = best[j]
        for j in range(nv):
            label[j] = -1
        label[v0] = 0
        entry[v0] = s0
        order[0] = v0
        while qi < nord:
            x = order[qi]
            qi += 1
            off = rot_off[x]
            d = <int> rot_off[x + 1] - off
            for j in range(2):
                val = vlabel[x] if j == 0 else d
                if tie:
                    b = bst[i] if i < nbest else -1
                    if val > b:
                        return None
                    if val < b:
                        tie = False
                code.append(val)
                i += 1
            s = entry[x]
            for k in range(d):
                h = rot_flat[off + ((s + direction * k) % d + d) % d]
                hseq.append(h)
                y = hv_other[h]
                ly = label[y]
                if ly < 0:
                    ly = nord
                    label[y] = ly
                    entry[y] = pos[h ^ 1]
                    order[nord] = y
                    nord += 1
                for j in range(2):
                    val = ly if j == 0 else htype[h]
                    if tie:
                        b = bst[i] if i < nbest else -1
                        if val > b:
                            return None
                        if val < b:
                            tie = False
                    code.append(val)
                    i += 1
        return code, [order[j] for j in range(nord)], hseq
    finally:
        free(label)
        free(entry)
        free(order)
        if bst != NULL:
            free(bst)


def two_cut_partners(int n, list adj_flat, list adj_off, int removed, list eligible):
    cdef int *disc = <int *> malloc(n * sizeof(int))
    cdef int *low = <int *> malloc(n * sizeof(int))
    cdef int *sv = <int *> malloc(n * sizeof(int))
    cdef int *sp = <int *> malloc(n * sizeof(int))
    cdef int *si = <int *> malloc(n * sizeof(int))
    cdef char *sk = <char *> malloc(n * sizeof(char))
    cdef int *off = <int *> malloc((n + 1) * sizeof(int))
    cdef int m = len(adj_flat)
    cdef int *adj = <int *> malloc((m + 1) * sizeof(int))
    cdef char *elig = <char *> malloc(n * sizeof(char))
    cdef int t = 0, root, children, top, x, y, p, j
    cdef set out = set()
    try:
        for j in range(n + 1):
            off[j] = adj_off[j]
        for j in range(m):
            adj[j] = adj_flat[j]
        for j in range(n):
            disc[j] = -1
            elig[j] = 1 if eligible[j] else 0
        for root in range(n):
            if root == removed or disc[root] >= 0:
                continue
            disc[root] = t
            low[root] = t
            t += 1
            children = 0
            top = 0
            sv[0] = root
            sp[0] = -1
            si[0] = off[root]
            sk[0] = 0
            while top >= 0:
                x = sv[top]
                if si[top] < off[x + 1]:
                    y = adj[si[top]]
                    si[top] += 1
                    if y == removed:
                        continue
                    if y == sp[top] and not sk[top]:
                        sk[top] = 1  # skip exactly one copy of the tree edge
                        continue
                    if disc[y] < 0:
                        disc[y] = t
                        low[y] = t
                        t += 1
                        top += 1
                        sv[top] = y
                        sp[top] = x
                        si[top] = off[y]
                        sk[top] = 0
                        if x == root:
                            children += 1
                    elif disc[y] < low[x]:
                        low[x] = disc[y]
                else:
                    top -= 1
                    if top >= 0:
                        p = sv[top]
                        if low[x] < low[p]:
                            low[p] = low[x]
                        if p != root and low[x] >= disc[p] and elig[p]:
                            out.add(p)
            if children > 1 and elig[root]:
                out.add(root)
        return sorted(out)
    finally:
        free(disc); free(low); free(sv); free(sp); free(si); free(sk); free(off); free(adj); free(elig)
