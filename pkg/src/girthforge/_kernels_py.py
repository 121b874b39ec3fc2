"""Pure-Python span-search kernels (fallback for the compiled extension).

Both kernels enumerate connected block subsets (blocks share a vertex) via
exclusive-neighborhood DFS, so each subset is visited exactly once.  A subset
S is a hit when

    span_off_root(S) <= qmr * |S| + slack

where span_off_root counts distinct vertices outside the root set.  Only
connected subsets need be searched: any size-minimal hit decomposes over its
connected components, one of which is a smaller hit.

Inputs are numpy int32/uint8 arrays shared with the compiled twin; results
are bit-identical between the two backends.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def _span_add(block, vcount, off_root):
    add = 0
    for v in block:
        if vcount[v] == 0 and off_root[v]:
            add += 1
    return add


def _apply(block, vcount):
    for v in block:
        vcount[v] += 1


def _undo(block, vcount):
    for v in block:
        vcount[v] -= 1


def conflict_through(blocks, nblocks, q, vert_tab, vert_cnt, cand,
                     qmr, slack, max_size, off_root=None):
    """True iff some connected subset through `cand` of total size in
    [2, max_size] meets the span bound.  `cand` is a virtual block not in
    `blocks`; existing blocks are rows 0..nblocks-1."""
    n = len(vert_cnt)
    if off_root is None:
        off_root = bytes([1]) * n
    vcount = [0] * n
    reach = bytearray(nblocks)

    span0 = _span_add(cand, vcount, off_root)
    _apply(cand, vcount)

    ext = []
    for v in cand:
        for j in range(vert_cnt[v]):
            u = vert_tab[v][j]
            if not reach[u]:
                reach[u] = 1
                ext.append(u)

    found = _extend_bool(blocks, q, vert_tab, vert_cnt, vcount, reach, off_root,
                         1, span0, ext, qmr, slack, max_size)
    return found


def _extend_bool(blocks, q, vert_tab, vert_cnt, vcount, reach, off_root,
                 size, span, ext, qmr, slack, max_size):
    for i in range(len(ext)):
        b = ext[i]
        blk = blocks[b]
        add = _span_add(blk, vcount, off_root)
        nsize = size + 1
        nspan = span + add
        if nspan > qmr * max_size + slack:
            continue
        if nsize >= 2 and nspan <= qmr * nsize + slack:
            return True
        if nsize < max_size:
            _apply(blk, vcount)
            new_ext = list(ext[i + 1:])
            added = []
            for v in blk:
                for j in range(vert_cnt[v]):
                    u = vert_tab[v][j]
                    if not reach[u]:
                        reach[u] = 1
                        added.append(u)
                        new_ext.append(u)
            hit = _extend_bool(blocks, q, vert_tab, vert_cnt, vcount, reach,
                               off_root, nsize, nspan, new_ext, qmr, slack, max_size)
            _undo(blk, vcount)
            for u in added:
                reach[u] = 0
            if hit:
                return True
    return False


def min_span_config(blocks, nblocks, q, vert_tab, vert_cnt, off_root,
                    qmr, slack, min_size, max_size):
    """Smallest s in [min_size, max_size] admitting a hit, with the
    lexicographically least witness (as a sorted index tuple) among size-s
    hits.  Returns (s, witness_list) or None."""
    n = len(vert_cnt)
    vcount = [0] * n
    reach = bytearray(nblocks)
    best = [max_size + 1, None]

    for anchor in range(nblocks):
        blk = blocks[anchor]
        span0 = _span_add(blk, vcount, off_root)
        if span0 > qmr * best[0] + slack and not (
                min_size <= 1 and span0 <= qmr + slack):
            # cannot even start within budget unless a singleton hit
            pass
        _apply(blk, vcount)
        if min_size <= 1 and span0 <= qmr + slack:
            _record(best, 1, [anchor])
        if 1 < best[0] and span0 <= qmr * best[0] + slack:
            reach[anchor] = 1
            ext = []
            for v in blk:
                for j in range(vert_cnt[v]):
                    u = vert_tab[v][j]
                    if u > anchor and not reach[u]:
                        reach[u] = 1
                        ext.append(u)
            _extend_min(blocks, q, vert_tab, vert_cnt, vcount, reach, off_root,
                        [anchor], span0, ext, qmr, slack, min_size, best)
            for u in ext:
                reach[u] = 0
            reach[anchor] = 0
        _undo(blk, vcount)

    if best[1] is None:
        return None
    return best[0], best[1]


def _record(best, size, sub):
    wit = sorted(sub)
    if size < best[0] or best[1] is None:
        best[0] = size
        best[1] = wit
    elif size == best[0] and wit < best[1]:
        best[1] = wit


def _extend_min(blocks, q, vert_tab, vert_cnt, vcount, reach, off_root,
                sub, span, ext, qmr, slack, min_size, best):
    anchor = sub[0]
    for i in range(len(ext)):
        b = ext[i]
        blk = blocks[b]
        add = _span_add(blk, vcount, off_root)
        nsize = len(sub) + 1
        nspan = span + add
        if nsize > best[0] or nspan > qmr * best[0] + slack:
            continue
        sub.append(b)
        if nsize >= min_size and nspan <= qmr * nsize + slack:
            _record(best, nsize, sub)
            sub.pop()
            continue
        if nsize < best[0]:
            _apply(blk, vcount)
            new_ext = list(ext[i + 1:])
            added = []
            for v in blk:
                for j in range(vert_cnt[v]):
                    u = vert_tab[v][j]
                    if u > anchor and not reach[u]:
                        reach[u] = 1
                        added.append(u)
                        new_ext.append(u)
            _extend_min(blocks, q, vert_tab, vert_cnt, vcount, reach, off_root,
                        sub, nspan, new_ext, qmr, slack, min_size, best)
            _undo(blk, vcount)
            for u in added:
                reach[u] = 0
        sub.pop()
