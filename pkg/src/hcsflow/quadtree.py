"""Static point quadtree over integer coordinates, answering box queries."""
from __future__ import annotations

import numpy as np

NODE_CAPACITY = 16
MAX_DEPTH = 32
BRUTE_FORCE_BELOW = 2048  # a single numpy mask beats the tree walk below this


class QuadTree:
    """Points are permuted so every node owns a contiguous slice of ``order``.

    ``query_box`` returns candidate indices (into the original array) whose
    points lie in the closed box; exact filtering is left to the caller.
    """

    def __init__(self, xs, ys, capacity=NODE_CAPACITY, max_depth=MAX_DEPTH, brute_below=BRUTE_FORCE_BELOW):
        self.xs = np.asarray(xs)
        self.ys = np.asarray(ys)
        n = len(self.xs)
        self.n = n
        self.capacity = capacity
        self.max_depth = max_depth
        self.order = np.arange(n, dtype=np.int64)
        # node arrays: bbox, slice [start, end), first child (-1 for leaves)
        self._lo_x, self._lo_y, self._hi_x, self._hi_y = [], [], [], []
        self._start, self._end, self._child = [], [], []
        self._nkids = {}
        self.brute = n < brute_below
        if n and not self.brute:
            self._build()

    def _new_node(self, start, end):
        idx = self.order[start:end]
        self._lo_x.append(int(self.xs[idx].min()))
        self._lo_y.append(int(self.ys[idx].min()))
        self._hi_x.append(int(self.xs[idx].max()))
        self._hi_y.append(int(self.ys[idx].max()))
        self._start.append(start)
        self._end.append(end)
        self._child.append(-1)
        return len(self._start) - 1

    def _build(self):
        stack = [(self._new_node(0, self.n), 0)]
        while stack:
            node, depth = stack.pop()
            start, end = self._start[node], self._end[node]
            if end - start <= self.capacity or depth >= self.max_depth:
                continue
            lx, ly, hx, hy = self._lo_x[node], self._lo_y[node], self._hi_x[node], self._hi_y[node]
            if lx == hx and ly == hy:
                continue
            mx = (lx + hx) // 2
            my = (ly + hy) // 2
            idx = self.order[start:end]
            px = self.xs[idx] > mx
            py = self.ys[idx] > my
            quad = px.astype(np.int64) + 2 * py.astype(np.int64)
            perm = np.argsort(quad, kind="stable")
            self.order[start:end] = idx[perm]
            counts = np.bincount(quad, minlength=4)
            first = len(self._start)
            s = start
            kids = []
            for q in range(4):
                if counts[q]:
                    kids.append((s, s + counts[q]))
                s += counts[q]
            for a, b in kids:
                self._new_node(a, b)
            self._child[node] = first
            self._nkids[node] = len(kids)
            for i in range(len(kids)):
                stack.append((first + i, depth + 1))

    def query_box(self, x0, y0, x1, y1) -> np.ndarray:
        if self.n == 0:
            return np.empty(0, dtype=np.int64)
        if self.brute:
            m = (self.xs >= x0) & (self.xs <= x1) & (self.ys >= y0) & (self.ys <= y1)
            return np.nonzero(m)[0]
        out = []
        stack = [0]
        while stack:
            node = stack.pop()
            if self._lo_x[node] > x1 or self._hi_x[node] < x0 or self._lo_y[node] > y1 or self._hi_y[node] < y0:
                continue
            start, end = self._start[node], self._end[node]
            if (
                x0 <= self._lo_x[node]
                and self._hi_x[node] <= x1
                and y0 <= self._lo_y[node]
                and self._hi_y[node] <= y1
            ):
                out.append(self.order[start:end])
                continue
            child = self._child[node]
            if child < 0:
                idx = self.order[start:end]
                m = (self.xs[idx] >= x0) & (self.xs[idx] <= x1) & (self.ys[idx] >= y0) & (self.ys[idx] <= y1)
                out.append(idx[m])
                continue
            stack.extend(range(child, child + self._nkids[node]))
        if not out:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(out)
