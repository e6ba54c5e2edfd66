"""Static kd-tree over a fixed item set that supports deletion only.

Nodes keep the bounding box of the keys below them as built; deletions only
decrement live counts, so boxes are conservative after deletions. Queries are
"find any" searches driven by a caller-supplied pruning test.
"""
from __future__ import annotations

from typing import Callable, List, Optional, Sequence, Tuple


class DeleteOnlyKDTree:
    __slots__ = ("lo", "hi", "aux", "left", "right", "parent", "count", "items", "leaf_of", "root")

    def __init__(self, ids: Sequence[int], keys: Sequence[Tuple[float, ...]],
                 aux: Optional[Sequence[float]] = None, leaf_size: int = 8):
        self.lo: List[tuple] = []
        self.hi: List[tuple] = []
        self.aux: List[float] = []
        self.left: List[int] = []
        self.right: List[int] = []
        self.parent: List[int] = []
        self.count: List[int] = []
        self.items: List[Optional[list]] = []
        self.leaf_of = {}
        self.root = -1
        if not ids:
            return
        key_of = dict(zip(ids, keys))
        aux_of = dict(zip(ids, aux)) if aux is not None else None
        dim = len(keys[0])

        def new_node(members, parent):
            ks = [key_of[i] for i in members]
            self.lo.append(tuple(min(k[d] for k in ks) for d in range(dim)))
            self.hi.append(tuple(max(k[d] for k in ks) for d in range(dim)))
            self.aux.append(max(aux_of[i] for i in members) if aux_of is not None else 0.0)
            self.left.append(-1)
            self.right.append(-1)
            self.parent.append(parent)
            self.count.append(len(members))
            self.items.append(None)
            return len(self.lo) - 1

        self.root = new_node(list(ids), -1)
        stack = [(self.root, list(ids))]
        while stack:
            node, members = stack.pop()
            if len(members) <= leaf_size:
                members.sort()
                self.items[node] = members
                for i in members:
                    self.leaf_of[i] = node
                continue
            lo, hi = self.lo[node], self.hi[node]
            axis = max(range(dim), key=lambda d: hi[d] - lo[d])
            members.sort(key=lambda i: (key_of[i][axis], i))
            mid = len(members) // 2
            left_members, right_members = members[:mid], members[mid:]
            lnode = new_node(left_members, node)
            rnode = new_node(right_members, node)
            self.left[node] = lnode
            self.right[node] = rnode
            stack.append((rnode, right_members))
            stack.append((lnode, left_members))

    def __len__(self) -> int:
        return self.count[self.root] if self.root >= 0 else 0

    def remove(self, item: int) -> None:
        node = self.leaf_of.pop(item)
        self.items[node].remove(item)
        while node >= 0:
            self.count[node] -= 1
            node = self.parent[node]

    def find(self, may_contain: Callable[[tuple, tuple, float], bool],
             accept: Callable[[int], bool]) -> Optional[int]:
        """First live item (left-to-right) with ``accept(item)`` true.

        Subtrees for which ``may_contain(lo, hi, aux_max)`` is false are
        skipped, so the test must never reject a box holding an acceptable
        item.
        """
        if self.root < 0:
            return None
        count, items, lo, hi, aux = self.count, self.items, self.lo, self.hi, self.aux
        left, right = self.left, self.right
        stack = [self.root]
        while stack:
            node = stack.pop()
            if not count[node] or not may_contain(lo[node], hi[node], aux[node]):
                continue
            leaf = items[node]
            if leaf is not None:
                for i in leaf:
                    if accept(i):
                        return i
            else:
                stack.append(right[node])
                stack.append(left[node])
        return None
