"""Compositions (indices) and prefix-closed trees of indices.

An index is a finite sequence of positive integer parts; its weight is the
sum of the parts and its depth the number of parts.  A tree of indices is
a rooted tree whose root is the empty index and where each child extends
its parent by one appended part, so the node set is prefix-closed.
"""

from __future__ import annotations

import numpy as np


class Index:
    """A composition: finite sequence of positive integer parts.

    Immutable, hashable, and rendered in the text format "(7,2,1)"
    (empty index: "()") used by the CLI and table files.
    """

    __slots__ = ("parts", "weight")

    def __init__(self, parts=()):
        pts = tuple(int(a) for a in parts)
        if any(a < 1 for a in pts):
            raise ValueError(f"index parts must be positive, got {pts}")
        object.__setattr__(self, "parts", pts)
        object.__setattr__(self, "weight", sum(pts))

    def __setattr__(self, name, value):
        raise AttributeError("Index is immutable")

    @property
    def depth(self) -> int:
        return len(self.parts)

    def append(self, part: int) -> "Index":
        """The child index obtained by appending one part."""
        return Index(self.parts + (int(part),))

    def parent(self) -> "Index":
        """The index with the last part removed."""
        if not self.parts:
            raise ValueError("the empty index has no parent")
        return Index(self.parts[:-1])

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Index):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Index({self.parts!r})"


def parse_index(text: str) -> Index:
    """Parse the "(a,b,c)" text form; "()" is the empty index."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed index text: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Index()
    return Index(int(t) for t in body.split(","))


def compositions(weight: int) -> list[Index]:
    """All compositions of the given weight, in canonical order.

    Canonical order is lexicographically descending on the parts, e.g.
    (3),(2,1),(1,2),(1,1,1) for weight 3, so larger first parts come
    first.  There are 2**(weight-1) compositions for weight >= 1 and
    exactly the empty index for weight 0.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    out: list[Index] = []
    acc: list[int] = []

    def rec(remaining: int) -> None:
        if remaining == 0:
            out.append(Index(acc))
            return
        for a in range(remaining, 0, -1):
            acc.append(a)
            rec(remaining - a)
            acc.pop()

    rec(weight)
    return out


class IndexTree:
    """Prefix-closed rooted tree of indices, stored as parallel arrays.

    Nodes are integer ids (the root is 0); children record only the
    appended part, so no index is ever copied during construction.
    """

    __slots__ = ("_parents", "_labels", "_depths", "_weights", "_children")

    def __init__(self):
        self._parents = [-1]
        self._labels = [0]
        self._depths = [0]
        self._weights = [0]
        self._children: list[list[tuple[int, int]]] = [[]]

    @property
    def node_count(self) -> int:
        return len(self._parents)

    def parent_of(self, nid: int) -> int:
        return self._parents[nid]

    def label_of(self, nid: int) -> int:
        return self._labels[nid]

    def depth_of(self, nid: int) -> int:
        return self._depths[nid]

    def weight_of(self, nid: int) -> int:
        return self._weights[nid]

    def children_of(self, nid: int) -> tuple[tuple[int, int], ...]:
        """(part, child id) pairs in ascending part order."""
        return tuple(self._children[nid])

    def ensure_child(self, nid: int, part: int) -> int:
        """Child of nid labelled part, creating it if absent."""
        part = int(part)
        if part < 1:
            raise ValueError(f"part must be positive, got {part}")
        bucket = self._children[nid]
        pos = 0
        for pos, (lab, child) in enumerate(bucket):
            if lab == part:
                return child
            if lab > part:
                break
        else:
            pos = len(bucket)
        cid = len(self._parents)
        self._parents.append(nid)
        self._labels.append(part)
        self._depths.append(self._depths[nid] + 1)
        self._weights.append(self._weights[nid] + part)
        self._children.append([])
        bucket.insert(pos, (part, cid))
        return cid

    def index_at(self, nid: int) -> Index:
        """Rebuild the Index at a node by walking parent links."""
        parts = []
        while nid != 0:
            parts.append(self._labels[nid])
            nid = self._parents[nid]
        return Index(reversed(parts))

    def preorder(self) -> list[int]:
        """Node ids in depth-first preorder, children in ascending part order."""
        out = []
        stack = [0]
        while stack:
            nid = stack.pop()
            out.append(nid)
            for _, child in reversed(self._children[nid]):
                stack.append(child)
        return out

    def indices(self) -> list[Index]:
        return [self.index_at(nid) for nid in self.preorder()]

    def contains(self, index: Index) -> bool:
        nid = 0
        for part in index.parts:
            for lab, child in self._children[nid]:
                if lab == part:
                    nid = child
                    break
            else:
                return False
        return True

    def nodes_of_weight(self, weight: int) -> list[int]:
        """Node ids of the given weight in canonical composition order.

        Ascending-part DFS preorder lists same-weight nodes in ascending
        lexicographic order, so the canonical (descending) order is its
        reverse.
        """
        hits = [nid for nid in self.preorder() if self._weights[nid] == weight]
        hits.reverse()
        return hits

    def max_label(self) -> int:
        return max(self._labels[1:], default=0)

    def edges_postorder(self):
        """Edges as (src, dst, label) int64 arrays, post-ordered by child.

        A node's incoming edge appears after every edge inside its own
        subtree; the in-place DP sweep relies on exactly this order.
        """
        src, dst, lab = [], [], []
        stack = [(0, iter(self._children[0]))]
        while stack:
            nid, it = stack[-1]
            step = next(it, None)
            if step is None:
                stack.pop()
                if stack:
                    src.append(self._parents[nid])
                    dst.append(nid)
                    lab.append(self._labels[nid])
                continue
            _, child = step
            stack.append((child, iter(self._children[child])))
        return (
            np.asarray(src, dtype=np.int64),
            np.asarray(dst, dtype=np.int64),
            np.asarray(lab, dtype=np.int64),
        )


def depth_sum(tree: IndexTree) -> int:
    """Sum of node depths over the whole tree."""
    return sum(tree._depths)


def prefix_tree(index: Index) -> IndexTree:
    """The chain of all prefixes of an index; depth(index)+1 nodes."""
    tree = IndexTree()
    nid = 0
    for part in index.parts:
        nid = tree.ensure_child(nid, part)
    return tree


def bounded_weight_tree(weight: int) -> IndexTree:
    """The tree of every index of weight <= weight; 2**weight nodes for weight >= 1.

    Children of a node k are k followed by a for 1 <= a <= weight - weight(k),
    in ascending a.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    tree = IndexTree()

    def grow(nid: int, remaining: int) -> None:
        for a in range(1, remaining + 1):
            grow(tree.ensure_child(nid, a), remaining - a)

    grow(0, weight)
    return tree


def tree_from_indices(indexes) -> IndexTree:
    """Smallest tree of indices containing every given index (prefix closure)."""
    tree = IndexTree()
    for index in indexes:
        nid = 0
        for part in index.parts:
            nid = tree.ensure_child(nid, part)
    return tree
