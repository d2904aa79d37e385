"""Core data model: simple undirected graphs, node covariates, block counts.

Adjacency matrices are stored dense with both triangles populated and a zero
diagonal; constructors reject asymmetric or self-looped input instead of
repairing it. Node indices are 0-based in memory and 1-based in file formats.
All types are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "Covariates",
    "BlockCounts",
    "degree_sequence",
    "permute",
    "conformal_partition",
    "combinatorial_laplacian",
    "connected_components",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph given by a symmetric binary adjacency matrix."""

    adjacency: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.adjacency)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {A.shape}")
        if A.shape[0] < 1:
            raise ValueError("graph needs at least one node")
        if not np.isin(A, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        A = A.astype(np.int8)
        if (A != A.T).any():
            raise ValueError("adjacency must be symmetric")
        if np.diag(A).any():
            raise ValueError("self-loops are not allowed")
        A.setflags(write=False)
        object.__setattr__(self, "adjacency", A)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as 0-based (i, j) pairs with i < j, ascending."""
        ii, jj = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(ii.tolist(), jj.tolist()))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from 0-based edge pairs; rejects loops and duplicates."""
        A = np.zeros((n, n), dtype=np.int8)
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            if A[i, j]:
                raise ValueError(f"duplicate edge ({i}, {j})")
            A[i, j] = A[j, i] = 1
        return cls(A)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True, eq=False)
class Covariates:
    """Categorical node labels in {0, ..., k-1}."""

    labels: np.ndarray
    k: int = 0  # 0 means infer as max label + 1

    def __post_init__(self):
        labels = np.asarray(self.labels)
        if labels.ndim != 1 or labels.size < 1:
            raise ValueError("labels must be a non-empty vector")
        if not np.issubdtype(labels.dtype, np.integer):
            if not np.array_equal(labels, labels.astype(np.int64)):
                raise ValueError("labels must be integers")
        labels = labels.astype(np.int64)
        if labels.min() < 0:
            raise ValueError("labels must be non-negative")
        k = self.k if self.k else int(labels.max()) + 1
        if labels.max() >= k:
            raise ValueError(f"label {labels.max()} out of range for k={k}")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "k", k)

    @property
    def n(self) -> int:
        return self.labels.size

    @property
    def is_binary(self) -> bool:
        return self.k == 2

    def group_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.k)

    def flipped(self) -> "Covariates":
        """Swap labels 0 and 1 (binary only)."""
        if not self.is_binary:
            raise ValueError("flipped() requires binary covariates")
        return Covariates(1 - self.labels, k=2)

    def __eq__(self, other):
        if not isinstance(other, Covariates):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.labels, other.labels)

    __hash__ = None

    def __repr__(self):
        return f"Covariates(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class BlockCounts:
    """Observed link counts and pair totals per unordered label pair (binary)."""

    links00: int
    links01: int
    links11: int
    pairs00: int
    pairs01: int
    pairs11: int

    def links(self) -> np.ndarray:
        return np.array([self.links00, self.links01, self.links11], dtype=np.int64)

    def pairs(self) -> np.ndarray:
        return np.array([self.pairs00, self.pairs01, self.pairs11], dtype=np.int64)

    @property
    def total_links(self) -> int:
        return self.links00 + self.links01 + self.links11

    @property
    def total_pairs(self) -> int:
        return self.pairs00 + self.pairs01 + self.pairs11


def degree_sequence(g: Graph) -> np.ndarray:
    """Node degrees, i.e. row sums of the adjacency matrix."""
    return g.adjacency.sum(axis=1, dtype=np.int64)


def _check_permutation(perm, n: int) -> np.ndarray:
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (n,) or not np.array_equal(np.sort(perm), np.arange(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return perm


def permute(g: Graph, perm) -> Graph:
    """Relabel nodes: node i becomes node perm[i] in the result.

    Composition follows function composition: permute(permute(g, sigma), tau)
    equals permute(g, tau o sigma) with (tau o sigma)[i] = tau[sigma[i]].
    """
    perm = _check_permutation(perm, g.n)
    inv = np.empty(g.n, dtype=np.int64)
    inv[perm] = np.arange(g.n)
    return Graph(g.adjacency[np.ix_(inv, inv)])


def conformal_partition(g: Graph, c: Covariates) -> BlockCounts:
    """Link counts and pair totals within and across the two covariate groups."""
    if not c.is_binary:
        raise ValueError("conformal partition requires binary covariates")
    if c.n != g.n:
        raise ValueError(f"covariate length {c.n} != node count {g.n}")
    mask0 = c.labels == 0
    mask1 = ~mask0
    A = g.adjacency
    n0 = int(mask0.sum())
    n1 = g.n - n0
    links00 = int(A[np.ix_(mask0, mask0)].sum()) // 2
    links11 = int(A[np.ix_(mask1, mask1)].sum()) // 2
    links01 = int(A[np.ix_(mask0, mask1)].sum())
    return BlockCounts(
        links00=links00,
        links01=links01,
        links11=links11,
        pairs00=n0 * (n0 - 1) // 2,
        pairs01=n0 * n1,
        pairs11=n1 * (n1 - 1) // 2,
    )


def combinatorial_laplacian(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix, as a float array.

    Row sums are exactly zero and the matrix is positive semidefinite; the
    multiplicity of eigenvalue zero equals the number of connected components.
    """
    A = g.adjacency.astype(np.float64)
    return np.diag(A.sum(axis=1)) - A


def connected_components(g: Graph) -> int:
    """Number of connected components, by breadth-first traversal."""
    n = g.n
    neighbors = [np.flatnonzero(g.adjacency[i]) for i in range(n)]
    seen = np.zeros(n, dtype=bool)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return count
