"""Parity 2-colorings, automorphisms, and the regularity hierarchy.

Each of the seven nontrivial parity vectors eps = (eps0, eps1, eps2) induces
a notion of 2-colorability: generator h_i flips a flag's color exactly when
eps_i = 1. The vector (1,0,0) is bipartiteness (hypervertices 2-colorable);
(1,1,1) is orientability. A hypermap is eps-regular when it is eps-colorable
and the automorphism group is transitive on the color class of flag 0.

Automorphisms are the generator-equivariant flag bijections; they exist
exactly for the flags whose monodromy stabilizer equals flag 0's, which is
how everything here is computed (no infinite groups are represented).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from ._kernels import DTYPE
from .errors import NotBipartite, NotConservative
from .hypermap import Hypermap, _parity_coloring, k_faces, monodromy_group
from .perm import FiniteGroup, Permutation, _freeze, _group_from_rows

__all__ = [
    "ParityVector",
    "BipartiteType",
    "PARITY_VECTORS",
    "BIPARTITE",
    "ORIENTING",
    "theta_coloring",
    "automorphisms",
    "is_regular",
    "is_theta_regular",
    "bipartite_type",
    "is_bipartite_uniform",
    "is_bipartite_chiral",
    "theta_preserving_automorphisms",
]


@dataclass(frozen=True)
class ParityVector:
    """One of the seven nontrivial parity vectors (eps0, eps1, eps2)."""

    eps: tuple[int, int, int]

    def __post_init__(self):
        if len(self.eps) != 3 or any(e not in (0, 1) for e in self.eps):
            raise ValueError("eps must be three bits")
        if self.eps == (0, 0, 0):
            raise ValueError("the all-zero vector induces no 2-coloring")

    @property
    def bits(self) -> str:
        return "".join(str(e) for e in self.eps)

    def __str__(self) -> str:
        return self.bits


# All seven, in a fixed reporting order.
PARITY_VECTORS: tuple[ParityVector, ...] = tuple(
    ParityVector(eps)
    for eps in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
)

BIPARTITE = PARITY_VECTORS[0]  # (1,0,0): h0 flips the vertex 2-coloring
ORIENTING = PARITY_VECTORS[6]  # (1,1,1): all generators flip


@dataclass(frozen=True)
class BipartiteType:
    """Four-tuple (l1, l2; m; n) with l1 <= l2 and m, n even.

    l1, l2 are the common hypervertex valencies of the two color classes;
    m and n the common hyperedge and hyperface valencies (even whenever a
    bipartition exists, since those faces alternate between the classes).
    """

    l1: int
    l2: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.l1, self.l2, self.m, self.n) < 1:
            raise ValueError("components must be positive")
        if self.l1 > self.l2:
            raise ValueError("l1 must not exceed l2")
        if self.m % 2 or self.n % 2:
            raise ValueError("hyperedge and hyperface valencies must be even")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.l1, self.l2, self.m, self.n)

    def __str__(self) -> str:
        return f"({self.l1},{self.l2};{self.m};{self.n})"


def theta_coloring(h: Hypermap, eps: ParityVector) -> tuple[int, ...] | None:
    """The eps-2-coloring with flag 0 colored 0, or None if none exists.

    When defined it is unique given the base flag, and both classes have
    exactly n_flags/2 members.
    """
    return _parity_coloring(h, eps.eps)


@functools.lru_cache(maxsize=None)
def _stab_matched_flags(h: Hypermap) -> np.ndarray:
    """Boolean mask over flags: monodromy stabilizer equals flag 0's.

    Stabilizers of distinct flags are conjugate, hence equal-sized, so
    containment of flag 0's stabilizer is already equality.
    """
    group = monodromy_group(h)
    matrix = group.matrix
    stab_rows = matrix[matrix[:, 0] == 0]
    mask = np.all(stab_rows == np.arange(h.n_flags, dtype=DTYPE)[None, :], axis=0)
    mask.setflags(write=False)
    return mask


def _automorphism_to(h: Hypermap, target: int) -> np.ndarray:
    """The unique generator-equivariant bijection with 0 -> target."""
    rows = [p.images for p in h.h]
    sigma = np.full(h.n_flags, -1, dtype=DTYPE)
    sigma[0] = target
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        sx = int(sigma[x])
        for g in rows:
            y = int(g[x])
            img = int(g[sx])
            if sigma[y] < 0:
                sigma[y] = img
                queue.append(y)
            elif sigma[y] != img:
                raise AssertionError("stabilizer-matched flag admitted no automorphism")
    return sigma


def automorphisms(h: Hypermap) -> FiniteGroup:
    """The full automorphism group, acting on flags.

    One automorphism per flag whose monodromy stabilizer equals flag 0's;
    the action is semi-regular, so the group order equals that flag count.
    """
    targets = np.nonzero(_stab_matched_flags(h))[0]
    rows = np.stack([_automorphism_to(h, int(t)) for t in targets])
    gens = tuple(Permutation._wrap(_freeze(row)) for row in rows)
    return _group_from_rows(h.n_flags, gens, rows)


def is_regular(h: Hypermap) -> bool:
    """|Mon| == |flags| (equivalently |Aut| == |flags|)."""
    return monodromy_group(h).order == h.n_flags


def is_theta_regular(h: Hypermap, eps: ParityVector) -> bool:
    """eps-colorable with automorphisms transitive on flag 0's color class.

    Computed as: every flag colored like flag 0 has the same monodromy
    stabilizer as flag 0 (the other class then follows by symmetry).
    """
    colors = theta_coloring(h, eps)
    if colors is None:
        return False
    mask = _stab_matched_flags(h)
    class0 = [x for x, c in enumerate(colors) if c == 0]
    return bool(np.all(mask[class0]))


def _vertex_class_valencies(h: Hypermap, colors: tuple[int, ...]) -> tuple[set[int], set[int]]:
    by_class: tuple[set[int], set[int]] = (set(), set())
    for face in k_faces(h, 0):
        by_class[colors[face[0]]].add(len(face) // 2)
    return by_class


def bipartite_type(h: Hypermap) -> BipartiteType | None:
    """(l1, l2; m; n) when h is bipartite-uniform, else None.

    Requires the (1,0,0)-coloring to exist, hypervertex valencies constant
    within each color class, and hyperedge/hyperface valencies each constant
    overall.
    """
    colors = theta_coloring(h, BIPARTITE)
    if colors is None:
        return None
    class_valencies = _vertex_class_valencies(h, colors)
    if any(len(vals) != 1 for vals in class_valencies):
        return None
    edge_vals = {len(face) // 2 for face in k_faces(h, 1)}
    face_vals = {len(face) // 2 for face in k_faces(h, 2)}
    if len(edge_vals) != 1 or len(face_vals) != 1:
        return None
    l1, l2 = sorted(next(iter(v)) for v in class_valencies)
    return BipartiteType(l1, l2, edge_vals.pop(), face_vals.pop())


def is_bipartite_uniform(h: Hypermap) -> bool:
    return bipartite_type(h) is not None


def is_bipartite_chiral(h: Hypermap) -> bool:
    """No automorphism swaps the two vertex color classes.

    True exactly when no flag colored opposite to flag 0 shares flag 0's
    monodromy stabilizer. For bipartite-regular h this coincides with
    "theta-regular but not regular".
    """
    colors = theta_coloring(h, BIPARTITE)
    if colors is None:
        raise NotBipartite("hypermap admits no vertex 2-coloring")
    mask = _stab_matched_flags(h)
    class1 = [x for x, c in enumerate(colors) if c == 1]
    return not bool(np.any(mask[class1]))


def theta_preserving_automorphisms(h: Hypermap, eps: ParityVector) -> FiniteGroup:
    """Subgroup of automorphisms mapping each eps color class to itself.

    An automorphism is determined by the image of flag 0, and preserves the
    classes exactly when that image has color 0.
    """
    colors = theta_coloring(h, eps)
    if colors is None:
        raise NotConservative(f"no {eps.bits}-coloring exists")
    targets = [int(t) for t in np.nonzero(_stab_matched_flags(h))[0] if colors[int(t)] == 0]
    rows = np.stack([_automorphism_to(h, t) for t in targets])
    gens = tuple(Permutation._wrap(_freeze(row)) for row in rows)
    return _group_from_rows(h.n_flags, gens, rows)
