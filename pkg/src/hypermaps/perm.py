"""Exact permutation and finite-group machinery.

Permutations act on the right: the product ``a * b`` means "apply a, then b",
so ``(a * b)(x) == b(a(x))``. Groups are stored by full element enumeration
(orders in this package stay at or below 14400), ordered by breadth-first
discovery from the identity with the generators applied in the given order.
All values are immutable after construction and every operation is a pure
function, so concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import DTYPE
from .errors import EmptyGenerators, NotAMember, NotNormal

__all__ = [
    "Permutation",
    "FiniteGroup",
    "GroupName",
    "generate_group",
    "orbits",
    "point_stabilizer",
    "normal_closure",
    "quotient_action",
    "recognize_group",
    "derived_subgroup",
]


def _freeze(row: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(row, dtype=DTYPE)
    out.setflags(write=False)
    return out


class Permutation:
    """A bijection on {0..degree-1}, stored as its image sequence."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images):
        img = np.asarray(images, dtype=DTYPE)
        if img.ndim != 1 or img.size == 0:
            raise ValueError("images must be a nonempty one-dimensional sequence")
        n = img.shape[0]
        if img.min() < 0 or img.max() >= n:
            raise ValueError("image values out of range")
        seen = np.zeros(n, dtype=bool)
        seen[img] = True
        if not seen.all():
            raise ValueError("images is not a bijection")
        self._img = _freeze(img.copy())
        self._hash = None

    @classmethod
    def _wrap(cls, row: np.ndarray) -> "Permutation":
        # trusted path: row is already a frozen bijection
        p = object.__new__(cls)
        p._img = row
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._wrap(_freeze(np.arange(degree, dtype=DTYPE)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Permutation from disjoint cycles, e.g. from_cycles(4, [(0,1),(2,3)])."""
        img = np.arange(degree, dtype=DTYPE)
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                img[a] = b
        return cls(img)

    @property
    def images(self) -> np.ndarray:
        """Read-only image array; images[x] is where x goes."""
        return self._img

    @property
    def degree(self) -> int:
        return int(self._img.shape[0])

    def __call__(self, x: int) -> int:
        return int(self._img[x])

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self, then other
        return Permutation._wrap(_freeze(other._img[self._img]))

    def __invert__(self) -> "Permutation":
        inv = np.empty_like(self._img)
        inv[self._img] = np.arange(self.degree, dtype=DTYPE)
        return Permutation._wrap(_freeze(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return (~self) ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugated_by(self, g: "Permutation") -> "Permutation":
        """g^{-1} * self * g."""
        return ~g * self * g

    def order(self) -> int:
        n = self.degree
        img = self._img
        seen = np.zeros(n, dtype=bool)
        result = 1
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                x = int(img[x])
                length += 1
            result = result * length // int(np.gcd(result, length))
        return result

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._img, np.arange(self.degree, dtype=DTYPE)))

    def is_involution(self) -> bool:
        return bool(np.array_equal(self._img[self._img], np.arange(self.degree, dtype=DTYPE)))

    def fixed_points(self) -> np.ndarray:
        return np.nonzero(self._img == np.arange(self.degree, dtype=DTYPE))[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and bool(np.array_equal(self._img, other._img))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, self._img.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self._img.tolist()!r})"


def _as_rows(perms, degree: int | None) -> tuple[np.ndarray, int]:
    rows = []
    for p in perms:
        img = p.images if isinstance(p, Permutation) else np.asarray(p, dtype=DTYPE)
        rows.append(np.ascontiguousarray(img, dtype=DTYPE))
    if degree is None:
        if not rows:
            raise ValueError("degree required when no permutations are given")
        degree = rows[0].shape[0]
    for img in rows:
        if img.shape[0] != degree:
            raise ValueError("permutations have mixed degrees")
    if rows:
        return np.stack(rows), degree
    return np.empty((0, degree), dtype=DTYPE), degree


def _closure(gen_rows: np.ndarray, degree: int) -> tuple[np.ndarray, dict[bytes, int]]:
    """Breadth-first closure from the identity; generators applied in order."""
    ident = np.arange(degree, dtype=DTYPE)
    rows: list[np.ndarray] = [ident]
    index: dict[bytes, int] = {ident.tobytes(): 0}
    frontier = ident[None, :]
    while frontier.shape[0]:
        products = [g[frontier] for g in gen_rows]
        new: list[np.ndarray] = []
        for r in range(frontier.shape[0]):
            for prod in products:
                row = prod[r]
                key = row.tobytes()
                if key not in index:
                    index[key] = len(rows)
                    rows.append(row)
                    new.append(row)
        frontier = np.stack(new) if new else np.empty((0, degree), dtype=DTYPE)
    matrix = np.stack(rows)
    matrix.setflags(write=False)
    return matrix, index


class FiniteGroup:
    """An explicitly enumerated permutation group with distinguished generators.

    Element 0 is the identity; the element order is the breadth-first
    discovery order from the identity. Construct through generate_group (or
    the other operations below), which guarantee the closure invariants.
    """

    __slots__ = ("degree", "generators", "identity_index", "_matrix", "_index", "_elements", "_orders")

    def __init__(self, degree: int, generators: tuple[Permutation, ...], matrix: np.ndarray, index: dict[bytes, int]):
        self.degree = degree
        self.generators = generators
        self.identity_index = 0
        self._matrix = matrix
        self._index = index
        self._elements: tuple[Permutation, ...] | None = None
        self._orders: np.ndarray | None = None

    @property
    def order(self) -> int:
        return int(self._matrix.shape[0])

    def __len__(self) -> int:
        return self.order

    @property
    def matrix(self) -> np.ndarray:
        """Read-only (order, degree) array; row i is element i's image sequence."""
        return self._matrix

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._elements = tuple(Permutation._wrap(row) for row in self._matrix)
        return self._elements

    def element(self, i: int) -> Permutation:
        return Permutation._wrap(self._matrix[i])

    def index_of(self, p: Permutation) -> int:
        key = np.ascontiguousarray(p.images, dtype=DTYPE).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise NotAMember("permutation is not an element of the group") from None

    def __contains__(self, p) -> bool:
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        return np.ascontiguousarray(p.images, dtype=DTYPE).tobytes() in self._index

    def multiply_indices(self, i: int, j: int) -> int:
        """Index of element_i * element_j (apply i, then j)."""
        row = self._matrix[j][self._matrix[i]]
        return self._index[row.tobytes()]

    def inverse_index(self, i: int) -> int:
        row = self._matrix[i]
        inv = np.empty_like(row)
        inv[row] = np.arange(self.degree, dtype=DTYPE)
        return self._index[inv.tobytes()]

    def element_orders(self) -> np.ndarray:
        """Order of every element, aligned with element indexing."""
        if self._orders is None:
            self._orders = np.asarray([self.element(i).order() for i in range(self.order)], dtype=np.int64)
            self._orders.setflags(write=False)
        return self._orders

    def __repr__(self) -> str:
        return f"<FiniteGroup order={self.order} degree={self.degree} generators={len(self.generators)}>"


def _group_from_rows(degree: int, generators: tuple[Permutation, ...], matrix: np.ndarray) -> FiniteGroup:
    """Wrap rows already known to be a subgroup (row 0 = identity)."""
    matrix = np.ascontiguousarray(matrix, dtype=DTYPE)
    matrix.setflags(write=False)
    index = {matrix[i].tobytes(): i for i in range(matrix.shape[0])}
    return FiniteGroup(degree, generators, matrix, index)


def generate_group(generators, degree: int | None = None) -> FiniteGroup:
    """Closure of the generators under composition.

    Element order is deterministic: breadth-first from the identity,
    generators applied in the given order.
    """
    gen_list = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    if not gen_list:
        raise EmptyGenerators("generate_group requires at least one generator")
    rows, degree = _as_rows(gen_list, degree)
    matrix, index = _closure(rows, degree)
    return FiniteGroup(degree, tuple(gen_list), matrix, index)


def orbits(perms, degree: int) -> tuple[tuple[int, ...], ...]:
    """Connected components of the action, listed by smallest member."""
    rows, degree = _as_rows(perms, degree)
    label = np.full(degree, -1, dtype=DTYPE)
    result: list[tuple[int, ...]] = []
    for start in range(degree):
        if label[start] >= 0:
            continue
        orbit = [start]
        label[start] = len(result)
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for g in rows:
                y = int(g[x])
                if label[y] < 0:
                    label[y] = len(result)
                    orbit.append(y)
        result.append(tuple(sorted(orbit)))
    return tuple(result)


def point_stabilizer(group: FiniteGroup, point: int) -> FiniteGroup:
    """Subgroup {g : point * g == point}, enumerated exhaustively."""
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range for degree {group.degree}")
    keep = np.nonzero(group.matrix[:, point] == point)[0]
    matrix = group.matrix[keep]
    gens = tuple(Permutation._wrap(_freeze(row)) for row in matrix)
    return _group_from_rows(group.degree, gens, matrix)


def _conjugate_rows(rows: np.ndarray, g: np.ndarray, g_inv: np.ndarray) -> np.ndarray:
    # (r^g)(x) = g(r(g^{-1}(x))), vectorized over the rows r
    return g[rows[:, g_inv]]


def normal_closure(group: FiniteGroup, seeds) -> FiniteGroup:
    """Smallest subgroup containing the seeds and closed under conjugation
    by all generators of the ambient group."""
    seed_perms = [s if isinstance(s, Permutation) else Permutation(s) for s in seeds]
    for s in seed_perms:
        if s not in group:
            raise NotAMember("normal closure seed is not in the group")
    gen_rows = [np.ascontiguousarray(g.images, dtype=DTYPE) for g in group.generators]
    gen_invs = []
    for g in gen_rows:
        inv = np.empty_like(g)
        inv[g] = np.arange(group.degree, dtype=DTYPE)
        gen_invs.append(inv)

    closure_gens: list[np.ndarray] = []
    seen_gens: set[bytes] = set()
    for s in seed_perms:
        key = s.images.tobytes()
        if key not in seen_gens:
            seen_gens.add(key)
            closure_gens.append(np.ascontiguousarray(s.images, dtype=DTYPE))
    if not closure_gens:
        closure_gens = [np.arange(group.degree, dtype=DTYPE)]
        seen_gens.add(closure_gens[0].tobytes())

    matrix, index = _closure(np.stack(closure_gens), group.degree)
    while True:
        grew = False
        for g, ginv in zip(gen_rows, gen_invs):
            conj = _conjugate_rows(matrix, g, ginv)
            for row in conj:
                key = row.tobytes()
                if key not in index:
                    if key not in seen_gens:
                        seen_gens.add(key)
                        closure_gens.append(row.copy())
                    grew = True
            if grew:
                break
        if not grew:
            break
        matrix, index = _closure(np.stack(closure_gens), group.degree)

    gens = tuple(Permutation._wrap(_freeze(r)) for r in closure_gens)
    return FiniteGroup(group.degree, gens, matrix, index)


def quotient_action(group: FiniteGroup, normal: FiniteGroup) -> tuple[int, tuple[Permutation, ...]]:
    """Cosets of a verified-normal subgroup, with generator images acting by
    right multiplication. The identity's coset is 0; cosets are numbered by
    first-discovered representative in the group's element order."""
    n_mat = normal.matrix
    for row in n_mat:
        if row.tobytes() not in group._index:
            raise NotNormal("subgroup elements are not all in the group")
    gen_rows = [np.ascontiguousarray(g.images, dtype=DTYPE) for g in group.generators]
    for g in gen_rows:
        inv = np.empty_like(g)
        inv[g] = np.arange(group.degree, dtype=DTYPE)
        conj = _conjugate_rows(n_mat, g, inv)
        for row in conj:
            if row.tobytes() not in normal._index:
                raise NotNormal("subgroup is not closed under conjugation")

    coset_of = np.full(group.order, -1, dtype=DTYPE)
    reps: list[int] = []
    for idx in range(group.order):
        if coset_of[idx] >= 0:
            continue
        rep_row = group.matrix[idx]
        coset_rows = rep_row[n_mat]  # n * rep for every n in the subgroup
        cid = len(reps)
        for row in coset_rows:
            coset_of[group._index[row.tobytes()]] = cid
        reps.append(idx)

    count = len(reps)
    images = []
    for g in gen_rows:
        img = np.empty(count, dtype=DTYPE)
        for cid, rep in enumerate(reps):
            prod = g[group.matrix[rep]]  # rep * g
            img[cid] = coset_of[group._index[prod.tobytes()]]
        images.append(Permutation._wrap(_freeze(img)))
    return count, tuple(images)


@dataclass(frozen=True)
class GroupName:
    """Recognized isomorphism type of a small group.

    tag is one of Trivial, Cyclic, Dihedral, KleinFour, Alt4, Sym4, Alt5,
    Unrecognized; param carries n for Cyclic(n)/Dihedral(n) and the order
    for Unrecognized.
    """

    tag: str
    param: int | None = None

    _ORDERS = {"Trivial": 1, "KleinFour": 4, "Alt4": 12, "Sym4": 24, "Alt5": 60}

    def __post_init__(self):
        if self.tag in self._ORDERS:
            if self.param is not None:
                raise ValueError(f"{self.tag} takes no parameter")
        elif self.tag == "Cyclic":
            if self.param is None or self.param < 2:
                raise ValueError("Cyclic(n) requires n >= 2")
        elif self.tag == "Dihedral":
            if self.param is None or self.param < 3:
                raise ValueError("Dihedral(n) requires n >= 3")
        elif self.tag == "Unrecognized":
            if self.param is None or self.param < 1:
                raise ValueError("Unrecognized(order) requires the order")
        else:
            raise ValueError(f"unknown tag {self.tag!r}")

    @classmethod
    def trivial(cls) -> "GroupName":
        return cls("Trivial")

    @classmethod
    def cyclic(cls, n: int) -> "GroupName":
        return cls("Cyclic", n)

    @classmethod
    def dihedral(cls, n: int) -> "GroupName":
        return cls("Dihedral", n)

    @classmethod
    def klein_four(cls) -> "GroupName":
        return cls("KleinFour")

    @classmethod
    def alt4(cls) -> "GroupName":
        return cls("Alt4")

    @classmethod
    def sym4(cls) -> "GroupName":
        return cls("Sym4")

    @classmethod
    def alt5(cls) -> "GroupName":
        return cls("Alt5")

    @classmethod
    def unrecognized(cls, order: int) -> "GroupName":
        return cls("Unrecognized", order)

    @property
    def group_order(self) -> int:
        if self.tag in self._ORDERS:
            return self._ORDERS[self.tag]
        if self.tag == "Cyclic":
            return self.param  # type: ignore[return-value]
        if self.tag == "Dihedral":
            return 2 * self.param  # type: ignore[operator]
        return self.param  # type: ignore[return-value]

    def __str__(self) -> str:
        if self.param is None:
            return self.tag
        return f"{self.tag}({self.param})"


def _center_is_trivial(group: FiniteGroup) -> bool:
    gen_idx = [group.index_of(p) for p in group.generators]
    count = 0
    for i in range(group.order):
        if all(group.multiply_indices(i, g) == group.multiply_indices(g, i) for g in gen_idx):
            count += 1
            if count > 1:
                return False
    return count == 1


def recognize_group(group: FiniteGroup) -> GroupName:
    """Decision list for the group families this package reports.

    Order of tests: Trivial; Cyclic (element of full order); KleinFour
    (order 4, exponent 2); Dihedral (index-2 cyclic subgroup plus an
    inverting involution, order >= 6); Alt4 (order 12, element orders
    {1,2,3}, no order-6 element); Sym4 (order 24, trivial center, orders
    within {1,2,3,4}); Alt5 (order 60 and perfect). Anything else is
    Unrecognized(order), never guessed. Dihedral groups of orders 2 and 4
    therefore come out as Cyclic(2) and KleinFour.
    """
    n = group.order
    if n == 1:
        return GroupName.trivial()
    orders = group.element_orders()
    if int(orders.max()) == n:
        return GroupName.cyclic(n)
    if n == 4 and int(orders.max()) == 2:
        return GroupName.klein_four()
    if n >= 6 and n % 2 == 0:
        half = n // 2
        involutions = np.nonzero(orders == 2)[0]
        for r in np.nonzero(orders == half)[0]:
            r = int(r)
            powers = set()
            cur = group.identity_index
            for _ in range(half):
                powers.add(cur)
                cur = group.multiply_indices(cur, r)
            inv_r = group.inverse_index(r)
            for t in involutions:
                t = int(t)
                if t in powers:
                    continue
                if group.multiply_indices(group.multiply_indices(t, r), t) == inv_r:
                    return GroupName.dihedral(half)
    order_set = set(int(o) for o in orders)
    if n == 12 and order_set == {1, 2, 3}:
        return GroupName.alt4()
    if n == 24 and order_set <= {1, 2, 3, 4} and _center_is_trivial(group):
        return GroupName.sym4()
    if n == 60 and derived_subgroup(group).order == 60:
        return GroupName.alt5()
    return GroupName.unrecognized(n)


def derived_subgroup(group: FiniteGroup) -> FiniteGroup:
    """Normal closure of the commutators of all generator pairs."""
    comms: list[Permutation] = []
    seen: set[Permutation] = set()
    for a in group.generators:
        for b in group.generators:
            c = ~a * ~b * a * b
            if c not in seen:
                seen.add(c)
                comms.append(c)
    return normal_closure(group, comms)
