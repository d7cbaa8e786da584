"""The Hypermap value and its intrinsic geometry.

A hypermap is a triple of fixed-point-free involutions h0, h1, h2 acting
transitively on the flag set {0..n_flags-1}. k-faces (hypervertices for
k=0, hyperedges for k=1, hyperfaces for k=2) are the orbits of the two
generators other than h_k; a face's valency is half its orbit size. The
base flag is index 0 everywhere a distinguished flag is needed.

Values are immutable and hashable; the monodromy group is computed once
per hypermap and memoized.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels import DTYPE
from .errors import HasFixedPoint, NotInvolution, NotTransitive, ParseError
from .perm import FiniteGroup, Permutation, generate_group, orbits

__all__ = [
    "Hypermap",
    "HypermapType",
    "SurfaceClass",
    "validate",
    "k_faces",
    "valencies",
    "euler_characteristic",
    "surface_class",
    "type_of",
    "is_uniform",
    "dual",
    "relabel",
    "canonical_form",
    "are_isomorphic",
    "find_covering",
    "monodromy_group",
    "to_text",
    "from_text",
]


@dataclass(frozen=True)
class HypermapType:
    """Least common multiples (l; m; n) of the three valency families."""

    l: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.l, self.m, self.n) < 1:
            raise ValueError("type components must be positive")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.l, self.m, self.n)

    def __str__(self) -> str:
        return f"({self.l};{self.m};{self.n})"


@dataclass(frozen=True)
class SurfaceClass:
    """Euler characteristic, orientability, and the derived genus."""

    euler_characteristic: int
    orientable: bool
    genus: int

    @classmethod
    def from_characteristic(cls, chi: int, orientable: bool) -> "SurfaceClass":
        if orientable:
            if chi % 2 != 0:
                raise ValueError("orientable surfaces have even characteristic")
            genus = (2 - chi) // 2
        else:
            genus = 2 - chi
        if genus < 0:
            raise ValueError(f"characteristic {chi} exceeds the sphere's")
        return cls(chi, orientable, genus)

    def __str__(self) -> str:
        kind = "orientable" if self.orientable else "non-orientable"
        return f"{kind} genus {self.genus} (chi={self.euler_characteristic})"


class Hypermap:
    """Flag count plus three fixed-point-free involutions acting transitively.

    The constructor checks every invariant, so any Hypermap in hand is valid;
    use validate() to turn raw data into typed violation errors.
    """

    __slots__ = ("n_flags", "h", "_hash")

    def __init__(self, n_flags: int, h0, h1, h2):
        perms = tuple(p if isinstance(p, Permutation) else Permutation(p) for p in (h0, h1, h2))
        for i, p in enumerate(perms):
            if p.degree != n_flags:
                raise ValueError(f"h{i} has degree {p.degree}, expected {n_flags}")
            if not p.is_involution():
                raise NotInvolution(i)
            fixed = p.fixed_points()
            if fixed.size:
                raise HasFixedPoint(i, int(fixed[0]))
        orbs = orbits(perms, n_flags)
        if len(orbs) != 1:
            raise NotTransitive(len(orbs))
        object.__setattr__(self, "n_flags", n_flags)
        object.__setattr__(self, "h", perms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Hypermap is immutable")

    @property
    def h0(self) -> Permutation:
        return self.h[0]

    @property
    def h1(self) -> Permutation:
        return self.h[1]

    @property
    def h2(self) -> Permutation:
        return self.h[2]

    def generator_matrix(self) -> np.ndarray:
        """(3, n_flags) array of the generator images."""
        return np.stack([p.images for p in self.h])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypermap):
            return NotImplemented
        return self.n_flags == other.n_flags and self.h == other.h

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n_flags, self.h)))
        return self._hash

    def __repr__(self) -> str:
        return f"<Hypermap n_flags={self.n_flags}>"


def validate(n_flags: int, h0, h1, h2) -> Hypermap:
    """Verify raw data as a hypermap; raises the specific violation."""
    return Hypermap(n_flags, h0, h1, h2)


_PAIR_FOR_K = {0: (1, 2), 1: (0, 2), 2: (0, 1)}


def k_faces(h: Hypermap, k: int) -> tuple[tuple[int, ...], ...]:
    """Orbits of the two generators other than h_k, listed by smallest member."""
    i, j = _PAIR_FOR_K[k]
    return orbits((h.h[i], h.h[j]), h.n_flags)


def valencies(h: Hypermap, k: int) -> tuple[int, ...]:
    """Valency (half the orbit size) of each k-face, in k_faces order."""
    return tuple(len(face) // 2 for face in k_faces(h, k))


def euler_characteristic(h: Hypermap) -> int:
    """V + E + F - n_flags/2."""
    v = len(k_faces(h, 0))
    e = len(k_faces(h, 1))
    f = len(k_faces(h, 2))
    return v + e + f - h.n_flags // 2


def _parity_coloring(h: Hypermap, eps: tuple[int, int, int]) -> tuple[int, ...] | None:
    """2-coloring from flag 0 where h_i flips the color iff eps[i] is 1."""
    colors = [-1] * h.n_flags
    colors[0] = 0
    queue = [0]
    head = 0
    rows = [p.images for p in h.h]
    while head < len(queue):
        x = queue[head]
        head += 1
        cx = colors[x]
        for i in range(3):
            y = int(rows[i][x])
            cy = cx ^ eps[i]
            if colors[y] < 0:
                colors[y] = cy
                queue.append(y)
            elif colors[y] != cy:
                return None
    return tuple(colors)


def surface_class(h: Hypermap) -> SurfaceClass:
    """Characteristic plus orientability (all-flip 2-colorability) and genus."""
    chi = euler_characteristic(h)
    orientable = _parity_coloring(h, (1, 1, 1)) is not None
    return SurfaceClass.from_characteristic(chi, orientable)


def type_of(h: Hypermap) -> HypermapType:
    parts = []
    for k in range(3):
        parts.append(functools.reduce(math.lcm, valencies(h, k), 1))
    return HypermapType(*parts)


def is_uniform(h: Hypermap) -> bool:
    """True when, for each k, every k-face has the same valency."""
    return all(len(set(valencies(h, k))) == 1 for k in range(3))


_SIGMA_NAMES = {
    (0, 1, 2): "id",
    (1, 0, 2): "01",
    (2, 1, 0): "02",
    (0, 2, 1): "12",
    (1, 2, 0): "012",
    (2, 0, 1): "021",
}


def dual(h: Hypermap, sigma: tuple[int, int, int]) -> Hypermap:
    """The sigma-dual: generator k of the result is h_{sigma^-1(k)}.

    sigma is given by its images (sigma(0), sigma(1), sigma(2)); k-faces of
    h become sigma(k)-faces of the dual. Characteristic, orientability,
    flag count, and regularity are unchanged.
    """
    if tuple(sorted(sigma)) != (0, 1, 2):
        raise ValueError(f"sigma {sigma!r} is not a permutation of (0, 1, 2)")
    inv = [0, 0, 0]
    for i, s in enumerate(sigma):
        inv[s] = i
    return Hypermap(h.n_flags, h.h[inv[0]], h.h[inv[1]], h.h[inv[2]])


def relabel(h: Hypermap, sigma: Permutation) -> Hypermap:
    """Rename flags by sigma (old flag x becomes sigma(x))."""
    if sigma.degree != h.n_flags:
        raise ValueError("relabeling degree mismatch")
    s = sigma.images
    inv = np.empty_like(s)
    inv[s] = np.arange(h.n_flags, dtype=DTYPE)
    new = [s[p.images[inv]] for p in h.h]
    return Hypermap(h.n_flags, *new)


@functools.lru_cache(maxsize=None)
def _canonical(h: Hypermap) -> tuple[bytes, Permutation]:
    code, sigma = _kernels.canonical_code(h.generator_matrix())
    return code.astype(DTYPE).tobytes(), Permutation(sigma)


def canonical_form(h: Hypermap) -> Permutation:
    """The relabeling sigma for which relabel(h, sigma) is the breadth-first
    minimal representative over all start flags. The representative (not
    sigma itself) is identical for any flag relabeling of the same hypermap."""
    return _canonical(h)[1]


def canonical_code(h: Hypermap) -> bytes:
    """Isomorphism certificate: equal codes exactly when isomorphic."""
    return _canonical(h)[0]


def are_isomorphic(a: Hypermap, b: Hypermap) -> bool:
    """Color-and-generator-preserving bijection of flags exists."""
    if a.n_flags != b.n_flags:
        return False
    return canonical_code(a) == canonical_code(b)


def find_covering(a: Hypermap, b: Hypermap) -> tuple[int, ...] | None:
    """Generator-equivariant map psi with psi(x * h_i) = psi(x) * g_i.

    Candidate images for flag 0 are tried in increasing order; the first
    consistent extension is returned (surjective by transitivity), else None.
    """
    a_rows = [p.images for p in a.h]
    b_rows = [p.images for p in b.h]
    for target in range(b.n_flags):
        psi = np.full(a.n_flags, -1, dtype=DTYPE)
        psi[0] = target
        queue = [0]
        head = 0
        ok = True
        while head < len(queue) and ok:
            x = queue[head]
            head += 1
            px = psi[x]
            for i in range(3):
                y = int(a_rows[i][x])
                img = int(b_rows[i][px])
                if psi[y] < 0:
                    psi[y] = img
                    queue.append(y)
                elif psi[y] != img:
                    ok = False
                    break
        if ok:
            return tuple(int(v) for v in psi)
    return None


@functools.lru_cache(maxsize=None)
def monodromy_group(h: Hypermap) -> FiniteGroup:
    """The group generated by h0, h1, h2, memoized per hypermap."""
    return generate_group(h.h, h.n_flags)


# ---------------------------------------------------------------------------
# serialization (text document format shared with the CLI)
#
#   hypermap <n_flags>
#   h0: i0 i1 ...
#   h1: ...
#   h2: ...
#
# Images are 0-indexed. The format is line-oriented so golden files diff
# cleanly.


def to_text(h: Hypermap) -> str:
    lines = [f"hypermap {h.n_flags}"]
    for i, p in enumerate(h.h):
        lines.append(f"h{i}: " + " ".join(str(int(x)) for x in p.images))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypermap:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "hypermap":
        raise ParseError(f"expected 'hypermap <n_flags>', got {lines[0]!r}", line=1)
    try:
        n_flags = int(head[1])
    except ValueError:
        raise ParseError(f"flag count {head[1]!r} is not an integer", line=1) from None
    if n_flags < 1:
        raise ParseError("flag count must be positive", line=1)
    if len(lines) != 4:
        raise ParseError(f"expected 4 lines (header plus h0/h1/h2), got {len(lines)}")
    perms = []
    for i in range(3):
        line_no = i + 2
        line = lines[i + 1]
        prefix = f"h{i}:"
        if not line.startswith(prefix):
            raise ParseError(f"expected line to start with {prefix!r}", line=line_no)
        fields = line[len(prefix):].split()
        if len(fields) != n_flags:
            raise ParseError(
                f"h{i} has {len(fields)} images, expected {n_flags}", line=line_no
            )
        try:
            images = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"h{i} contains a non-integer image", line=line_no) from None
        if any(v < 0 or v >= n_flags for v in images):
            raise ParseError(f"h{i} image out of range", line=line_no)
        try:
            perms.append(Permutation(images))
        except ValueError as exc:
            raise ParseError(f"h{i}: {exc}", line=line_no) from None
    return validate(n_flags, *perms)
