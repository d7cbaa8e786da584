"""Exhaustive small-size search over involution triples.

Enumerates every ordered triple of fixed-point-free involutions on n points
(n = 2, 4, ..., max_flags), keeps the transitive spherical ones, dedupes by
canonical form, and checks each isomorphism class against three claims:

* spherical + uniform implies regular,
* spherical + bipartite-uniform implies bipartite-regular,
* every spherical bipartite class is a wal or pin output over the catalog
  (closed under the six dualities).

The per-class classification here is deliberately written out locally (plain
breadth-first searches on small arrays) instead of calling the library's own
predicates, so a defect in those would surface as a disagreement rather than
be confirmed by itself. A second enumeration pass fixes h0 to the standard
involution and re-counts the isomorphism classes; the counts must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .. import _kernels
from .._kernels import DTYPE
from ..hypermap import canonical_code
from .registry import full_catalog

__all__ = ["OracleReport", "brute_oracle", "fixed_point_free_involutions"]


def fixed_point_free_involutions(n: int) -> np.ndarray:
    """All perfect pairings of 0..n-1 as image rows, in a fixed order."""
    if n % 2:
        raise ValueError("no fixed-point-free involution on an odd set")
    rows: list[list[int]] = []

    def pair_up(remaining: tuple[int, ...], img: list[int]):
        if not remaining:
            rows.append(list(img))
            return
        a = remaining[0]
        rest = remaining[1:]
        for idx, b in enumerate(rest):
            img[a], img[b] = b, a
            pair_up(rest[:idx] + rest[idx + 1 :], img)

    pair_up(tuple(range(n)), [0] * n)
    return np.array(rows, dtype=DTYPE)


# ------------------------------------------------------- local re-checks
#
# Everything below works on a (3, n) int array of involution image rows and
# repeats the definitions from scratch.


def _local_orbits(rows: list[np.ndarray], n: int) -> list[list[int]]:
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        queue = [start]
        while queue:
            x = queue.pop()
            for r in rows:
                y = int(r[x])
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    queue.append(y)
        out.append(sorted(orbit))
    return out


def _local_valency_sets(hs: np.ndarray) -> list[set[int]]:
    n = hs.shape[1]
    pairs = [(1, 2), (0, 2), (0, 1)]
    return [
        {len(orbit) // 2 for orbit in _local_orbits([hs[i], hs[j]], n)}
        for i, j in pairs
    ]


def _local_coloring(hs: np.ndarray) -> list[int] | None:
    """Vertex 2-coloring (h0 flips, h1 and h2 preserve), or None."""
    n = hs.shape[1]
    colors = [-1] * n
    colors[0] = 0
    queue = [0]
    while queue:
        x = queue.pop()
        for i in range(3):
            y = int(hs[i][x])
            want = colors[x] ^ (1 if i == 0 else 0)
            if colors[y] < 0:
                colors[y] = want
                queue.append(y)
            elif colors[y] != want:
                return None
    return colors


def _local_has_automorphism(hs: np.ndarray, target: int) -> bool:
    """Try to extend flag 0 -> target equivariantly."""
    n = hs.shape[1]
    sigma = [-1] * n
    sigma[0] = target
    queue = [0]
    while queue:
        x = queue.pop()
        for i in range(3):
            y = int(hs[i][x])
            img = int(hs[i][sigma[x]])
            if sigma[y] < 0:
                sigma[y] = img
                queue.append(y)
            elif sigma[y] != img:
                return False
    return True


def _local_is_transitive(hs: np.ndarray) -> bool:
    return len(_local_orbits([hs[0], hs[1], hs[2]], hs.shape[1])) == 1


def _local_euler(hs: np.ndarray) -> int:
    n = hs.shape[1]
    pairs = [(1, 2), (0, 2), (0, 1)]
    faces = sum(len(_local_orbits([hs[i], hs[j]], n)) for i, j in pairs)
    return faces - n // 2


@dataclass(frozen=True)
class OracleReport:
    """Outcome of the exhaustive search; ok means no claim failed anywhere."""

    max_flags: int
    sizes: tuple[int, ...]
    triples_scanned: dict[int, int]
    spherical_triples: dict[int, int]
    class_counts: dict[int, int]
    recount_class_counts: dict[int, int]
    uniform_classes: int
    bipartite_classes: int
    bipartite_uniform_classes: int
    violations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations and self.class_counts == self.recount_class_counts

    def to_json_dict(self) -> dict:
        return {
            "max_flags": self.max_flags,
            "sizes": list(self.sizes),
            "triples_scanned": {str(k): v for k, v in self.triples_scanned.items()},
            "spherical_triples": {str(k): v for k, v in self.spherical_triples.items()},
            "class_counts": {str(k): v for k, v in self.class_counts.items()},
            "recount_class_counts": {str(k): v for k, v in self.recount_class_counts.items()},
            "uniform_classes": self.uniform_classes,
            "bipartite_classes": self.bipartite_classes,
            "bipartite_uniform_classes": self.bipartite_uniform_classes,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def _double_codes(max_flags: int) -> set[bytes]:
    """Canonical codes of wal/pin over the catalog closed under duality."""
    from ..build import pin, six_duals, walsh

    codes: set[bytes] = set()
    seen_sources: set[bytes] = set()
    for _, h in full_catalog():
        if 2 * h.n_flags > max_flags:
            continue
        for d in six_duals(h):
            key = canonical_code(d)
            if key in seen_sources:
                continue
            seen_sources.add(key)
            codes.add(canonical_code(walsh(d)))
            codes.add(canonical_code(pin(d)))
    return codes


def _classes_from_triples(
    invs: np.ndarray, triples: np.ndarray
) -> dict[bytes, np.ndarray]:
    """Dedupe candidate triples by canonical code; values are (3, n) arrays."""
    classes: dict[bytes, np.ndarray] = {}
    for i, j, k in triples:
        hs = np.stack([invs[i], invs[j], invs[k]])
        code, _ = _kernels.canonical_code(hs)
        key = code.tobytes()
        if key not in classes:
            classes[key] = hs
    return classes


def _recount_fixed_h0(invs: np.ndarray, n: int) -> int:
    """Independent pass: h0 pinned to the standard pairing (0 1)(2 3)..."""
    standard = np.arange(n, dtype=DTYPE) ^ 1
    codes: set[bytes] = set()
    for j, k in itertools.product(range(invs.shape[0]), repeat=2):
        hs = np.stack([standard, invs[j], invs[k]])
        if not _local_is_transitive(hs):
            continue
        if _local_euler(hs) != 2:
            continue
        code, _ = _kernels.canonical_code(hs)
        codes.add(code.tobytes())
    return len(codes)


def brute_oracle(max_flags: int = 8) -> OracleReport:
    """Search all flag counts up to max_flags; see the module docstring."""
    if max_flags not in (4, 8):
        raise ValueError("max_flags must be 4 or 8")
    sizes = tuple(range(2, max_flags + 1, 2))
    double_codes = _double_codes(max_flags)
    triples_scanned: dict[int, int] = {}
    spherical: dict[int, int] = {}
    class_counts: dict[int, int] = {}
    recounts: dict[int, int] = {}
    uniform_classes = 0
    bipartite_classes = 0
    bipartite_uniform_classes = 0
    violations: list[str] = []

    for n in sizes:
        invs = fixed_point_free_involutions(n)
        triples_scanned[n] = invs.shape[0] ** 3
        triples = _kernels.spherical_triples(invs)
        spherical[n] = triples.shape[0]
        classes = _classes_from_triples(invs, triples)
        class_counts[n] = len(classes)
        recounts[n] = _recount_fixed_h0(invs, n)

        for key, hs in classes.items():
            label = f"n={n} h={[list(map(int, r)) for r in hs]}"
            vsets = _local_valency_sets(hs)
            uniform = all(len(s) == 1 for s in vsets)
            regular = all(_local_has_automorphism(hs, t) for t in range(n))
            if uniform:
                uniform_classes += 1
                if not regular:
                    violations.append(f"uniform but not regular: {label}")
            colors = _local_coloring(hs)
            if colors is None:
                continue
            bipartite_classes += 1
            if key not in double_codes:
                violations.append(f"bipartite but not a wal/pin output: {label}")
            class0 = [x for x in range(n) if colors[x] == 0]
            vertex_orbits = _local_orbits([hs[1], hs[2]], n)
            per_class: list[set[int]] = [set(), set()]
            for orbit in vertex_orbits:
                per_class[colors[orbit[0]]].add(len(orbit) // 2)
            b_uniform = (
                all(len(s) == 1 for s in per_class)
                and len(vsets[1]) == 1
                and len(vsets[2]) == 1
            )
            if b_uniform:
                bipartite_uniform_classes += 1
                b_regular = all(_local_has_automorphism(hs, t) for t in class0)
                if not b_regular:
                    violations.append(f"bipartite-uniform but not bipartite-regular: {label}")

    return OracleReport(
        max_flags=max_flags,
        sizes=sizes,
        triples_scanned=triples_scanned,
        spherical_triples=spherical,
        class_counts=class_counts,
        recount_class_counts=recounts,
        uniform_classes=uniform_classes,
        bipartite_classes=bipartite_classes,
        bipartite_uniform_classes=bipartite_uniform_classes,
        violations=tuple(violations),
    )
