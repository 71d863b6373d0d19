"""Complete indecomposable enumeration for Nakayama algebras.

Over a Nakayama algebra (one linear chain or one oriented cycle) every
indecomposable is uniserial: a quotient of an indecomposable projective by a
radical power.  That classical fact makes the universe of indecomposables
finite and fully enumerable, which is what downstream maximality and
dichotomy checks quantify over.  Non-Nakayama input yields an empty,
incomplete universe rather than a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import BoundAlgebra, Path, is_nakayama
from .approx import IncompleteUniverseError, SubcategorySet
from .homology import dim
from .rep import Representation, hom_basis, is_injective, is_projective


@dataclass
class Universe:
    """A list of pairwise non-isomorphic indecomposables, with names."""

    algebra: BoundAlgebra
    objects: list[Representation]
    names: list[str]
    complete: bool

    def __len__(self):
        return len(self.objects)

    def index_of_dims(self, dims) -> list[int]:
        return [i for i, m in enumerate(self.objects) if m.dims == tuple(dims)]


def uniserial_module(algebra: BoundAlgebra, top_vertex: int, length: int) -> Representation:
    """The uniserial module of the given total dimension with top at a vertex.

    Needs a Nakayama algebra: paths out of a vertex are then unique per
    length, so the basis is the single surviving path of each length below
    ``length``.
    """
    paths = sorted(algebra.basis_from(top_vertex), key=lambda q: q.length)
    if len(paths) < length:
        raise ValueError(
            f"no uniserial module of length {length} at vertex {top_vertex}: "
            f"paths die after length {len(paths) - 1}"
        )
    if any(paths[i].length != i for i in range(len(paths))):
        raise ValueError("uniserial construction needs a Nakayama algebra")
    chosen = paths[:length]
    q = algebra.quiver
    at_vertex = {w: [qq for qq in chosen if qq.target == w] for w in q.vertices}
    index = {w: {qq: i for i, qq in enumerate(at_vertex[w])} for w in q.vertices}
    dims = [len(at_vertex[w]) for w in q.vertices]
    maps = {}
    for a in q.arrows:
        mat = np.zeros((dims[q.vertex_index(a.target)], dims[q.vertex_index(a.source)]), dtype=np.int64)
        for col, qq in enumerate(at_vertex[a.source]):
            word = (a.name,) + qq.arrows
            if len(word) < length and algebra.is_alive(word):
                new = Path(word, source=top_vertex, target=a.target)
                mat[index[a.target][new], col] = 1
        maps[a.name] = mat
    return Representation(algebra, dims, maps)


def interval_name(algebra: BoundAlgebra, top_vertex: int, length: int) -> str:
    socle = sorted(algebra.basis_from(top_vertex), key=lambda q: q.length)[length - 1].target
    return f"M{socle}:{top_vertex}"


def enumerate_indecomposables(algebra: BoundAlgebra) -> Universe:
    """All indecomposables of a Nakayama algebra: P(v)/rad^k, deduplicated.

    On an oriented cycle a uniserial can wind past its own top, so two
    distinct modules may share socle and top; the shorter one keeps the
    plain interval name, longer ones get a length suffix.
    """
    if not is_nakayama(algebra):
        return Universe(algebra, [], [], complete=False)
    entries = []
    for v in algebra.quiver.vertices:
        loewy = len(algebra.basis_from(v))  # uniserial: one path per length
        for k in range(1, loewy + 1):
            entries.append((uniserial_module(algebra, v, k), interval_name(algebra, v, k), k))
    by_name: dict[str, list[int]] = {}
    for idx, (_, name, _) in enumerate(entries):
        by_name.setdefault(name, []).append(idx)
    named = {}
    for name, indices in by_name.items():
        indices.sort(key=lambda i: entries[i][2])
        named[indices[0]] = name
        for i in indices[1:]:
            named[i] = f"{name}l{entries[i][2]}"
    tagged = [(m, named[i]) for i, (m, _, _) in enumerate(entries)]
    tagged.sort(key=lambda e: (e[0].dim, e[0].dims, e[1]))
    return Universe(
        algebra,
        [m for m, _ in tagged],
        [name for _, name in tagged],
        complete=True,
    )


def reaches(universe: Universe) -> np.ndarray:
    """Transitive closure of the nonzero-Hom relation on the universe.

    Entry (i, j) says there is a chain of nonzero maps from object i to
    object j through universe members; the relation is taken reflexive.
    """
    if not universe.complete:
        raise IncompleteUniverseError("reachability needs a complete universe")
    n = len(universe.objects)
    adj = np.zeros((n, n), dtype=bool)
    for i, x in enumerate(universe.objects):
        for j, y in enumerate(universe.objects):
            adj[i, j] = i == j or len(hom_basis(x, y)) > 0
    closure = adj.copy()
    while True:
        nxt = closure | (closure @ closure)
        if np.array_equal(nxt, closure):
            return closure
        closure = nxt


def r_lambda(universe: Universe, cap: int | None = None) -> SubcategorySet:
    """Objects all of whose reachable successors have injective dimension <= 1.

    A truncated injective dimension at cap >= 2 already certifies id > 1, so
    truncation only forbids cap < 2.
    """
    if not universe.complete:
        raise IncompleteUniverseError("this subcategory needs a complete universe")
    if cap is not None and cap < 2:
        raise ValueError("cap must be >= 2 to decide membership")
    ids = [dim(m, "injective", cap) for m in universe.objects]
    small = [d is not None and d <= 1 for d in ids]
    closure = reaches(universe)
    members = [
        m
        for i, m in enumerate(universe.objects)
        if all(small[j] for j in range(len(universe.objects)) if closure[i, j])
    ]
    return SubcategorySet(universe.algebra, members, validate=False)


def universe_lines(universe: Universe, cap: int | None = None) -> list[str]:
    """One formatted line per object: name, dims, pd, id, structural flags."""
    lines = []
    for m, name in zip(universe.objects, universe.names):
        pd = dim(m, "projective", cap)
        idim = dim(m, "injective", cap)
        flags = []
        if is_projective(m):
            flags.append("projective")
        if is_injective(m):
            flags.append("injective")
        pd_text = str(pd) if pd is not None else ">= cap"
        id_text = str(idim) if idim is not None else ">= cap"
        flag_text = f"  [{', '.join(flags)}]" if flags else ""
        lines.append(f"{name:<8} dims={m.dims}  pd={pd_text}  id={id_text}{flag_text}")
    return lines
