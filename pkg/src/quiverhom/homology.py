"""Minimal resolutions, homological dimensions, and Ext.

Projective resolutions iterate projective covers of syzygies; injective
resolutions iterate envelopes of cosyzygies.  Ext dimensions come from
rank-nullity of the induced maps on Hom spaces and are computable through
two independent routes (projective resolution of the first argument,
injective resolution of the second), which must always agree.

``ext_module`` returns Ext^i(M, A) as an honest module over the opposite
algebra, by dualizing the projective resolution termwise: the dual of the
projective at a vertex is the opposite-side projective at the same vertex,
and dual differentials are right multiplications by reversed path words.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import BoundAlgebra, Path, opposite
from .rep import (
    Morphism,
    Representation,
    TruncationError,
    compose,
    direct_sum_with_maps,
    filtration_parts,
    hom_basis,
    identity_morphism,
    injective_envelope,
    morphism_parts,
    projective_cover,
    standard_module,
    subrepresentation,
    zero_morphism,
    zero_representation,
)


def default_cap(algebra: BoundAlgebra) -> int:
    # acyclic quivers never reach this; cyclic ones report ">= cap"
    return 2 * algebra.quiver.num_vertices + 2


@dataclass
class Resolution:
    """A finite minimal complex resolving ``target``.

    ``differentials[k]`` connects terms k and k+1: for a projective
    resolution it maps terms[k+1] -> terms[k], for an injective one
    terms[k] -> terms[k+1].  ``layouts[k]`` lists the vertices of the
    indecomposable projective/injective summands of terms[k], in order.
    """

    kind: str
    target: Representation
    terms: list[Representation]
    differentials: list[Morphism]
    augmentation: Morphism
    layouts: list[list[int]]
    truncated: bool

    @property
    def length(self) -> int:
        return len(self.terms) - 1


def _check_projective_minimality(res: Resolution) -> None:
    p = res.target.algebra.p
    for k, d in enumerate(res.differentials):
        rad = filtration_parts(res.terms[k]).radical_inclusion
        for rb, db in zip(rad.blocks, d.blocks):
            assert linalg.solve(rb, db, p) is not None, "differential image not in radical"


def _check_injective_minimality(res: Resolution) -> None:
    p = res.target.algebra.p
    maps = [res.augmentation] + list(res.differentials)
    for k, term in enumerate(res.terms):
        soc = filtration_parts(term).socle_inclusion
        image = [linalg.column_space(b, p) for b in maps[k].blocks]
        for ib, sb in zip(image, soc.blocks):
            assert linalg.solve(ib, sb, p) is not None, "socle not inside the image"


def minimal_resolution(m: Representation, kind: str, cap: int | None = None) -> Resolution:
    """Iterate covers of syzygies (projective) or envelopes of cosyzygies."""
    if kind not in ("projective", "injective"):
        raise ValueError(f"unknown resolution kind {kind!r}")
    if cap is None:
        cap = default_cap(m.algebra)
    if cap < 1:
        raise ValueError("cap must be a positive integer")
    if m.is_zero:
        return Resolution(kind, m, [], [], zero_morphism(m, m), [], truncated=False)

    terms: list[Representation] = []
    diffs: list[Morphism] = []
    layouts: list[list[int]] = []
    truncated = False
    if kind == "projective":
        aug, layout = projective_cover(m)
        terms.append(aug.source)
        layouts.append(layout)
        current = morphism_parts(aug)  # syzygy = kernel
        while not current.kernel.is_zero:
            if len(terms) > cap:
                truncated = True
                break
            cover, layout = projective_cover(current.kernel)
            diffs.append(compose(current.kernel_inclusion, cover))
            terms.append(cover.source)
            layouts.append(layout)
            current = morphism_parts(cover)
        res = Resolution(kind, m, terms, diffs, aug, layouts, truncated)
        _check_projective_minimality(res)
        return res

    aug, layout = injective_envelope(m)
    terms.append(aug.target)
    layouts.append(layout)
    current = morphism_parts(aug)  # cosyzygy = cokernel
    while not current.cokernel.is_zero:
        if len(terms) > cap:
            truncated = True
            break
        env, layout = injective_envelope(current.cokernel)
        diffs.append(compose(env, current.cokernel_projection))
        terms.append(env.target)
        layouts.append(layout)
        current = morphism_parts(env)
    res = Resolution(kind, m, terms, diffs, aug, layouts, truncated)
    _check_injective_minimality(res)
    return res


def dim(m: Representation, kind: str, cap: int | None = None) -> int | None:
    """Projective or injective dimension; None means ">= cap"."""
    res = minimal_resolution(m, kind, cap)
    if res.truncated:
        return None
    return max(res.length, 0)


def global_dimension(algebra: BoundAlgebra, cap: int | None = None) -> int | None:
    """Max over simples of the projective dimension; None means ">= cap"."""
    worst = 0
    for v in algebra.quiver.vertices:
        d = dim(standard_module(algebra, "simple", v), "projective", cap)
        if d is None:
            return None
        worst = max(worst, d)
    return worst


# -- Ext dimensions -----------------------------------------------------------


def _induced_rank(maps: list[Morphism], p: int) -> int:
    if not maps:
        return 0
    cols = np.stack([f.flat() for f in maps], axis=1)
    return linalg.rank(cols, p)


def ext_dim(
    m: Representation,
    n: Representation,
    i: int,
    cap: int | None = None,
    resolution: Resolution | None = None,
) -> int:
    """dim Ext^i(m, n), from the minimal projective resolution of m."""
    if i < 0:
        raise ValueError("degree must be >= 0")
    if m.algebra is not n.algebra and m.algebra != n.algebra:
        raise ValueError("ext of representations over different algebras")
    if m.is_zero or n.is_zero:
        return 0
    res = resolution if resolution is not None else minimal_resolution(m, "projective", cap)
    top = res.length
    if not res.truncated and i > top:
        return 0
    if res.truncated and i > top - 1:
        raise TruncationError(f"resolution truncated at cap before degree {i}")

    def delta_rank(j: int) -> int:
        # induced map Hom(terms[j], n) -> Hom(terms[j+1], n)
        if j < 0 or j + 1 > top:
            return 0
        basis = hom_basis(res.terms[j], n)
        return _induced_rank([compose(h, res.differentials[j]) for h in basis], m.algebra.p)

    here = len(hom_basis(res.terms[i], n))
    return here - delta_rank(i) - delta_rank(i - 1)


def ext_dim_via_injective(
    m: Representation,
    n: Representation,
    i: int,
    cap: int | None = None,
    resolution: Resolution | None = None,
) -> int:
    """dim Ext^i(m, n), from the minimal injective resolution of n."""
    if i < 0:
        raise ValueError("degree must be >= 0")
    if m.is_zero or n.is_zero:
        return 0
    res = resolution if resolution is not None else minimal_resolution(n, "injective", cap)
    top = res.length
    if not res.truncated and i > top:
        return 0
    if res.truncated and i > top - 1:
        raise TruncationError(f"resolution truncated at cap before degree {i}")

    def delta_rank(j: int) -> int:
        if j < 0 or j + 1 > top:
            return 0
        basis = hom_basis(m, res.terms[j])
        return _induced_rank([compose(res.differentials[j], h) for h in basis], m.algebra.p)

    here = len(hom_basis(m, res.terms[i]))
    return here - delta_rank(i) - delta_rank(i - 1)


# -- Ext modules over the opposite algebra ------------------------------------


def right_multiplication(
    algebra: BoundAlgebra, from_vertex: int, to_vertex: int, element: list[tuple[int, Path]]
) -> Morphism:
    """Right multiplication P(from) -> P(to) by a combination of paths to->from."""
    source = standard_module(algebra, "projective", from_vertex)
    target = standard_module(algebra, "projective", to_vertex)
    q = algebra.quiver
    src_paths = algebra.basis_from(from_vertex)
    tgt_paths = algebra.basis_from(to_vertex)
    tgt_at = {w: [qq for qq in tgt_paths if qq.target == w] for w in q.vertices}
    tgt_index = {w: {qq: i for i, qq in enumerate(tgt_at[w])} for w in q.vertices}
    src_at = {w: [qq for qq in src_paths if qq.target == w] for w in q.vertices}
    blocks = [linalg.zeros(target.dims[i], source.dims[i]) for i in range(q.num_vertices)]
    for coeff, x in element:
        if x.source != to_vertex or x.target != from_vertex:
            raise ValueError(f"path {x} does not run {to_vertex} -> {from_vertex}")
        for w in q.vertices:
            i = q.vertex_index(w)
            for col, qq in enumerate(src_at[w]):
                word = qq.arrows + x.arrows
                if algebra.is_alive(word):
                    new = Path(word, source=to_vertex, target=w)
                    blocks[i][tgt_index[w][new], col] = (blocks[i][tgt_index[w][new], col] + coeff) % algebra.p
    return Morphism(source, target, blocks)


def _path_matrix(d: Morphism, src_layout: list[int], tgt_layout: list[int]):
    """Entries of a map between projective sums, as path combinations.

    Entry (b, a) is the list of (coeff, path) with the path running from
    tgt_layout[b]'s vertex to src_layout[a]'s vertex.
    """
    algebra = d.source.algebra
    q = algebra.quiver
    src_at_offsets: list[int] = []
    col_cursor = {v: 0 for v in q.vertices}
    for v in src_layout:
        # the stationary path is first in P(v)'s basis at vertex v
        src_at_offsets.append(col_cursor[v])
        for path in algebra.basis_from(v):
            if path.target == v:
                col_cursor[v] += 1
    # row coordinates of the target sum at each vertex: (summand index, path)
    row_labels = {v: [] for v in q.vertices}
    for b, w in enumerate(tgt_layout):
        for path in algebra.basis_from(w):
            row_labels[path.target].append((b, path))
    entries = [[[] for _ in src_layout] for _ in tgt_layout]
    for a, v in enumerate(src_layout):
        vec = d.blocks[q.vertex_index(v)][:, src_at_offsets[a]]
        for pos, coeff in enumerate(vec):
            if coeff:
                b, path = row_labels[v][pos]
                entries[b][a].append((int(coeff), path))
    return entries


def _dual_complex(res: Resolution):
    """Termwise dual of a projective resolution, over the opposite algebra."""
    algebra = res.target.algebra
    opp = opposite(algebra)
    terms = []
    for layout in res.layouts:
        summands = [standard_module(opp, "projective", v) for v in layout]
        terms.append(direct_sum_with_maps(summands, algebra=opp)[0])
    diffs = []
    for k, d in enumerate(res.differentials):
        src_layout = res.layouts[k + 1]
        tgt_layout = res.layouts[k]
        entries = _path_matrix(d, src_layout, tgt_layout)
        blocks = [
            linalg.zeros(terms[k + 1].dims[i], terms[k].dims[i])
            for i in range(opp.quiver.num_vertices)
        ]
        row_off = [0] * opp.quiver.num_vertices
        offsets_rows = []
        for v in src_layout:
            proj = standard_module(opp, "projective", v)
            offsets_rows.append(list(row_off))
            for i in range(opp.quiver.num_vertices):
                row_off[i] += proj.dims[i]
        col_off = [0] * opp.quiver.num_vertices
        offsets_cols = []
        for w in tgt_layout:
            proj = standard_module(opp, "projective", w)
            offsets_cols.append(list(col_off))
            for i in range(opp.quiver.num_vertices):
                col_off[i] += proj.dims[i]
        for a, v in enumerate(src_layout):
            for b, w in enumerate(tgt_layout):
                if not entries[b][a]:
                    continue
                reversed_elt = [
                    (c, opp.quiver.path(tuple(reversed(x.arrows)))) for c, x in entries[b][a]
                ]
                rm = right_multiplication(opp, w, v, reversed_elt)
                for i in range(opp.quiver.num_vertices):
                    ro, co = offsets_rows[a][i], offsets_cols[b][i]
                    blk = rm.blocks[i]
                    blocks[i][ro : ro + blk.shape[0], co : co + blk.shape[1]] = (
                        blocks[i][ro : ro + blk.shape[0], co : co + blk.shape[1]] + blk
                    ) % opp.p
        diffs.append(Morphism(terms[k], terms[k + 1], blocks))
    for left, right in zip(diffs, diffs[1:]):
        assert compose(right, left).is_zero, "dualized differentials do not compose to zero"
    return terms, diffs


def ext_module(m: Representation, i: int, cap: int | None = None) -> Representation:
    """Ext^i(m, algebra) as a module over the opposite algebra."""
    if i < 0:
        raise ValueError("degree must be >= 0")
    opp = opposite(m.algebra)
    if m.is_zero:
        return zero_representation(opp)
    res = minimal_resolution(m, "projective", cap)
    if res.truncated:
        raise TruncationError("ext_module needs a finite projective resolution")
    n = res.length
    if i > n:
        return zero_representation(opp)
    terms, diffs = _dual_complex(res)
    p = opp.p
    if i < n:
        ker_bases = [linalg.nullspace(b, p) for b in diffs[i].blocks]
        kernel, kappa = subrepresentation(terms[i], ker_bases)
    else:
        kernel, kappa = terms[n], identity_morphism(terms[n])
    if i == 0:
        return kernel
    factored = []
    for kb, db in zip(kappa.blocks, diffs[i - 1].blocks):
        x = linalg.solve(kb, db, p)
        assert x is not None, "image does not land in the kernel"
        factored.append(x)
    g = Morphism(terms[i - 1], kernel, factored)
    return morphism_parts(g).cokernel
