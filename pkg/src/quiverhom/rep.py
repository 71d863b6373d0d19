"""Modules over a bound quiver algebra, given as quiver representations.

A representation assigns a vector space over F_p to each vertex and a matrix
to each arrow (shape: target dim x source dim), with the composite over every
forbidden word equal to zero.  A morphism is one block per vertex commuting
with all arrow matrices.  Everything is immutable after construction and all
randomized searches take an explicit seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import BoundAlgebra, Path, opposite


class DecompositionError(RuntimeError):
    """Raised when the endomorphism-splitting search cannot certify a result."""


class TruncationError(RuntimeError):
    """Raised when a computation needs resolution terms beyond the cap."""


class Representation:
    """A finitely generated module: one dimension and one matrix per arrow."""

    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra: BoundAlgebra, dims, maps=None, check: bool = True):
        self.algebra = algebra
        q = algebra.quiver
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != q.num_vertices or any(d < 0 for d in self.dims):
            raise ValueError(f"bad dimension vector {self.dims}")
        maps = dict(maps or {})
        built = {}
        for a in q.arrows:
            du = self.dims[q.vertex_index(a.source)]
            dv = self.dims[q.vertex_index(a.target)]
            m = maps.pop(a.name, None)
            m = linalg.zeros(dv, du) if m is None else linalg.reduce_mod(np.asarray(m), algebra.p)
            if m.shape != (dv, du):
                raise ValueError(f"map for {a.name} has shape {m.shape}, expected {(dv, du)}")
            m.setflags(write=False)
            built[a.name] = m
        if maps:
            raise ValueError(f"maps given for unknown arrows {sorted(maps)}")
        self.maps = built
        if check:
            for f in algebra.ideal.forbidden:
                if not linalg.is_zero(path_action(self, f)):
                    raise ValueError(f"relation {f} does not vanish on this representation")

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def dim_at(self, v: int) -> int:
        return self.dims[self.algebra.quiver.vertex_index(v)]

    def __repr__(self):
        return f"Representation(dims={self.dims})"


class Morphism:
    """A homomorphism of representations: one block per vertex."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks, check: bool = True):
        if source.algebra is not target.algebra and source.algebra != target.algebra:
            raise ValueError("source and target live over different algebras")
        self.source = source
        self.target = target
        p = source.algebra.p
        q = source.algebra.quiver
        bl = []
        for i in range(q.num_vertices):
            b = linalg.reduce_mod(np.asarray(blocks[i]), p)
            if b.shape != (target.dims[i], source.dims[i]):
                raise ValueError(
                    f"block at vertex {q.vertices[i]} has shape {b.shape}, "
                    f"expected {(target.dims[i], source.dims[i])}"
                )
            b.setflags(write=False)
            bl.append(b)
        self.blocks = tuple(bl)
        if check:
            for a in q.arrows:
                u, v = q.vertex_index(a.source), q.vertex_index(a.target)
                lhs = linalg.matmul(self.blocks[v], source.maps[a.name], p)
                rhs = linalg.matmul(target.maps[a.name], self.blocks[u], p)
                if not np.array_equal(lhs, rhs):
                    raise ValueError(f"blocks do not intertwine arrow {a.name}")

    @property
    def is_zero(self) -> bool:
        return all(linalg.is_zero(b) for b in self.blocks)

    def flat(self) -> np.ndarray:
        """All block entries as one vector (for rank computations)."""
        parts = [b.reshape(-1) for b in self.blocks]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def __repr__(self):
        return f"Morphism({self.source.dims} -> {self.target.dims})"


# -- basic constructions ----------------------------------------------------


def path_action(m: Representation, path: Path) -> np.ndarray:
    """The composite matrix of a path acting on the representation."""
    q = m.algebra.quiver
    if path.is_stationary:
        d = m.dims[q.vertex_index(path.source)]
        return linalg.eye(d)
    out = m.maps[path.arrows[-1]]
    for name in reversed(path.arrows[:-1]):
        out = linalg.matmul(m.maps[name], out, m.algebra.p)
    return out


def zero_representation(algebra: BoundAlgebra) -> Representation:
    return Representation(algebra, (0,) * algebra.quiver.num_vertices)


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, [linalg.eye(d) for d in m.dims], check=False)


def zero_morphism(source: Representation, target: Representation) -> Morphism:
    return Morphism(
        source, target, [linalg.zeros(dt, ds) for ds, dt in zip(source.dims, target.dims)],
        check=False,
    )


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    p = f.source.algebra.p
    return Morphism(
        f.source, g.target,
        [linalg.matmul(gb, fb, p) for gb, fb in zip(g.blocks, f.blocks)],
        check=False,
    )


def standard_module(algebra: BoundAlgebra, kind: str, v: int) -> Representation:
    """The simple, indecomposable projective, or indecomposable injective at v."""
    q = algebra.quiver
    q.vertex_index(v)
    if kind == "simple":
        dims = [1 if w == v else 0 for w in q.vertices]
        return Representation(algebra, dims)
    if kind == "projective":
        paths = algebra.basis_from(v)
        at_vertex = {w: [qq for qq in paths if qq.target == w] for w in q.vertices}
        index = {w: {qq: i for i, qq in enumerate(at_vertex[w])} for w in q.vertices}
        dims = [len(at_vertex[w]) for w in q.vertices]
        maps = {}
        for a in q.arrows:
            mat = linalg.zeros(len(at_vertex[a.target]), len(at_vertex[a.source]))
            for col, qq in enumerate(at_vertex[a.source]):
                word = (a.name,) + qq.arrows
                if algebra.is_alive(word):
                    new = Path(word, source=v, target=a.target)
                    mat[index[a.target][new], col] = 1
            maps[a.name] = mat
        return Representation(algebra, dims, maps)
    if kind == "injective":
        return duality(standard_module(opposite(algebra), "projective", v))
    raise ValueError(f"unknown module kind {kind!r}")


def duality(m: Representation) -> Representation:
    """The linear dual, a representation of the opposite algebra."""
    return Representation(
        opposite(m.algebra), m.dims,
        {name: mat.T for name, mat in m.maps.items()},
        check=False,
    )


def dual_morphism(f: Morphism) -> Morphism:
    """The dual of f, from duality(target) to duality(source)."""
    return Morphism(
        duality(f.target), duality(f.source), [b.T for b in f.blocks], check=False
    )


def direct_sum(parts: list[Representation], algebra: BoundAlgebra | None = None) -> Representation:
    return direct_sum_with_maps(parts, algebra)[0]


def direct_sum_with_maps(parts, algebra=None):
    """Block-diagonal sum with the canonical inclusions and projections."""
    if parts:
        algebra = parts[0].algebra
        for m in parts[1:]:
            if m.algebra is not algebra and m.algebra != algebra:
                raise ValueError("direct sum of representations over different algebras")
    elif algebra is None:
        raise ValueError("direct sum of an empty family needs an explicit algebra")
    q = algebra.quiver
    nv = q.num_vertices
    dims = tuple(sum(m.dims[i] for m in parts) for i in range(nv))
    maps = {}
    for a in q.arrows:
        u, v = q.vertex_index(a.source), q.vertex_index(a.target)
        mat = linalg.zeros(dims[v], dims[u])
        ro = co = 0
        for m in parts:
            mm = m.maps[a.name]
            mat[ro : ro + mm.shape[0], co : co + mm.shape[1]] = mm
            ro += m.dims[v]
            co += m.dims[u]
        maps[a.name] = mat
    total = Representation(algebra, dims, maps, check=False)
    incls, projs = [], []
    offsets = [0] * nv
    for m in parts:
        inc = [linalg.zeros(dims[i], m.dims[i]) for i in range(nv)]
        prj = [linalg.zeros(m.dims[i], dims[i]) for i in range(nv)]
        for i in range(nv):
            o, d = offsets[i], m.dims[i]
            inc[i][o : o + d, :] = linalg.eye(d)
            prj[i][:, o : o + d] = linalg.eye(d)
            offsets[i] = o + d
        incls.append(Morphism(m, total, inc, check=False))
        projs.append(Morphism(total, m, prj, check=False))
    return total, incls, projs


def stack_into(fs: list[Morphism], target: Representation) -> Morphism:
    """[f1 | f2 | ...] from the direct sum of the sources into a common target."""
    src = direct_sum([f.source for f in fs], algebra=target.algebra)
    blocks = []
    for i in range(len(target.dims)):
        cols = [f.blocks[i] for f in fs]
        blocks.append(np.hstack(cols) if cols else linalg.zeros(target.dims[i], 0))
    return Morphism(src, target, blocks, check=False)


def stack_out_of(fs: list[Morphism], source: Representation) -> Morphism:
    """Column stack from a common source into the direct sum of the targets."""
    tgt = direct_sum([f.target for f in fs], algebra=source.algebra)
    blocks = []
    for i in range(len(source.dims)):
        rows = [f.blocks[i] for f in fs]
        blocks.append(np.vstack(rows) if rows else linalg.zeros(0, source.dims[i]))
    return Morphism(source, tgt, blocks, check=False)


# -- hom spaces --------------------------------------------------------------


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    """A canonical basis of Hom(m, n), from the intertwiner linear system."""
    if m.algebra is not n.algebra and m.algebra != n.algebra:
        raise ValueError("hom between representations over different algebras")
    q = m.algebra.quiver
    p = m.algebra.p
    nv = q.num_vertices
    sizes = [n.dims[i] * m.dims[i] for i in range(nv)]
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    total = int(offsets[-1])
    if total == 0:
        return []
    rows = []
    for a in q.arrows:
        u, v = q.vertex_index(a.source), q.vertex_index(a.target)
        nrows = n.dims[v] * m.dims[u]
        if nrows == 0:
            continue
        block = linalg.zeros(nrows, total)
        # vec_r(f_v @ Ma) = (I (x) Ma^T) vec_r(f_v)
        block[:, offsets[v] : offsets[v + 1]] = np.kron(linalg.eye(n.dims[v]), m.maps[a.name].T)
        # vec_r(Na @ f_u) = (Na (x) I) vec_r(f_u)
        term = np.kron(n.maps[a.name], linalg.eye(m.dims[u]))
        block[:, offsets[u] : offsets[u + 1]] = (block[:, offsets[u] : offsets[u + 1]] - term) % p
        rows.append(block)
    system = np.vstack(rows) if rows else linalg.zeros(0, total)
    kernel = linalg.nullspace(system, p)
    out = []
    for k in range(kernel.shape[1]):
        vec = kernel[:, k]
        blocks = [
            vec[offsets[i] : offsets[i + 1]].reshape(n.dims[i], m.dims[i]) for i in range(nv)
        ]
        out.append(Morphism(m, n, blocks, check=False))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


# -- subquotients -------------------------------------------------------------


def subrepresentation(m: Representation, bases) -> tuple[Representation, Morphism]:
    """The submodule spanned vertexwise by `bases` (columns), with its inclusion.

    The spans must be closed under the arrow action; that is asserted by the
    induced-map solves.
    """
    q = m.algebra.quiver
    p = m.algebra.p
    dims = [b.shape[1] for b in bases]
    maps = {}
    for a in q.arrows:
        u, v = q.vertex_index(a.source), q.vertex_index(a.target)
        image = linalg.matmul(m.maps[a.name], bases[u], p)
        x = linalg.solve(bases[v], image, p)
        if x is None:
            raise ValueError(f"spans are not closed under arrow {a.name}")
        maps[a.name] = x
    sub = Representation(m.algebra, dims, maps, check=False)
    return sub, Morphism(sub, m, list(bases))


def quotient_representation(m: Representation, bases) -> tuple[Representation, Morphism]:
    """The quotient by the vertexwise span of `bases`, with its projection."""
    q = m.algebra.quiver
    p = m.algebra.p
    projs, sections = [], []
    for i, k in enumerate(bases):
        d = m.dims[i]
        r, pivots = linalg.rref(np.hstack([k, linalg.eye(d)]), p)
        comp = [c - k.shape[1] for c in pivots if c >= k.shape[1]]
        c = linalg.eye(d)[:, comp]
        u = np.hstack([k, c])
        uinv = linalg.inv(u, p)
        if uinv is None:
            raise ValueError("sub-basis columns are not independent")
        projs.append(uinv[k.shape[1] :, :])
        sections.append(c)
    dims = [pr.shape[0] for pr in projs]
    maps = {}
    for a in q.arrows:
        u, v = q.vertex_index(a.source), q.vertex_index(a.target)
        maps[a.name] = linalg.matmul(projs[v], linalg.matmul(m.maps[a.name], sections[u], p), p)
    quo = Representation(m.algebra, dims, maps, check=False)
    return quo, Morphism(m, quo, projs)


@dataclass
class MorphismParts:
    kernel: Representation
    kernel_inclusion: Morphism
    image: Representation
    image_inclusion: Morphism
    image_corestriction: Morphism
    cokernel: Representation
    cokernel_projection: Morphism


def morphism_parts(f: Morphism) -> MorphismParts:
    """Kernel, image and cokernel of a morphism, with their structure maps."""
    p = f.source.algebra.p
    ker_bases = [linalg.nullspace(b, p) for b in f.blocks]
    kernel, ker_inc = subrepresentation(f.source, ker_bases)
    im_bases = [linalg.column_space(b, p) for b in f.blocks]
    image, im_inc = subrepresentation(f.target, im_bases)
    corestriction = []
    for basis, b in zip(im_bases, f.blocks):
        x = linalg.solve(basis, b, p)
        assert x is not None
        corestriction.append(x)
    cokernel, coker_proj = quotient_representation(f.target, im_bases)
    assert kernel.dim + image.dim == f.source.dim
    return MorphismParts(
        kernel, ker_inc, image, im_inc,
        Morphism(f.source, image, corestriction, check=False),
        cokernel, coker_proj,
    )


# -- radical / top / socle ----------------------------------------------------


@dataclass
class Filtration:
    radical: Representation
    radical_inclusion: Morphism
    top: Representation
    top_projection: Morphism
    socle: Representation
    socle_inclusion: Morphism


def filtration_parts(m: Representation) -> Filtration:
    """Radical (sum of arrow images), top, and socle (meet of arrow kernels)."""
    q = m.algebra.quiver
    p = m.algebra.p
    rad_bases, soc_bases = [], []
    for i, v in enumerate(q.vertices):
        incoming = [m.maps[a.name] for a in q.arrows_into(v)]
        stacked = np.hstack(incoming) if incoming else linalg.zeros(m.dims[i], 0)
        rad_bases.append(linalg.column_space(stacked, p))
        outgoing = [m.maps[a.name] for a in q.arrows_from(v)]
        stacked = np.vstack(outgoing) if outgoing else linalg.zeros(0, m.dims[i])
        soc_bases.append(linalg.nullspace(stacked, p))
    radical, rad_inc = subrepresentation(m, rad_bases)
    top, top_proj = quotient_representation(m, rad_bases)
    socle, soc_inc = subrepresentation(m, soc_bases)
    return Filtration(radical, rad_inc, top, top_proj, socle, soc_inc)


# -- covers and envelopes -----------------------------------------------------


def projective_cover(m: Representation) -> tuple[Morphism, list[int]]:
    """The projective cover of m, with the vertex layout of its source."""
    if m.is_zero:
        raise ValueError("the zero module has no projective cover")
    algebra = m.algebra
    q = algebra.quiver
    p = algebra.p
    filt = filtration_parts(m)
    layout: list[int] = []
    generators: list[np.ndarray] = []  # one column of m at the layout vertex
    for i, v in enumerate(q.vertices):
        k = filt.top.dims[i]
        if k == 0:
            continue
        section = linalg.solve(filt.top_projection.blocks[i], linalg.eye(k), p)
        assert section is not None
        for j in range(k):
            layout.append(v)
            generators.append(section[:, j])
    summands = [standard_module(algebra, "projective", v) for v in layout]
    cover_source, incls, _ = direct_sum_with_maps(summands, algebra=algebra)
    blocks = [linalg.zeros(m.dims[i], cover_source.dims[i]) for i in range(q.num_vertices)]
    col = [0] * q.num_vertices
    for v, gen in zip(layout, generators):
        for path in algebra.basis_from(v):
            w = q.vertex_index(path.target)
            blocks[w][:, col[w]] = linalg.matmul(path_action(m, path), gen.reshape(-1, 1), p)[:, 0]
            col[w] += 1
    f = Morphism(cover_source, m, blocks)
    for i in range(q.num_vertices):
        assert linalg.rank(f.blocks[i], p) == m.dims[i], "cover is not surjective"
    return f, layout


def injective_envelope(m: Representation) -> tuple[Morphism, list[int]]:
    """The injective envelope of m, with the vertex layout of its target."""
    if m.is_zero:
        raise ValueError("the zero module has no injective envelope")
    f_op, layout = projective_cover(duality(m))
    target = duality(f_op.source)
    env = Morphism(m, target, [b.T for b in f_op.blocks])
    return env, layout


def cover_envelope(m: Representation, side: str) -> Morphism:
    """A projective cover (epi onto m) or injective envelope (mono out of m)."""
    if side == "projective_cover":
        return projective_cover(m)[0]
    if side == "injective_envelope":
        return injective_envelope(m)[0]
    raise ValueError(f"unknown side {side!r}")


# -- isomorphism and decomposition -------------------------------------------


def _iso_candidates(basis: list[Morphism], p: int, seed: int, retries: int = 64):
    for f in basis:
        yield [f]
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        coeffs = rng.integers(0, p, size=len(basis))
        yield [(int(c), f) for c, f in zip(coeffs, basis)]


def _combine(entries, m: Representation, n: Representation, p: int) -> Morphism:
    blocks = [linalg.zeros(dn, dm) for dm, dn in zip(m.dims, n.dims)]
    for entry in entries:
        c, f = entry if isinstance(entry, tuple) else (1, entry)
        for i, b in enumerate(f.blocks):
            blocks[i] = (blocks[i] + c * b) % p
    return Morphism(m, n, blocks, check=False)


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> bool:
    """Isomorphism test: search hom space combinations for invertible blocks."""
    if m.dims != n.dims:
        return False
    if m.dim == 0:
        return True
    basis = hom_basis(m, n)
    if not basis:
        return False
    p = m.algebra.p
    pairs = [[basis[i], basis[j]] for i in range(len(basis)) for j in range(i + 1, len(basis))]
    for entries in list(_iso_candidates(basis, p, seed)) + pairs[:64]:
        cand = _combine(entries, m, n, p)
        if all(linalg.is_invertible(b, p) for b in cand.blocks):
            return True
    return False


def _stable_power(blocks: list[np.ndarray], p: int) -> list[np.ndarray]:
    """Square until the total rank stabilizes (Fitting's lemma exponent)."""
    cur = blocks
    cur_rank = sum(linalg.rank(b, p) for b in cur)
    while True:
        nxt = [linalg.matmul(b, b, p) for b in cur]
        nxt_rank = sum(linalg.rank(b, p) for b in nxt)
        if nxt_rank == cur_rank:
            return cur
        cur, cur_rank = nxt, nxt_rank


def _fitting_split(m: Representation, phi: Morphism):
    """A nontrivial (kernel, image) splitting from an endomorphism, or None."""
    p = m.algebra.p
    if p > 4096:
        raise DecompositionError("eigenvalue scan needs a field of size <= 4096")
    d = m.dim
    for lam in range(p):
        shifted = [(b - lam * linalg.eye(b.shape[0])) % p for b in phi.blocks]
        if sum(linalg.rank(b, p) for b in shifted) == d:
            continue
        stable = _stable_power(shifted, p)
        r = sum(linalg.rank(b, p) for b in stable)
        if 0 < r < d:
            ker = [linalg.nullspace(b, p) for b in stable]
            img = [linalg.column_space(b, p) for b in stable]
            return ker, img
    return None


def _is_scalar_plus_nilpotent(phi: Morphism, p: int) -> bool:
    for lam in range(p):
        shifted = [(b - lam * linalg.eye(b.shape[0])) % p for b in phi.blocks]
        stable = _stable_power(shifted, p)
        if all(linalg.is_zero(b) for b in stable):
            return True
    return False


def split_summands(
    m: Representation, seed: int = 0
) -> list[tuple[Representation, Morphism, Morphism]]:
    """Indecomposable summands of m with split inclusions and projections.

    Search strategy: Fitting splittings of endomorphisms, trying each hom
    basis element and then up to 64 seeded random combinations.  When nothing
    splits, locality of the endomorphism ring is certified (every basis
    endomorphism is a scalar plus a nilpotent); failure of that certificate
    raises instead of silently claiming indecomposability.
    """
    if m.is_zero:
        return []
    ends = hom_basis(m, m)
    p = m.algebra.p
    if len(ends) == 1:
        return [(m, identity_morphism(m), identity_morphism(m))]
    candidates = list(ends)
    rng = np.random.default_rng(seed)
    for _ in range(64):
        coeffs = rng.integers(0, p, size=len(ends))
        candidates.append(_combine([(int(c), f) for c, f in zip(coeffs, ends)], m, m, p))

    for phi in candidates:
        split = _fitting_split(m, phi)
        if split is None:
            continue
        ker_bases, img_bases = split
        out = []
        for bases in (ker_bases, img_bases):
            part, inc = subrepresentation(m, bases)
            proj_blocks = []
            for i in range(len(m.dims)):
                u = np.hstack([ker_bases[i], img_bases[i]])
                uinv = linalg.inv(u, p)
                assert uinv is not None
                if bases is ker_bases:
                    proj_blocks.append(uinv[: ker_bases[i].shape[1], :])
                else:
                    proj_blocks.append(uinv[ker_bases[i].shape[1] :, :])
            proj = Morphism(m, part, proj_blocks, check=False)
            for sub, sub_inc, sub_proj in split_summands(part, seed):
                out.append((sub, compose(inc, sub_inc), compose(sub_proj, proj)))
        return out

    for phi in ends:
        if not _is_scalar_plus_nilpotent(phi, p):
            raise DecompositionError(
                "no splitting found but the endomorphism ring is not certified local"
            )
    return [(m, identity_morphism(m), identity_morphism(m))]


def _canonical_key(m: Representation):
    flat = np.concatenate([m.maps[a.name].reshape(-1) for a in m.algebra.quiver.arrows] or [np.zeros(0, dtype=np.int64)])
    return (m.dim, m.dims, tuple(int(x) for x in flat))


def decompose(m: Representation, seed: int = 0) -> list[Representation]:
    """The multiset of indecomposable summands, in a deterministic order."""
    parts = [s for s, _, _ in split_summands(m, seed)]
    return sorted(parts, key=_canonical_key)


# -- minimal morphisms --------------------------------------------------------


def _factors_through(target_map: Morphism, via: Morphism) -> bool:
    """Does target_map equal via . u for some morphism u?"""
    basis = hom_basis(target_map.source, via.source)
    p = target_map.source.algebra.p
    rhs = target_map.flat().reshape(-1, 1)
    if not basis:
        return linalg.is_zero(rhs)
    cols = np.stack([compose(via, u).flat() for u in basis], axis=1)
    return linalg.solve(cols, rhs, p) is not None


def _cofactors_through(source_map: Morphism, via: Morphism) -> bool:
    """Does source_map equal u . via for some morphism u?"""
    basis = hom_basis(via.target, source_map.target)
    p = source_map.source.algebra.p
    rhs = source_map.flat().reshape(-1, 1)
    if not basis:
        return linalg.is_zero(rhs)
    cols = np.stack([compose(u, via).flat() for u in basis], axis=1)
    return linalg.solve(cols, rhs, p) is not None


def minimal_version(f: Morphism, side: str, seed: int = 0) -> tuple[Morphism, Representation]:
    """Strip superfluous summands off the source (right) or target (left).

    Greedy deletion: a summand can go exactly when its component factors
    through the rest; the reduced morphism is unique up to isomorphism.
    """
    algebra = f.source.algebra
    if side == "right":
        kept = list(split_summands(f.source, seed))
        discarded: list[Representation] = []
        changed = True
        while changed and kept:
            changed = False
            for idx in range(len(kept)):
                part, inc, _ = kept[idx]
                rest = [kept[j] for j in range(len(kept)) if j != idx]
                component = compose(f, inc)
                if not rest:
                    deletable = component.is_zero
                else:
                    via = stack_into([compose(f, r[1]) for r in rest], f.target)
                    deletable = _factors_through(component, via)
                if deletable:
                    discarded.append(part)
                    kept.pop(idx)
                    changed = True
                    break
        reduced = stack_into([compose(f, inc) for _, inc, _ in kept], f.target)
        return reduced, direct_sum(discarded, algebra=algebra)
    if side == "left":
        kept = list(split_summands(f.target, seed))
        discarded = []
        changed = True
        while changed and kept:
            changed = False
            for idx in range(len(kept)):
                part, _, proj = kept[idx]
                rest = [kept[j] for j in range(len(kept)) if j != idx]
                component = compose(proj, f)
                if not rest:
                    deletable = component.is_zero
                else:
                    via = stack_out_of([compose(r[2], f) for r in rest], f.source)
                    deletable = _cofactors_through(component, via)
                if deletable:
                    discarded.append(part)
                    kept.pop(idx)
                    changed = True
                    break
        reduced = stack_out_of([compose(proj, f) for _, _, proj in kept], f.source)
        return reduced, direct_sum(discarded, algebra=algebra)
    raise ValueError(f"unknown side {side!r}")


def is_minimal(f: Morphism, side: str, seed: int = 0) -> bool:
    return minimal_version(f, side, seed)[1].is_zero


# -- projectivity / injectivity ----------------------------------------------


def is_projective(m: Representation) -> bool:
    if m.is_zero:
        return True
    cover, _ = projective_cover(m)
    return cover.source.dim == m.dim


def is_injective(m: Representation) -> bool:
    if m.is_zero:
        return True
    env, _ = injective_envelope(m)
    return env.target.dim == m.dim


# -- serialization -------------------------------------------------------------


def rep_to_json_dict(m: Representation) -> dict:
    q = m.algebra.quiver
    return {
        "dims": {str(v): int(m.dims[i]) for i, v in enumerate(q.vertices)},
        "maps": {a.name: m.maps[a.name].tolist() for a in q.arrows},
    }


def rep_from_json_dict(algebra: BoundAlgebra, data: dict) -> Representation:
    q = algebra.quiver
    dims = [int(data["dims"].get(str(v), 0)) for v in q.vertices]
    maps = {name: np.array(mat, dtype=np.int64).reshape(
        dims[q.vertex_index(q.arrow(name).target)], dims[q.vertex_index(q.arrow(name).source)])
        for name, mat in data.get("maps", {}).items()}
    return Representation(algebra, dims, maps)
