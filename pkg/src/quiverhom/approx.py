"""Subcategory approximations and maximal orthogonality tests.

A finite set of pairwise non-isomorphic indecomposables stands for the
additive closure of their direct sum.  Left/right approximations are checked
by surjectivity of the induced Hom maps; minimal approximations reduce the
universal map; the orthogonality test compares the subcategory against both
Ext-vanishing complements over a complete list of indecomposables.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import BoundAlgebra
from .homology import ext_dim, minimal_resolution
from .rep import (
    Morphism,
    Representation,
    compose,
    decompose,
    hom_basis,
    is_isomorphic,
    minimal_version,
    split_summands,
    stack_into,
    stack_out_of,
    standard_module,
)


class IncompleteUniverseError(ValueError):
    """Raised when an operation needs a complete list of indecomposables."""


class SubcategorySet:
    """add(C) for a finite set of pairwise non-isomorphic indecomposables."""

    def __init__(self, algebra: BoundAlgebra, objects, validate: bool = True, seed: int = 0):
        self.algebra = algebra
        self.objects = tuple(objects)
        for m in self.objects:
            if m.algebra is not algebra and m.algebra != algebra:
                raise ValueError("subcategory object over a different algebra")
        if validate:
            for i, m in enumerate(self.objects):
                if len(split_summands(m, seed)) != 1:
                    raise ValueError(f"object {i} (dims {m.dims}) is not indecomposable")
                for other in self.objects[:i]:
                    if is_isomorphic(m, other, seed):
                        raise ValueError(f"objects are not pairwise non-isomorphic (dims {m.dims})")

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def contains_iso(self, m: Representation, seed: int = 0) -> bool:
        return any(is_isomorphic(m, c, seed) for c in self.objects)


def trivial_candidate(algebra: BoundAlgebra, seed: int = 0) -> SubcategorySet:
    """add of the regular module plus the dual of the opposite regular module:
    all indecomposable projectives and injectives, deduplicated up to iso."""
    objects = [standard_module(algebra, "projective", v) for v in algebra.quiver.vertices]
    for v in algebra.quiver.vertices:
        inj = standard_module(algebra, "injective", v)
        if not any(is_isomorphic(inj, m, seed) for m in objects):
            objects.append(inj)
    return SubcategorySet(algebra, objects, validate=False)


def in_add(m: Representation, c: SubcategorySet, seed: int = 0) -> bool:
    """Is m isomorphic to a direct sum of objects of c?"""
    if m.is_zero:
        return True
    return all(c.contains_iso(s, seed) for s in decompose(m, seed))


def is_approximation(f: Morphism, c: SubcategorySet, side: str, seed: int = 0) -> bool:
    """Left: every map source -> C' factors through f; right: dual."""
    p = c.algebra.p
    if side == "left":
        if not in_add(f.target, c, seed):
            raise ValueError("target of a left approximation must lie in add C")
        for cprime in c.objects:
            induced = [compose(h, f).flat() for h in hom_basis(f.target, cprime)]
            needed = len(hom_basis(f.source, cprime))
            got = linalg.rank(np.stack(induced, axis=1), p) if induced else 0
            if got < needed:
                return False
        return True
    if side == "right":
        if not in_add(f.source, c, seed):
            raise ValueError("source of a right approximation must lie in add C")
        for cprime in c.objects:
            induced = [compose(f, h).flat() for h in hom_basis(cprime, f.source)]
            needed = len(hom_basis(cprime, f.target))
            got = linalg.rank(np.stack(induced, axis=1), p) if induced else 0
            if got < needed:
                return False
        return True
    raise ValueError(f"unknown side {side!r}")


def minimal_approximation(
    c: SubcategorySet, m: Representation, side: str, seed: int = 0
) -> Morphism:
    """The minimal left/right approximation of m by add C.

    The universal map sums one copy of C' per basis element of the relevant
    Hom space, which is an approximation by construction; stripping it to its
    minimal version keeps that property and is unique up to isomorphism.
    """
    if side == "right":
        components = [h for cp in c.objects for h in hom_basis(cp, m)]
        universal = stack_into(components, m)
        return minimal_version(universal, "right", seed)[0]
    if side == "left":
        components = [h for cp in c.objects for h in hom_basis(m, cp)]
        universal = stack_out_of(components, m)
        return minimal_version(universal, "left", seed)[0]
    raise ValueError(f"unknown side {side!r}")


def _universe_objects(universe):
    if hasattr(universe, "objects"):
        if not getattr(universe, "complete", True):
            raise IncompleteUniverseError("the supplied universe is not complete")
        return list(universe.objects)
    return list(universe)


def perp(
    c: SubcategorySet,
    n: int,
    side: str,
    universe,
    cap: int | None = None,
) -> SubcategorySet:
    """Members X of the universe with Ext^i vanishing against C in degrees 1..n.

    side="left" tests Ext^i(X, C') = 0; side="right" tests Ext^i(C', X) = 0.
    """
    if n < 1:
        raise ValueError("orthogonality degree must be >= 1")
    objects = _universe_objects(universe)
    members = []
    if side == "left":
        for x in objects:
            res = minimal_resolution(x, "projective", cap)
            if all(
                ext_dim(x, cp, i, resolution=res) == 0
                for cp in c.objects
                for i in range(1, n + 1)
            ):
                members.append(x)
    elif side == "right":
        resolutions = [minimal_resolution(cp, "projective", cap) for cp in c.objects]
        for x in objects:
            if all(
                ext_dim(cp, x, i, resolution=res) == 0
                for cp, res in zip(c.objects, resolutions)
                for i in range(1, n + 1)
            ):
                members.append(x)
    else:
        raise ValueError(f"unknown side {side!r}")
    return SubcategorySet(c.algebra, members, validate=False)


def is_maximal_orthogonal(
    c: SubcategorySet,
    n: int,
    universe,
    cap: int | None = None,
    seed: int = 0,
) -> tuple[bool, dict | None]:
    """Does C equal both of its degree-n orthogonal complements?

    On failure a witness is returned: which module violates which inclusion,
    with the degree and Ext dimension, so the verdict can be re-checked.
    """
    objects = _universe_objects(universe)
    names = list(getattr(universe, "names", None) or [f"dims{m.dims}" for m in objects])

    def find_index(m: Representation) -> int:
        for i, x in enumerate(objects):
            if m.dims == x.dims and is_isomorphic(m, x, seed):
                return i
        raise IncompleteUniverseError(f"subcategory object with dims {m.dims} not in the universe")

    c_indices = {find_index(m) for m in c.objects}
    left_indices = {find_index(m) for m in perp(c, n, "left", objects, cap)}
    right_indices = {find_index(m) for m in perp(c, n, "right", objects, cap)}
    if left_indices == c_indices and right_indices == c_indices:
        return True, None

    def nonvanishing(x: Representation, left: bool):
        res = minimal_resolution(x, "projective", cap) if left else None
        for cp_idx, cp in enumerate(c.objects):
            cp_res = None if left else minimal_resolution(cp, "projective", cap)
            for i in range(1, n + 1):
                d = (
                    ext_dim(x, cp, i, resolution=res)
                    if left
                    else ext_dim(cp, x, i, resolution=cp_res)
                )
                if d:
                    return cp_idx, i, d
        return None

    # a C-object failing self-orthogonality beats a mere perp-membership gap
    for idx in sorted(c_indices - left_indices):
        cp_idx, degree, d = nonvanishing(objects[idx], left=True)
        return False, {
            "kind": "not_orthogonal",
            "direction": "left",
            "module": names[idx],
            "against": names[find_index(c.objects[cp_idx])],
            "degree": degree,
            "ext_dim": d,
            "description": f"Ext^{degree}({names[idx]}, ...) != 0 against a subcategory object",
        }
    for idx in sorted(c_indices - right_indices):
        cp_idx, degree, d = nonvanishing(objects[idx], left=False)
        return False, {
            "kind": "not_orthogonal",
            "direction": "right",
            "module": names[idx],
            "against": names[find_index(c.objects[cp_idx])],
            "degree": degree,
            "ext_dim": d,
            "description": f"Ext^{degree}(..., {names[idx]}) != 0 against a subcategory object",
        }
    for direction, indices in (("right", right_indices), ("left", left_indices)):
        extras = sorted(indices - c_indices)
        if extras:
            idx = extras[0]
            perp_name = "C-perp" if direction == "right" else "perp-C"
            return False, {
                "kind": "perp_exceeds",
                "direction": direction,
                "module": names[idx],
                "degree": n,
                "description": f"{names[idx]} lies in {perp_name}^{n} but not in the subcategory",
            }
    raise AssertionError("unreachable: sets differ but no witness found")
