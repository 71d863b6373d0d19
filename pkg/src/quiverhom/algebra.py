"""Quivers, paths, monomial ideals and bound quiver algebras.

Words are written in function-composition order: in a path ``(a1, a2, a3)``
the arrow ``a3`` acts first, so composability means
``source(a_k) == target(a_(k+1))``.  The algebra is the path algebra modulo
the ideal generated by a set of forbidden words of length >= 2; normal forms
are plain contiguous-subword checks, so the surviving paths form a basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class AlgebraSpecError(ValueError):
    """Raised for malformed algebra descriptions (syntax or semantics)."""


class NonAdmissibleError(AlgebraSpecError):
    """Raised when the monomial ideal does not bound path lengths."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path in a quiver; ``arrows`` empty means the stationary path."""

    sort_index: tuple = field(init=False, repr=False)
    arrows: tuple[str, ...]
    source: int
    target: int

    def __post_init__(self):
        object.__setattr__(self, "sort_index", (len(self.arrows), self.arrows, self.source))

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_stationary(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if self.is_stationary:
            return f"e{self.source}"
        return "*".join(self.arrows)


class Quiver:
    """A finite quiver with ordered integer vertices and named arrows."""

    def __init__(self, vertices: list[int], arrows: list[tuple[str, int, int]]):
        self.vertices = tuple(int(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraSpecError(f"duplicate vertex ids in {self.vertices}")
        self.arrows = tuple(Arrow(str(n), int(s), int(t)) for n, s, t in arrows)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraSpecError(f"duplicate arrow names in {names}")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise AlgebraSpecError(f"arrow {a.name}: {a.source}->{a.target} uses unknown vertex")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._by_name = {a.name: a for a in self.arrows}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v: int) -> int:
        if v not in self._index:
            raise AlgebraSpecError(f"unknown vertex {v}")
        return self._index[v]

    def arrow(self, name: str) -> Arrow:
        if name not in self._by_name:
            raise AlgebraSpecError(f"unknown arrow {name!r}")
        return self._by_name[name]

    def path(self, arrow_names: list[str] | tuple[str, ...]) -> Path:
        """Build a path from arrow names, checking composability."""
        names = tuple(arrow_names)
        if not names:
            raise AlgebraSpecError("stationary paths need a vertex; use stationary()")
        arrs = [self.arrow(n) for n in names]
        for left, right in zip(arrs, arrs[1:]):
            if left.source != right.target:
                raise AlgebraSpecError(
                    f"word {names} is not composable: source({left.name})={left.source} "
                    f"!= target({right.name})={right.target}"
                )
        return Path(names, source=arrs[-1].source, target=arrs[0].target)

    def stationary(self, v: int) -> Path:
        self.vertex_index(v)
        return Path((), source=v, target=v)

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))


class MonomialIdeal:
    """A set of forbidden paths, each of length >= 2."""

    def __init__(self, forbidden: list[Path]):
        for f in forbidden:
            if f.length < 2:
                raise AlgebraSpecError(
                    f"ideal not admissible: relation {f} has length {f.length} < 2"
                )
        self.forbidden = tuple(sorted(set(forbidden)))
        self._words = frozenset(f.arrows for f in self.forbidden)

    @property
    def max_length(self) -> int:
        return max((f.length for f in self.forbidden), default=0)

    def kills(self, word: tuple[str, ...]) -> bool:
        """Is some forbidden word a contiguous subword of `word`?"""
        for f in self._words:
            k = len(f)
            if k > len(word):
                continue
            for i in range(len(word) - k + 1):
                if word[i : i + k] == f:
                    return True
        return False

    def kills_prefix(self, word: tuple[str, ...]) -> bool:
        """Subword check restricted to prefixes (for incremental extension)."""
        return any(word[: len(f)] == f for f in self._words)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.forbidden == other.forbidden

    def __hash__(self):
        return hash(self.forbidden)


class BoundAlgebra:
    """A path algebra modulo a monomial admissible ideal, over F_p."""

    def __init__(self, quiver: Quiver, ideal: MonomialIdeal, field_char: int = 101):
        if not _is_prime(field_char):
            raise AlgebraSpecError(f"field characteristic {field_char} is not prime")
        self.quiver = quiver
        self.ideal = ideal
        self.p = int(field_char)
        self._opposite: BoundAlgebra | None = None
        self._basis: tuple[Path, ...] | None = None
        # admissibility is checked eagerly so invalid algebras never escape
        self._basis = tuple(self._enumerate_basis())

    # -- basis ------------------------------------------------------------

    def _enumerate_basis(self) -> list[Path]:
        bound = len(self.quiver.arrows) * (1 + self.ideal.max_length)
        level = sorted(self.quiver.stationary(v) for v in self.quiver.vertices)
        basis: list[Path] = []
        while level:
            basis.extend(level)
            nxt = []
            for q in level:
                for a in self.quiver.arrows_from(q.target):
                    word = (a.name,) + q.arrows
                    if self.ideal.kills_prefix(word):
                        continue
                    nxt.append(Path(word, source=q.source, target=a.target))
            nxt.sort()
            if nxt and nxt[0].length > bound:
                raise NonAdmissibleError(
                    f"ideal not admissible: surviving path of length {nxt[0].length} "
                    f"exceeds the bound {bound}"
                )
            level = nxt
        return basis

    @property
    def basis(self) -> tuple[Path, ...]:
        return self._basis

    @property
    def dimension(self) -> int:
        return len(self._basis)

    def basis_from(self, v: int) -> list[Path]:
        """Surviving paths with source v (a basis of the projective at v)."""
        return [q for q in self._basis if q.source == v]

    def is_alive(self, word: tuple[str, ...]) -> bool:
        return not self.ideal.kills(word)

    def __eq__(self, other):
        return (
            isinstance(other, BoundAlgebra)
            and self.quiver == other.quiver
            and self.ideal == other.ideal
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.quiver, self.ideal, self.p))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- spec operations -------------------------------------------------------


def path_basis(algebra: BoundAlgebra) -> list[Path]:
    """All surviving paths, ordered by (length, word); a basis of the algebra."""
    return list(algebra.basis)


def opposite(algebra: BoundAlgebra) -> BoundAlgebra:
    """The opposite algebra: arrows reversed, forbidden words reversed.

    The result is cached both ways, so opposite(opposite(A)) is A itself.
    """
    if algebra._opposite is None:
        q = algebra.quiver
        oq = Quiver(list(q.vertices), [(a.name, a.target, a.source) for a in q.arrows])
        rels = [oq.path(tuple(reversed(f.arrows))) for f in algebra.ideal.forbidden]
        opp = BoundAlgebra(oq, MonomialIdeal(rels), algebra.p)
        opp._opposite = algebra
        algebra._opposite = opp
    return algebra._opposite


def is_nakayama(algebra: BoundAlgebra) -> bool:
    """True iff the quiver is one linear chain or one oriented cycle."""
    q = algebra.quiver
    if not q.vertices:
        return False
    for v in q.vertices:
        if len(q.arrows_from(v)) > 1 or len(q.arrows_into(v)) > 1:
            return False
    # degrees <= 1 everywhere: connected means a single chain or cycle
    seen = {q.vertices[0]}
    frontier = [q.vertices[0]]
    while frontier:
        v = frontier.pop()
        for a in q.arrows:
            for w in ((a.target,) if a.source == v else ()) + ((a.source,) if a.target == v else ()):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return len(seen) == len(q.vertices)


def cartan_matrix(algebra: BoundAlgebra) -> np.ndarray:
    """Entry (v, w) counts surviving paths w -> v; column w is dim P(w)."""
    n = algebra.quiver.num_vertices
    c = np.zeros((n, n), dtype=np.int64)
    for q in algebra.basis:
        c[algebra.quiver.vertex_index(q.target), algebra.quiver.vertex_index(q.source)] += 1
    return c


def parse_algebra(spec_text: str) -> BoundAlgebra:
    """Parse a TOML algebra description into a validated BoundAlgebra.

    Expected shape::

        [algebra]
        field = 101
        vertices = [1, 2, 3]

        [[arrow]]
        name = "a1"
        source = 2
        target = 1

        relations = [["a1", "a2"]]
    """
    try:
        import tomllib  # Python >= 3.11
    except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
        import tomli as tomllib

    try:
        data = tomllib.loads(spec_text)
    except tomllib.TOMLDecodeError as exc:
        raise AlgebraSpecError(f"syntax error in algebra spec: {exc}") from exc

    if "algebra" not in data or "vertices" not in data["algebra"]:
        raise AlgebraSpecError("algebra spec needs an [algebra] table with a vertices list")
    header = data["algebra"]
    vertices = header["vertices"]
    field_char = header.get("field", 101)
    if not isinstance(field_char, int):
        raise AlgebraSpecError(f"field must be an integer, got {field_char!r}")

    arrows = []
    for entry in data.get("arrow", []):
        if "relations" in entry:
            raise AlgebraSpecError(
                "relations must appear before the [[arrow]] tables "
                "(TOML attaches trailing keys to the last table)"
            )
        try:
            arrows.append((entry["name"], entry["source"], entry["target"]))
        except (KeyError, TypeError) as exc:
            raise AlgebraSpecError(f"arrow table needs name/source/target: {entry!r}") from exc
    quiver = Quiver(vertices, arrows)

    relations = data.get("relations", header.get("relations", []))
    forbidden = []
    for word in relations:
        if not isinstance(word, list) or not all(isinstance(x, str) for x in word):
            raise AlgebraSpecError(f"relation must be a list of arrow names, got {word!r}")
        if len(word) < 2:
            raise AlgebraSpecError(f"ideal not admissible: relation {word} has length < 2")
        forbidden.append(quiver.path(word))

    return BoundAlgebra(quiver, MonomialIdeal(forbidden), field_char)
