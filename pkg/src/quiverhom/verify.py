"""The structural check suite and its report.

Each check is a machine-checkable statement about an algebra with (at most)
global dimension two: dichotomies between projective and injective dimension
one, injectivity of modules of projective dimension two, the shape of
minimal approximations of simple modules, and the behaviour of the dualized
Ext modules.  Checks refuse to run (status "skipped") when their hypotheses
fail, report "vacuous" when they quantify over an empty class, and attach a
re-checkable witness to every failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import BoundAlgebra, cartan_matrix, is_nakayama, opposite
from .approx import (
    SubcategorySet,
    is_maximal_orthogonal,
    minimal_approximation,
    trivial_candidate,
)
from .catalog import Universe, enumerate_indecomposables, r_lambda
from .homology import (
    default_cap,
    dim,
    ext_module,
    global_dimension,
    minimal_resolution,
)
from .rep import (
    Representation,
    decompose,
    direct_sum,
    filtration_parts,
    hom_basis,
    is_injective,
    is_isomorphic,
    is_projective,
    morphism_parts,
    standard_module,
    zero_representation,
)

CHECK_IDS = [
    "L2.1",
    "L2.10",
    "L2.11",
    "L3.1",
    "L3.2",
    "L3.3",
    "L3.4",
    "P3.5",
    "L3.6",
    "T3.7",
    "L2.13H",
]

CHECK_TITLES = {
    "L2.1": "summands of the last injective term of the regular module have maximal pd",
    "L2.10": "injectives are projective or of maximal pd; projectives dually",
    "L2.11": "dual top-Ext sends non-projectives bijectively to non-injectives",
    "L3.1": "minimal right approximations of stubborn simples are projective-to-injective",
    "L3.2": "simples of pd 2 have id <= 1",
    "L3.3": "top Ext modules of stubborn simples are projective resp. injective",
    "L3.4": "the dualized injective resolution of a stubborn simple stays minimal",
    "P3.5": "simples: pd 2 forces injective; pd 1 iff id 1",
    "L3.6": "no maps from non-projectives into projectives of id 2",
    "T3.7": "indecomposables: pd 1 iff id 1; pd 2 forces injective",
    "L2.13H": "injectives sit in the id<=1-reachable class; a projective-injective exists",
}


@dataclass
class StructureFlags:
    nakayama: bool
    gl_dim: int | None
    gorenstein_1: bool
    auslander_algebra: bool
    almost_hereditary: bool | None
    trivial_is_maximal_1_orthogonal: bool | None
    pd_i1: int | None
    cap: int

    def to_dict(self) -> dict:
        return {
            "nakayama": self.nakayama,
            "gl_dim": self.gl_dim if self.gl_dim is not None else f">= {self.cap}",
            "gorenstein_1": self.gorenstein_1,
            "auslander_algebra": self.auslander_algebra,
            "almost_hereditary": self.almost_hereditary,
            "trivial_is_maximal_1_orthogonal": self.trivial_is_maximal_1_orthogonal,
            "pd_i1": self.pd_i1 if self.pd_i1 is not None else f">= {self.cap}",
        }


@dataclass
class CheckResult:
    check_id: str
    status: str  # pass | fail | vacuous | skipped
    details: dict


@dataclass
class CheckReport:
    algebra: dict
    checks: list[CheckResult]
    overall: str

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "checks": [
                {"id": c.check_id, "status": c.status, "details": c.details}
                for c in self.checks
            ],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


class _Context:
    """Shared lazily-computed data for one verification run."""

    def __init__(self, algebra: BoundAlgebra, cap: int | None, seed: int):
        self.algebra = algebra
        self.cap = cap if cap is not None else default_cap(algebra)
        self.seed = seed
        self._cache: dict = {}

    def _get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def gl(self) -> int | None:
        return self._get("gl", lambda: global_dimension(self.algebra, self.cap))

    @property
    def universe(self) -> Universe:
        return self._get("universe", lambda: enumerate_indecomposables(self.algebra))

    @property
    def candidate(self) -> SubcategorySet:
        return self._get("candidate", lambda: trivial_candidate(self.algebra, self.seed))

    def maximality(self, n: int) -> tuple[bool, dict | None] | None:
        """None when the universe is incomplete."""
        def build():
            if not self.universe.complete:
                return None
            return is_maximal_orthogonal(self.candidate, n, self.universe, self.cap, self.seed)

        return self._get(("maximal", n), build)

    @property
    def regular(self) -> Representation:
        return self._get(
            "regular",
            lambda: direct_sum(
                [standard_module(self.algebra, "projective", v) for v in self.algebra.quiver.vertices],
                algebra=self.algebra,
            ),
        )

    @property
    def regular_injective_resolution(self):
        return self._get(
            "reg_inj_res", lambda: minimal_resolution(self.regular, "injective", self.cap)
        )

    def simples(self) -> list[tuple[int, Representation]]:
        return self._get(
            "simples",
            lambda: [
                (v, standard_module(self.algebra, "simple", v))
                for v in self.algebra.quiver.vertices
            ],
        )

    def pd(self, m: Representation) -> int | None:
        return dim(m, "projective", self.cap)

    def idim(self, m: Representation) -> int | None:
        return dim(m, "injective", self.cap)

    def universe_pd(self, i: int) -> int | None:
        return self._get(("pd", i), lambda: self.pd(self.universe.objects[i]))

    def universe_id(self, i: int) -> int | None:
        return self._get(("id", i), lambda: self.idim(self.universe.objects[i]))

    def universe_is_projective(self, i: int) -> bool:
        return self._get(("proj", i), lambda: is_projective(self.universe.objects[i]))

    def universe_is_injective(self, i: int) -> bool:
        return self._get(("inj", i), lambda: is_injective(self.universe.objects[i]))

    def name_of(self, m: Representation) -> str:
        for i, x in enumerate(self.universe.objects):
            if x.dims == m.dims and is_isomorphic(x, m, self.seed):
                return self.universe.names[i]
        return f"dims{m.dims}"

    def standing_gate(self) -> dict | None:
        """The blanket hypotheses for the dimension-two checks, or a skip reason."""
        if self.gl is None or self.gl != 2:
            shown = self.gl if self.gl is not None else f">= {self.cap}"
            return {"skipped_because": f"global dimension is {shown}, not 2"}
        if not self.universe.complete:
            return {"skipped_because": "universe incomplete (algebra is not Nakayama)"}
        ok, _ = self.maximality(1)
        if not ok:
            return {"skipped_because": "trivial candidate is not maximal 1-orthogonal"}
        return None

    def gorenstein_gate(self) -> dict | None:
        if not structure_flags(self.algebra, self.cap, self.seed, _ctx=self).gorenstein_1:
            return {"skipped_because": "the injective envelope of the regular module is not projective"}
        return None


def structure_flags(
    algebra: BoundAlgebra, cap: int | None = None, seed: int = 0, _ctx: _Context | None = None
) -> StructureFlags:
    """Named structural booleans: Nakayama, gl.dim, 1-Gorenstein, and friends."""
    ctx = _ctx if _ctx is not None else _Context(algebra, cap, seed)
    if "flags" in ctx._cache:
        return ctx._cache["flags"]
    gl = ctx.gl
    res = ctx.regular_injective_resolution
    i0 = res.terms[0]
    gorenstein = is_projective(i0)
    i1 = res.terms[1] if res.length >= 1 else zero_representation(algebra)
    pd_i1 = dim(i1, "projective", ctx.cap)
    auslander = gl is not None and gl <= 2 and gorenstein and is_projective(i1)
    if gl is not None and gl > 2:
        almost = False
    elif not ctx.universe.complete:
        almost = None
    else:
        almost = gl is not None and all(
            (ctx.universe_pd(i) is not None and ctx.universe_pd(i) <= 1)
            or (ctx.universe_id(i) is not None and ctx.universe_id(i) <= 1)
            for i in range(len(ctx.universe))
        )
    maximal = ctx.maximality(1)
    flags = StructureFlags(
        nakayama=is_nakayama(algebra),
        gl_dim=gl,
        gorenstein_1=gorenstein,
        auslander_algebra=auslander,
        almost_hereditary=almost,
        trivial_is_maximal_1_orthogonal=None if maximal is None else maximal[0],
        pd_i1=pd_i1,
        cap=ctx.cap,
    )
    ctx._cache["flags"] = flags
    return flags


# -- individual checks ---------------------------------------------------------


def _check_l21(ctx: _Context):
    id_left = ctx.idim(ctx.regular)
    reg_op = direct_sum(
        [standard_module(opposite(ctx.algebra), "projective", v) for v in ctx.algebra.quiver.vertices],
        algebra=opposite(ctx.algebra),
    )
    id_right = dim(reg_op, "injective", ctx.cap)
    if id_left is None or id_right is None:
        return "skipped", {"skipped_because": "injective dimension of the regular module hits the cap"}
    if id_left != id_right:
        return "skipped", {
            "skipped_because": f"two-sided injective dimensions differ ({id_left} vs {id_right})"
        }
    n = id_left
    last = ctx.regular_injective_resolution.terms[n]
    summands = decompose(last, ctx.seed)
    table = []
    for e in summands:
        pd_e = ctx.pd(e)
        table.append({"module": ctx.name_of(e), "pd": pd_e})
        if pd_e != n:
            return "fail", {"n": n, "witness": {"module": ctx.name_of(e), "pd": pd_e}, "summands": table}
    return "pass", {"n": n, "summands": table}


def _check_l210(ctx: _Context):
    n = ctx.gl
    if n is None or n < 2:
        shown = n if n is not None else f">= {ctx.cap}"
        return "skipped", {"skipped_because": f"global dimension is {shown}, not >= 2 and finite"}
    if not ctx.universe.complete:
        return "skipped", {"skipped_because": "universe incomplete (algebra is not Nakayama)"}
    ok, _ = ctx.maximality(n - 1)
    if not ok:
        return "skipped", {
            "skipped_because": f"trivial candidate is not maximal {n - 1}-orthogonal"
        }
    table = []
    for v in ctx.algebra.quiver.vertices:
        inj = standard_module(ctx.algebra, "injective", v)
        pd_i = ctx.pd(inj)
        row = {"module": f"I{v}", "projective": is_projective(inj), "pd": pd_i}
        table.append(row)
        if not row["projective"] and pd_i != n:
            return "fail", {"n": n, "witness": row, "table": table}
        proj = standard_module(ctx.algebra, "projective", v)
        id_p = ctx.idim(proj)
        row = {"module": f"P{v}", "injective": is_injective(proj), "id": id_p}
        table.append(row)
        if not row["injective"] and id_p != n:
            return "fail", {"n": n, "witness": row, "table": table}
    return "pass", {"n": n, "table": table}


def _check_l211(ctx: _Context):
    gate = ctx.standing_gate()
    if gate:
        return "skipped", gate
    from .rep import duality  # local import keeps module top uncluttered

    cand = ctx.candidate
    nonproj = [m for m in cand.objects if not is_projective(m)]
    noninj = [m for m in cand.objects if not is_injective(m)]
    pairs = []
    images = []
    for m in nonproj:
        image = duality(ext_module(m, 2, ctx.cap))
        hits = [k for k, x in enumerate(noninj) if is_isomorphic(image, x, ctx.seed)]
        if len(hits) != 1:
            return "fail", {
                "witness": {"module": ctx.name_of(m), "image_dims": list(image.dims)},
                "reason": "image is not a unique non-injective object of the subcategory",
            }
        back = ext_module(duality(noninj[hits[0]]), 2, ctx.cap)
        if not is_isomorphic(back, m, ctx.seed):
            return "fail", {
                "witness": {"module": ctx.name_of(m)},
                "reason": "round trip through the dual top-Ext is not the identity",
            }
        images.append(hits[0])
        pairs.append({"from": ctx.name_of(m), "to": ctx.name_of(noninj[hits[0]])})
    bijective = len(set(images)) == len(nonproj) == len(noninj)
    details = {
        "non_projective_count": len(nonproj),
        "non_injective_count": len(noninj),
        "pairs": pairs,
    }
    if not bijective:
        return "fail", {**details, "reason": "correspondence is not a bijection"}
    return "pass", details


def _stubborn_simples(ctx: _Context, want_id_one: bool):
    out = []
    for v, s in ctx.simples():
        if ctx.pd(s) != 2:
            continue
        if want_id_one:
            if not is_injective(s) and ctx.idim(s) == 1:
                out.append((v, s))
        else:
            if not is_injective(s):
                out.append((v, s))
    return out


def _check_l31(ctx: _Context):
    gate = ctx.standing_gate()
    if gate:
        return "skipped", gate
    targets = _stubborn_simples(ctx, want_id_one=False)
    if not targets:
        return "vacuous", {"reason": "no non-injective simple of projective dimension 2"}
    table = []
    for v, s in targets:
        f = minimal_approximation(ctx.candidate, s, "right", ctx.seed)
        parts = morphism_parts(f)
        epi = parts.image.dim == s.dim
        kernel = parts.kernel
        entry = {"simple": f"S{v}", "middle_dims": list(f.source.dims), "kernel_dims": list(kernel.dims)}
        if not epi:
            return "fail", {"witness": {**entry, "reason": "approximation is not surjective"}}
        if not is_projective(kernel):
            return "fail", {"witness": {**entry, "reason": "kernel is not projective"}}
        for q in decompose(kernel, ctx.seed):
            if ctx.idim(q) != 2:
                return "fail", {
                    "witness": {**entry, "summand": ctx.name_of(q), "id": ctx.idim(q),
                                "reason": "kernel summand does not have id 2"}
                }
        middle = f.source
        if not is_injective(middle):
            return "fail", {"witness": {**entry, "reason": "middle term is not injective"}}
        for e in decompose(middle, ctx.seed):
            top = filtration_parts(e).top
            if ctx.pd(e) != 2 or top.dim != 1:
                return "fail", {
                    "witness": {**entry, "summand": ctx.name_of(e), "pd": ctx.pd(e),
                                "top_dim": top.dim,
                                "reason": "middle summand must have pd 2 and simple top"}
                }
        table.append(entry)
    return "pass", {"approximations": table}


def _check_l32(ctx: _Context):
    gate = ctx.standing_gate()
    if gate:
        return "skipped", gate
    rows = [(v, s) for v, s in ctx.simples() if ctx.pd(s) == 2]
    if not rows:
        return "vacuous", {"reason": "no simple of projective dimension 2"}
    table = []
    for v, s in rows:
        idv = ctx.idim(s)
        table.append({"simple": f"S{v}", "id": idv})
        if idv is None or idv > 1:
            return "fail", {"witness": {"simple": f"S{v}", "id": idv}, "table": table}
    return "pass", {"table": table}


def _check_l33(ctx: _Context):
    gate = ctx.standing_gate()
    if gate:
        return "skipped", gate
    rows = _stubborn_simples(ctx, want_id_one=True)
    if not rows:
        return "vacuous", {"reason": "no simple with pd 2 and id 1"}
    table = []
    for v, s in rows:
        e1 = ext_module(s, 1, ctx.cap)
        e2 = ext_module(s, 2, ctx.cap)
        entry = {
            "simple": f"S{v}",
            "ext1_projective": is_projective(e1),
            "ext2_injective": is_injective(e2),
            "ext2_pd": dim(e2, "projective", ctx.cap),
        }
        table.append(entry)
        if not entry["ext1_projective"] or not entry["ext2_injective"] or entry["ext2_pd"] != 2:
            return "fail", {"witness": entry, "table": table}
    return "pass", {"table": table}


def _check_l34(ctx: _Context):
    gate = ctx.standing_gate()
    if gate:
        return "skipped", gate
    rows = _stubborn_simples(ctx, want_id_one=True)
    if not rows:
        return "vacuous", {"reason": "no simple with pd 2 and id 1"}
    table = []
    for v, s in rows:
        inj_res = minimal_resolution(s, "injective", ctx.cap)
        e1 = ext_module(s, 1, ctx.cap)
        expected = [
            ext_module(inj_res.terms[1], 2, ctx.cap),
            ext_module(inj_res.terms[0], 2, ctx.cap),
            ext_module(s, 2, ctx.cap),
        ]
        actual = minimal_resolution(e1, "injective", ctx.cap)
        entry = {"simple": f"S{v}", "resolution_length": actual.length}
        table.append(entry)
        if actual.truncated or actual.length != 2:
            return "fail", {"witness": {**entry, "reason": "dual resolution does not have length 2"}}
        for k, (term, want) in enumerate(zip(actual.terms, expected)):
            if not is_isomorphic(term, want, ctx.seed):
                return "fail", {
                    "witness": {**entry, "position": k, "term_dims": list(term.dims),
                                "expected_dims": list(want.dims),
                                "reason": "resolution term differs from the dualized one"}
                }
    return "pass", {"table": table}


def _check_p35(ctx: _Context):
    gate = ctx.standing_gate() or ctx.gorenstein_gate()
    if gate:
        return "skipped", gate
    table = []
    for v, s in ctx.simples():
        pd_s, id_s = ctx.pd(s), ctx.idim(s)
        inj = is_injective(s)
        table.append({"simple": f"S{v}", "pd": pd_s, "id": id_s, "injective": inj})
        if pd_s == 2 and not inj:
            return "fail", {"witness": {"simple": f"S{v}", "reason": "pd 2 but not injective"},
                            "table": table}
        if (pd_s == 1) != (id_s == 1):
            return "fail", {"witness": {"simple": f"S{v}", "pd": pd_s, "id": id_s,
                                        "reason": "pd 1 and id 1 do not match"},
                            "table": table}
    return "pass", {"table": table}


def _check_l36(ctx: _Context):
    gate = ctx.standing_gate() or ctx.gorenstein_gate()
    if gate:
        return "skipped", gate
    heavy_projectives = []
    for v in ctx.algebra.quiver.vertices:
        proj = standard_module(ctx.algebra, "projective", v)
        if ctx.idim(proj) == 2:
            heavy_projectives.append((v, proj))
    nonproj = [i for i in range(len(ctx.universe)) if not ctx.universe_is_projective(i)]
    if not heavy_projectives or not nonproj:
        return "vacuous", {"reason": "no projective of id 2, or no non-projective indecomposable"}
    checked = 0
    for i in nonproj:
        m = ctx.universe.objects[i]
        for v, proj in heavy_projectives:
            h = len(hom_basis(m, proj))
            checked += 1
            if h:
                return "fail", {
                    "witness": {"module": ctx.universe.names[i], "projective": f"P{v}", "hom_dim": h}
                }
    return "pass", {"pairs_checked": checked,
                    "projectives_of_id_2": [f"P{v}" for v, _ in heavy_projectives]}


def _check_t37(ctx: _Context):
    gate = ctx.standing_gate() or ctx.gorenstein_gate()
    if gate:
        return "skipped", gate
    table = []
    pd_one, id_one = set(), set()
    for i, name in enumerate(ctx.universe.names):
        pd_i, id_i = ctx.universe_pd(i), ctx.universe_id(i)
        inj = ctx.universe_is_injective(i)
        table.append({"module": name, "pd": pd_i, "id": id_i, "injective": inj})
        if pd_i == 1:
            pd_one.add(name)
        if id_i == 1:
            id_one.add(name)
        if pd_i == 2 and not inj:
            return "fail", {"witness": {"module": name, "reason": "pd 2 but not injective"},
                            "table": table}
    if pd_one != id_one:
        return "fail", {
            "witness": {"pd_one": sorted(pd_one), "id_one": sorted(id_one),
                        "reason": "pd-1 and id-1 classes differ"},
            "table": table,
        }
    return "pass", {"table": table, "pd_one": sorted(pd_one), "id_one": sorted(id_one)}


def _check_l213h(ctx: _Context):
    flags = structure_flags(ctx.algebra, ctx.cap, ctx.seed, _ctx=ctx)
    if not flags.gorenstein_1:
        return "skipped", {"skipped_because": "the injective envelope of the regular module is not projective"}
    if flags.almost_hereditary is None:
        return "skipped", {"skipped_because": "universe incomplete (algebra is not Nakayama)"}
    if not flags.almost_hereditary:
        return "skipped", {"skipped_because": "algebra is not almost hereditary"}
    rl = r_lambda(ctx.universe, ctx.cap)
    rl_ids = {id(m) for m in rl.objects}
    injectives = [i for i in range(len(ctx.universe)) if ctx.universe_is_injective(i)]
    missing = [ctx.universe.names[i] for i in injectives
               if id(ctx.universe.objects[i]) not in rl_ids]
    if missing:
        return "fail", {"witness": {"injectives_outside": missing}}
    proj_inj = [
        ctx.universe.names[i]
        for i in range(len(ctx.universe))
        if ctx.universe_is_projective(i) and ctx.universe_is_injective(i)
    ]
    if not proj_inj:
        return "fail", {"witness": {"reason": "no indecomposable projective-injective module"}}
    return "pass", {"projective_injectives": proj_inj,
                    "reachable_class_size": len(rl.objects)}


_CHECKS = {
    "L2.1": _check_l21,
    "L2.10": _check_l210,
    "L2.11": _check_l211,
    "L3.1": _check_l31,
    "L3.2": _check_l32,
    "L3.3": _check_l33,
    "L3.4": _check_l34,
    "P3.5": _check_p35,
    "L3.6": _check_l36,
    "T3.7": _check_t37,
    "L2.13H": _check_l213h,
}


def run_check(
    algebra: BoundAlgebra,
    check_id: str,
    cap: int | None = None,
    seed: int = 0,
    _ctx: _Context | None = None,
) -> tuple[str, dict]:
    """Run one named check; returns (status, details)."""
    if check_id not in _CHECKS:
        raise ValueError(f"unknown check id {check_id!r}; known: {CHECK_IDS}")
    ctx = _ctx if _ctx is not None else _Context(algebra, cap, seed)
    return _CHECKS[check_id](ctx)


def run_all_checks(
    algebra: BoundAlgebra,
    cap: int | None = None,
    seed: int = 0,
    source_name: str | None = None,
) -> CheckReport:
    """Structure flags plus every check, aggregated into a CheckReport."""
    ctx = _Context(algebra, cap, seed)
    flags = structure_flags(algebra, cap, seed, _ctx=ctx)
    maximality = ctx.maximality(1)
    algebra_summary = {
        "source": source_name or "<memory>",
        "field": algebra.p,
        "vertices": list(algebra.quiver.vertices),
        "arrows": [[a.name, a.source, a.target] for a in algebra.quiver.arrows],
        "dimension": algebra.dimension,
        "cartan": cartan_matrix(algebra).tolist(),
        "indecomposables": len(ctx.universe) if ctx.universe.complete else None,
        "flags": flags.to_dict(),
    }
    if maximality is not None and not maximality[0] and maximality[1] is not None:
        algebra_summary["maximality_witness"] = maximality[1]
    checks = []
    failed = False
    for check_id in CHECK_IDS:
        status, details = run_check(algebra, check_id, cap, seed, _ctx=ctx)
        details = {"title": CHECK_TITLES[check_id], **details}
        checks.append(CheckResult(check_id, status, details))
        failed = failed or status == "fail"
    return CheckReport(algebra_summary, checks, "fail" if failed else "pass")
