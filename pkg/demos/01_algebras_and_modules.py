"""Bound quiver algebras and their modules, from the ground up.

Builds three small algebras, inspects their path bases and Cartan matrices,
and plays with simples, projectives, injectives and duality.
"""

from quiverhom import (
    BoundAlgebra,
    MonomialIdeal,
    Quiver,
    cartan_matrix,
    duality,
    filtration_parts,
    hom_dim,
    is_isomorphic,
    is_nakayama,
    opposite,
    parse_algebra,
    path_basis,
    standard_module,
)

# ---------------------------------------------------------------------------
# A linear quiver 1 <- 2 <- 3 <- 4 with the full path a1*a2*a3 killed.
# Words are in function-composition order: a3 acts first, then a2, then a1.
# ---------------------------------------------------------------------------

quiver = Quiver([1, 2, 3, 4], [("a1", 2, 1), ("a2", 3, 2), ("a3", 4, 3)])
ideal = MonomialIdeal([quiver.path(["a1", "a2", "a3"])])
algebra = BoundAlgebra(quiver, ideal, field_char=101)

print("basis of the algebra (surviving paths):")
print(" ", [str(p) for p in path_basis(algebra)])
print("dimension:", algebra.dimension)
print("Nakayama:", is_nakayama(algebra))
print("Cartan matrix (column v = dimension vector of the projective at v):")
print(cartan_matrix(algebra))

# ---------------------------------------------------------------------------
# The same algebra can be read from TOML (that is what the CLI consumes).
# ---------------------------------------------------------------------------

toml_text = """
[algebra]
field = 101
vertices = [1, 2, 3, 4]
relations = [["a1", "a2", "a3"]]

[[arrow]]
name = "a1"
source = 2
target = 1

[[arrow]]
name = "a2"
source = 3
target = 2

[[arrow]]
name = "a3"
source = 4
target = 3
"""
assert parse_algebra(toml_text) == algebra

# ---------------------------------------------------------------------------
# Standard modules.  P(4) misses vertex 1 because the relation kills the
# full path; I(1) ends at vertex 3 for the same reason, and I(1) = P(3).
# ---------------------------------------------------------------------------

p4 = standard_module(algebra, "projective", 4)
i1 = standard_module(algebra, "injective", 1)
p3 = standard_module(algebra, "projective", 3)
print("\ndim P(4):", p4.dims)
print("dim I(1):", i1.dims)
print("P(3) isomorphic to I(1)?", is_isomorphic(p3, i1))

filt = filtration_parts(p4)
print("top of P(4):", filt.top.dims, " radical:", filt.radical.dims, " socle:", filt.socle.dims)

# ---------------------------------------------------------------------------
# Duality exchanges the algebra with its opposite and transposes everything.
# ---------------------------------------------------------------------------

dual = duality(p4)
print("\nduality(P(4)) lives over the opposite algebra:", dual.algebra == opposite(algebra))
print("its dimension vector is unchanged:", dual.dims)
print("Hom(P(2), I(3)) has dimension", hom_dim(
    standard_module(algebra, "projective", 2), standard_module(algebra, "injective", 3)
))
