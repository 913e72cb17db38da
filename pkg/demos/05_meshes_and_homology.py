"""From exact meshes to Betti numbers.

The glued slice of the covector space meshes into a simplicial ball;
its boundary matches the full space one rank down; and the full space
itself meshes into a sphere.  Homology is computed by exact rank
reduction over the rationals and over the two-element field, and a
Mayer-Vietoris assembly cross-checks the glued answer.
"""

from phasetop.homology import (
    betti,
    euler_characteristic,
    mayer_vietoris_assemble,
    vertex_inclusion_map,
)
from phasetop.mesh import (
    assemble_full,
    assemble_slice,
    boundary_subcomplex,
    complex_isomorphic,
    drop_last_coordinate,
    full_space_pieces,
)

S = assemble_slice(3, 2)
print("slice n=3 m=2:", S.f_vector(), "->", betti(S),
      "chi =", euler_characteristic(S))

B = boundary_subcomplex(S)
circle = assemble_full(2, 2)
ok, _ = complex_isomorphic(B, circle, drop_last_coordinate)
print("boundary is the rank-2 circle:", ok)

K = assemble_full(3, 2)
print("full n=3 m=2:", len(K.tops), "tops,",
      "closed pseudomanifold:", K.is_closed_pseudomanifold())
print("   over Q :", betti(K, "q"))
print("   over F2:", betti(K, "f2"))

# the same answer through the two-region decomposition
P = full_space_pieces(3, 2)
ma = vertex_inclusion_map(P.interface, P.rotation)
mb = vertex_inclusion_map(P.interface, P.base)
mv = mayer_vietoris_assemble(P.rotation, P.base, P.interface, ma, mb)
print("Mayer-Vietoris on the two regions:", mv)
print("   interface is a torus:", betti(P.interface).betti == (1, 2, 1))

# refining the mesh does not change the topology
for m in (2, 4):
    Sm = assemble_slice(3, m)
    print(f"slice at m={m}:", Sm.f_vector(), betti(Sm).betti)
