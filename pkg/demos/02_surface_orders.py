"""
Surface orders
==============

Each vertex of the dessin contributes a hereditary order; the edges glue
diagonal entries along the residue field.
"""

from dessins.laurent import Laurent, LaurentMatrix, X
from dessins.order import build_surface_order, hereditary_order, membership, shift_matrix
from dessins.permgroup import Constellation

print(hereditary_order(3))
print()

# x on the top right, ones below the diagonal; its cube is x times the identity
s = shift_matrix(3)
print(s)
print("s^3 == x I:", s ** 3 == LaurentMatrix.identity(3).scale(X))

segment = Constellation.from_cycles(2, [], [[1, 2]])
so = build_surface_order(segment)
print()
print(so.report())

# pairs (f, g) of power series with f(0) = g(0): the ring Q[[x, y]]/(xy)
f = Laurent.from_dict({0: 1, 1: 4})
g = Laurent.from_dict({0: 1, 3: -2})
print("(1+4x, 1-2x^3) in the order:", membership(so, [LaurentMatrix([[f]]), LaurentMatrix([[g]])]))
print("(1, 0) in the order:", membership(so, [LaurentMatrix([[1]]), LaurentMatrix([[0]])]))

torus = Constellation.from_cycles(4, [[1, 2, 3, 4]], [[1, 3], [2, 4]])
print()
print(build_surface_order(torus).report())
