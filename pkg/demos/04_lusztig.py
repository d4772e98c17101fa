"""
Nilpotent matrices as lattices
==============================

A nilpotent N goes to the lattice spanned by x^(n-1) + x^(n-2) N + ... + N^(n-1).
Conjugating N moves the lattice by the same matrix.
"""

import random

from dessins import ratmat
from dessins.grassmann import component_index, lattice_equal
from dessins.lusztig import (
    CyclicQuiverRep, big_matrix, check_equivariance, lambda_lattices, phi_nilpotent,
    rational_to_laurent,
)

n_mat = ratmat.jordan_nilpotent([3])
lat = phi_nilpotent(n_mat)
print(lat)
print("component index:", component_index(lat))

rng = random.Random(1)
g = ratmat.random_invertible(3, rng)
conj = ratmat.matmul(ratmat.matmul(g, n_mat), ratmat.inverse(g))
print("Phi(g N g^-1) == g Phi(N):",
      lattice_equal(phi_nilpotent(conj), lat.act(rational_to_laurent(g))))
print("20 random pairs:", all(check_equivariance(ratmat.random_invertible(3, rng),
                                                 ratmat.random_nilpotent(3, rng))
                              for _ in range(20)))

# a representation of the cyclic quiver with two vertices
rep = CyclicQuiverRep((1, 1), ([[1]], [[0]]))
print("\nbig matrix:")
print(big_matrix(rep))
for j, l in enumerate(lambda_lattices(rep), 1):
    print(f"Lambda_{j} (component {component_index(l)}):")
    print(l)
