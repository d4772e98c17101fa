"""
Affine permutations
===================

Windows, the finite part and translation, generators, and the monomial
matrices that move standard lattices around.
"""

import random

from dessins.affine import (
    AffinePermutation, compose, generator, inverse, random_word, split, to_matrix,
)
from dessins.grassmann import component_index, standard_lattice

s = AffinePermutation(4, (7, 2, 1, 0))
print("window", s, "values on -3..8:", [s(i) for i in range(-3, 9)])
print(split(s))

# the extra generator for n = 4
s4 = generator(4, 4)
print("s_4 =", s4, " s_4 s_4 =", compose(s4, s4))
print("s_1 s_2 s_1 == s_2 s_1 s_2:",
      compose(compose(generator(1, 4), generator(2, 4)), generator(1, 4))
      == compose(compose(generator(2, 4), generator(1, 4)), generator(2, 4)))

u = AffinePermutation(2, (0, 3))
print("\nmatrix of", u)
print(to_matrix(u))
print("u^-1 =", inverse(u))

w = random_word(3, 12, random.Random(2))
print("\nrandom word", w, "moves E(0) to a lattice of component",
      component_index(standard_lattice(3).act(to_matrix(w))))
