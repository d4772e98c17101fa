"""
From a constellation to its surface algebra
===========================================

A torus with one vertex and two edges, then the segment that gives the
Gel'fand-Ponomarev algebra, then a random dessin.
"""

import random

from dessins.permgroup import Constellation, monodromy_order, random_constellation, surface_data
from dessins.quiver import (
    PathVector, check_surface_axioms, medial_quiver, nonzero_cycle_lengths, path_multiply,
    relation_words, to_dot,
)

torus = Constellation.from_cycles(4, [[1, 2, 3, 4]], [[1, 3], [2, 4]])
sd = surface_data(torus)
print(f"torus: V={sd.vertices} E={sd.edges} F={sd.faces} genus={sd.genus}")
print("phi =", torus.phi.cycles())
print("monodromy group order:", monodromy_order(torus))

q, ideal = medial_quiver(torus)
print("axioms hold:", check_surface_axioms(q, ideal).all)
print("nonzero cycles by sigma-cycle:", nonzero_cycle_lengths(q, ideal))

# one edge with a univalent vertex at each end: sigma is the identity
segment = Constellation.from_cycles(2, [], [[1, 2]])
q, ideal = medial_quiver(segment)
print("\nsegment relations (second arrow first):", sorted(relation_words(q, ideal)))
x = PathVector.path(q, (1,))
y = PathVector.path(q, (2,))
print("x*y is zero:", path_multiply(x, y, ideal).is_zero())
print("x*x is zero:", path_multiply(x, x, ideal).is_zero())
print(to_dot(q, ideal))

rng = random.Random(5)
c = random_constellation(10, rng)
sd = surface_data(c)
print("random degree-10 dessin: genus", sd.genus, "vertex degrees", sd.ramification_degrees)
print("cycle lengths:", nonzero_cycle_lengths(*medial_quiver(c)))
