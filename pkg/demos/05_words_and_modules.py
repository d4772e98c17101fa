"""
Words in the free group and string modules
==========================================

Reduced words that survive in the Gel'fand-Ponomarev quotient, their binary
codes and order, then the modules they describe.
"""

from dessins import ratmat
from dessins.f2gp import all_words, encode, parse_word, sort_words, string_module, sym_rep

w = parse_word("x^2*y^-3*x^3*y^-2")
print(w, "->", encode(w))

print("\nwords of length <= 2, in order:")
print("  ".join(str(v) for v in sort_words(all_words(2))))

m = string_module("xyx")
print("\nstring module of xyx, dimension", m.dim, "sinks", m.sinks())
print("X =")
print(ratmat.format_matrix(m.X))
print("Y =")
print(ratmat.format_matrix(m.Y))
print("XY = 0:", ratmat.is_zero(ratmat.matmul(m.X, m.Y)))

r = sym_rep(3)
print("\nsl2 on cubic forms, H =")
print(ratmat.format_matrix(r.H))
print("[X, Y] == H:", ratmat.sub(ratmat.matmul(r.X, r.Y), ratmat.matmul(r.Y, r.X)) == r.H)
