"""Check two well-known diffusion matrices.

The AES MixColumns circulant is MDS but not its own inverse. The Anubis
Hadamard matrix is both MDS and involutory, using four distinct entries.
Permuting rows and columns keeps a matrix MDS; conjugating by a
permutation also keeps it involutory.
"""

from invmds import conjugate, distinct_values, is_involutory, is_mds, make_field, render_matrix
from invmds.gf2m import AES_POLY, ANUBIS_POLY
from invmds.search import circulant, hadamard

aes = circulant(make_field(8, AES_POLY), (2, 3, 1, 1))
anubis = hadamard(make_field(8, ANUBIS_POLY), (1, 2, 4, 6))

for name, A in (("AES MixColumns", aes), ("Anubis", anubis)):
    print(name)
    print(render_matrix(A), end="")
    print(f"  MDS={is_mds(A)} involutory={is_involutory(A)} values={distinct_values(A)}\n")

B = conjugate(anubis, [2, 0, 3, 1])
print("Anubis conjugated by (2 0 3 1): MDS", is_mds(B), "involutory", is_involutory(B))
