"""Searching restricted shapes is fast even in GF(2^8).

A Hadamard matrix is fixed by its first row, so the search only has to
pick four entries. The first hit over the Anubis polynomial is the Anubis
matrix itself. The same shape already works over GF(2^3) and GF(2^4).
"""

from invmds import SearchTask, make_field, render_matrix, search
from invmds.gf2m import AES_POLY, ANUBIS_POLY

for f in (make_field(8, ANUBIS_POLY), make_field(3), make_field(4)):
    r = search(SearchTask(field=f, n=4, k=4, shape="hadamard", require_exact_k=True,
                          max_witnesses=1))
    print(f"Hadamard, involutory, 4 values over {f}: {r.outcome}")
    print(render_matrix(r.witnesses[0]))

r = search(SearchTask(field=make_field(8, AES_POLY), n=4, k=3, mode="plain",
                      shape="circulant", require_exact_k=True, max_witnesses=1))
print(f"circulant, plain MDS, 3 values over the AES field: {r.outcome}")
print(render_matrix(r.witnesses[0]))
