"""Arithmetic in GF(2^8) with the AES polynomial.

Addition is XOR; multiplication is carry-less and reduced modulo the
polynomial. Inverses come from the extended Euclidean algorithm, and we
cross-check them against a^(2^m - 2).
"""

from invmds import make_field
from invmds.gf2m import AES_POLY

f = make_field(8, AES_POLY)
print("field:", f)

a, b = 0x57, 0x83
print(f"{f.format(a)} + {f.format(b)} = {f.format(f.add(a, b))}")
print(f"{f.format(a)} * {f.format(b)} = {f.format(f.mul(a, b))}")   # c1, the textbook example

inv = f.inv(a)
print(f"inverse of {f.format(a)} is {f.format(inv)}; check: {f.format(f.mul(a, inv))}")
assert inv == f.inv_pow(a)

# Squaring is additive in characteristic 2.
assert f.pow(a ^ b, 2) == f.pow(a, 2) ^ f.pow(b, 2)
print("Frobenius holds for this pair")
