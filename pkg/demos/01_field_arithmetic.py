#!/usr/bin/env python3
"""Exact arithmetic in F_q for prime and prime-power q.

Elements are plain integers in [0, q); for extension fields the base-p
digits of the encoding are polynomial coefficients, reduced modulo a monic
irreducible picked deterministically (lexicographically smallest) when not
supplied. Everything downstream - planes, graphs, witnesses - runs on this
one integer encoding.
"""

from dotvc import Field

print("== prime field F_7 ==")
f7 = Field(7)
print(f"3 * 5        = {f7.mul(3, 5)}")
print(f"inv(3)       = {f7.inv(3)}   (3 * {f7.inv(3)} = {f7.mul(3, f7.inv(3))})")
print(f"2^(q-1)      = {f7.pow(2, 6)}   (Fermat)")

print("\n== extension field F_4 = F_2[x]/(x^2+x+1) ==")
f4 = Field(2, 2)
print(f"chosen modulus (constant first): {f4.modulus}")
print("element 2 encodes the root a of the modulus; 3 encodes a+1")
print(f"a * a   = {f4.mul(2, 2)}   (a^2 = a + 1)")
print(f"a * (a+1) = {f4.mul(2, 3)} (= a^2 + a = 1)")
print("full multiplication table:")
for a in range(4):
    print("   ", [f4.mul(a, b) for b in range(4)])

print("\n== F_9 and a bigger binary field ==")
f9 = Field(3, 2)
print(f"F_9 modulus: {f9.modulus}  (x^2 + 1, irreducible over F_3)")
f256 = Field(2, 8)
print(f"F_256 modulus: {f256.modulus}")
a = 0x53
print(f"0x53 * 0xCA = {f256.mul(0x53, 0xCA)}  inv(0x53) = {f256.inv(a)}")

print("\n== dot products ==")
f5 = Field(5)
print(f"F_5: (1,2,3).(3,1,0) = {f5.dot((1, 2, 3), (3, 1, 0))}")
print(f"F_4: (a,1,0).(a,1,0) = {f4.dot((2, 1, 0), (2, 1, 0))}  (a^2 + 1 = a)")
