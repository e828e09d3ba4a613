"""
Uniform samples and exact big-integer counting
==============================================

A sample with A outcomes drawn B times each has entropy log2(A), whatever
B is.  The section counts involved grow like B^(A*B), far past float
range, and the library keeps them exact until the final logarithm.
"""
import math
import sys

from polyentropy import FinPoly, categorical_entropy, entropy_of_polynomial

# the counts below outgrow the default int-to-decimal printing cap
sys.set_int_max_str_digits(0)

print("A  B   entropy        log2(A)")
for outcomes in (2, 3, 5, 6):
    for draws_each in (1, 4, 6):
        p = FinPoly([draws_each] * outcomes)
        print(f"{outcomes}  {draws_each}   {entropy_of_polynomial(p):<12.10f}   {math.log2(outcomes):.10f}")

# 50 outcomes, 30 draws each: the section count is 30^1500
p = FinPoly([30] * 50)
rect = categorical_entropy(p)
print()
print("50 outcomes x 30 draws")
print("  section count has", len(str(rect.b)), "decimal digits")
print("  entropy:", entropy_of_polynomial(p))
print("  log2(50):", math.log2(50))

p = FinPoly([100] * 300)
rect = categorical_entropy(p)
print("300 outcomes x 100 draws")
print("  section count has", len(str(rect.b)), "decimal digits")
print("  entropy:", entropy_of_polynomial(p))
print("  log2(300):", math.log2(300))
