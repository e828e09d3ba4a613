"""
The rig of rectangles
=====================

Pairs (a, b) of counting numbers, thought of as an a-by-b grid of cells,
carry two monoidal products.  Entropy lives here: a rectangle's width and
its log aspect ratio are the quantities the sample pipeline reads off.
"""
from polyentropy import RectObj, closure
from polyentropy.rectangles import hom_count

x = RectObj(2, 8)
y = RectObj(3, 9)

# direct sum multiplies section counts, tensor mixes them with exponents
print("x =", x, "  y =", y)
print("x + y =", x + y)
print("x @ y =", x @ y)

print("width(x) =", x.width())
print("width(y) =", y.width())
print("width(x @ y) =", (x @ y).width())  # widths multiply under tensor

# log aspect ratio is additive under tensor, like entropy over independence
print("L(x) =", x.log_aspect_ratio())
print("L(y) =", y.log_aspect_ratio())
print("L(x @ y) =", (x @ y).log_aspect_ratio())

# maps between rectangles can be counted in closed form, and maps out of a
# tensor curry through an internal hom
w, z = RectObj(2, 3), RectObj(3, 2)
print("hom(w @ x, z) =", hom_count(w @ x, z))
print("closure(x, z) =", closure(x, z))
print("hom(w, closure(x, z)) =", hom_count(w, closure(x, z)))
