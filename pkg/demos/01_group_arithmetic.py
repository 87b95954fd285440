"""Normal forms in the Hantzsche-Wendt group, and the affine picture.

The group is generated by three screw motions of 3-space subject to
x y^2 x^-1 y^2 = y x^2 y^-1 x^2 = x y z = 1.  Every element is uniquely
letter . x^(2a) y^(2b) z^(2c), and hwcover computes with those quadruples.
"""

from hwcover import Element, GENERATORS, IDENTITY, eval_word
from hwcover.group import RELATOR_WORDS, translation

x, y, z = GENERATORS["x"], GENERATORS["y"], GENERATORS["z"]

print("== products reduce to the normal form ==")
for word in ("x x", "y x", "x z", "x y z"):
    print(f"  {word:10s} -> {eval_word(word)}")

print("\n== every defining relator (and the permuted consequences) dies ==")
for word in RELATOR_WORDS:
    print(f"  {word:14s} -> {eval_word(word)}")

print("\n== the affine representation is faithful ==")
print("  x acts as", x.to_affine())
print("  y acts as", y.to_affine())
print("  z acts as", z.to_affine())
print("  x then y then z moves (p,q,r) to", z.to_affine().apply(
    y.to_affine().apply(x.to_affine().apply((3, 1, 4)))), "= identity on (3,1,4)")

print("\n== multiplication agrees with composing isometries ==")
p, q = Element("y", 2, -1, 3), Element("z", 0, 4, -2)
print("  p*q          =", p * q)
print("  affine(p*q)  =", (p * q).to_affine())
print("  affine(p) then affine(q) =", p.to_affine().then(q.to_affine()))

print("\n== conjugation flips translation signs by the letter pattern ==")
for letter, v in (("x", x), ("y", y), ("z", z)):
    images = [translation(*t).conjugated_by(v)
              for t in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    print(f"  conjugating x^2, y^2, z^2 by {letter}:", *images)
