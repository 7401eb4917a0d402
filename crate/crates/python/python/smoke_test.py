"""Quick end-to-end check of the compiled extension."""

from fractions import Fraction

import redim

half = Fraction(1, 2)

assert redim.to_expansion(half) == "0.4(9)"
assert redim.to_expansion("1/400") == "0.0024(9)"
assert redim.from_expansion("0.0024(9)") == Fraction(1, 400)

assert redim.pair_unit(half, "1/2") == Fraction(9, 20)
assert redim.unpair_unit(Fraction(9, 20)) == (half, half)
assert redim.pair_reals(0, 0) == 0

y = redim.fold([half, -3, "0.(3)"])
assert redim.unfold(y, 3) == (half, -3, Fraction(1, 3))

image = redim.phi(2, 3, [half, Fraction(1, 3)])
assert len(image) == 3
assert redim.phi(3, 2, image, inverse=True) == (half, Fraction(1, 3))
assert redim.phi(3, 1, [0, 0, 0]) == (0,)

f = redim.Bijection(1, 2)
assert f.backward(f.forward([Fraction(-7, 4)])) == (Fraction(-7, 4),)

space = redim.TransportedSpace(3, 1)
x, z = (half, 2, -1), (Fraction(1, 10), 0, 3)
assert space.zero() == (0, 0, 0)
assert space.vadd(x, space.neg(x)) == space.zero()
(fx,), (fz,) = space.to_target(x), space.to_target(z)
assert space.to_target(space.vadd(x, z)) == (fx + fz,)
assert space.to_target(space.smul(Fraction(-3, 2), x)) == (Fraction(-3, 2) * fx,)

basis = space.basis()
assert len(basis) == 1
coords = space.coordinates(x)
assert space.combine(coords, basis) == x

report = space.check_axioms(20, 42)
assert len(report["axioms"]) == 8
assert all(r["passes"] == r["trials"] == 20 for r in report["axioms"])
iso = space.check_isomorphism(20, 42)
assert all(r["passes"] == r["trials"] for r in iso["checks"])

points = redim.semicircle_points(3)
assert (0.5, 0.5) in points

for bad in (lambda: redim.pair_unit(2, half), lambda: redim.to_expansion("1/0")):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

print("smoke test passed")
