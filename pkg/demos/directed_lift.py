"""Lift a Fibonacci point to arcs and find a vertex of the face above it."""
from cutgap.extremepoints import construct_fibonacci, directed_face_extreme, drop_directions, lift_to_directed

for t in (3, 4, 5):
    x = construct_fibonacci(t)
    half = lift_to_directed(x)
    y = directed_face_extreme(x)
    assert drop_directions(y).pair_values() == x.pair_values()
    print(f"t={t}: symmetric lift min arc {half.min_positive()}, face vertex min arc {y.min_positive()}")
