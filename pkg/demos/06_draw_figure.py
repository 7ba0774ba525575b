"""Render a 3 x 3 region as an SVG figure.

The two free coordinates (x_2, x_3) embed into the plane on a 60-degree
basis, so the three wall families (vertical x_2 walls, x_3 walls, and
difference walls) come out as the three line directions of a triangular
lattice.  Walls that fail to touch the region are dashed.

Writes region.svg and region_variant.svg next to this script.
"""

import pathlib

from splitorders import ExponentMatrix, render_polytope_svg

here = pathlib.Path(__file__).resolve().parent

nu = ExponentMatrix([[0, 0, 1], [3, 0, 1], [3, 2, 0]])
svg = render_polytope_svg(nu)
(here / "region.svg").write_text(svg)
print("wrote", here / "region.svg")

# the variant declares x_3 >= -2, a wall that misses the region
# entirely; it renders dashed below the 13 dots
nu_prime = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])
svg = render_polytope_svg(nu_prime, scale=50.0)
(here / "region_variant.svg").write_text(svg)
print("wrote", here / "region_variant.svg")
