"""Decomposition of translation invariant valuations into SO(n) irreducibles,
with exact rational convex geometry for verifying the induced inequalities.

The two computational engines are `weightlab` / `branchcalc` (characters,
branching, the two independent Val_i multiplicity computations) and
`convexgeo` / `verify` (exact polytope geometry and certified inequality
campaigns).  `cli` ties them together as the `valharm` command.
"""

__version__ = "0.1.0"

from . import branchcalc, convexgeo, intervals, verify, weightlab  # noqa: E402,F401
