"""Exact computations on K3 surfaces with an A5 : mu4 action.

Modules: ``exact`` (rationals, cyclotomic fields, integer linear algebra),
``lefschetz`` (fixed-point equations), ``reps`` (A5 and its characters),
``cases`` (fixed-locus Euler numbers), ``lattices`` (discriminant forms and
glue), ``obstruct`` (determinant cases and the isometry obstruction) and
``driver`` (the ``verify`` command).
"""

__version__ = "0.1.0"
