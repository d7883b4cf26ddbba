"""Exact Gauss sums of compact Lie groups and the modular and Hecke group
representations they come from, with certified numerical theta checks.

Modules, bottom up: ``rootsys`` (Cartan data), ``lattices`` (root/weight
lattices, quotients, group forms), ``cyclo`` (exact cyclotomic scalars),
``gauss``, ``modrep``, ``heckerep`` (exact identities), ``theta`` (numerics),
``suite`` (the acceptance checks) and ``cli``.
"""

__version__ = "0.1.0"
