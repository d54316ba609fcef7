"""orbivertex: exact combinatorics of framed orbifold vertex series.

Subpackages by layer: ``exactalg`` (cyclotomic rationals, truncated
fractional-exponent series), ``partitions`` and ``characters`` (indexing
combinatorics and wreath character theory), ``loopschur`` (colored Schur
series and determinantal forms), ``vertex`` (framed generating functions and
the change of variables), ``verifier`` (executable identity checks, used by
the ``verify`` CLI).
"""

__version__ = "0.1.0"
