"""
Shift-Plethystic Series Toolkit
-------------------------------

Exact computation with truncated noncommutative power series over the
alphabet X0, X1, X2, ... : shift, shift-plethysm, plethystic inversion,
K-duality of linked languages and q-umbral evaluation, together with
checkers for the Rogers-Ramanujan style identities built from them.
"""

__version__ = "0.1.0"
