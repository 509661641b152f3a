"""Root package for jetcount.

Exact degrees of solution varieties of algebraic differential equations on
subvarieties of projective space, by closed formula and by counting.
"""
