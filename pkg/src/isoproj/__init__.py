"""Classification of irreducible isoparametric foliations on complex projective spaces."""

__version__ = "0.1.0"
