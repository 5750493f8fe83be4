"""heckecong: exact coefficient orders, indices and congruence witnesses
for Hecke eigenforms."""

__version__ = "0.1.0"
