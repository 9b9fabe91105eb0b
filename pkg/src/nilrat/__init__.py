"""Rational singular loci of nilpotent orbit closures in classical Lie algebras."""

__version__ = "0.1.0"
