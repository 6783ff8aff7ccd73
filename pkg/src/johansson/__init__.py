"""Combinatorial Johansson diagrams of (pseudo) Dehn surfaces.

A diagram is a 4-regular combinatorial map on a closed orientable surface
together with a free dart-level sistering involution tau.  The package
validates diagrams, computes the topology of the domain surface and the
quotient 2-complex, produces two fundamental group presentations and the
abelianized tableau, lifts diagrams along permutation representations,
performs handle piping, enumerates small diagrams, and assembles triple
point spectra from bound certificates.
"""

from .diagram import JohanssonDiagram, ValidationReport, Curve, parse_diagram, serialize_diagram

__all__ = [
    "JohanssonDiagram",
    "ValidationReport",
    "Curve",
    "parse_diagram",
    "serialize_diagram",
]
