"""Exact genus bounds, divisor-class enumeration and component censuses for curves in P^r."""
from __future__ import annotations

from .bounds import BoundsRecord, CurveTriple, GenusRegime, bounds_record
from .components import FamilyCandidate, candidates_for
from .enumeration import ClassSolution
from .report import GenusReport, census, genus_report
from .surfaces import DivisorClass, SurfaceKind, SurfaceModel

__all__ = [
    "BoundsRecord",
    "ClassSolution",
    "CurveTriple",
    "DivisorClass",
    "FamilyCandidate",
    "GenusRegime",
    "GenusReport",
    "SurfaceKind",
    "SurfaceModel",
    "bounds_record",
    "candidates_for",
    "census",
    "genus_report",
]
