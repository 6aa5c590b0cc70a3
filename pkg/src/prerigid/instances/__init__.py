from .finrel import FINREL, FinRel, FinRelObject, finrel_category
from .finvect import FINVECT, FinVect, finvect_category
from .graded import (
    NATURALS,
    FiniteMonoid,
    GeneratedGradedObject,
    GradedCategory,
    GradedObject,
    NaturalNumbers,
    cyclic_group,
    graded_category,
    graded_internal_hom,
)
from .pomonoid_cat import PomonoidCategory, pomonoid_category
from .terminal import TERMINAL, TerminalCategory, terminal_category

__all__ = [
    "FINREL",
    "FINVECT",
    "NATURALS",
    "TERMINAL",
    "FiniteMonoid",
    "FinRel",
    "FinRelObject",
    "FinVect",
    "GeneratedGradedObject",
    "GradedCategory",
    "GradedObject",
    "NaturalNumbers",
    "PomonoidCategory",
    "TerminalCategory",
    "cyclic_group",
    "finrel_category",
    "finvect_category",
    "graded_category",
    "graded_internal_hom",
    "pomonoid_category",
    "terminal_category",
]
