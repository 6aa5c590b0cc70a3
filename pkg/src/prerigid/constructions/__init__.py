from .fam import (
    FamCategory,
    FamObject,
    MafCategory,
    fam_category,
    fam_internal_hom,
    fam_predual,
    fam_predual_converse_check,
    maf_obstruction_witness,
)
from .famrel import FamRelCategory, famrel_category, famrel_predual
from .functorcat import (
    DiagramFunctor,
    FunctorCategory,
    IndexCategory,
    functorcat_predual,
    nat_space,
)
from .graded_dual import graded_predual, not_closed_witness_gradedf

__all__ = [
    "FamCategory", "FamObject", "MafCategory", "fam_category", "fam_internal_hom", "fam_predual",
    "fam_predual_converse_check", "maf_obstruction_witness",
    "FamRelCategory", "famrel_category", "famrel_predual",
    "DiagramFunctor", "FunctorCategory", "IndexCategory", "functorcat_predual", "nat_space",
    "graded_predual", "not_closed_witness_gradedf",
]
