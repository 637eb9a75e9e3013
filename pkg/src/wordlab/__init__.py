"""Word maps on finite permutation groups: values, verbal subgroups,
rationality, Dixon character tables and triple-count checks."""

__version__ = "0.1.0"

from .catalog import STANDARD_CATALOG, catalog_group
from .group import (
    ClassTable,
    FiniteGroup,
    Permutation,
    Subgroup,
    build_group,
    centralizer,
    conjugacy_classes,
    derived_of,
    element_order,
    euler_phi,
    subgroup_generated,
)
from .words import (
    Word,
    evaluate_word,
    gamma_power_word,
    parse_word,
    solution_count,
    verbal_subgroup,
    word_image,
)

__all__ = [
    "STANDARD_CATALOG", "catalog_group", "ClassTable", "FiniteGroup", "Permutation",
    "Subgroup", "build_group", "centralizer", "conjugacy_classes", "derived_of",
    "element_order", "euler_phi", "subgroup_generated", "Word", "evaluate_word",
    "gamma_power_word", "parse_word", "solution_count", "verbal_subgroup", "word_image",
]
