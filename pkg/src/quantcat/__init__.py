"""Quantaloid-enriched categories on finite data: presheaves, weighted colimits,
cocompletion doctrines and Hausdorff distances."""

from .lattice import ElementNotInLattice, LatticeError, SupLattice, join, meet, validate_lattice
from .quantaloid import (
    BOOL,
    INF,
    LAWVERE,
    Arrow,
    NotAdjoint,
    NotEnumerable,
    Quantaloid,
    TableQuantaloid,
    TypeMismatch,
    arrow,
    builtin,
    chain,
    compose,
    extension,
    identity,
    lifting,
    right_adjoint,
    validate_quantaloid,
)
from .qcat import (
    Distributor,
    QCategory,
    QFunctor,
    dist_compose,
    dist_extension,
    dist_join,
    dist_lifting,
    functor_leq,
    identity_dist,
    induced_left,
    induced_right,
    is_adjoint_pair,
    is_equivalence,
    is_fully_faithful,
    singleton,
    validate_category,
    validate_distributor,
    validate_functor,
)
from .presheaf import (
    BudgetExceeded,
    NotCocomplete,
    Presheaf,
    PresheafCategory,
    classify,
    colim,
    colim_in_presheaf,
    declassify,
    enumerate_presheaves,
    free_mult,
    free_unit,
    is_cocomplete,
    kan_extension,
    presheaf_hom,
    representable,
)
from .doctrine import NotInClass, SubDoctrine, WeightClass, dist_in_class, doctrine_laws, saturation_check
from .hausdorff import (
    cauchy_completion,
    conical_from_subset,
    directed_hausdorff,
    hausdorff_category,
    hausdorff_on_dist,
    hausdorff_on_functor,
    is_cauchy,
    is_conical,
    weight_class_all,
    weight_class_cauchy,
    weight_class_conical,
    weight_class_representable,
)

__version__ = "0.1.0"
