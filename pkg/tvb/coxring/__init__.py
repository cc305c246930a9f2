from tvb.coxring.presentation import (
    CoxPresentation,
    PhiCorrespondence,
    cox_ideal,
    phi_map,
    plucker_generators,
    verify_phi_generators,
)
from tvb.coxring.flag import (
    ExtGZElement,
    FlagReport,
    GZPattern,
    exchange_relations,
    ext_gz_contains,
    ext_gz_degree,
    ext_gz_generators,
    gz_generator,
    gz_join,
    gz_meet,
    incidence_relations,
    psi_image,
    verify_flag_relations,
)


__all__ = [
    "CoxPresentation",
    "PhiCorrespondence",
    "cox_ideal",
    "phi_map",
    "plucker_generators",
    "verify_phi_generators",
    "ExtGZElement",
    "FlagReport",
    "GZPattern",
    "exchange_relations",
    "ext_gz_contains",
    "ext_gz_degree",
    "ext_gz_generators",
    "gz_generator",
    "gz_join",
    "gz_meet",
    "incidence_relations",
    "psi_image",
    "verify_flag_relations",
]
