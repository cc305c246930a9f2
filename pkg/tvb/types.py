from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from typing_extensions import Literal, Protocol, TypeAlias, TypedDict


Rat: TypeAlias = Fraction
RatVector: TypeAlias = Tuple[Fraction, ...]
Exponent: TypeAlias = Tuple[int, ...]
WeightVec: TypeAlias = Tuple[int, ...]
Document = Dict[str, Any]

Variant = Literal["primal", "dual"]
Direction = Literal["phi", "s"]
FlatsMode = Literal["all_flats", "maximal_flags", "nonloop_hyperplane_complements"]
OutputFormat = Literal["json", "csv"]
Subcommand = Literal[
    "pair",
    "cox",
    "initial",
    "verify-flag",
    "wellpoised",
    "nok",
    "bpf",
    "fujita",
    "trees",
]


class TvbConfig(TypedDict):
    """Resource limits shared by every handler.

    **box_radius** - Radius of the lattice box searched when certifying that a
    monoid is saturated.
    **flat_ground_cap** - Largest ground set for which flats are enumerated.
    **hrep_dimension_cap** - Largest ambient dimension for facet descriptions.
    **monomial_cap** - Largest number of monomials the toric oracle may enumerate.
    **workers** - Size of the process pool used for per-tree checks.
    """

    box_radius: int
    flat_ground_cap: int
    hrep_dimension_cap: int
    monomial_cap: int
    workers: int


class Request(TypedDict, total=False):
    """A parsed command-line request.

    **subcommand** - Which computation to run.
    **a** - The weight vector a_0..a_n.
    **variant** - Either the bundle (`primal`) or its dual (`dual`).
    **nonneg** - Whether to shift the diagram into non-negative form.
    **facet** - Facet index for initial ideals.
    **flag** - A flag in command-line notation, e.g. `z01;z01,z12` or `0;0,1`.
    **alpha**, **beta** - The divisor class (alpha, beta).
    **degree** - Degree bound for the toric-ideal oracle.
    **leaves** - Leaf count for tree enumeration.
    **hrep** - Whether to compute a facet description of the global body.
    **format** - Output format for vertex lists.
    **flats** - Which flats of the initial matroid to list.
    **v** - Flat weights for the tree of a dual flag, comma separated.
    **validity** - Whether to check a dual flag against its toric oracle.
    **output** - Path the document is written to instead of standard output.
    """

    subcommand: Subcommand
    a: Tuple[int, ...]
    variant: Variant
    nonneg: bool
    facet: Optional[int]
    flag: Optional[str]
    alpha: Optional[int]
    beta: Optional[int]
    degree: int
    leaves: int
    hrep: bool
    format: OutputFormat
    flats: Optional[FlatsMode]
    v: Optional[str]
    validity: bool
    output: Optional[str]


class Handler(Protocol):
    """A computation selected for a request.

    **request** - The request being served.
    **config** - The validated resource limits.
    """

    request: Request
    config: TvbConfig

    def __init__(self, request: Request, config: TvbConfig) -> None:
        ...  # pragma: no cover

    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        ...  # pragma: no cover

    def __call__(self) -> Document:
        ...  # pragma: no cover


Rows = List[List[str]]
