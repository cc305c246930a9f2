from typing import Dict, List

from tvb.coxring import cox_ideal, verify_phi_generators
from tvb.coxring.presentation import PHI_MAX_N
from tvb.handlers.utils import pair_for
from tvb.matroid import (
    FlagOfFlats,
    LinMatroid,
    facet_initial,
    flats_and_flags,
    matroid_of,
)
from tvb.types import Document, Request, TvbConfig


class Pair:
    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "pair"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        pair = pair_for(self.request)
        document: Document = pair.to_json()
        document["a"] = [str(value) for value in self.request["a"]]
        return document


class Cox:
    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "cox"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        a = self.request["a"]
        variant = self.request.get("variant", "primal")
        document: Document = cox_ideal(a, variant).to_json()
        if variant == "dual" and len(a) - 1 <= PHI_MAX_N:
            document["phi"] = [entry.to_json() for entry in verify_phi_generators(a)]
        return document


def _flats_json(matroid: LinMatroid, found: list) -> List[object]:
    entries: List[object] = []
    for item in found:
        if isinstance(item, FlagOfFlats):
            entries.append([matroid.ordered(flat) for flat in item.flats])
        elif isinstance(item, tuple):
            element, hyperplane = item
            entries.append(
                {"element": element, "hyperplane": matroid.ordered(hyperplane)}
            )
        else:
            entries.append(matroid.ordered(item))
    return entries


class Initial:
    """
    Initial ideals of the linear ideal at the facet cones of the fan.

    Without `facet` every facet is reported. Each entry lists the flats of the
    matroid of the initial ideal in the requested mode.
    """

    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "initial"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        pair = pair_for(self.request)
        facet = self.request.get("facet")
        facets = range(pair.ray_count) if facet is None else [facet]
        mode = self.request.get("flats") or "nonloop_hyperplane_complements"
        entries: List[Dict[str, object]] = []
        for index in facets:
            ideal = facet_initial(pair, index)
            matroid = matroid_of(ideal)
            found = flats_and_flags(matroid, mode, self.config["flat_ground_cap"])
            entries.append(
                {
                    "facet": str(index),
                    "ideal": ideal.to_json(),
                    "monomial": ideal.is_monomial(),
                    "flats": _flats_json(matroid, found),
                }
            )
        return {
            "a": [str(value) for value in pair.a or ()],
            "variant": pair.variant,
            "mode": mode,
            "facets": entries,
        }
