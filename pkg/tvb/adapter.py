import logging
from itertools import chain
from typing import List, Optional, Type

from tvb.exceptions import ConfigurationError
from tvb.handlers import (
    NOK,
    Bpf,
    Cox,
    Fujita,
    Initial,
    Pair,
    Trees,
    VerifyFlag,
    WellPoised,
)
from tvb.matroid import DEFAULT_FLAT_GROUND_CAP
from tvb.nokbody import DEFAULT_HREP_DIMENSION_CAP
from tvb.positivity import DEFAULT_BOX_RADIUS
from tvb.tropic.semigroup import DEFAULT_MONOMIAL_CAP
from tvb.types import Document, Handler, Request, TvbConfig


logger = logging.getLogger("tvb")


HANDLERS: List[Type[Handler]] = [
    Pair,
    Cox,
    Initial,
    VerifyFlag,
    WellPoised,
    NOK,
    Bpf,
    Fujita,
    Trees,
]


class Tvb:
    def __init__(
        self,
        box_radius: int = DEFAULT_BOX_RADIUS,
        flat_ground_cap: int = DEFAULT_FLAT_GROUND_CAP,
        hrep_dimension_cap: int = DEFAULT_HREP_DIMENSION_CAP,
        monomial_cap: int = DEFAULT_MONOMIAL_CAP,
        workers: int = 1,
        custom_handlers: Optional[List[Type[Handler]]] = None,
    ) -> None:
        if box_radius < 1:
            raise ConfigurationError(
                "Invalid argument supplied for `box_radius`. Must be at least 1."
            )
        if flat_ground_cap < 1:
            raise ConfigurationError(
                "Invalid argument supplied for `flat_ground_cap`. Must be at least 1."
            )
        if hrep_dimension_cap < 1:
            raise ConfigurationError(
                "Invalid argument supplied for `hrep_dimension_cap`. "
                "Must be at least 1."
            )
        if monomial_cap < 1:
            raise ConfigurationError(
                "Invalid argument supplied for `monomial_cap`. Must be at least 1."
            )
        if workers < 1:
            raise ConfigurationError(
                "Invalid argument supplied for `workers`. Must be at least 1."
            )

        self.custom_handlers = custom_handlers or []
        self.config = TvbConfig(
            box_radius=box_radius,
            flat_ground_cap=flat_ground_cap,
            hrep_dimension_cap=hrep_dimension_cap,
            monomial_cap=monomial_cap,
            workers=workers,
        )

    def infer(self, request: Request) -> Handler:
        for handler_cls in chain(self.custom_handlers, HANDLERS):
            if handler_cls.infer(request, self.config):
                return handler_cls(request, self.config)
        raise ConfigurationError(
            f"Unknown subcommand {request.get('subcommand')!r}. Choices are: "
            "pair|cox|initial|verify-flag|wellpoised|nok|bpf|fujita|trees"
        )

    def __call__(self, request: Request) -> Document:
        handler = self.infer(request)
        logger.info("Running %s with %s", type(handler).__name__, request)
        document = handler()
        logger.info("Finished %s", type(handler).__name__)
        return document
