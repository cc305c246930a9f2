import logging

from tvb.bundle import build_pair, nonnegative_form
from tvb.exceptions import ConfigurationError
from tvb.handlers.utils import parse_flag, parse_rationals, require
from tvb.nokbody import (
    build_M,
    flag_matrix,
    flag_validity,
    global_body,
    nok_divisor_body,
)
from tvb.types import Document, Request, TvbConfig

logger = logging.getLogger("tvb.nokbody")


class NOK:
    """
    Newton-Okounkov data of a flag.

    With `alpha` and `beta` the document carries the vertices of the divisor body
    under `body`, otherwise the generators of the global body under `global`.
    """

    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "nok"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        require(self.request, "flag")
        a = self.request["a"]
        variant = self.request.get("variant", "primal")
        chain = parse_flag(self.request["flag"] or "")
        pair = nonnegative_form(build_pair(a, variant))
        flag = flag_matrix(pair, chain)
        nok = build_M(pair, flag)
        document: Document = {
            "a": [str(value) for value in a],
            "variant": variant,
            "flag": flag.to_json(),
        }
        document.update(nok.to_json())

        alpha, beta = self.request.get("alpha"), self.request.get("beta")
        if (alpha is None) != (beta is None):
            raise ConfigurationError("Supply both --alpha and --beta, or neither.")
        if alpha is not None and beta is not None:
            document["body"] = nok_divisor_body(pair, chain, alpha, beta).to_json()
        else:
            body = global_body(
                nok, self.request.get("hrep", False), self.config["hrep_dimension_cap"]
            )
            document["global"] = body.to_json()

        if self.request.get("validity"):
            if variant != "dual":
                raise ConfigurationError("--validity applies to dual flags only.")
            v = self.request.get("v")
            validity = flag_validity(
                a,
                chain,
                None if v is None else parse_rationals(v),
                self.request.get("degree", 2),
                self.config["monomial_cap"],
            )
            document["validity"] = validity.to_json()
            document["status"] = "PASS" if validity.reason is None else "FAIL"
        logger.info("Served nok request for %s a=%s", variant, a)
        return document
