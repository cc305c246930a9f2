from tvb.coxring import ext_gz_generators, verify_flag_relations
from tvb.types import Document, Request, TvbConfig


class VerifyFlag:
    """
    Evaluate the incidence and exchange relations of the flag bundle's Cox ring.

    Residues are reported rather than raised so the document shows every failure.
    """

    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "verify-flag"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        a = self.request["a"]
        document: Document = verify_flag_relations(a, strict=False).to_json()
        document["ext_gz_generators"] = {
            name: element.to_json() for name, element in ext_gz_generators(a).items()
        }
        return document
