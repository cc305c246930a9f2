from tvb.bundle import build_pair, nonnegative_form
from tvb.positivity import bpf_monoid, fujita_certify, sp_monoids
from tvb.types import Document, Request, TvbConfig


class Bpf:
    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "bpf"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        a = self.request["a"]
        variant = self.request.get("variant", "primal")
        pair = nonnegative_form(build_pair(a, variant))
        document: Document = {
            "a": [str(value) for value in a],
            "variant": variant,
            "sp_monoids": [source.to_json() for source in sp_monoids(pair)],
        }
        document.update(bpf_monoid(pair, self.config["box_radius"]).to_json())
        return document


class Fujita:
    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "fujita"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        certificate = fujita_certify(
            self.request["a"],
            self.request.get("variant", "primal"),
            self.config["box_radius"],
        )
        document: Document = certificate.to_json()
        document["status"] = certificate.verdict.name
        return document
