from tvb.tropic import enumerate_trees, wellpoised_check
from tvb.types import Document, Request, TvbConfig


class Trees:
    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "trees"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        leaves = self.request.get("leaves", 5)
        trees = enumerate_trees(leaves)
        return {
            "leaves": str(leaves),
            "count": str(len(trees)),
            "trees": [
                {
                    "tree_id": f"T{tree_id}",
                    "newick": tree.newick(),
                    "splits": tree.splits_json(),
                }
                for tree_id, tree in enumerate(trees)
            ],
        }


class WellPoised:
    @classmethod
    def infer(cls, request: Request, config: TvbConfig) -> bool:
        return request["subcommand"] == "wellpoised"

    def __init__(self, request: Request, config: TvbConfig) -> None:
        self.request = request
        self.config = config

    def __call__(self) -> Document:
        report = wellpoised_check(
            self.request["a"],
            self.request.get("degree", 4),
            workers=self.config["workers"],
            cap=self.config["monomial_cap"],
        )
        return report.to_json()
