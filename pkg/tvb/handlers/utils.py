import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from tvb.bundle import BundlePair, build_pair, nonnegative_form
from tvb.exceptions import ConfigurationError
from tvb.exactmath.rational import parse_rat
from tvb.types import Document, Rat, Request

FlagChain = List[List[Union[int, str]]]


def parse_weights(text: str) -> Tuple[int, ...]:
    """Comma separated integers, e.g. `1,2,3,4`."""
    tokens = [token.strip() for token in text.split(",")]
    try:
        return tuple(int(token) for token in tokens)
    except ValueError:
        raise ConfigurationError(f"Malformed weight vector {text!r}.")


def parse_rationals(text: str) -> List[Rat]:
    try:
        return [parse_rat(token) for token in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ConfigurationError(f"Malformed rational vector {text!r}.")


def _token(text: str) -> Union[int, str]:
    return int(text) if text.isdigit() else text


def parse_flag(text: str) -> FlagChain:
    """
    Read a chain from the command line.

    Members are separated by `;` and elements by `,`, so `z01;z01,z12` is a dual
    chain and `0;0,1` a primal one. A JSON array of arrays is also accepted.
    """
    text = text.strip()
    if text.startswith("["):
        try:
            members = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"Malformed flag {text!r}: {exc.msg}.")
        if not isinstance(members, list) or not all(
            isinstance(member, list) for member in members
        ):
            raise ConfigurationError(f"Malformed flag {text!r}.")
        return [
            [_token(str(element)) for element in member] for member in members
        ]
    if not text:
        raise ConfigurationError("The flag is empty.")
    return [
        [_token(element.strip()) for element in member.split(",") if element.strip()]
        for member in text.split(";")
    ]


def require(request: Request, *names: str) -> None:
    missing = [name for name in names if request.get(name) is None]
    if missing:
        options = ", ".join(f"--{name}" for name in missing)
        raise ConfigurationError(
            f"The `{request['subcommand']}` subcommand requires {options}."
        )


def pair_for(request: Request) -> BundlePair:
    pair = build_pair(request["a"], request.get("variant", "primal"))
    if request.get("nonneg"):
        pair = nonnegative_form(pair)
    return pair


def vertices_to_csv(labels: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(labels)
    writer.writerows(rows)
    return buffer.getvalue()


def render_document(document: Document, output_format: str = "json") -> str:
    """
    Serialize a document with sorted keys.

    With `csv`, a document holding a vertex list is written as a table whose
    header is the coordinate labels.
    """
    if output_format == "csv":
        body: Optional[Dict[str, Any]] = document.get("body")
        if body is None or "vertices" not in body:
            raise ConfigurationError(
                "CSV output is only available for vertex lists. "
                "Supply --alpha and --beta to the `nok` subcommand."
            )
        return vertices_to_csv(body["labels"], body["vertices"])
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
