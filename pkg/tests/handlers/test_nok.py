import pytest

from tvb import Tvb
from tvb.exceptions import ConfigurationError, InvalidFlag

DUAL_FLAG = "z01;z01,z12"


def get_request(flag=DUAL_FLAG, a=(1, 2, 3, 4), variant="dual", **extra):
    request = {"subcommand": "nok", "a": a, "variant": variant, "flag": flag}
    request.update(extra)
    return request


def test_global_body():
    document = Tvb()(get_request())
    assert len(document["M"]) == 7
    assert len(document["M"][0]) == 10
    assert document["flag"]["E"][0] == ["1"] * 6
    assert document["ray_rows"] == "4"
    assert "global" in document
    assert "body" not in document


def test_divisor_body():
    document = Tvb()(get_request(alpha=7, beta=1))
    assert document["body"]["vertices"] == [["0", "0", "3", "4", "1", "1", "1"]]
    assert document["body"]["labels"][-1] == "flat1"


def test_primal_flag():
    document = Tvb()(get_request("0;0,1", (1, 1, 1), "primal", alpha=0, beta=1))
    assert document["flag"]["E"] == [
        ["1", "1", "1"],
        ["1", "1", "0"],
        ["1", "0", "0"],
    ]
    assert len(document["body"]["vertices"]) == 9


def test_json_flag():
    document = Tvb()(get_request('[["z01"], ["z01", "z12"]]'))
    assert document["flag"]["flag"][1] == ["z01", "z02", "z12"]


def test_validity():
    document = Tvb()(get_request(a=(1, 1, 1, 1), validity=True, v="1,1,1"))
    assert document["status"] == "PASS"
    assert document["validity"]["status"] == "VALID"


@pytest.mark.parametrize(
    "extra,message",
    [
        ({"alpha": 1}, "Supply both --alpha and --beta, or neither."),
        ({"flag": None}, "The `nok` subcommand requires --flag."),
        ({"flag": ""}, "The flag is empty."),
        ({"flag": "[oops"}, "Malformed flag '[oops': Expecting value."),
        (
            {"variant": "primal", "a": (1, 1, 1), "flag": "0", "validity": True},
            "--validity applies to dual flags only.",
        ),
        (
            {"validity": True, "v": "1,x"},
            "Malformed rational vector '1,x'.",
        ),
    ],
)
def test_invalid_requests(extra, message):
    with pytest.raises(ConfigurationError) as exc:
        Tvb()(get_request(**extra))

    assert str(exc.value) == message


def test_invalid_flag():
    with pytest.raises(InvalidFlag):
        Tvb()(get_request("0,1", (1, 1, 1), "primal"))
