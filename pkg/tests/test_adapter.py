import pytest

from tvb import Tvb
from tvb.adapter import HANDLERS
from tvb.exceptions import ConfigurationError


def test_default_settings():
    adapter = Tvb()
    assert adapter.config == {
        "box_radius": 50,
        "flat_ground_cap": 16,
        "hrep_dimension_cap": 8,
        "monomial_cap": 200000,
        "workers": 1,
    }
    assert adapter.custom_handlers == []
    assert len(HANDLERS) == 9


@pytest.mark.parametrize(
    "arguments,message",
    [
        (
            {"box_radius": 0},
            "Invalid argument supplied for `box_radius`. Must be at least 1.",
        ),
        (
            {"flat_ground_cap": 0},
            "Invalid argument supplied for `flat_ground_cap`. Must be at least 1.",
        ),
        (
            {"hrep_dimension_cap": -1},
            "Invalid argument supplied for `hrep_dimension_cap`. "
            "Must be at least 1.",
        ),
        (
            {"monomial_cap": 0},
            "Invalid argument supplied for `monomial_cap`. Must be at least 1.",
        ),
        (
            {"workers": 0},
            "Invalid argument supplied for `workers`. Must be at least 1.",
        ),
    ],
)
def test_invalid_options(arguments, message):
    with pytest.raises(ConfigurationError) as exc:
        Tvb(**arguments)

    assert str(exc.value) == message


def test_unknown_subcommand():
    with pytest.raises(ConfigurationError) as exc:
        Tvb()({"subcommand": "sheaf", "a": (1, 1, 1)})

    assert str(exc.value) == (
        "Unknown subcommand 'sheaf'. Choices are: "
        "pair|cox|initial|verify-flag|wellpoised|nok|bpf|fujita|trees"
    )
