from tvb.adapter import Tvb
from tvb.bundle import BundlePair, LinearIdeal, build_pair, nonnegative_form
from tvb.nokbody import build_M, divisor_polytope, flag_matrix, nok_divisor_body
from tvb.positivity import bpf_monoid, fujita_certify

__all__ = [
    "Tvb",
    "BundlePair",
    "LinearIdeal",
    "build_pair",
    "nonnegative_form",
    "build_M",
    "divisor_polytope",
    "flag_matrix",
    "nok_divisor_body",
    "bpf_monoid",
    "fujita_certify",
]
