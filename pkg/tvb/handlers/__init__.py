from tvb.handlers.bundle import Cox, Initial, Pair
from tvb.handlers.flag import VerifyFlag
from tvb.handlers.nok import NOK
from tvb.handlers.positivity import Bpf, Fujita
from tvb.handlers.tropical import Trees, WellPoised


__all__ = [
    "Pair",
    "Cox",
    "Initial",
    "VerifyFlag",
    "WellPoised",
    "NOK",
    "Bpf",
    "Fujita",
    "Trees",
]
