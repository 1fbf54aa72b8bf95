"""Python access to the gsp4 verification checks.

Every ``check_*`` function returns the report as a dict with the keys
check, status, witnesses, citations, seed, elapsedMs.
"""

import json

from . import _gsp4
from ._gsp4 import (
    InputError,
    branching_multiplicity,
    set_precision_digits,
    surviving_terms,
    trace_pi_exponent,
    weyl_dimension,
)


def _report(fn):
    def wrapped(*args):
        return json.loads(fn(*args))

    wrapped.__name__ = fn.__name__
    return wrapped


check_branch = _report(_gsp4.check_branch)
check_packet = _report(_gsp4.check_packet)
check_hodge = _report(_gsp4.check_hodge)
check_pairing_constants = _report(_gsp4.check_pairing_constants)
check_pairing_coeffs = _report(_gsp4.check_pairing_coeffs)
check_pairing_assemble = _report(_gsp4.check_pairing_assemble)
check_pairing_survival = _report(_gsp4.check_pairing_survival)
check_bessel = _report(_gsp4.check_bessel)
check_tate_unramified = _report(_gsp4.check_tate_unramified)
check_mellin = _report(_gsp4.check_mellin)
check_tate_arch = _report(_gsp4.check_tate_arch)
check_trace = _report(_gsp4.check_trace)


def check_rep_build(k, kp, c=None, verify_closure=False):
    return json.loads(_gsp4.check_rep_build(k, kp, k + kp if c is None else c, verify_closure))


def check_lambda_scan(k, kp, p=None, q=None, i_min=0, i_max=6):
    return json.loads(_gsp4.check_lambda_scan(k, kp, p, q, i_min, i_max))


def check_unramified(order=25, numeric=False, seed=0, samples=20):
    return json.loads(_gsp4.check_unramified(order, numeric, seed, samples))


__all__ = [name for name in dir() if name.startswith("check_")] + [
    "InputError",
    "branching_multiplicity",
    "set_precision_digits",
    "surviving_terms",
    "trace_pi_exponent",
    "weyl_dimension",
]
