"""Flow algorithms with structural constraints on the support digraph."""

import json

from ._flownet import (
    BudgetError,
    Error,
    InputError,
    Network,
    PreconditionError,
    arc_connectivity,
    harmonic,
    oracle_deg_max_flow,
    oracle_p_split,
    sat_bruteforce,
)
from . import _flownet

__all__ = [
    "BudgetError",
    "Error",
    "InputError",
    "Network",
    "PreconditionError",
    "approx_p_split",
    "arc_connectivity",
    "deg_flow_value_k_plus_1",
    "gadget_lambda",
    "gadget_sat_deg",
    "harmonic",
    "max_flow",
    "oracle_deg_max_flow",
    "oracle_p_split",
    "run_cli",
    "sat_bruteforce",
    "tricot",
    "two_arc_strong_max_flow",
]


def max_flow(net):
    return json.loads(_flownet.max_flow(net))


def deg_flow_value_k_plus_1(net, k):
    out = _flownet.deg_flow_value_k_plus_1(net, k)
    return None if out is None else json.loads(out)


def two_arc_strong_max_flow(net):
    return json.loads(_flownet.two_arc_strong_max_flow(net))


def approx_p_split(net, p, variant="any"):
    return json.loads(_flownet.approx_p_split(net, p, variant))


def tricot(net, p, variant="vertex"):
    return json.loads(_flownet.tricot(net, p, variant))


def _gadget(text):
    g = json.loads(text)
    g["network"] = Network.parse(g["network"])
    return g


def gadget_lambda(lam):
    return _gadget(_flownet.gadget_lambda(lam))


def gadget_sat_deg(dimacs, k=2):
    return _gadget(_flownet.gadget_sat_deg(dimacs, k))


def run_cli(args, input=""):
    """Runs one flownet command line; returns (exit_code, stdout, stderr)."""
    return _flownet.run_cli(list(args), input)
