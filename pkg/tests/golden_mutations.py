"""Single-leaf perturbations of the golden constants, shared by the fault-injection tests."""

import copy
from fractions import Fraction


def leaves(x, path=()):
    if isinstance(x, dict):
        for k, v in x.items():
            yield from leaves(v, path + (k,))
    elif isinstance(x, list):
        for i, v in enumerate(x):
            yield from leaves(v, path + (i,))
    else:
        yield path, x


def perturb(v):
    if isinstance(v, bool):
        return not v
    if isinstance(v, int):
        return v + 1
    if isinstance(v, float):
        return v + 1e-6
    try:
        return str(Fraction(v) + 1)
    except (ValueError, ZeroDivisionError):
        return "c1" if v.startswith("[") else v + "^2"


def mutated(golden, path, value=None):
    g = copy.deepcopy(golden)
    node = g
    for k in path[:-1]:
        node = node[k]
    node[path[-1]] = perturb(node[path[-1]]) if value is None else value
    return g
