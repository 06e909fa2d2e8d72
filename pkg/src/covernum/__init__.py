"""Exact covering numbers of finite groups.

Closed-form combinatorics for the maximal-subgroup families of symmetric
groups, a concrete small-degree permutation group engine, an exact
minimum set-cover solver, and a harness of machine checks.
"""

from .combinat import Partition, binomial, class_size, factorial
from .cover import Budget, CoverInstance, CoverSolution, sigma0_exact, sigma_exact
from .permengine import ConcreteGroup, Perm, close, parse_cycles

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "ConcreteGroup",
    "CoverInstance",
    "CoverSolution",
    "Partition",
    "Perm",
    "binomial",
    "class_size",
    "close",
    "factorial",
    "parse_cycles",
    "sigma0_exact",
    "sigma_exact",
]
