"""Hierarchical abstract normative systems and their argumentation semantics."""

from .argumentation import (
    AUX,
    LAST,
    WEAKEST,
    Argument,
    DefeatGraph,
    build_af,
    enumerate_arguments,
    expand_af,
    warg,
)
from .core import (
    TOP,
    Hans,
    HansError,
    Literal,
    Norm,
    NotTotallyOrderedError,
    ValidationError,
    greedy,
    greedy_preorder,
    max_obeyable,
    optimization,
    reduce_system,
    reduction,
)
from .dsl import ParseError, load_hans, parse_hans, render_hans
from .semantics import extensions, grounded, is_acyclic, outfamily
from .verify import random_hans, verify_greedy, verify_optimization, verify_reduction

__version__ = "0.1.0"
