"""Exact Sierpinski domination numbers of graph pairs."""

from .graph import (
    Graph,
    build_circulant,
    build_complete,
    build_cycle,
    build_path,
    build_star,
    delete_vertices,
    distance,
    mod_star,
)
from .kernel import BACKEND
from .product import FunctionAssignment, ProductVertex, SierpinskiProduct, product
from .solver import (
    DominationCertificate,
    DominationInstance,
    brute_force_gamma,
    gamma,
    solve,
)

__version__ = "0.1.0"
