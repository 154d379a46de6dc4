"""Exact modified traces on categories of modules over finite-dimensional pivotal Hopf algebras."""
from .errors import *  # noqa: F401,F403
from .scalars import QQ, GF, Cyclotomic, FieldSpec  # noqa: F401
from .linalg import Matrix, solve_all, kron  # noqa: F401
from .hopfalg import HopfAlgebra, load_hopf, sweedler, taft, group_z  # noqa: F401

__version__ = "0.1.0"
