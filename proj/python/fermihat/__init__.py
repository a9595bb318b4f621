"""Quadratic forms in Fermi operators.

Symbolic normal-ordered algebra of the embedding A -> sum a_jk c_j^dagger c_k,
with a dense Fock-space representation for numeric cross-checks.
"""

from ._fermihat import *  # noqa: F401,F403
from ._fermihat import (  # noqa: F401
    FermihatError,
    IdentityViolation,
    OperatorPoly,
    ParseError,
)

__version__ = "0.1.0"
