"""Classical and quasi-exactly-solvable analysis of a PT-symmetric planar system with quadratic nonlinearities."""

from .params import ModelParams

__version__ = "0.1.0"

__all__ = ["ModelParams"]
