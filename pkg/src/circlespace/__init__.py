"""circlespace: numerical verification of the reflector form of the Dirac equation
on circle spaces, the tachyonic transformation and the coupled-interaction spectrum."""

from .version import __version__

__all__ = ["__version__"]
