"""Auslander-Reiten theory for representations of strongly locally finite quivers."""

from ._arq import ArqError, Quiver, Rep, run_cli

__all__ = ["ArqError", "Quiver", "Rep", "run_cli"]
