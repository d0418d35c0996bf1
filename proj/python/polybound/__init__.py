"""Spectra of infinite point-interaction chains: band structure of the
straight chain and curvature-induced bound states located through the
Krein matrix."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
