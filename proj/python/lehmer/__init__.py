"""Discrete Lehmer transform, breve-moment distributions, and sliding-window analysis."""

from ._lehmer import *  # noqa: F401,F403
