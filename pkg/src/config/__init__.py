"""Configuration module for the verifier."""

from .analysis import AnalysisConfig

__all__ = ["AnalysisConfig"]
