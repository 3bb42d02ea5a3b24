"""Immutable domain types: ground sets, subsets, set functions, distributions."""
