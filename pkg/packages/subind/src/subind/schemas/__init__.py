"""Pydantic schemas for spec files, registry entries and CLI reports."""
