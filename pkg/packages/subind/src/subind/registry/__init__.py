"""Embedded counterexample registry; entries live in ``instances/`` as YAML."""
