"""CLI subcommands; each module exposes ``register(subparsers)``."""

from subind.commands import classify, entropy, measure, registry, select, validate, verify_lattice

COMMANDS = (measure, classify, verify_lattice, entropy, select, registry, validate)
