"""Shared test fixtures for the relative invariants tests."""

import pytest
import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from expr_parser import load_spec_file, parse_poly  # noqa: E402


SPECS_DIR = os.path.join(os.path.dirname(__file__), '..', 'specs')


def spec_path(name: str) -> str:
    return os.path.join(SPECS_DIR, name)


@pytest.fixture(scope="session")
def o2_spec():
    return load_spec_file(spec_path("o2.json"))


@pytest.fixture(scope="session")
def d6_spec():
    return load_spec_file(spec_path("d6t2z2.json"))


@pytest.fixture(scope="session")
def z3z3_spec():
    return load_spec_file(spec_path("z3z3.json"))


@pytest.fixture
def poly_in():
    """Parse an expression over a spec's variable table: poly_in(spec, 'z*zb')."""
    return lambda spec, src: parse_poly(src, spec.group.table)
