"""Tests for configuration management."""

import json
import os
import tempfile
import pytest
from hypothesis import given, strategies as st, settings
from config import (
    ToolConfig, load_config, save_config,
    validate_degree_bound, DEFAULT_DEGREE_BOUND, DEFAULT_METHOD,
    MIN_DEGREE_BOUND, MAX_DEGREE_BOUND, METHODS
)


class TestValidateDegreeBound:
    """Tests for validate_degree_bound function."""

    def test_valid_bound_unchanged(self):
        """Bounds within range should be unchanged."""
        assert validate_degree_bound(0) == 0
        assert validate_degree_bound(6) == 6
        assert validate_degree_bound(24) == 24

    def test_below_minimum_clamped(self):
        """Negative bounds should be clamped to 0."""
        assert validate_degree_bound(-1) == 0
        assert validate_degree_bound(-100) == 0

    def test_above_maximum_clamped(self):
        """Bounds above 24 should be clamped to 24."""
        assert validate_degree_bound(25) == 24
        assert validate_degree_bound(1000) == 24


class TestDegreeBoundProperty:
    """Property-based tests for degree bound validation.

    **Feature: relative-invariants, Property 11: Degree bound validation**
    """

    @given(st.integers())
    @settings(max_examples=100)
    def test_degree_bound_always_within_bounds(self, degree: int):
        """
        **Feature: relative-invariants, Property 11: Degree bound validation**

        For any input, validate_degree_bound SHALL return a value within [0, 24].
        """
        result = validate_degree_bound(degree)
        assert MIN_DEGREE_BOUND <= result <= MAX_DEGREE_BOUND, (
            f"Result {result} is outside valid range [{MIN_DEGREE_BOUND}, {MAX_DEGREE_BOUND}]"
        )


class TestToolConfig:
    """Tests for ToolConfig dataclass."""

    def test_default_values(self):
        """Config should have correct defaults."""
        config = ToolConfig()
        assert config.degree_bound == DEFAULT_DEGREE_BOUND
        assert config.method == DEFAULT_METHOD
        assert config.verify_decompositions is False
        assert config.verbose is False

    def test_to_dict(self):
        """Config should serialize to dict correctly."""
        config = ToolConfig(degree_bound=4, method="main2", verbose=True)
        d = config.to_dict()
        assert d['degree_bound'] == 4
        assert d['method'] == "main2"
        assert d['verbose'] is True
        assert d['verify_decompositions'] is False


class TestConfigRoundTripProperty:
    """Property-based tests for configuration round-trip.

    **Feature: relative-invariants, Property 12: Configuration loading round-trip**
    """

    @given(
        degree_bound=st.integers(min_value=MIN_DEGREE_BOUND, max_value=MAX_DEGREE_BOUND),
        method=st.sampled_from(METHODS),
        verify_decompositions=st.booleans(),
        verbose=st.booleans()
    )
    @settings(max_examples=100)
    def test_config_round_trip(self, degree_bound: int, method: str, verify_decompositions: bool, verbose: bool):
        """
        **Feature: relative-invariants, Property 12: Configuration loading round-trip**

        For any valid ToolConfig object, saving to JSON and then loading
        SHALL produce an equal ToolConfig object.
        """
        original = ToolConfig(
            degree_bound=degree_bound,
            method=method,
            verify_decompositions=verify_decompositions,
            verbose=verbose
        )

        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            temp_path = f.name

        try:
            save_config(original, temp_path)
            loaded = load_config(temp_path)
            assert loaded == original, f"Round-trip mismatch: {loaded} != {original}"
        finally:
            if os.path.exists(temp_path):
                os.unlink(temp_path)


class TestLoadConfig:
    """Tests for load_config function."""

    def test_missing_file_returns_defaults(self):
        """Missing config file should return defaults."""
        config = load_config("/nonexistent/path/config.json")
        assert config == ToolConfig()

    def test_valid_config_loaded(self):
        """Valid config file should be loaded correctly."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            json.dump({
                'degree_bound': 3,
                'method': 'MAIN2',
                'verify_decompositions': True
            }, f)
            f.flush()

            config = load_config(f.name)
            assert config.degree_bound == 3
            assert config.method == "main2"
            assert config.verify_decompositions is True

            os.unlink(f.name)

    def test_invalid_values_fall_back(self):
        """Out-of-range bounds are clamped; unknown methods and bad types are ignored."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            json.dump({'degree_bound': 99, 'method': 'fastest'}, f)
            f.flush()

            config = load_config(f.name)
            assert config.degree_bound == MAX_DEGREE_BOUND
            assert config.method == DEFAULT_METHOD

            os.unlink(f.name)

        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            json.dump({'degree_bound': 'six'}, f)
            f.flush()

            assert load_config(f.name).degree_bound == DEFAULT_DEGREE_BOUND

            os.unlink(f.name)

    def test_invalid_json_returns_defaults(self):
        """Invalid JSON should return defaults."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
            f.write("not valid json {{{")
            f.flush()

            config = load_config(f.name)
            assert config.degree_bound == DEFAULT_DEGREE_BOUND

            os.unlink(f.name)

    def test_shipped_config(self):
        """The repository config.json holds the defaults."""
        path = os.path.join(os.path.dirname(__file__), '..', 'config.json')
        assert load_config(path) == ToolConfig()
