"""Configuration management for the invariants toolkit."""

import json
import os
from dataclasses import dataclass, asdict


# Default values
DEFAULT_DEGREE_BOUND = 6
MIN_DEGREE_BOUND = 0
MAX_DEGREE_BOUND = 24
DEFAULT_METHOD = "auto"
METHODS = ("auto", "main1", "main2")


@dataclass
class ToolConfig:
    """Configuration for the command-line tool."""
    degree_bound: int = DEFAULT_DEGREE_BOUND
    method: str = DEFAULT_METHOD  # "auto", "main1" or "main2"
    verify_decompositions: bool = False
    verbose: bool = False

    def to_dict(self) -> dict:
        """Convert config to dictionary for JSON serialization."""
        return asdict(self)


def validate_degree_bound(degree: int) -> int:
    """
    Ensure the oracle degree bound is within [0, 24].

    Args:
        degree: Requested degree bound

    Returns:
        Clamped degree bound
    """
    return max(MIN_DEGREE_BOUND, min(MAX_DEGREE_BOUND, degree))


def load_config(config_path: str = "config.json") -> ToolConfig:
    """
    Load configuration from JSON file, falling back to defaults.

    Args:
        config_path: Path to the configuration file

    Returns:
        ToolConfig with loaded or default values
    """
    config = ToolConfig()

    if not os.path.exists(config_path):
        return config

    try:
        with open(config_path, 'r') as f:
            data = json.load(f)

        if not isinstance(data, dict):
            return config

        if 'degree_bound' in data:
            try:
                config.degree_bound = validate_degree_bound(int(data['degree_bound']))
            except (ValueError, TypeError):
                pass  # Use default

        if 'method' in data:
            method = str(data['method']).lower()
            if method in METHODS:
                config.method = method

        if 'verify_decompositions' in data:
            config.verify_decompositions = bool(data['verify_decompositions'])

        if 'verbose' in data:
            config.verbose = bool(data['verbose'])

    except (json.JSONDecodeError, IOError):
        # Return defaults on any file/parse error
        pass

    return config


def save_config(config: ToolConfig, config_path: str = "config.json") -> None:
    """
    Save configuration to JSON file.

    Args:
        config: The configuration to save
        config_path: Path to the configuration file
    """
    with open(config_path, 'w') as f:
        json.dump(config.to_dict(), f, indent=4)
