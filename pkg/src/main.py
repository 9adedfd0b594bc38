#!/usr/bin/env python3
"""
Relative invariants toolkit.

Computes relative Reynolds projections, the decomposition of an H-invariant
ring into relative invariants, and a Hilbert basis of the Gamma-invariant
ring from one of the H-invariant ring, with brute-force certification.

Run with: python src/main.py <validate|reynolds|decompose|gamma-basis|verify> SPEC ...
"""

import sys
import os

# Add src directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli import main


if __name__ == "__main__":
    main()
