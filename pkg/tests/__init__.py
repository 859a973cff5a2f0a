#!/usr/bin/env python3
"""
Test package for the Skinny Tilings project.

Key test modules:
- test_polynomials, test_matrices: exact arithmetic
- test_regions, test_processors: region construction and file ingestion
- test_enumerators, test_transfers, test_frames: the counting engines
- test_recurrences, test_moments: C-finite toolkit and statistics
- test_analyzers, test_report_generator, test_cli: orchestration and output
- test_acceptance: published results (several marked slow)

Usage:
    python -m pytest tests/
    python -m pytest tests/ -m "not slow"
    python -m pytest tests/test_frames.py -v
"""

__version__ = "1.0.0"
__author__ = "Skinny Tilings Team"
