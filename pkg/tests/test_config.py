#!/usr/bin/env python3
"""
Test module for environment-driven settings.
"""

import os
import tempfile
import unittest
from unittest.mock import patch

from skinny_tilings.config import Settings, load_settings
from skinny_tilings.exceptions import ConfigurationError
from skinny_tilings.types import GuessConfig


def clean_environment() -> dict:
    return {k: v for k, v in os.environ.items() if not k.startswith("SKINNY_")}


class TestSettings(unittest.TestCase):
    """Test cases for the Settings dataclass and load_settings."""

    def setUp(self):
        """Set up test fixtures."""
        self.temp_env_file = tempfile.NamedTemporaryFile(mode='w', suffix='.env', delete=False)
        self.temp_env_file.write(
            "SKINNY_WIDTH_CAP=6\nSKINNY_MAX_ORDER=12\nSKINNY_LOG_LEVEL=info\n"
        )
        self.temp_env_file.close()

    def tearDown(self):
        """Clean up temporary files after tests."""
        try:
            os.unlink(self.temp_env_file.name)
        except FileNotFoundError:
            pass

    def test_defaults(self):
        """Defaults match the documented values."""
        settings = Settings()
        self.assertEqual(settings.width_cap, 8)
        self.assertEqual(settings.guess_config(), GuessConfig(40, 5))
        self.assertIsNone(settings.log_file)

    def test_validation(self):
        """Out-of-range settings are configuration errors."""
        for kwargs in ({"width_cap": 0}, {"margin": 0}, {"growth_index": 1}, {"log_level": "LOUD"}):
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(ConfigurationError):
                    Settings(**kwargs)

    def test_load_from_env_file(self):
        """Values from a .env file override the defaults."""
        with patch.dict(os.environ, clean_environment(), clear=True):
            settings = load_settings(self.temp_env_file.name)
        self.assertEqual(settings.width_cap, 6)
        self.assertEqual(settings.max_order, 12)
        self.assertEqual(settings.margin, 5)
        self.assertEqual(settings.log_level, "INFO")

    def test_environment_wins_over_file(self):
        """Variables already set are not overwritten by the file."""
        env = clean_environment()
        env["SKINNY_WIDTH_CAP"] = "4"
        with patch.dict(os.environ, env, clear=True):
            settings = load_settings(self.temp_env_file.name)
        self.assertEqual(settings.width_cap, 4)

    def test_invalid_integer(self):
        """Non-integer values are rejected with the variable name."""
        env = clean_environment()
        env["SKINNY_MARGIN"] = "abc"
        with patch.dict(os.environ, env, clear=True):
            with self.assertRaises(ConfigurationError) as ctx:
                load_settings(self.temp_env_file.name)
        self.assertIn("SKINNY_MARGIN", str(ctx.exception))


if __name__ == '__main__':
    unittest.main()
