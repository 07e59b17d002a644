"""Unit tests for environment utility functions."""
from unittest.mock import patch

import pytest

from app.utils.env_util import WALK_MOVES, get_env, get_env_bool, get_env_int, get_env_weights, is_env_set

DEFAULT_WEIGHTS = {"r1": 40, "r2": 40, "r3": 10, "flype": 10}


class TestEnvUtils:
    """Unit tests for the scalar readers."""

    def test_get_env_with_existing_variable(self) -> None:
        """Test getting an environment variable that exists."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = "DEBUG"

            result = get_env("VKNOT_LOG_LEVEL", "INFO")

            mock_getenv.assert_called_once_with("VKNOT_LOG_LEVEL", "INFO")
            assert result == "DEBUG"

    def test_get_env_int_with_valid_integer(self) -> None:
        """Test that a set variable is parsed as an integer."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = "16"

            result = get_env_int("VKNOT_STATE_LIMIT", 20)

            mock_getenv.assert_called_once_with("VKNOT_STATE_LIMIT")
            assert result == 16

    def test_get_env_int_with_default_value(self) -> None:
        """Test that an unset variable gives the default."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = None

            assert get_env_int("VKNOT_WORKERS", 1, minimum=1) == 1

    @pytest.mark.parametrize("raw", ["many", "2.5", ""])
    def test_get_env_int_with_invalid_string_should_raise_error(self, raw: str) -> None:
        """Test that the error names the variable holding a non-integer."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = raw

            with pytest.raises(ValueError, match="VKNOT_WORKERS must be an integer"):
                get_env_int("VKNOT_WORKERS", 1)

    def test_get_env_int_below_minimum_should_raise_error(self) -> None:
        """Test that values below the minimum are rejected."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = "0"

            with pytest.raises(ValueError, match="VKNOT_WORKERS must be at least 1, got 0"):
                get_env_int("VKNOT_WORKERS", 1, minimum=1)

    @pytest.mark.parametrize(
        ("raw", "expected"),
        [("True", True), ("1", True), ("yEs", True), (" on ", True), ("False", False), ("0", False), ("", False)],
    )
    def test_get_env_bool_case_insensitive(self, raw: str, expected: bool) -> None:  # noqa: FBT001
        """Test that get_env_bool is case insensitive for string values."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = raw

            assert get_env_bool("VKNOT_TIMING", "false") is expected

    def test_get_env_bool_with_none_value(self) -> None:
        """Test that a missing variable without a usable default reads as False."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = None

            assert get_env_bool("VKNOT_TIMING", "false") is False

    def test_is_env_set_with_any_value(self) -> None:
        """Test that any non-empty value counts as set."""
        with patch("os.getenv") as mock_getenv:
            mock_getenv.return_value = "0"

            assert is_env_set("NO_COLOR") is True
            mock_getenv.assert_called_once_with("NO_COLOR")

    def test_is_env_set_with_missing_or_empty_value(self) -> None:
        """Test that missing and empty variables are not set."""
        for value in (None, ""):
            with patch("os.getenv") as mock_getenv:
                mock_getenv.return_value = value

                assert is_env_set("NO_COLOR") is False


class TestWalkWeights:
    """Unit tests for get_env_weights."""

    def test_unset_gives_default(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that an unset variable gives a copy of the defaults."""
        monkeypatch.delenv("VKNOT_WALK_WEIGHTS", raising=False)

        weights = get_env_weights("VKNOT_WALK_WEIGHTS", DEFAULT_WEIGHTS)

        assert weights == DEFAULT_WEIGHTS
        assert weights is not DEFAULT_WEIGHTS

    def test_parse_with_missing_moves(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that listed moves are parsed and the others get weight 0."""
        monkeypatch.setenv("VKNOT_WALK_WEIGHTS", "R1=5, r3 = 2")

        weights = get_env_weights("VKNOT_WALK_WEIGHTS", DEFAULT_WEIGHTS)

        assert weights == {"r1": 5, "r2": 0, "r3": 2, "flype": 0}
        assert tuple(weights) == WALK_MOVES

    @pytest.mark.parametrize(
        ("raw", "message"),
        [
            ("r4=1", "expected one of r1, r2, r3, flype"),
            ("r1", "expected one of"),
            ("r1=x", "weight of r1 must be an integer"),
            ("r1=-1", "weight of r1 must not be negative"),
            ("r1=0,flype=0", "at least one weight must be positive"),
        ],
    )
    def test_malformed_should_raise_error(self, monkeypatch: pytest.MonkeyPatch, raw: str, message: str) -> None:
        """Test that malformed weights name the variable and the problem."""
        monkeypatch.setenv("VKNOT_WALK_WEIGHTS", raw)

        with pytest.raises(ValueError, match=f"VKNOT_WALK_WEIGHTS: {message}"):
            get_env_weights("VKNOT_WALK_WEIGHTS", DEFAULT_WEIGHTS)
