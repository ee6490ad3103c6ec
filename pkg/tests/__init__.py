"""Tests for qfrieze."""
