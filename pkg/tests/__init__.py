"""Test package for focusdrt."""
