"""Pytest bootstrap; helpers live in helpers.py."""
