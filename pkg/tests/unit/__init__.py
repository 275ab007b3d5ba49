"""Unit tests for MCP Semantic Router."""
