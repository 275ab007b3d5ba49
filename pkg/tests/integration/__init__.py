"""Integration tests for MCP Semantic Router."""
