"""MCP Semantic Router test suite."""
