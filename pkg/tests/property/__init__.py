"""Property-based tests for MCP Semantic Router using Hypothesis."""
