class TreekitError(Exception):
    """Base class for all treekit errors."""


class ParseError(TreekitError, ValueError):
    """Malformed input text."""


class GraphError(TreekitError, ValueError):
    """An operation was applied to a graph that violates its precondition."""


class EmbeddingError(GraphError):
    """A rotation system is inconsistent with its graph or not genus 0."""


class DissectionError(TreekitError, ValueError):
    """A rectangle dissection is not an exact cover, or a tile is unusable."""
