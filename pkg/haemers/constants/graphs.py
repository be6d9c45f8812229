"""Constants for graphs and vertex labels."""


class LabelKind:
    """Vertex label kinds."""
    BASE = "base"
    LEVEL = "level"
    APEX = "apex"


APEX_TEXT = "z"
LEVEL_SEPARATOR = "@"


class GraphKind:
    """Named graph families."""
    COMPLETE = "complete"
    CYCLE = "cycle"
    EMPTY = "empty"
    PATH = "path"


class VertexClass:
    """Vertex classes of a generalized Mycielskian, as grouped by the dimension check."""
    LEVEL0 = "level0"
    LEVEL1 = "level1"
    EVEN = "even"
    ODD = "odd"
    APEX = "apex"
