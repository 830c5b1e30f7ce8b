"""Grid shapes grown by doubling operations: simulation, decision and
constructor synthesis."""

from __future__ import annotations

from .errors import (
    FormatError,
    InvalidOperation,
    ModelError,
    NotReachable,
    ReplayError,
    ShapeError,
    ShapeGrowthError,
)
from .full import (
    FullDoublingCounts,
    apply_full_doubling,
    full_doubling_constructor,
    reach_full_doubling,
    reconfigure,
)
from .general import (
    apply_node_doubling,
    apply_pure_growth,
    apply_rect_growth,
    baseline_constructor,
    bfs_constructor,
    partition_constructor,
)
from .ops import (
    Constructor,
    FullDoublingOp,
    NodeDoubleOp,
    PureGrowthOp,
    RcOp,
    RectBlock,
    RectGrowthOp,
)
from .partition import RectPartition, build_adjacency_and_tree, min_partition
from .rc import apply_rc, decide_rc, serialize_parallel, synthesize_rc
from .shape import (
    BaselineProfile,
    Direction,
    Rect,
    Shape,
    baseline,
    equal_up_to_translation,
    normalize,
    rectangle,
)

__all__ = [
    "BaselineProfile",
    "Constructor",
    "Direction",
    "FormatError",
    "FullDoublingCounts",
    "FullDoublingOp",
    "InvalidOperation",
    "ModelError",
    "NodeDoubleOp",
    "NotReachable",
    "PureGrowthOp",
    "RcOp",
    "Rect",
    "RectBlock",
    "RectGrowthOp",
    "RectPartition",
    "ReplayError",
    "Shape",
    "ShapeError",
    "ShapeGrowthError",
    "apply_full_doubling",
    "apply_node_doubling",
    "apply_pure_growth",
    "apply_rc",
    "apply_rect_growth",
    "baseline",
    "baseline_constructor",
    "bfs_constructor",
    "build_adjacency_and_tree",
    "decide_rc",
    "equal_up_to_translation",
    "full_doubling_constructor",
    "min_partition",
    "normalize",
    "partition_constructor",
    "reach_full_doubling",
    "reconfigure",
    "rectangle",
    "serialize_parallel",
    "synthesize_rc",
]
