"""Random partitions and plane partitions workbench.

Exact combinatorics, random samplers, determinantal correlation kernels,
and desk-scale checks of the associated limit theorems.
"""

__version__ = "0.1.0"

from .partitions import (
    FacePoint,
    HalfInt,
    MayaWindow,
    Partition,
    Permutation,
    PlanePartition,
    diagonal_slices,
    dim_oracle,
    enumerate_partitions,
    enumerate_plane_partitions,
    face_points,
    greene_invariants,
    hook_dim,
    interlaces,
    iter_plane_partitions,
    maya_set,
    partition_from_maya,
    plane_partition_counts,
    rsk,
)

__all__ = [
    "__version__",
    "FacePoint",
    "HalfInt",
    "MayaWindow",
    "Partition",
    "Permutation",
    "PlanePartition",
    "diagonal_slices",
    "dim_oracle",
    "enumerate_partitions",
    "enumerate_plane_partitions",
    "face_points",
    "greene_invariants",
    "hook_dim",
    "interlaces",
    "iter_plane_partitions",
    "maya_set",
    "partition_from_maya",
    "plane_partition_counts",
    "rsk",
]
