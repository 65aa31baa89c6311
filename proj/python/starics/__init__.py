"""Star graph ST_n: 1-ics trees, threaded quotient and weight distributions."""

from ._core import (  # noqa: F401
    Permutation,
    ResourceGuardError,
    antipode_count,
    bfs_histogram,
    class_distribution,
    class_size,
    diameter,
    eset_distribution,
    gamma,
    gamma_dot,
    is_admissible,
    ledger,
    table,
    table_column,
    tree,
    tree_dot,
    vertex_distribution,
    verify_quotient,
)
