"""Re-export of the brute-force slope oracles shared with the suite runner."""

from cbgraph.oracles import (  # noqa: F401
    bfs_farey_distance,
    lattice_aa,
    lattice_ca,
    lattice_cc,
)
