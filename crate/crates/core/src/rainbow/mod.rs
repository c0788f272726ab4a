//! Rainbow structures: thinned colorings, rainbow Hamiltonian cycles,
//! degree-restricted covers and rainbow paths.

pub mod deg2n;
pub mod hamiltonian;
pub mod orientation;
pub mod paths;
pub mod rainbow_path;
pub mod thinning;

pub use deg2n::{cover_cycle_deg_2n, Deg2nCover};
pub use hamiltonian::{find_rainbow_hamiltonian_cycle, find_rainbow_hamiltonian_cycle_with_cap, HamiltonianSearch, RainbowCycle};
pub use orientation::{balanced_orientation, Multigraph, Orientation};
pub use paths::{independence_number, minimum_path_cover, path_partition_gallai_milgram, PathPartition};
pub use rainbow_path::{double_factorial_bound, find_rainbow_path, span_condition_holds, EdgeColoredGraph, RainbowPath, RainbowPathSearch};
pub use thinning::{thin_colors, usage_bound, ThinnedColoring};
