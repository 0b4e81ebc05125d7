//! String C-group decisions, classification among orthogonal groups, and the
//! singular-space machinery.

pub mod classify;
pub mod euclid;
pub mod orders;
pub mod verdict;

pub use classify::{classify, classify_diagram, chain_kernel_check, Classification, ChainKernelReport, Tag};
pub use euclid::{euclidean_split_check, transvection_tower, EuclideanSplit, TransvectionTower};
pub use orders::{hat_o1_order, hat_orthogonal_order, o1_order, orthogonal_order, spherical_orders};
pub use verdict::{
    intersection_profile, is_string_cgroup, is_string_cgroup_instance, CGroupVerdict,
    IntersectionProfile, SubspaceCase,
};
