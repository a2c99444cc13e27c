//! Consecutive pattern avoidance in permutations: exhaustive counting,
//! chain and cluster enumeration, exponential generating function
//! arithmetic, specialized recurrences and Golod–Shafarevich style bounds.

pub mod chains;
pub mod closed_forms;
pub mod decimal;
pub mod egf;
pub mod error;
pub mod oracle;
pub mod pattern;
pub mod perm;
pub mod roots;

pub use chains::{
    chain_factorizations, enumerate_chains, enumerate_clusters, is_chain, list_chains,
    list_clusters, Chain, ChainTable, Cluster, ClusterTable, MAX_LEN,
};
pub use closed_forms::{resolve, ClosedForm, LSeriesTable, Resolved, Symmetry};
pub use egf::{
    count_avoiders_via_chains, count_avoiders_via_clusters, gs_defect, gs_inequality_holds,
    gs_kernel, gs_product, kernel_from_chains, verify_gs_inequality, Egf, GsKernelPoly,
};
pub use error::{Error, Result};
pub use oracle::{FullOutcome, OccurrenceProfile, Oracle, WilfOutcome, DEFAULT_GUARD};
pub use pattern::{
    antichain_reduce, avoids, occurrence_count, self_overlaps, OverlapProfile, PatternSet,
};
pub use perm::{occurrences, standardize, Permutation};
pub use roots::{
    asymptotic_lower_bound, lower_bound_from_root, smallest_positive_root, RootBracket,
};
