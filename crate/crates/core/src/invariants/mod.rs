//! Degree-power index, domination number and the induced edge partition.

mod domination;
mod partition;
mod randic;

pub use domination::{
    domination_number, domination_number_oracle, is_dominating, min_dominating_sets,
    DominationCertificate, SUBSET_MAX_ORDER,
};
pub use partition::{edge_partition, EdgePartition};
pub use randic::{degree_power_sum, zeroth_order_general_randic, zeroth_order_general_randic_exact};
