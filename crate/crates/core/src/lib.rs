pub mod chow;
pub mod claim;
pub mod cones;
pub mod construction;
pub mod exact;
pub mod grassmann;
pub mod lattice;
pub mod report;
