//! Exact metric dimensions of graphs and the structural machinery that
//! computes them on cactus graphs: BBR sets, cycle configurations,
//! incidence graphs, and block-composition bounds.

pub mod blocks;
pub mod cactus;
pub mod caps;
pub mod distance;
pub mod error;
pub mod graph;
pub mod threads;

pub mod dimension;

pub use blocks::{block_decomposition, cyclomatic_number, Block, BlockDecomposition};
pub use cactus::{
    cactus_profile, enumerate_smallest_bbr, extremal_classification, is_bbr, is_cactus,
    structural_dimensions, vertex_cover_number, BbrSet, CactusAnalyzer, CactusProfile,
    DimensionBreakdown, ExtremalClassification,
};
pub use caps::Caps;
pub use dimension::{
    distinguishes, exact_dimension, exact_dimension_with, is_generator, undistinguished_pairs,
    DimensionMode, GeneratorWitness, Item,
};
pub use distance::{all_pairs_distances, vertex_edge_distance, DistanceOracle};
pub use error::{Error, Result};
pub use graph::{degree_stats, DegreeStats, Graph};
pub use threads::{thread_profile, Thread, ThreadProfile};
