//! Structural construction of signed circuit 6-covers.

mod builder;
mod chain;
mod double;
mod engine;
mod matching;
mod search;
mod splice;
mod tables;
mod triangle;

pub use chain::{series_compose, series_psi_status, SeriesPsiStatus, ThetaPattern};
pub use double::{double_block_compose, BlockSide, DoubleBlock};
pub use builder::{construct_six_cover, construct_six_cover_with, BuildOptions, Provenance};
pub use matching::{match_switching, SwitchingMatch};
pub use search::{psi_search, PsiSpec, TadpoleClass};
pub use splice::{two_sum_replace, Splice};
pub use tables::base_psi_cover;
pub use triangle::{triangle_extend, triangle_extend_small};
