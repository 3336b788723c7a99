//! Contribution-weighted author citation metrics.
//!
//! Each article's citations are split over its byline with a partition of
//! unity sampled from the Bernstein (or stretched Bernstein-S) basis. The
//! subject author's share of every article is summed into a personal total
//! `C`, averaged over all articles into `Q`, and capped by productivity into
//! the index `P = min(N, Q)`.
//!
//! ```
//! use pindex_core::partition::{make_psequence, PartitionPolicy};
//!
//! let policy = PartitionPolicy::default_schedule(7);
//! let seq = make_psequence(2, &policy).unwrap();
//! assert!((seq.fractions[0] - 0.8).abs() < 1e-12);
//! ```

pub mod basis;
pub mod error;
pub mod ingest;
pub mod metrics;
pub mod partition;
pub mod render;
mod sum;

pub use error::{Error, Result};
