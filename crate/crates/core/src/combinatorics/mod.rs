//! Exact half-integer arithmetic, segments, descending multisets, partitions
//! and the dominance order.

mod halfint;
mod multiset;
mod partition;
mod segment;

pub use halfint::{parse_halfint_list, HalfInt};
pub use multiset::{merge_descending, partial_sums_leq, DescMultiset};
pub use partition::{dominates, Partition};
pub use segment::{segment_elements, Segment};
