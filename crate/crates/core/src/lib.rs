//! Path algebra on directed graphs with edge costs and capacities.
//!
//! - [`center`]: 1-center by binary search over Boolean matrix powers.
//! - [`bottleneck`]: graph bottleneck by binary search over capacities.
//! - [`dfpair`] and [`apspaf`]: shortest paths for every flow demand, via
//!   frontiers of (distance, flow) pairs.
//! - [`semiring`]: the shared matrix layer (min-plus, max-min, frontiers).
//! - [`oracle`]: slow brute-force references for testing.

pub mod apspaf;
pub mod boolmat;
pub mod bottleneck;
pub mod center;
pub mod dfpair;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod semiring;
pub mod value;

pub use apspaf::{apspaf_floyd, apspaf_squaring, DfMatrix};
pub use boolmat::{BoolMatrix, Orientation};
pub use bottleneck::{graph_bottleneck, GbResult, Predicate};
pub use center::{avg_center, graph_center, CenterMode, CenterResult};
pub use dfpair::{DfPair, Frontier};
pub use error::{Error, Result};
pub use graph::{load_edge_list, Edge, EdgeFormat, Graph};
pub use semiring::{CapMatrix, DistMatrix, Matrix};
pub use value::{Capacity, Distance, Extended, Flow};
