//! Minimal hitting sets of an ordered hypergraph, enumerated in
//! lexicographic order with polynomially bounded delay.
//!
//! The pieces:
//!
//! * [`OrderedHypergraph`] and [`VertexSet`]: the data model and the
//!   lexicographic order on vertex sets.
//! * [`oracle`]: decides whether a pair `(X, Y)` extends to a minimal
//!   transversal containing `X` and avoiding `Y`, plus the reductions to and
//!   from the multicoloured independent family problem.
//! * [`family`]: independent family instances, their weft-3 circuits and
//!   antimonotone formula encodings.
//! * [`enumerate`]: the flashlight enumerator with per-run statistics.
//! * [`reference`]: slow exhaustive oracles used for cross-checking.
//! * [`cli`]: the commands behind the `lexhit` binary.
//!
//! ```
//! use lexhit::OrderedHypergraph;
//!
//! let h = OrderedHypergraph::parse("vertices: a b c\nedge: a b\nedge: b c\n").unwrap();
//! let all: Vec<_> = lexhit::enumerate(&h).map(|s| h.labels(&s).join(" ")).collect();
//! assert_eq!(all, ["a c", "b"]);
//! ```

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod hypergraph;
pub mod oracle;
pub mod reference;
pub mod set;

pub use enumerate::{enumerate, lex_largest_greedy, lex_smallest, Enumeration, EnumerationStats};
pub use error::{Error, Result};
pub use family::{MultiColouredInstance, Selection, SingleColouredInstance};
pub use hypergraph::OrderedHypergraph;
pub use oracle::{extend_decide, ExtensionQuery, WitnessForm};
pub use set::{VertexId, VertexSet};
