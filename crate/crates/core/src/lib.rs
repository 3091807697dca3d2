//! Nearly complete intersection edge ideals.
//!
//! A squarefree monomial ideal generated in degree at least two is a *nearly
//! complete intersection* (NCI) when it is not a complete intersection but
//! setting any one of its variables to 1 leaves a complete intersection. For
//! the edge ideal of a graph that last step is graph *inversion*: delete a
//! vertex and keep only the edges among its non-neighbors.
//!
//! The crate decides NCI status for graphs two independent ways:
//!
//! * [`classify::is_nci_definitional`] inverts every vertex;
//! * [`classify::classify`] uses the structural rule: a connected graph on
//!   five or more vertices is an NCI exactly when no five vertices induce a
//!   subgraph with a leaf whose neighbor has degree two in a spanning `P5` or
//!   `T`.
//!
//! [`enumerate`] checks that the two agree on every connected graph up to
//! seven vertices, and [`betti`] computes graded Betti numbers exactly so the
//! total-rank bound `2^c + 2^(c-1)` can be checked on the same graphs.
//!
//! ```
//! use nci::{classify::classify, Graph};
//! let triangle = Graph::from_pairs([("a", "b"), ("a", "c"), ("b", "c")]).unwrap();
//! assert!(classify(&triangle).is_nci());
//! ```
//!
//! The guide under `book/` walks through each piece; its snippets run as
//! doctests of this crate.

pub mod betti;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod io;

pub use betti::{betti_table, total_rank_check, BettiTable, TotalRankCheck};
pub use classify::{
    classify, classify_ideal, find_obstruction, is_nci_definitional, ClassificationReport,
    Evidence, Method, Obstruction, TreeType, Verdict,
};
pub use error::{Error, Result};
pub use graph::{families, Edge, Graph, VertexId};
pub use ideal::{edge_ideal, graph_of, minimalize, Monomial, MonomialIdeal, NciStatus, Variable};

#[cfg(doctest)]
mod booktest {
    macro_rules! booktest {
        ($i:ident) => {
            #[doc = include_str!(concat!("../../../book/src/", stringify!($i), ".md"))]
            mod $i {}
        };
    }
    booktest!(introduction);
    booktest!(graphs);
    booktest!(ideals);
    booktest!(classification);
    booktest!(betti);
    booktest!(enumeration);
    booktest!(cli);
}
