//! Extremal bounds for nonhamiltonian graphs, exact hamiltonicity solvers,
//! saturation closure and stability certificates.

pub mod certify;
pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod harness;
pub mod posa;
pub mod saturation;

pub use graph::{Graph, GraphError, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/bounds.md")]
    struct Bounds;
    #[doc = include_str!("../../../book/src/constructions.md")]
    struct Constructions;
    #[doc = include_str!("../../../book/src/hamiltonicity.md")]
    struct Hamiltonicity;
    #[doc = include_str!("../../../book/src/saturation.md")]
    struct Saturation;
    #[doc = include_str!("../../../book/src/certificates.md")]
    struct Certificates;
    #[doc = include_str!("../../../book/src/verification.md")]
    struct Verification;
}
