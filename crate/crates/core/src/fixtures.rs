//! Small reference hypergraphs used throughout the tests and docs.

use crate::hypergraph::{HypergraphBuilder, OrientedHypergraph};

/// Oriented 3-circuit with adjacency matrix
/// `[[0,1,1],[1,0,-1],[1,-1,0]]`.
pub fn t3() -> OrientedHypergraph {
    HypergraphBuilder::new()
        .vertex("v1")
        .vertex("v2")
        .vertex("v3")
        .edge("e12")
        .edge("e13")
        .edge("e23")
        .incidence("v1", "e12", 1)
        .incidence("v2", "e12", -1)
        .incidence("v1", "e13", 1)
        .incidence("v3", "e13", -1)
        .incidence("v2", "e23", 1)
        .incidence("v3", "e23", 1)
        .build()
        .expect("fixture is valid")
}

/// Extroverted 3-edge: one edge holding all three vertices, every sign `+1`.
pub fn x3() -> OrientedHypergraph {
    HypergraphBuilder::new()
        .vertex("v1")
        .vertex("v2")
        .vertex("v3")
        .edge("e")
        .incidence("v1", "e", 1)
        .incidence("v2", "e", 1)
        .incidence("v3", "e", 1)
        .build()
        .expect("fixture is valid")
}

pub const T3_TEXT: &str = "\
# oriented 3-circuit
v v1
v v2
v v3
e e12
e e13
e e23
i v1 e12 +
i v2 e12 -
i v1 e13 +
i v3 e13 -
i v2 e23 +
i v3 e23 +
";

pub const X3_TEXT: &str = "\
# extroverted 3-edge
v v1
v v2
v v3
e e
i v1 e +
i v2 e +
i v3 e +
";
