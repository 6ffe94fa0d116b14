//! Fixture constructors shared by the benchmarks.

#![forbid(unsafe_code)]

use matchext::families::{self, NamedGraph, RingClosure};
use matchext::graph::Graph;

pub fn petersen() -> Graph {
    families::named(NamedGraph::Petersen)
}

pub fn dodecahedron() -> Graph {
    families::named(NamedGraph::Dodecahedron)
}

pub fn big_ring() -> Graph {
    families::t_m(6, RingClosure::Straight).unwrap()
}

pub fn big_gp() -> Graph {
    families::gp(12, 2).unwrap()
}

pub fn dense_circulant() -> Graph {
    families::circulant(24, &[1, 2, 22, 23, 12]).unwrap()
}
