//! Small graphs shared by unit tests.

use crate::multigraph::MultiGraph;

pub(crate) fn path(n: usize) -> MultiGraph {
    MultiGraph::new(n, (1..n).map(|i| (i as u32 - 1, i as u32))).unwrap()
}

pub(crate) fn cycle(n: usize) -> MultiGraph {
    MultiGraph::new(n, (0..n).map(|i| (i as u32, ((i + 1) % n) as u32))).unwrap()
}

pub(crate) fn theta() -> MultiGraph {
    MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub(crate) fn dumbbell() -> MultiGraph {
    MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)]).unwrap()
}

pub(crate) fn k4() -> MultiGraph {
    MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// K_{1,3}: center 0, leaves 1..=3.
pub(crate) fn star() -> MultiGraph {
    MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap()
}
