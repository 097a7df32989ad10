//! Fragment splitting by repeated shortest-path edge removal.

use rand::Rng;

use super::Graph;
use crate::error::{invalid, Result};

/// A fragment: an induced subgraph plus the original index of each node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub graph: Graph,
    pub nodes: Vec<usize>,
}

/// Splits `g` into two fragments.
///
/// An edge `{a, b}` is drawn uniformly; then, while `a` and `b` stay
/// connected, a uniformly chosen edge of the BFS shortest path between them
/// is deleted. The first fragment is `a`'s component in the cut graph, the
/// second is the cut graph induced on every other node.
pub fn globus_split<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<(Fragment, Fragment)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(invalid("cannot split an edgeless graph"));
    }
    let (a, b) = edges[rng.gen_range(0..edges.len())];
    let mut cut = *g;
    while let Some(path) = shortest_path(&cut, a, b) {
        let k = rng.gen_range(0..path.len() - 1);
        cut.set_edge(path[k], path[k + 1], false);
    }
    let comp = cut.component_of(a);
    let first: Vec<usize> = (0..g.n()).filter(|&i| (comp >> i) & 1 == 1).collect();
    let second: Vec<usize> = (0..g.n()).filter(|&i| (comp >> i) & 1 == 0).collect();
    Ok((
        Fragment { graph: cut.induced(&first), nodes: first },
        Fragment { graph: cut.induced(&second), nodes: second },
    ))
}

/// BFS path from `from` to `to`, expanding neighbors in ascending order.
pub(crate) fn shortest_path(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in 0..n {
            if g.has_edge(v, w) && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}
