use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Edge counts relative to a vertex set `D`: crossing, inside `D`, and
/// inside the complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
}

impl EdgePartition {
    pub fn l2_minus_l3(&self) -> i64 {
        self.l2 as i64 - self.l3 as i64
    }

    /// Checks the edge-count and degree-sum identities against `tree` and
    /// the set the partition was computed from.
    pub fn identities_hold(&self, tree: &Tree, set: &[usize]) -> bool {
        let mut inside = vec![false; tree.order()];
        for &v in set {
            inside[v] = true;
        }
        let (mut sum_in, mut sum_out) = (0, 0);
        for (v, d) in tree.degrees().enumerate() {
            if inside[v] {
                sum_in += d;
            } else {
                sum_out += d;
            }
        }
        self.l1 + self.l2 + self.l3 == tree.order() - 1
            && sum_in == self.l1 + 2 * self.l2
            && sum_out == self.l1 + 2 * self.l3
    }
}

pub fn edge_partition(tree: &Tree, set: &[usize]) -> Result<EdgePartition> {
    let n = tree.order();
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { u: v, v, n });
        }
        inside[v] = true;
    }
    let mut part = EdgePartition { l1: 0, l2: 0, l3: 0 };
    for (u, v) in tree.edges() {
        match (inside[u], inside[v]) {
            (true, true) => part.l2 += 1,
            (false, false) => part.l3 += 1,
            _ => part.l1 += 1,
        }
    }
    Ok(part)
}
