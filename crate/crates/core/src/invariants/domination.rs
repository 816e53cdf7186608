use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Largest order accepted by the subset-enumeration routines.
pub const SUBSET_MAX_ORDER: usize = 16;

/// A minimum dominating set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub gamma: usize,
    pub vertex_set: Vec<usize>,
}

impl DominationCertificate {
    fn from_mask(mask: u32, n: usize) -> Self {
        let vertex_set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        DominationCertificate { gamma: vertex_set.len(), vertex_set }
    }
}

pub fn is_dominating(tree: &Tree, set: &[usize]) -> bool {
    let mut covered = vec![false; tree.order()];
    for &v in set {
        if v >= tree.order() {
            return false;
        }
        covered[v] = true;
        for &u in tree.neighbors(v) {
            covered[u] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    /// in the set
    Chosen,
    /// outside the set, dominated by a child
    Dominated,
    /// outside the set, waiting to be dominated by its parent
    Pending,
}

const INF: usize = usize::MAX / 4;

/// Minimum dominating set by dynamic programming over the tree rooted at 0.
///
/// Ties in the backtrace are broken towards `Chosen`, and a vertex that must
/// be dominated by one of its children forces the lowest-index child that
/// achieves the optimum.
pub fn domination_number(tree: &Tree) -> DominationCertificate {
    let n = tree.order();
    let (parent, order) = tree.rooted(0);
    let parent = &parent;
    let children = |u: usize| tree.neighbors(u).iter().copied().filter(move |&v| v != parent[u]);

    let mut chosen = vec![0usize; n];
    let mut dominated = vec![INF; n];
    let mut pending = vec![0usize; n];
    for &u in order.iter().rev() {
        let mut c = 1;
        let mut p = 0;
        let mut base = 0;
        let mut extra = INF;
        let mut has_child = false;
        for v in children(u) {
            has_child = true;
            c += chosen[v].min(dominated[v]).min(pending[v]);
            p = (p + dominated[v]).min(INF);
            let best = chosen[v].min(dominated[v]);
            base += best;
            extra = extra.min(chosen[v] - best);
        }
        chosen[u] = c;
        pending[u] = p;
        dominated[u] = if has_child { base + extra } else { INF };
    }

    let mut state = vec![State::Chosen; n];
    state[0] = if chosen[0] <= dominated[0] { State::Chosen } else { State::Dominated };
    for &u in &order {
        match state[u] {
            State::Chosen => {
                for v in children(u) {
                    let best = chosen[v].min(dominated[v]).min(pending[v]);
                    state[v] = if chosen[v] == best {
                        State::Chosen
                    } else if dominated[v] == best {
                        State::Dominated
                    } else {
                        State::Pending
                    };
                }
            }
            State::Dominated => {
                let forced = children(u)
                    .min_by_key(|&v| (chosen[v] - chosen[v].min(dominated[v]), v))
                    .expect("dominated vertex has a child");
                for v in children(u) {
                    state[v] = if v == forced || chosen[v] <= dominated[v] {
                        State::Chosen
                    } else {
                        State::Dominated
                    };
                }
            }
            State::Pending => {
                for v in children(u) {
                    state[v] = State::Dominated;
                }
            }
        }
    }

    let vertex_set: Vec<usize> = (0..n).filter(|&v| state[v] == State::Chosen).collect();
    debug_assert_eq!(vertex_set.len(), chosen[0].min(dominated[0]));
    DominationCertificate { gamma: vertex_set.len(), vertex_set }
}

fn closed_neighbourhoods(tree: &Tree) -> Vec<u32> {
    (0..tree.order())
        .map(|v| tree.neighbors(v).iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect()
}

fn guard(tree: &Tree, what: &'static str) -> Result<()> {
    if tree.order() > SUBSET_MAX_ORDER {
        return Err(Error::TooLarge { what, n: tree.order(), limit: SUBSET_MAX_ORDER });
    }
    Ok(())
}

/// Minimum size over all `2^n` vertex subsets that dominate the tree.
pub fn domination_number_oracle(tree: &Tree) -> Result<usize> {
    guard(tree, "subset domination oracle")?;
    let n = tree.order();
    let closed = closed_neighbourhoods(tree);
    let best = (0u32..1 << n)
        .filter(|&mask| closed.iter().all(|&nb| nb & mask != 0))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full vertex set dominates");
    Ok(best)
}

/// Every minimum dominating set, in lexicographic order of the sorted
/// vertex lists.
pub fn min_dominating_sets(tree: &Tree) -> Result<Vec<DominationCertificate>> {
    guard(tree, "minimum dominating set enumeration")?;
    let n = tree.order();
    let gamma = domination_number(tree).gamma;
    let closed = closed_neighbourhoods(tree);
    let mut out = Vec::new();
    // Gosper's hack over all masks of popcount gamma
    let mut mask: u32 = (1 << gamma) - 1;
    while mask < 1 << n {
        if closed.iter().all(|&nb| nb & mask != 0) {
            out.push(DominationCertificate::from_mask(mask, n));
        }
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::free_trees;

    #[test]
    fn stars_have_gamma_one() {
        for n in 1..=9 {
            let cert = domination_number(&Tree::star(n).unwrap());
            assert_eq!(cert.gamma, 1);
            assert_eq!(cert.vertex_set, vec![0]);
        }
    }

    #[test]
    fn paths_follow_ceiling_of_thirds() {
        for n in 1usize..=20 {
            let cert = domination_number(&Tree::path(n).unwrap());
            assert_eq!(cert.gamma, n.div_ceil(3), "P{n}");
        }
        assert_eq!(domination_number_oracle(&Tree::path(3).unwrap()).unwrap(), 1);
        assert_eq!(domination_number_oracle(&Tree::path(7).unwrap()).unwrap(), 3);
    }

    #[test]
    fn spider_two_two_one() {
        let t = Tree::spider(&[2, 2, 1]).unwrap();
        assert_eq!(domination_number(&t).gamma, 3);
        assert_eq!(domination_number_oracle(&t).unwrap(), 3);
    }

    #[test]
    fn certificates_dominate_and_match_oracle() {
        for n in 1..=10 {
            for t in free_trees(n) {
                let cert = domination_number(&t);
                assert!(is_dominating(&t, &cert.vertex_set));
                assert_eq!(cert.gamma, domination_number_oracle(&t).unwrap());
            }
        }
    }

    #[test]
    fn certificate_is_deterministic() {
        let p6 = Tree::path(6).unwrap();
        assert_eq!(domination_number(&p6), domination_number(&p6));
        assert_eq!(domination_number(&p6).gamma, 2);
    }

    #[test]
    fn minimum_sets_of_small_trees() {
        let p3 = min_dominating_sets(&Tree::path(3).unwrap()).unwrap();
        assert_eq!(p3, vec![DominationCertificate { gamma: 1, vertex_set: vec![1] }]);

        let p4 = min_dominating_sets(&Tree::path(4).unwrap()).unwrap();
        let sets: Vec<_> = p4.iter().map(|c| c.vertex_set.clone()).collect();
        assert_eq!(sets, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);

        let s5 = min_dominating_sets(&Tree::star(5).unwrap()).unwrap();
        assert_eq!(s5.len(), 1);
        assert_eq!(s5[0].vertex_set, vec![0]);
    }

    #[test]
    fn cost_guards() {
        let big = Tree::path(17).unwrap();
        assert!(matches!(domination_number_oracle(&big), Err(Error::TooLarge { .. })));
        assert!(min_dominating_sets(&big).is_err());
        assert_eq!(domination_number(&big).gamma, 6);
    }
}
