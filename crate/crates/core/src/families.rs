//! Extremal tree families.
//!
//! * F1(n, γ): γ stars whose leaf counts are ⌊(n−γ)/γ⌋ or ⌈(n−γ)/γ⌉, tied
//!   into a tree by γ−1 leaf-to-leaf edges (each leaf used at most once).
//! * F2(n, γ): the path when γ = ⌈n/3⌉; above that, trees in which no vertex
//!   has two pendent neighbours and some minimum dominating set has one of
//!   two prescribed degree profiles.
//! * F3(n, γ): the star on n−γ+1 vertices with a pendant edge hung on γ−1 of
//!   its leaves.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate::free_trees;
use crate::error::{Error, Result};
use crate::invariants::{domination_number, min_dominating_sets};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    F1,
    F2,
    F3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F1 => "f1",
            Family::F2 => "f2",
            Family::F3 => "f3",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(Family::F1),
            "f2" => Ok(Family::F2),
            "f3" => Ok(Family::F3),
            other => Err(Error::InvalidParameters(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyKind {
    pub tag: Family,
    pub n: usize,
    pub gamma: usize,
}

impl FamilyKind {
    pub fn new(tag: Family, n: usize, gamma: usize) -> Result<Self> {
        let kind = FamilyKind { tag, n, gamma };
        kind.validate()?;
        Ok(kind)
    }

    pub fn is_feasible(tag: Family, n: usize, gamma: usize) -> bool {
        FamilyKind { tag, n, gamma }.validate().is_ok()
    }

    fn validate(&self) -> Result<()> {
        let FamilyKind { tag, n, gamma } = *self;
        let ok = match tag {
            Family::F1 => n >= 3 && gamma >= 1 && 3 * gamma <= n,
            Family::F2 => n >= 2 && gamma >= n.div_ceil(3) && 2 * gamma <= n,
            Family::F3 => n >= 2 && gamma >= 1 && 2 * gamma <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("{tag}({n}, {gamma}) is not a feasible family")))
        }
    }
}

fn confirm_gamma(tree: Tree, kind: &str, gamma: usize) -> Result<Tree> {
    let got = domination_number(&tree).gamma;
    if got != gamma {
        return Err(Error::Construction(format!("{kind} member has domination number {got}, expected {gamma}")));
    }
    Ok(tree)
}

/// The star `S_{n-γ+1}` (center 0, leaves `1..=n-γ`) with a pendant edge
/// attached to leaves `1..γ`.
pub fn build_f3(n: usize, gamma: usize) -> Result<Tree> {
    FamilyKind::new(Family::F3, n, gamma)?;
    let leaves = n - gamma;
    let mut edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    edges.extend((1..gamma).map(|v| (v, leaves + v)));
    confirm_gamma(Tree::from_edges(n, &edges)?, "F3", gamma)
}

/// All non-isomorphic members of F1(n, γ), in canonical-code order.
pub fn build_f1_members(n: usize, gamma: usize) -> Result<Vec<Tree>> {
    FamilyKind::new(Family::F1, n, gamma)?;
    let base = (n - gamma) / gamma;
    let larger = (n - gamma) % gamma;
    let mut members = BTreeMap::new();
    for macro_tree in free_trees(gamma) {
        for big in combinations(gamma, larger) {
            let mut leaf_count = vec![base; gamma];
            for &s in &big {
                leaf_count[s] += 1;
            }
            if (0..gamma).any(|s| macro_tree.degree(s) > leaf_count[s]) {
                continue;
            }
            let tree = join_stars(&leaf_count, &macro_tree.edges())?;
            members.entry(canonical_code(&tree)).or_insert(tree);
        }
    }
    members.into_values().map(|t| confirm_gamma(t, "F1", gamma)).collect()
}

/// Stars with the given leaf counts, joined leaf-to-leaf along `links`.
fn join_stars(leaf_count: &[usize], links: &[(usize, usize)]) -> Result<Tree> {
    let mut edges = Vec::new();
    let mut leaves: Vec<Vec<usize>> = Vec::with_capacity(leaf_count.len());
    let mut next = 0;
    for &count in leaf_count {
        let center = next;
        next += 1;
        let mut own = Vec::with_capacity(count);
        for _ in 0..count {
            edges.push((center, next));
            own.push(next);
            next += 1;
        }
        leaves.push(own);
    }
    let mut used = vec![0usize; leaf_count.len()];
    for &(a, b) in links {
        edges.push((leaves[a][used[a]], leaves[b][used[b]]));
        used[a] += 1;
        used[b] += 1;
    }
    Tree::from_edges(next, &edges)
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// One member of F2(n, γ).
///
/// At γ = ⌈n/3⌉ this is the path. Above it, with `s = 3γ − n` and
/// `t = n − 2γ`, it is a spine of `s` vertices each carrying a leaf, except
/// that the last spine vertex carries a pendant path on `3t + 1` vertices
/// instead: `s` leaves, `s − 2` vertices of degree 3, the rest degree 2.
pub fn build_f2_member(n: usize, gamma: usize) -> Result<Tree> {
    FamilyKind::new(Family::F2, n, gamma)?;
    if gamma == n.div_ceil(3) {
        return Tree::path(n);
    }
    let spine = 3 * gamma - n;
    let tail = 3 * (n - 2 * gamma) + 1;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for v in 0..spine - 1 {
        edges.push((v, next));
        next += 1;
    }
    let mut prev = spine - 1;
    for _ in 0..tail {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    debug_assert_eq!(next, n);
    confirm_gamma(Tree::from_edges(n, &edges)?, "F2", gamma)
}

/// Membership test for one family, with the member codes precomputed.
#[derive(Debug, Clone)]
pub struct FamilyRecognizer {
    kind: FamilyKind,
    codes: Vec<CanonicalCode>,
}

impl FamilyRecognizer {
    pub fn new(kind: FamilyKind) -> Result<Self> {
        kind.validate()?;
        let mut codes = match kind.tag {
            Family::F1 => build_f1_members(kind.n, kind.gamma)?
                .iter()
                .map(canonical_code)
                .collect(),
            Family::F3 => vec![canonical_code(&build_f3(kind.n, kind.gamma)?)],
            Family::F2 => Vec::new(),
        };
        codes.sort();
        Ok(FamilyRecognizer { kind, codes })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn accepts(&self, tree: &Tree) -> Result<bool> {
        let gamma = domination_number(tree).gamma;
        self.accepts_with(tree, gamma, None)
    }

    /// Same as [`FamilyRecognizer::accepts`] with the domination number, and
    /// optionally the canonical code, already known.
    pub fn accepts_with(&self, tree: &Tree, gamma: usize, code: Option<&CanonicalCode>) -> Result<bool> {
        if tree.order() != self.kind.n || gamma != self.kind.gamma {
            return Ok(false);
        }
        match self.kind.tag {
            Family::F1 | Family::F3 => {
                let owned;
                let code = match code {
                    Some(c) => c,
                    None => {
                        owned = canonical_code(tree);
                        &owned
                    }
                };
                Ok(self.codes.binary_search(code).is_ok())
            }
            Family::F2 => is_f2_shape(tree, self.kind.n, gamma),
        }
    }
}

pub fn is_member(tree: &Tree, kind: FamilyKind) -> Result<bool> {
    FamilyRecognizer::new(kind)?.accepts(tree)
}

fn is_f2_shape(tree: &Tree, n: usize, gamma: usize) -> Result<bool> {
    if gamma == n.div_ceil(3) {
        return Ok(tree.is_path());
    }
    let two_pendent_neighbours = (0..n)
        .any(|v| tree.neighbors(v).iter().filter(|&&u| tree.is_leaf(u)).count() >= 2);
    if two_pendent_neighbours || tree.max_degree() > 3 {
        return Ok(false);
    }
    let (ni, gi) = (n as i64, gamma as i64);
    // (count of degree 1, 2, 3) inside D and outside D
    let clause_two = ([3 * gi - ni, ni - 2 * gi, 0], [0, 2 * (ni - 2 * gi + 1), 3 * gi - ni - 2]);
    // only consistent in size when n = 2γ + 2
    let clause_one = (n == 2 * gamma + 2)
        .then_some(([0, 2 * (ni - 2 * gi), 3 * gi - ni - 2], [3 * gi - ni, ni - 2 * gi + 2, 0]));

    for cert in min_dominating_sets(tree)? {
        let mut inside = vec![false; n];
        for &v in &cert.vertex_set {
            inside[v] = true;
        }
        let mut profile = ([0i64; 3], [0i64; 3]);
        for v in 0..n {
            let d = tree.degree(v);
            let side = if inside[v] { &mut profile.0 } else { &mut profile.1 };
            side[d - 1] += 1;
        }
        let single_dominator = (0..n)
            .filter(|&v| !inside[v])
            .all(|v| tree.neighbors(v).iter().filter(|&&u| inside[u]).count() == 1);
        if profile == clause_two && single_dominator {
            return Ok(true);
        }
        if clause_one == Some(profile) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::approx_eq;
    use crate::invariants::zeroth_order_general_randic;

    #[test]
    fn f3_shapes() {
        let star = build_f3(7, 1).unwrap();
        assert_eq!(canonical_code(&star), canonical_code(&Tree::star(7).unwrap()));
        assert_eq!(build_f3(6, 3).unwrap().degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        let p4 = build_f3(4, 2).unwrap();
        assert_eq!(canonical_code(&p4), canonical_code(&Tree::path(4).unwrap()));
        assert_eq!(build_f3(6, 2).unwrap().degree_sequence(), vec![4, 2, 1, 1, 1, 1]);
        assert!(build_f3(5, 3).is_err());
        assert!(build_f3(1, 1).is_err());
    }

    #[test]
    fn f3_max_degree() {
        for n in 2..=14 {
            for gamma in 1..=n / 2 {
                assert_eq!(build_f3(n, gamma).unwrap().max_degree(), n - gamma);
            }
        }
    }

    #[test]
    fn f1_small_members() {
        let p6 = build_f1_members(6, 2).unwrap();
        assert_eq!(p6.len(), 1);
        assert!(p6[0].is_path());
        let stars = build_f1_members(8, 1).unwrap();
        assert_eq!(stars.len(), 1);
        assert_eq!(stars[0].degree_sequence()[0], 7);
        // three P3 stars only chain into a path
        let nine = build_f1_members(9, 3).unwrap();
        assert_eq!(nine.len(), 1);
        assert!(nine[0].is_path());
        let ten = build_f1_members(10, 3).unwrap();
        assert_eq!(ten.len(), 2);
        let thirteen = build_f1_members(13, 3).unwrap();
        assert!(thirteen.iter().any(|t| t.max_degree() == 4));
        for (n, members) in [(9, &nine), (10, &ten), (13, &thirteen)] {
            for t in members {
                let v = zeroth_order_general_randic(t, 0.5).unwrap();
                assert!(approx_eq(v, crate::bounds::bound_f1(n, 3, 0.5).unwrap().value));
            }
        }
        assert!(build_f1_members(8, 3).is_err());
    }

    #[test]
    fn f2_members() {
        let spider = build_f2_member(6, 3).unwrap();
        assert_eq!(canonical_code(&spider), canonical_code(&Tree::spider(&[2, 2, 1]).unwrap()));
        let eight = build_f2_member(8, 4).unwrap();
        assert_eq!(eight.degree_sequence(), vec![3, 3, 2, 2, 1, 1, 1, 1]);
        assert_eq!(crate::invariants::zeroth_order_general_randic_exact(&eight, 2), 30);
        let p7 = build_f2_member(7, 3).unwrap();
        assert!(p7.is_path());
        assert_eq!(crate::invariants::zeroth_order_general_randic_exact(&p7, 2), 22);
        assert!(build_f2_member(9, 2).is_err());
    }

    #[test]
    fn f2_pendent_count_above_path_case() {
        for n in 6usize..=16 {
            for gamma in n.div_ceil(3) + 1..=n / 2 {
                let t = build_f2_member(n, gamma).unwrap();
                let leaves = (0..n).filter(|&v| t.is_leaf(v)).count();
                assert_eq!(leaves, 3 * gamma - n);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let p6 = Tree::path(6).unwrap();
        assert!(is_member(&p6, FamilyKind::new(Family::F1, 6, 2).unwrap()).unwrap());
        assert!(is_member(&p6, FamilyKind::new(Family::F2, 6, 2).unwrap()).unwrap());
        assert!(!is_member(&p6, FamilyKind::new(Family::F3, 6, 2).unwrap()).unwrap());
        let s6 = Tree::star(6).unwrap();
        assert!(is_member(&s6, FamilyKind::new(Family::F3, 6, 1).unwrap()).unwrap());
        // wrong domination number
        assert!(!is_member(&s6, FamilyKind::new(Family::F3, 6, 2).unwrap()).unwrap());
        let spider = Tree::spider(&[2, 2, 1]).unwrap();
        assert!(is_member(&spider, FamilyKind::new(Family::F2, 6, 3).unwrap()).unwrap());
        assert!(is_member(&spider, FamilyKind::new(Family::F3, 6, 3).unwrap()).unwrap());
    }

    #[test]
    fn kinds_validate() {
        assert!(FamilyKind::new(Family::F1, 9, 4).is_err());
        assert!(FamilyKind::new(Family::F2, 9, 2).is_err());
        assert!(FamilyKind::new(Family::F3, 9, 5).is_err());
        assert!(FamilyKind::is_feasible(Family::F3, 2, 1));
        assert_eq!("F2".parse::<Family>().unwrap(), Family::F2);
        assert!("f4".parse::<Family>().is_err());
    }
}
