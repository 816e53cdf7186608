//! Centroid-rooted canonical level sequences.
//!
//! A rooted tree is encoded by its preorder depth sequence with the children
//! of every vertex visited in non-increasing order of their own encodings.
//! Rooting at the centroid (and taking the smaller of the two encodings when
//! the centroid is an edge) makes the code an isomorphism invariant of the
//! free tree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Rebuilds a representative tree (vertices numbered in code order).
    pub fn to_tree(&self) -> Result<Tree> {
        let levels: Vec<usize> = self.0.iter().map(|&d| d as usize).collect();
        Tree::from_level_sequence(&levels)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::BadCode(e.to_string()))?;
        let code = CanonicalCode(digits);
        // Only sequences that describe a tree are accepted.
        code.to_tree()?;
        Ok(code)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// One or two centroid vertices, in increasing index order.
pub fn centroids(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    let (parent, order) = tree.rooted(0);
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let mut found: Vec<usize> = (0..n)
        .filter(|&u| {
            let mut heaviest = n - size[u];
            for &v in tree.neighbors(u) {
                if v != parent[u] {
                    heaviest = heaviest.max(size[v]);
                }
            }
            2 * heaviest <= n
        })
        .collect();
    found.sort_unstable();
    found
}

/// Canonical level sequence of `tree` rooted at `root`.
pub fn rooted_code(tree: &Tree, root: usize) -> Vec<u32> {
    let (parent, order) = tree.rooted(root);
    let mut codes: Vec<Vec<u32>> = vec![Vec::new(); tree.order()];
    for &u in order.iter().rev() {
        let mut children: Vec<Vec<u32>> = tree
            .neighbors(u)
            .iter()
            .filter(|&&v| v != parent[u])
            .map(|&v| std::mem::take(&mut codes[v]))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut code = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        code.push(0);
        for child in children {
            code.extend(child.into_iter().map(|d| d + 1));
        }
        codes[u] = code;
    }
    std::mem::take(&mut codes[root])
}

pub fn canonical_code(tree: &Tree) -> CanonicalCode {
    let code = centroids(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("every tree has a centroid");
    CanonicalCode(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prufer::prufer_decode;

    fn relabel(tree: &Tree, perm: &[usize]) -> Tree {
        let edges: Vec<_> = tree.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges(tree.order(), &edges).unwrap()
    }

    #[test]
    fn relabelled_paths_agree() {
        let p3 = Tree::path(3).unwrap();
        let q3 = relabel(&p3, &[2, 0, 1]);
        assert_eq!(canonical_code(&p3), canonical_code(&q3));
        assert_eq!(canonical_code(&p3).to_string(), "0,1,1");
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_code(&Tree::path(4).unwrap()),
            canonical_code(&Tree::star(4).unwrap())
        );
    }

    #[test]
    fn all_labelled_trees_on_three_vertices_collapse() {
        let codes: std::collections::BTreeSet<_> = (0..3)
            .map(|a| canonical_code(&prufer_decode(3, &[a]).unwrap()))
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn centroid_edge_handling() {
        assert_eq!(centroids(&Tree::path(4).unwrap()), vec![1, 2]);
        assert_eq!(centroids(&Tree::path(5).unwrap()), vec![2]);
        assert_eq!(centroids(&Tree::single_vertex()), vec![0]);
        assert_eq!(canonical_code(&Tree::path(2).unwrap()).to_string(), "0,1");
    }

    #[test]
    fn code_parse_and_rebuild() {
        let t = Tree::spider(&[2, 2, 1]).unwrap();
        let code = canonical_code(&t);
        let parsed: CanonicalCode = code.to_string().parse().unwrap();
        assert_eq!(parsed, code);
        assert_eq!(canonical_code(&code.to_tree().unwrap()), code);
        assert!("0,2".parse::<CanonicalCode>().is_err());
        assert!("0,x".parse::<CanonicalCode>().is_err());
        let json = serde_json::to_string(&code).unwrap();
        assert_eq!(serde_json::from_str::<CanonicalCode>(&json).unwrap(), code);
    }
}
