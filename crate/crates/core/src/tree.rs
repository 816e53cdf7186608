//! Immutable simple trees on dense 0-based vertex indices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated tree. Adjacency lists are sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

/// Edge-list interchange form: `{"n": 4, "edges": [[0,1],[1,2],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Tree {
    /// Validates `edges` as a spanning tree on `n` vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if edges.len() != n - 1 {
            return Err(Error::EdgeCount { n, expected: n - 1, found: edges.len() });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let tree = Tree { adj };
        if tree.bfs_order(0).len() != n {
            return Err(Error::Disconnected);
        }
        Ok(tree)
    }

    pub fn single_vertex() -> Self {
        Tree { adj: vec![Vec::new()] }
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges)
    }

    /// Star on `n` vertices with center 0.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Tree::from_edges(n, &edges)
    }

    /// Spider whose center (vertex 0) carries paths of the given lengths.
    pub fn spider(legs: &[usize]) -> Result<Self> {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::from_edges(next, &edges)
    }

    /// Builds from a level sequence (preorder depths, root at depth 0).
    pub fn from_level_sequence(levels: &[usize]) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::EmptyTree);
        }
        if levels[0] != 0 {
            return Err(Error::BadCode("level sequence must start at depth 0".into()));
        }
        let mut stack: Vec<usize> = vec![0];
        let mut edges = Vec::with_capacity(levels.len() - 1);
        for (v, &depth) in levels.iter().enumerate().skip(1) {
            if depth == 0 || depth > stack.len() {
                return Err(Error::BadCode(format!("invalid depth {depth} at position {v}")));
            }
            stack.truncate(depth);
            edges.push((stack[depth - 1], v));
            stack.push(v);
        }
        Tree::from_edges(levels.len(), &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    /// Degree multiset, sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.degrees().collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// Vertices in breadth-first order from `root`.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut order = Vec::with_capacity(self.order());
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Parent array of the tree rooted at `root` (`usize::MAX` for the root),
    /// together with the BFS order used to compute it.
    pub fn rooted(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let order = self.bfs_order(root);
        let mut parent = vec![usize::MAX; self.order()];
        for &u in &order {
            for &v in &self.adj[u] {
                if v != root && parent[v] == usize::MAX && parent[u] != v {
                    parent[v] = u;
                }
            }
        }
        (parent, order)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.order(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Self> {
        let edges: Vec<_> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Tree::from_edges(list.n, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let list: EdgeList = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameters(format!("tree JSON: {e}")))?;
        Tree::from_edge_list(&list)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_trees() {
        let p2 = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.degree_sequence(), vec![1, 1]);
        let p3 = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.neighbors(1), &[0, 2]);
        assert_eq!(Tree::single_vertex().order(), 1);
        assert_eq!(Tree::from_edges(1, &[]).unwrap().edges(), vec![]);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            Tree::from_edges(4, &[(0, 1), (0, 2), (1, 2)]),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 1), (0, 2), (1, 2)]),
            Err(Error::EdgeCount { .. })
        ));
        assert_eq!(Tree::from_edges(3, &[(0, 0), (1, 2)]), Err(Error::SelfLoop(0)));
        assert_eq!(Tree::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(
            Tree::from_edges(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert_eq!(Tree::from_edges(0, &[]), Err(Error::EmptyTree));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Tree::path(6).unwrap().degree_sequence(), vec![2, 2, 2, 2, 1, 1]);
        assert_eq!(Tree::star(5).unwrap().degree_sequence(), vec![4, 1, 1, 1, 1]);
        assert_eq!(Tree::spider(&[2, 2, 1]).unwrap().degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn adjacency_is_symmetric() {
        let t = Tree::spider(&[3, 1, 2]).unwrap();
        for u in 0..t.order() {
            for &v in t.neighbors(u) {
                assert!(t.neighbors(v).contains(&u));
            }
        }
        assert_eq!(t.degrees().sum::<usize>(), 2 * (t.order() - 1));
    }

    #[test]
    fn level_sequence_round_trip() {
        let t = Tree::from_level_sequence(&[0, 1, 2, 1, 1]).unwrap();
        assert_eq!(t.degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert!(Tree::from_level_sequence(&[0, 2]).is_err());
        assert!(Tree::from_level_sequence(&[1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = Tree::spider(&[2, 1]).unwrap();
        let text = t.to_json();
        assert_eq!(text, r#"{"n":4,"edges":[[0,1],[0,3],[1,2]]}"#);
        assert_eq!(Tree::from_json(&text).unwrap(), t);
        assert!(Tree::from_json(r#"{"n":3,"edges":[[0,1]]}"#).is_err());
    }

    #[test]
    fn rooted_parents() {
        let t = Tree::path(4).unwrap();
        let (parent, order) = t.rooted(1);
        assert_eq!(order[0], 1);
        assert_eq!(parent, vec![1, usize::MAX, 1, 2]);
    }
}
