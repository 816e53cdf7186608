//! Non-isomorphic free trees.
//!
//! [`FreeTrees`] walks canonical level sequences with the successor rule of
//! Beyer and Hedetniemi for rooted trees, restricted to the representatives
//! that Wright, Richmond, Odlyzko and McKay single out for free trees. Each
//! isomorphism class is emitted exactly once, in decreasing lexicographic
//! order of the level sequence, starting from the path.
//!
//! [`free_trees_oracle`] is an independent brute force over all Pruefer
//! sequences, used to cross-check the generator.

use std::collections::{BTreeSet, HashSet};

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Largest order accepted by [`free_trees_oracle`].
pub const ORACLE_MAX_ORDER: usize = 10;

/// Iterator over level sequences of the free trees of one order.
#[derive(Debug, Clone)]
pub struct FreeTreeLayouts {
    n: usize,
    next: Option<Vec<usize>>,
}

impl FreeTreeLayouts {
    pub fn new(n: usize) -> Self {
        let next = match n {
            0 => None,
            1 => Some(vec![0]),
            _ => {
                // path rooted at its center
                let mut layout: Vec<usize> = (0..=n / 2).collect();
                layout.extend(1..(n + 1) / 2);
                Some(layout)
            }
        };
        FreeTreeLayouts { n, next }
    }
}

impl Iterator for FreeTreeLayouts {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.next.take()?;
        if self.n == 1 {
            return Some(candidate);
        }
        let layout = next_valid(candidate)?;
        self.next = next_rooted(&layout, None);
        Some(layout)
    }
}

/// Successor of a rooted level sequence; `p` overrides the position to bump.
fn next_rooted(layout: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut out = layout.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// The root's first subtree against the rest of the tree. A layout is a
/// valid free-tree representative when the rest is at least as tall, and
/// on a tie in height is not smaller in size or in level sequence.
struct Split {
    left_len: usize,
    valid: bool,
}

fn split(layout: &[usize]) -> Split {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&d| d - 1);
    let rest = std::iter::once(0).chain(layout[m..].iter().copied());
    let left_height = left.clone().max().unwrap_or(0);
    let rest_height = rest.clone().max().unwrap_or(0);
    let left_len = m - 1;
    let rest_len = layout.len() - m + 1;
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        if left_len > rest_len {
            valid = false;
        } else if left_len == rest_len && left.gt(rest) {
            valid = false;
        }
    }
    Split { left_len, valid }
}

/// Advances `candidate` to the first valid free-tree representative at or
/// after it.
fn next_valid(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let s = split(&candidate);
        if s.valid {
            return Some(candidate);
        }
        let p = s.left_len;
        let bumped_high = candidate[p] > 2;
        let mut next = next_rooted(&candidate, Some(p))?;
        if bumped_high {
            let m = next
                .iter()
                .enumerate()
                .skip(2)
                .find(|&(_, &d)| d == 1)
                .map_or(next.len(), |(i, _)| i);
            let new_left_height = next[1..m].iter().map(|&d| d - 1).max().unwrap_or(0);
            let len = next.len();
            let tail = new_left_height + 1;
            for (k, slot) in next[len - tail..].iter_mut().enumerate() {
                *slot = k + 1;
            }
        }
        candidate = next;
    }
}

/// Size of the root's first subtree in a layout (0 for the single vertex).
pub fn first_subtree_size(layout: &[usize]) -> usize {
    if layout.len() < 2 {
        return 0;
    }
    layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(layout.len(), |(i, _)| i)
        - 1
}

/// All non-isomorphic trees on `n` vertices, in deterministic order.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    layouts: FreeTreeLayouts,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let layout = self.layouts.next()?;
        Some(Tree::from_level_sequence(&layout).expect("generator emits valid level sequences"))
    }
}

pub fn free_trees(n: usize) -> FreeTrees {
    FreeTrees { layouts: FreeTreeLayouts::new(n) }
}

/// One shard of the free-tree stream: the trees whose layout has a first
/// root subtree of exactly `first_subtree` vertices, each tagged with its
/// position in the full stream. Shards for distinct sizes are disjoint and
/// together cover the stream, so they can be consumed on separate threads
/// and merged back by position.
#[derive(Debug, Clone)]
pub struct FreeTreesPart {
    layouts: std::iter::Enumerate<FreeTreeLayouts>,
    first_subtree: usize,
}

impl Iterator for FreeTreesPart {
    type Item = (usize, Tree);

    fn next(&mut self) -> Option<(usize, Tree)> {
        for (index, layout) in self.layouts.by_ref() {
            if first_subtree_size(&layout) == self.first_subtree {
                let tree = Tree::from_level_sequence(&layout).expect("valid level sequence");
                return Some((index, tree));
            }
        }
        None
    }
}

pub fn free_trees_part(n: usize, first_subtree: usize) -> FreeTreesPart {
    FreeTreesPart { layouts: FreeTreeLayouts::new(n).enumerate(), first_subtree }
}

/// Shard keys that cover `free_trees(n)`.
pub fn partition_keys(n: usize) -> std::ops::Range<usize> {
    if n <= 1 {
        0..1
    } else {
        1..n
    }
}

/// Brute-force class list: decodes every Pruefer sequence and keeps one tree
/// per canonical code. Returned in increasing code order.
pub fn free_trees_oracle(n: usize) -> Result<Vec<Tree>> {
    free_tree_codes_oracle(n)?
        .into_iter()
        .map(|code| code.to_tree())
        .collect()
}

pub fn free_tree_codes_oracle(n: usize) -> Result<BTreeSet<CanonicalCode>> {
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge { what: "Pruefer oracle", n, limit: ORACLE_MAX_ORDER });
    }
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    if n == 1 {
        return Ok(BTreeSet::from([crate::canon::canonical_code(&Tree::single_vertex())]));
    }
    let mut seen = HashSet::new();
    let mut scratch = packed::Scratch::default();
    let mut seq = vec![0usize; n - 2];
    loop {
        seen.insert(packed::code_of_prufer(n, &seq, &mut scratch));
        // odometer
        let mut i = seq.len();
        loop {
            if i == 0 {
                return Ok(seen.into_iter().map(|c| packed::unpack(c, n)).collect());
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Allocation-free canonical codes for small labelled trees, packed four
/// bits per level, first entry in the most significant nibble. Independent
/// of the generic implementation in `canon`; both must agree.
mod packed {
    use crate::canon::CanonicalCode;

    const MAX: usize = 16;

    #[derive(Default)]
    pub struct Scratch {
        degree: [usize; MAX],
        adj: [[usize; MAX]; MAX],
        adj_len: [usize; MAX],
        order: [usize; MAX],
        parent: [usize; MAX],
        size: [usize; MAX],
        heaviest: [usize; MAX],
        code: [u64; MAX],
        len: [usize; MAX],
    }

    pub fn code_of_prufer(n: usize, seq: &[usize], s: &mut Scratch) -> u64 {
        s.adj_len[..n].fill(0);
        s.degree[..n].fill(1);
        s.size[..n].fill(1);
        s.heaviest[..n].fill(0);
        for &x in seq {
            s.degree[x] += 1;
        }
        // linear-time decode; removed leaves come out children first
        // relative to a root at n - 1, so subtree sizes accumulate directly
        let mut ptr = 0;
        while s.degree[ptr] != 1 {
            ptr += 1;
        }
        let mut leaf = ptr;
        for &x in seq {
            attach(s, leaf, x);
            s.degree[x] -= 1;
            if x < ptr && s.degree[x] == 1 {
                leaf = x;
            } else {
                ptr += 1;
                while s.degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        attach(s, leaf, n - 1);

        let mut centroids = [0usize; 2];
        let mut found = 0;
        for u in 0..n {
            if 2 * s.heaviest[u].max(n - s.size[u]) <= n {
                centroids[found] = u;
                found += 1;
            }
        }
        centroids[..found].iter().map(|&c| rooted(s, n, c)).min().expect("a centroid exists")
    }

    fn attach(s: &mut Scratch, child: usize, parent: usize) {
        link(s, child, parent);
        s.size[parent] += s.size[child];
        s.heaviest[parent] = s.heaviest[parent].max(s.size[child]);
    }

    fn link(s: &mut Scratch, u: usize, v: usize) {
        s.adj[u][s.adj_len[u]] = v;
        s.adj_len[u] += 1;
        s.adj[v][s.adj_len[v]] = u;
        s.adj_len[v] += 1;
    }

    fn root_at(s: &mut Scratch, n: usize, root: usize) {
        s.order[0] = root;
        s.parent[root] = usize::MAX;
        let mut head = 0;
        let mut tail = 1;
        while head < tail {
            let u = s.order[head];
            head += 1;
            for k in 0..s.adj_len[u] {
                let v = s.adj[u][k];
                if v != s.parent[u] {
                    s.parent[v] = u;
                    s.order[tail] = v;
                    tail += 1;
                }
            }
        }
        debug_assert_eq!(tail, n);
    }

    fn rooted(s: &mut Scratch, n: usize, root: usize) -> u64 {
        root_at(s, n, root);
        let mut kids = [(0u64, 0usize); MAX];
        for k in (0..n).rev() {
            let u = s.order[k];
            let mut m = 0;
            for j in 0..s.adj_len[u] {
                let v = s.adj[u][j];
                if v != s.parent[u] {
                    kids[m] = (s.code[v], s.len[v]);
                    m += 1;
                }
            }
            kids[..m].sort_unstable_by(|a, b| b.0.cmp(&a.0));
            // leading nibble 0 for u itself, then shifted children
            let mut code = 0u64;
            let mut len = 1;
            for &(c, l) in &kids[..m] {
                let bumped = c + ONES[l];
                code |= bumped >> (4 * len);
                len += l;
            }
            s.code[u] = code;
            s.len[u] = len;
        }
        s.code[root]
    }

    /// `ONES[l]` holds `l` nibbles equal to 1, left-aligned.
    const ONES: [u64; MAX + 1] = {
        let mut table = [0u64; MAX + 1];
        let mut l = 1;
        while l <= MAX {
            table[l] = table[l - 1] | 1 << (64 - 4 * l);
            l += 1;
        }
        table
    };

    pub fn unpack(code: u64, n: usize) -> CanonicalCode {
        let digits: Vec<u32> = (0..n).map(|i| ((code >> (60 - 4 * i)) & 0xf) as u32).collect();
        let text = digits.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        text.parse().expect("packed code describes a tree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    const COUNTS: [usize; 15] = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

    #[test]
    fn known_class_counts() {
        for (n, &count) in COUNTS.iter().enumerate() {
            assert_eq!(free_trees(n).count(), count, "n = {n}");
        }
    }

    #[test]
    fn small_orders() {
        let one: Vec<_> = free_trees(1).collect();
        assert_eq!(one, vec![Tree::single_vertex()]);
        let four: Vec<_> = free_trees(4).map(|t| t.degree_sequence()).collect();
        assert_eq!(four, vec![vec![2, 2, 1, 1], vec![3, 1, 1, 1]]);
    }

    #[test]
    fn codes_within_stream_are_distinct() {
        for n in 1..=12 {
            let codes: BTreeSet<_> = free_trees(n).map(|t| canonical_code(&t)).collect();
            assert_eq!(codes.len(), COUNTS[n]);
        }
    }

    #[test]
    fn oracle_small_orders() {
        assert_eq!(free_trees_oracle(3).unwrap().len(), 1);
        assert_eq!(free_trees_oracle(5).unwrap().len(), 3);
        assert_eq!(free_trees_oracle(1).unwrap().len(), 1);
        assert!(matches!(free_trees_oracle(11), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn oracle_matches_generator_up_to_eight() {
        for n in 1..=8 {
            let fast: BTreeSet<_> = free_trees(n).map(|t| canonical_code(&t)).collect();
            assert_eq!(free_tree_codes_oracle(n).unwrap(), fast, "n = {n}");
        }
    }

    #[test]
    fn packed_codes_agree_with_generic_codes() {
        let mut scratch = packed::Scratch::default();
        for n in 2..=7 {
            for seq in crate::prufer::all_sequences(n, n - 2) {
                let tree = crate::prufer::prufer_decode(n, &seq).unwrap();
                let fast = packed::unpack(packed::code_of_prufer(n, &seq, &mut scratch), n);
                assert_eq!(fast, canonical_code(&tree));
            }
        }
    }

    #[test]
    fn parts_cover_stream_in_order() {
        for n in 1..=11 {
            let serial: Vec<_> = free_trees(n).collect();
            let mut merged: Vec<(usize, Tree)> =
                partition_keys(n).flat_map(|k| free_trees_part(n, k)).collect();
            merged.sort_by_key(|(i, _)| *i);
            let merged: Vec<_> = merged.into_iter().map(|(_, t)| t).collect();
            assert_eq!(merged, serial);
        }
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = free_trees(9).collect();
        let b: Vec<_> = free_trees(9).collect();
        assert_eq!(a, b);
        assert!(a[0].is_path());
    }
}
