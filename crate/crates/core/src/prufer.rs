//! Pruefer codec for labelled trees on `0..n`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Decodes a sequence of length `n - 2` into the labelled tree it encodes.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Tree> {
    if n < 2 {
        return Err(Error::PrueferTooSmall);
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidParameters(format!(
            "Pruefer sequence for {n} vertices must have length {}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&entry) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::PrueferOutOfRange { entry, n });
    }
    let mut remaining = vec![1usize; n];
    for &x in seq {
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Tree::from_edges(n, &edges)
}

pub fn prufer_encode(tree: &Tree) -> Result<Vec<usize>> {
    let n = tree.order();
    if n < 2 {
        return Err(Error::PrueferTooSmall);
    }
    let mut degree: Vec<usize> = tree.degrees().collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n - 2);
    while seq.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        removed[leaf] = true;
        let parent = *tree
            .neighbors(leaf)
            .iter()
            .find(|&&v| !removed[v])
            .expect("leaf has a live neighbour");
        seq.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    Ok(seq)
}

/// Every sequence in `0..n` of length `len`, in lexicographic order.
pub fn all_sequences(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 && len > 0 { 0 } else { n.pow(len as u32) };
    (0..total).map(move |mut index| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = index % n;
            index /= n;
        }
        seq
    })
}
