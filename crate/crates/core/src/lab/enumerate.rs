//! Exhaustive enumeration of small bounded posets and labellings.

use std::collections::BTreeSet;

use crate::combinatorics::poset::{Poset, BOTTOM_NAME, TOP_NAME};
pub use crate::labelling::labelling_at;

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out
}

/// Strict orders on `0..m` that extend the natural order, one per
/// isomorphism class, as sorted relation lists.
pub fn unlabelled_posets(m: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let perms = permutations(m);
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let rel: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| pairs[b])
            .collect();
        let has = |x, y| rel.contains(&(x, y));
        let transitive = rel
            .iter()
            .all(|&(x, y)| (0..m).all(|z| !has(y, z) || has(x, z)));
        if !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut r: Vec<(usize, usize)> = rel.iter().map(|&(x, y)| (p[x], p[y])).collect();
                r.sort();
                r
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(rel);
        }
    }
    out
}

/// All bounded posets with `elements` elements (at least 2), up to
/// isomorphism.
pub fn bounded_posets(elements: usize) -> Vec<Poset> {
    if elements < 2 {
        return Vec::new();
    }
    let m = elements - 2;
    unlabelled_posets(m)
        .into_iter()
        .map(|rel| {
            let mut names = vec![BOTTOM_NAME.to_string()];
            names.extend((1..=m).map(|i| format!("v{i}")));
            names.push(TOP_NAME.to_string());
            let mut all: Vec<(usize, usize)> = rel.iter().map(|&(x, y)| (x + 1, y + 1)).collect();
            all.extend((1..=m).map(|v| (0, v)));
            all.extend((1..=m).map(|v| (v, m + 1)));
            if m == 0 {
                all.push((0, 1));
            }
            Poset::from_relations(names, &all).expect("natural order is acyclic")
        })
        .collect()
}

pub fn labelling_count(edges: usize, max_label: i64) -> u64 {
    (max_label.max(0) as u64).saturating_pow(edges as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        // unlabelled posets on 0..=4 points
        let counts: Vec<usize> = (0..=4).map(|m| unlabelled_posets(m).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16]);
        assert_eq!(bounded_posets(2).len(), 1);
        assert!(bounded_posets(6).iter().all(Poset::is_bounded));
    }

    #[test]
    fn labellings_enumerate_all() {
        let all: BTreeSet<Vec<i64>> = (0..labelling_count(3, 2))
            .map(|i| labelling_at(i, 3, 2).as_slice().to_vec())
            .collect();
        assert_eq!(all.len(), 8);
        assert_eq!(labelling_at(0, 3, 2).as_slice(), [1, 1, 1]);
        assert_eq!(labelling_at(7, 3, 2).as_slice(), [2, 2, 2]);
    }
}
