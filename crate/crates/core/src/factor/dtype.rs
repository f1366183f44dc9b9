//! Decomposition types: the partition of the degree induced by the
//! irreducible factors.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Factorization;
use crate::exactmath::Field;

/// How a repeated factor `h^e` contributes to the partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FoldPolicy {
    /// One part `e * deg h`.
    Fold,
    /// `e` parts `deg h`.
    Split,
    /// Every grouping in between: parts `e_j * deg h` for each partition
    /// `(e_1, ..., e_k)` of `e`.
    Both,
}

/// Parts sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompType {
    pub parts: Vec<usize>,
    /// True when at least one repeated factor was merged into a single part.
    pub folded: bool,
}

impl DecompType {
    pub fn new(mut parts: Vec<usize>, folded: bool) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        DecompType { parts, folded }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains_part(&self, d: usize) -> bool {
        self.parts.contains(&d)
    }

    pub fn has_same_parts(&self, parts: &[usize]) -> bool {
        let mut p = parts.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p == self.parts
    }

    /// Multiset union.
    pub fn union(&self, other: &DecompType) -> DecompType {
        let mut parts = self.parts.clone();
        parts.extend(&other.parts);
        DecompType::new(parts, self.folded || other.folded)
    }

    /// Parses exponent notation such as `10^3,4^2,2`.
    pub fn parse(text: &str) -> Option<DecompType> {
        let mut parts = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            let (d, e): (usize, usize) = match item.split_once('^') {
                Some((d, e)) => (d.parse().ok()?, e.parse().ok()?),
                None => (item.parse().ok()?, 1usize),
            };
            parts.extend(std::iter::repeat_n(d, e));
        }
        Some(DecompType::new(parts, false))
    }
}

impl fmt::Display for DecompType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let d = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == d {
                j += 1;
            }
            out.push(if j - i > 1 {
                format!("{d}^{}", j - i)
            } else {
                d.to_string()
            });
            i = j;
        }
        f.write_str(&out.join(","))
    }
}

impl Serialize for DecompType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Decomposition types of a factorization under a fold policy. `Fold` and
/// `Split` give exactly one entry; `Both` gives every candidate, sorted.
pub fn decomposition_type<F: Field>(fz: &Factorization<F>, policy: FoldPolicy) -> Vec<DecompType> {
    match policy {
        FoldPolicy::Fold => {
            let parts = fz.factors.iter().map(|(f, e)| f.deg() * *e as usize).collect();
            vec![DecompType::new(parts, fz.has_repeated_factor())]
        }
        FoldPolicy::Split => {
            let parts = fz
                .factors
                .iter()
                .flat_map(|(f, e)| std::iter::repeat_n(f.deg(), *e as usize))
                .collect();
            vec![DecompType::new(parts, false)]
        }
        FoldPolicy::Both => {
            let mut acc: BTreeSet<Vec<usize>> = BTreeSet::new();
            acc.insert(Vec::new());
            for (f, e) in &fz.factors {
                let d = f.deg();
                let mut next = BTreeSet::new();
                for base in &acc {
                    for part in integer_partitions(*e) {
                        let mut v = base.clone();
                        v.extend(part.iter().map(|k| d * *k as usize));
                        v.sort_unstable_by(|a, b| b.cmp(a));
                        next.insert(v);
                    }
                }
                acc = next;
            }
            let split = decomposition_type(fz, FoldPolicy::Split).remove(0);
            acc.into_iter()
                .map(|parts| {
                    let folded = parts != split.parts;
                    DecompType::new(parts, folded)
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::polyq::polyq;
    use crate::exactmath::Rationals;

    fn example() -> Factorization<Rationals> {
        // X (X+1)^2 (X-3)^2 q(X) with q of degree 5
        Factorization {
            unit: crate::exactmath::rational::rat(1),
            factors: vec![
                (polyq(&[0, 1]), 1),
                (polyq(&[1, 1]), 2),
                (polyq(&[-3, 1]), 2),
                (polyq(&[-47, -38, -35, -2, -4, 1]), 1),
            ],
        }
    }

    #[test]
    fn policies() {
        let fz = example();
        let fold = &decomposition_type(&fz, FoldPolicy::Fold)[0];
        assert_eq!(fold.to_string(), "5,2^2,1");
        let split = &decomposition_type(&fz, FoldPolicy::Split)[0];
        assert_eq!(split.to_string(), "5,1^5");
        let both = decomposition_type(&fz, FoldPolicy::Both);
        assert_eq!(both.len(), 3);
        assert!(both.iter().any(|d| d.to_string() == "5,2,1^3"));
        for d in &both {
            assert_eq!(d.total(), 10);
        }
    }

    #[test]
    fn parse_round_trip() {
        let d = DecompType::parse("10^3,4^2,2").unwrap();
        assert_eq!(d.total(), 40);
        assert_eq!(d.to_string(), "10^3,4^2,2");
        assert!(d.has_same_parts(&[2, 4, 10, 10, 4, 10]));
    }

    #[test]
    fn partitions_of_four() {
        assert_eq!(integer_partitions(4).len(), 5);
    }
}
