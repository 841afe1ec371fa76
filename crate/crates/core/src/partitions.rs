//! Partitions, type vectors, and brute-force counts of subgroup classes.
//!
//! A [`Partition`] is stored with its parts nonincreasing and strictly
//! positive. A [`TypeVector`] is the nondecreasing, zero-padded view
//! `(c_1 <= … <= c_r)` of a partition with at most `r` parts; it describes
//! the p-group `⊕ ℤ/p^{c_j}`.
//!
//! The counting functions here enumerate literally and are meant as oracles
//! for the recursion in [`crate::alpha`].

use num_bigint::BigInt;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from positive parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts in nondecreasing order, the convention used for group types.
    pub fn ascending(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ'_i = #{j : λ_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.ascending().iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, each nonincreasing, in reverse lexicographic
/// order (`(n)` first, `(1,…,1)` last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing `r`-tuple `0 <= c_1 <= … <= c_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    entries: Vec<u32>,
}

impl TypeVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(format!(
                "type vector must be nondecreasing: {entries:?}"
            )));
        }
        Ok(Self { entries })
    }

    /// Zero-pads `λ` on the left to rank `r`. Fails if `λ` has more than `r` parts.
    pub fn from_partition(lambda: &Partition, r: usize) -> Result<Self> {
        if lambda.len() > r {
            return Err(Error::InvalidArgument(format!("{lambda} has more than {r} parts")));
        }
        let mut entries = vec![0; r - lambda.len()];
        entries.extend(lambda.ascending());
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|&c| c as u64).sum()
    }

    /// The increments `a_1 = c_1`, `a_j = c_j − c_{j−1}`.
    pub fn increments(&self) -> Vec<u32> {
        let mut prev = 0;
        self.entries
            .iter()
            .map(|&c| {
                let a = c - prev;
                prev = c;
                a
            })
            .collect()
    }

    /// The partition obtained by dropping zero entries.
    pub fn to_partition(&self) -> Partition {
        Partition {
            parts: self.entries.iter().rev().copied().filter(|&c| c > 0).collect(),
        }
    }
}

/// All nondecreasing `r`-tuples of nonnegative integers summing to `k`, in
/// lexicographic order.
pub fn enumerate_type_vectors(k: u32, r: usize) -> Vec<TypeVector> {
    fn go(pos: usize, r: usize, min: u32, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<TypeVector>) {
        let left = (r - pos) as u32;
        if left == 1 {
            if rest >= min {
                cur.push(rest);
                out.push(TypeVector { entries: cur.clone() });
                cur.pop();
            }
            return;
        }
        // every remaining entry is >= c, so left * c <= rest
        let mut c = min;
        while c * left <= rest {
            cur.push(c);
            go(pos + 1, r, c, rest - c, cur, out);
            cur.pop();
            c += 1;
        }
    }
    assert!(r >= 1, "rank must be positive");
    let mut out = Vec::new();
    go(0, r, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `f_r(a_1, …, a_r)`: the number of `(b_1, …, b_r) >= 0` with
/// `b_1 + … + b_j <= a_1 + … + a_j` for every `j`, counted by nested loops.
pub fn nested_sum_f(a: &[u32]) -> BigInt {
    fn go(a: &[u32], j: usize, budget: u64) -> u64 {
        if j == a.len() {
            return 1;
        }
        let bound = budget + a[j] as u64;
        (0..=bound).map(|b| go(a, j + 1, bound - b)).sum()
    }
    BigInt::from(go(a, 0, 0))
}

/// Number of nondecreasing `0 <= d_1 <= … <= d_r` with `d_j <= c_j`.
pub fn dominated_count(c: &TypeVector) -> u64 {
    fn go(c: &[u32], j: usize, low: u32) -> u64 {
        if j == c.len() {
            return 1;
        }
        if low > c[j] {
            return 0;
        }
        (low..=c[j]).map(|d| go(c, j + 1, d)).sum()
    }
    go(&c.entries, 0, 0)
}

/// `∑_c #{d : d nondecreasing, 0 <= d_i <= c_i}` over type vectors `c` of
/// weight `k` and rank `r`: the number of pairs of partitions `(λ, μ)` with
/// `μ` dominated termwise by `λ`.
pub fn count_dominated_pairs(k: u32, r: usize) -> BigInt {
    let total: u64 = enumerate_type_vectors(k, r).iter().map(dominated_count).sum();
    BigInt::from(total)
}

/// `∑ f_r(a)` over `a >= 0` with `r·a_1 + (r−1)·a_2 + … + 1·a_r = k`.
pub fn weighted_alpha_oracle(k: u32, r: usize) -> BigInt {
    fn go(r: usize, i: usize, rest: u32, cur: &mut Vec<u32>, acc: &mut BigInt) {
        if i == r {
            if rest == 0 {
                *acc += nested_sum_f(cur);
            }
            return;
        }
        let weight = (r - i) as u32;
        for a in 0..=rest / weight {
            cur.push(a);
            go(r, i + 1, rest - a * weight, cur, acc);
            cur.pop();
        }
    }
    assert!(r >= 1, "rank must be positive");
    let mut acc = BigInt::from(0);
    go(r, 0, k, &mut Vec::new(), &mut acc);
    acc
}
