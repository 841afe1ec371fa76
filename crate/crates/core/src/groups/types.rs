//! Finite abelian p-groups by type, and their factorisations.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::snf::SnfMatrix;
use crate::arith::{divisors, omega};
use crate::partitions::{partitions_of, Partition};
use crate::{Error, Result};

/// Largest number of candidate diagonals [`snf_divisor_count`] will visit.
pub const MAX_DIVISOR_BOX: u64 = 50_000_000;

/// `⊕ ℤ/p^{a_i}` in multiplicity form: the type value `f_1 + … + f_i`
/// occurs `g_i` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupType {
    pub p: u64,
    f: Vec<u32>,
    g: Vec<u32>,
}

impl GroupType {
    pub fn new(p: u64, f: Vec<u32>, g: Vec<u32>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!("p must be at least 2, got {p}")));
        }
        if f.len() != g.len() || f.iter().chain(&g).any(|&v| v == 0) {
            return Err(Error::InvalidArgument(format!(
                "multiplicity form needs positive f and g of equal length: f={f:?} g={g:?}"
            )));
        }
        Ok(Self { p, f, g })
    }

    /// The group of type `λ`.
    pub fn from_partition(p: u64, lambda: &Partition) -> Result<Self> {
        Self::from_parts(p, &lambda.ascending())
    }

    /// The group `⊕ ℤ/p^{a}` over the given exponents, in any order. Zero
    /// exponents are trivial summands and are dropped.
    pub fn from_parts(p: u64, parts: &[u32]) -> Result<Self> {
        let mut a: Vec<u32> = parts.iter().copied().filter(|&v| v > 0).collect();
        a.sort_unstable();
        let (mut f, mut g) = (Vec::new(), Vec::new());
        let mut prev = 0;
        for v in a {
            if v == prev {
                *g.last_mut().unwrap() += 1;
            } else {
                f.push(v - prev);
                g.push(1);
                prev = v;
            }
        }
        Self::new(p, f, g)
    }

    /// The trivial group.
    pub fn trivial(p: u64) -> Result<Self> {
        Self::new(p, Vec::new(), Vec::new())
    }

    pub fn f(&self) -> &[u32] {
        &self.f
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    /// Number of distinct exponents.
    pub fn distinct(&self) -> usize {
        self.f.len()
    }

    /// Exponents `f_1 + … + f_i`, one per block.
    pub fn levels(&self) -> Vec<u32> {
        self.f
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// Exponents in nondecreasing order.
    pub fn ascending(&self) -> Vec<u32> {
        self.levels()
            .into_iter()
            .zip(&self.g)
            .flat_map(|(v, &m)| std::iter::repeat(v).take(m as usize))
            .collect()
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.ascending()).expect("levels are positive")
    }

    pub fn rank(&self) -> u32 {
        self.g.iter().sum()
    }

    /// `k` with `|G| = p^k`.
    pub fn order_exponent(&self) -> u64 {
        self.levels().iter().zip(&self.g).map(|(&v, &m)| v as u64 * m as u64).sum()
    }

    /// Largest exponent: the rank of the conjugate group.
    pub fn exponent(&self) -> u32 {
        self.f.iter().sum()
    }

    /// The group whose type is the conjugate partition.
    pub fn conjugate(&self) -> GroupType {
        Self::from_partition(self.p, &self.partition().conjugate()).expect("same prime")
    }

    /// `M(G) = diag(p^{a_1}, …, p^{a_r})` with `a` nondecreasing.
    pub fn matrix(&self) -> SnfMatrix {
        self.padded_matrix(self.rank() as usize).expect("size equals rank")
    }

    /// `M(G)` with leading ones up to size `n`.
    pub fn padded_matrix(&self, n: usize) -> Result<SnfMatrix> {
        let a = self.ascending();
        if a.len() > n {
            return Err(Error::InvalidArgument(format!("rank {} exceeds size {n}", a.len())));
        }
        let p = BigInt::from(self.p);
        let mut d = vec![BigInt::one(); n - a.len()];
        d.extend(a.iter().map(|&e| Pow::pow(&p, e)));
        SnfMatrix::new(d)
    }

    /// The group with the same `f` and multiplicities `h` (zeros allowed).
    fn with_multiplicities(&self, h: &[u32]) -> GroupType {
        let levels = self.levels();
        let parts: Vec<u32> = levels
            .iter()
            .zip(h)
            .flat_map(|(&v, &m)| std::iter::repeat(v).take(m as usize))
            .collect();
        Self::from_parts(self.p, &parts).expect("same prime")
    }
}

impl std::fmt::Display for GroupType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let a = self.ascending();
        if a.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = a.iter().map(|e| format!("Z/{}^{e}", self.p)).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// An ordered splitting `G = H ⊕ K` and its multiplicity vector `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub h: GroupType,
    pub k: GroupType,
    pub split: Vec<u32>,
}

/// Ordered factorisations with counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorizations {
    pub pairs: Vec<Factorization>,
    /// Pairs with `H = K`.
    pub fixed: u64,
}

impl Factorizations {
    pub fn count(&self) -> u64 {
        self.pairs.len() as u64
    }

    /// Count with `(H, K)` and `(K, H)` identified.
    pub fn unordered_count(&self) -> u64 {
        (self.count() + self.fixed) / 2
    }
}

/// Checks `M(H')·M(K') = M(G')` as dense matrices and that the types of
/// `H` and `K` together make up the type of `G`.
fn verify_split(g: &GroupType, h: &GroupType, k: &GroupType) -> Result<()> {
    let n = g.exponent() as usize;
    let mg = g.conjugate().padded_matrix(n)?.to_matrix();
    let mh = h.conjugate().padded_matrix(n)?.to_matrix();
    let mk = k.conjugate().padded_matrix(n)?.to_matrix();
    if &mh * &mk != mg {
        return Err(Error::Consistency(format!("M(H')M(K') != M(G') for G = {g}, H = {h}, K = {k}")));
    }
    let mut union = h.ascending();
    union.extend(k.ascending());
    union.sort_unstable();
    if union != g.ascending() {
        return Err(Error::Consistency(format!("types of {h} and {k} do not make up {g}")));
    }
    Ok(())
}

fn splittings(g: &GroupType, choices: impl Fn(u32) -> Vec<u32>) -> Result<Factorizations> {
    let options: Vec<Vec<u32>> = g.g.iter().map(|&m| choices(m)).collect();
    let mut pairs = Vec::new();
    let mut fixed = 0;
    let mut idx = vec![0usize; options.len()];
    loop {
        let split: Vec<u32> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        let rest: Vec<u32> = split.iter().zip(&g.g).map(|(&h, &m)| m - h).collect();
        let h = g.with_multiplicities(&split);
        let k = g.with_multiplicities(&rest);
        verify_split(g, &h, &k)?;
        fixed += (split == rest) as u64;
        pairs.push(Factorization { h, k, split });
        // lexicographic odometer on the split vector
        let mut pos = options.len();
        loop {
            if pos == 0 {
                return Ok(Factorizations { pairs, fixed });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// All ordered `G = H ⊕ K`: every splitting `g_i = h_i + k_i`.
pub fn direct_factorizations(g: &GroupType) -> Result<Factorizations> {
    splittings(g, |m| (0..=m).collect())
}

/// Ordered unitary factorisations: `h_i ∈ {0, g_i}`.
pub fn unitary_factorizations(g: &GroupType) -> Result<Factorizations> {
    splittings(g, |m| vec![0, m])
}

/// Number of `diag(p^{d_1}, …, p^{d_r})` in Smith normal form dividing
/// `M(G)` entrywise: the subgroup classes of `G`. Enumerates the full box
/// `0 <= d_j <= c_j` and keeps the divisibility chains.
pub fn snf_divisor_count(g: &GroupType) -> Result<BigInt> {
    let m = g.matrix();
    let c = g.ascending();
    let size: u64 = c.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x as u64 + 1)).unwrap_or(u64::MAX);
    if size > MAX_DIVISOR_BOX {
        return Err(Error::OutOfRange {
            what: "divisor enumeration box",
            value: size,
            bound: MAX_DIVISOR_BOX,
        });
    }
    let p = BigInt::from(g.p);
    let mut count = BigInt::zero();
    let mut d = vec![0u32; c.len()];
    loop {
        let diag: Vec<BigInt> = d.iter().map(|&e| Pow::pow(&p, e)).collect();
        let divides_m = diag.iter().zip(m.diag()).all(|(x, y)| (y % x).is_zero());
        if divides_m && SnfMatrix::new(diag).is_ok() {
            count += 1;
        }
        let mut pos = c.len();
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            if d[pos] < c[pos] {
                d[pos] += 1;
                break;
            }
            d[pos] = 0;
        }
    }
}

/// All groups of order `p^k`, one per partition of `k`.
pub fn groups_of_order(k: u32, p: u64) -> Result<Vec<GroupType>> {
    partitions_of(k).iter().map(|l| GroupType::from_partition(p, l)).collect()
}

/// `∑` of direct factorisation counts over groups of order `p^k` whose
/// conjugates have rank `<= r`.
pub fn direct_factor_total(k: u32, r: u32, p: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for g in groups_of_order(k, p)?.iter().filter(|g| g.exponent() <= r) {
        total += direct_factorizations(g)?.count();
    }
    Ok(total)
}

/// As [`direct_factor_total`] for unitary factorisations.
pub fn unitary_factor_total(k: u32, r: u32, p: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for g in groups_of_order(k, p)?.iter().filter(|g| g.exponent() <= r) {
        total += unitary_factorizations(g)?.count();
    }
    Ok(total)
}

/// `∑` of subgroup-class counts over groups of order `p^k` and rank `<= r`.
pub fn subgroup_class_total(k: u32, r: u32, p: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for g in groups_of_order(k, p)?.iter().filter(|g| g.rank() <= r) {
        total += snf_divisor_count(g)?;
    }
    Ok(total)
}

/// The tuples `(n_1, …, n_r)` with `n_1^r·n_2^{r−1}⋯n_r = n`, and
/// `u_r(n) = ∑ 2^{ω(n_1)+⋯+ω(n_r)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UDecompositions {
    pub tuples: Vec<Vec<u64>>,
    pub total: BigInt,
}

pub fn u_decompositions(n: u64, r: u32) -> Result<UDecompositions> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and r >= 1, got n={n} r={r}")));
    }
    fn go(rest: u64, e: u32, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) -> Result<()> {
        if e == 0 {
            if rest == 1 {
                out.push(cur.clone());
            }
            return Ok(());
        }
        for d in divisors(rest)? {
            let Some(pw) = d.checked_pow(e) else { break };
            if pw > rest {
                break;
            }
            if rest % pw == 0 {
                cur.push(d);
                go(rest / pw, e - 1, cur, out)?;
                cur.pop();
            }
        }
        Ok(())
    }
    let mut tuples = Vec::new();
    go(n, r, &mut Vec::new(), &mut tuples)?;
    let mut total = BigInt::zero();
    for t in &tuples {
        let mut w = 0;
        for &x in t {
            w += omega(x)?;
        }
        total += BigInt::one() << w;
    }
    Ok(UDecompositions { tuples, total })
}
