//! Integer-vector model of curves in the degenerate Severi varieties.
//!
//! An [`AlphaVector`] `(α_0, …, α_{n-1})` records, for each level `l`, how many
//! maximal special `l`-sequences of fibers a limit curve contains (`α_0`
//! counts the distinguished pairs of the second kind). The vector must satisfy
//! `Σ (j+1) α_j = n`; the node count is `δ = Σ j α_j`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` accepted anywhere in this module.
pub const MAX_N: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphaError {
    #[error("Σ(j+1)α_j = {weight} differs from n = {n}")]
    ViolatesNumCond { n: usize, weight: u64 },
    #[error("vector length must be in 1..={max}, got {n}", max = MAX_N)]
    BadLength { n: usize },
    #[error("delta = {delta} out of range 0..={max}")]
    DeltaOutOfRange { delta: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no vector with n = {n}, delta = {delta} respects cap {cap}")]
    NoSuccessor { n: usize, delta: usize, cap: u64 },
}

pub type Result<T> = std::result::Result<T, AlphaError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaVector {
    entries: Vec<u64>,
}

/// Quantities derived from a valid vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaSummary {
    pub n: usize,
    pub delta: usize,
    /// Number of distinguished pairs, `Σ α_j`.
    pub pairs: usize,
    /// Geometric genus of the stable model, `1 + pairs`.
    pub g: usize,
}

impl AlphaVector {
    /// Wraps the entries after checking `Σ (j+1) α_j = n` with `n = entries.len()`.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        let v = Self { entries };
        v.validate()?;
        Ok(v)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, level: usize) -> u64 {
        self.entries.get(level).copied().unwrap_or(0)
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn respects_cap(&self, cap: u64) -> bool {
        self.entries.iter().all(|&a| a <= cap)
    }

    pub fn delta(&self) -> usize {
        self.entries.iter().enumerate().map(|(j, &a)| j * a as usize).sum()
    }

    /// Checks the size condition and returns `(n, delta, pairs, g)`.
    pub fn validate(&self) -> Result<AlphaSummary> {
        let n = self.entries.len();
        if n == 0 || n > MAX_N {
            return Err(AlphaError::BadLength { n });
        }
        let mut weight: u64 = 0;
        for (j, &a) in self.entries.iter().enumerate() {
            weight = weight.saturating_add((j as u64 + 1).saturating_mul(a));
        }
        if weight != n as u64 {
            return Err(AlphaError::ViolatesNumCond { n, weight });
        }
        let delta = self.delta();
        let pairs: usize = self.entries.iter().map(|&a| a as usize).sum();
        debug_assert_eq!(pairs, n - delta);
        Ok(AlphaSummary { n, delta, pairs, g: 1 + pairs })
    }
}

impl std::fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

fn check_n_delta(n: usize, delta: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(AlphaError::BadLength { n });
    }
    if delta > n - 1 {
        return Err(AlphaError::DeltaOutOfRange { delta, max: n - 1 });
    }
    Ok(())
}

/// Depth-first search over vectors with `Σ(j+1)α_j = n` and `Σα_j = n - delta`,
/// choosing `α_0, α_1, …` in increasing order so that visits come out in
/// lexicographic order. The visitor returns `false` to stop.
struct Search<'a, F: FnMut(&[u64]) -> bool> {
    n: usize,
    cap: u64,
    entries: Vec<u64>,
    visit: &'a mut F,
}

impl<F: FnMut(&[u64]) -> bool> Search<'_, F> {
    // `size` is the remaining Σ(j+1)α_j, `parts` the remaining Σα_j.
    fn descend(&mut self, level: usize, size: usize, parts: usize) -> bool {
        if parts == 0 {
            return if size == 0 { (self.visit)(&self.entries) } else { true };
        }
        if level >= self.n {
            return true;
        }
        let len = level + 1;
        // Every remaining part has length >= len and <= n.
        if parts * len > size || parts * self.n < size {
            return true;
        }
        let hi = (parts as u64).min(self.cap).min((size / len) as u64);
        for a in 0..=hi {
            let a_us = a as usize;
            self.entries[level] = a;
            let keep_going = self.descend(level + 1, size - a_us * len, parts - a_us);
            if !keep_going {
                self.entries[level] = 0;
                return false;
            }
        }
        self.entries[level] = 0;
        true
    }
}

fn search<F: FnMut(&[u64]) -> bool>(n: usize, delta: usize, cap: Option<u64>, visit: &mut F) {
    let mut s = Search { n, cap: cap.unwrap_or(u64::MAX), entries: vec![0; n], visit };
    s.descend(0, n, n - delta);
}

/// All vectors of length `n` with node count `delta` (and entries `<= cap`),
/// in lexicographic order.
pub fn enumerate(n: usize, delta: usize, cap: Option<u64>) -> Result<Vec<AlphaVector>> {
    check_n_delta(n, delta)?;
    let mut out = Vec::new();
    search(n, delta, cap, &mut |e: &[u64]| {
        out.push(AlphaVector { entries: e.to_vec() });
        true
    });
    Ok(out)
}

/// First vector of [`enumerate`], without materializing the rest.
pub fn first_solution(n: usize, delta: usize, cap: Option<u64>) -> Result<Option<AlphaVector>> {
    check_n_delta(n, delta)?;
    let mut found = None;
    search(n, delta, cap, &mut |e: &[u64]| {
        found = Some(AlphaVector { entries: e.to_vec() });
        false
    });
    Ok(found)
}

/// The vector `α_0 = n - δ - 1`, `α_δ = 1` realizing a `δ`-nodal curve of
/// geometric genus `n + 1 - δ`.
pub fn severi_vector(n: usize, delta: usize) -> Result<AlphaVector> {
    check_n_delta(n, delta)?;
    let mut entries = vec![0; n];
    entries[0] = (n - delta - 1) as u64;
    entries[delta] += 1;
    Ok(AlphaVector { entries })
}

/// The starting vector of the constructive argument for the bound
/// `α_j <= 2k`, together with its parameters
/// `n = km(m+1) + t(m+1) + λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseConstruction {
    pub m: usize,
    pub t: usize,
    pub lambda: usize,
    pub delta0: usize,
    pub vector: AlphaVector,
}

pub fn base_vector(n: usize, k: usize) -> Result<BaseConstruction> {
    if !(2..=MAX_N).contains(&n) || k < 2 {
        return Err(AlphaError::InvalidParameter(format!("need 2 <= n <= {MAX_N} and k >= 2, got n = {n}, k = {k}")));
    }
    let mut m = 0;
    while k * (m + 1) * (m + 2) <= n {
        m += 1;
    }
    let t = n / (m + 1) - m * k;
    let lambda = n - k * m * (m + 1) - t * (m + 1);
    debug_assert!(t < 2 * k && lambda <= m);
    let delta0 = k * m * (m.max(1) - 1) + t * m + lambda;

    let two_k = 2 * k as u64;
    let mut entries = vec![0u64; n];
    if lambda == 0 {
        entries[..m].fill(two_k);
        entries[m] = t as u64;
    } else if t == 0 {
        // λ > 0 forces m >= 1.
        entries[..m - 1].fill(two_k);
        entries[m - 1] = two_k - 1;
        entries[m - 1 + lambda] += 1;
    } else {
        entries[..m].fill(two_k);
        entries[m] = t as u64 - 1;
        entries[m + lambda] += 1;
    }
    let vector = AlphaVector { entries };
    debug_assert_eq!(vector.validate().map(|s| s.delta), Ok(delta0));
    Ok(BaseConstruction { m, t, lambda, delta0, vector })
}

/// `⌈mn/(m+1)⌉ - mk`, the closed form of the minimal node count.
pub fn delta0_closed_form(n: usize, k: usize) -> usize {
    let mut m = 0;
    while k * (m + 1) * (m + 2) <= n {
        m += 1;
    }
    (m * n).div_ceil(m + 1) - m * k
}

/// Raises the node count by one while keeping `Σ(j+1)α_j = n` and every
/// entry `<= cap`.
///
/// Tries, in order: merging a level-0 pair into the highest occupied level
/// `h` (`α_0 -= 1, α_h -= 1, α_{h+1} += 1`); merging two sequences of the same
/// level `h` (`α_h -= 2, α_{2h+1} += 1`); and finally the first solution of
/// the exhaustive search.
pub fn increment_delta(vector: &AlphaVector, cap: u64) -> Result<AlphaVector> {
    let summary = vector.validate()?;
    let n = summary.n;
    if summary.delta + 1 > n - 1 {
        return Err(AlphaError::DeltaOutOfRange { delta: summary.delta + 1, max: n - 1 });
    }
    if cap < 2 {
        return Err(AlphaError::InvalidParameter(format!("cap = {cap} must be >= 2")));
    }
    let e = vector.entries();

    let top = e.iter().rposition(|&a| a >= 1);
    if let Some(h) = top.filter(|&h| h > 0 && e[0] >= 1 && h + 1 < n) {
        let mut next = e.to_vec();
        next[0] -= 1;
        next[h] -= 1;
        next[h + 1] += 1;
        if next[h + 1] <= cap {
            return Ok(AlphaVector { entries: next });
        }
    }

    for h in 0..n {
        let target = 2 * h + 1;
        if target >= n {
            break;
        }
        if e[h] >= 2 && e[target] < cap {
            let mut next = e.to_vec();
            next[h] -= 2;
            next[target] += 1;
            return Ok(AlphaVector { entries: next });
        }
    }

    first_solution(n, summary.delta + 1, Some(cap))?.ok_or(AlphaError::NoSuccessor {
        n,
        delta: summary.delta + 1,
        cap,
    })
}

/// Node counts `δ` for which some vector respects the cap `2k`.
pub fn reachable_deltas(n: usize, k: usize) -> Result<Vec<usize>> {
    if n < 2 || k < 2 {
        return Err(AlphaError::InvalidParameter(format!("need n >= 2 and k >= 2, got n = {n}, k = {k}")));
    }
    let cap = 2 * k as u64;
    let mut out = Vec::new();
    for delta in 0..n {
        if first_solution(n, delta, Some(cap))?.is_some() {
            out.push(delta);
        }
    }
    Ok(out)
}

/// Runs [`increment_delta`] from the base vector up to `δ = n - 1`.
pub fn walk(n: usize, k: usize) -> Result<Vec<AlphaVector>> {
    let base = base_vector(n, k)?;
    let cap = 2 * k as u64;
    let mut current = base.vector;
    let mut out = vec![current.clone()];
    while current.delta() < n - 1 {
        current = increment_delta(&current, cap)?;
        out.push(current.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u64]) -> AlphaVector {
        AlphaVector::new(e.to_vec()).unwrap()
    }

    fn padded(prefix: &[u64], n: usize) -> Vec<u64> {
        let mut e = prefix.to_vec();
        e.resize(n, 0);
        e
    }

    #[test]
    fn validate_examples() {
        let s = v(&[4, 0, 0, 0]).validate().unwrap();
        assert_eq!((s.n, s.delta, s.pairs, s.g), (4, 0, 4, 5));
        let s = v(&[2, 1, 0, 0]).validate().unwrap();
        assert_eq!((s.n, s.delta, s.pairs, s.g), (4, 1, 3, 4));
        let s = v(&[0, 0, 0, 1]).validate().unwrap();
        assert_eq!((s.n, s.delta, s.pairs, s.g), (4, 3, 1, 2));
    }

    #[test]
    fn validate_rejects() {
        assert_eq!(
            AlphaVector::new(vec![1, 1, 0, 0]),
            Err(AlphaError::ViolatesNumCond { n: 4, weight: 3 })
        );
        assert!(matches!(AlphaVector::new(vec![]), Err(AlphaError::BadLength { n: 0 })));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(4, 0, None).unwrap(), vec![v(&[4, 0, 0, 0])]);
        assert_eq!(enumerate(4, 1, None).unwrap(), vec![v(&[2, 1, 0, 0])]);
        assert_eq!(enumerate(5, 1, Some(4)).unwrap(), vec![v(&[3, 1, 0, 0, 0])]);
        // cap 2 forbids α_0 = 3
        assert!(enumerate(5, 1, Some(2)).unwrap().is_empty());
        assert!(enumerate(4, 4, None).is_err());
    }

    #[test]
    fn enumerate_is_sorted() {
        let all = enumerate(10, 4, None).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(first_solution(10, 4, None).unwrap().as_ref(), all.first());
    }

    #[test]
    fn severi_examples() {
        assert_eq!(severi_vector(10, 3).unwrap().entries(), padded(&[6, 0, 0, 1], 10));
        assert_eq!(severi_vector(7, 0).unwrap().entries(), padded(&[7], 7));
        let s = severi_vector(5, 4).unwrap();
        assert_eq!(s.entries(), &[0, 0, 0, 0, 1]);
        assert_eq!(s.validate().unwrap().delta, 4);
        assert!(severi_vector(5, 5).is_err());
    }

    #[test]
    fn base_examples() {
        let b = base_vector(10, 2).unwrap();
        assert_eq!((b.m, b.t, b.lambda, b.delta0), (1, 3, 0, 3));
        assert_eq!(b.vector.entries(), padded(&[4, 3], 10));

        let b = base_vector(13, 2).unwrap();
        assert_eq!((b.m, b.t, b.lambda, b.delta0), (2, 0, 1, 5));
        assert_eq!(b.vector.entries(), padded(&[4, 3, 1], 13));

        let b = base_vector(16, 2).unwrap();
        assert_eq!((b.m, b.t, b.lambda, b.delta0), (2, 1, 1, 7));
        assert_eq!(b.vector.entries(), padded(&[4, 4, 0, 1], 16));
        assert_eq!(b.vector.validate().unwrap().delta, 7);
    }

    #[test]
    fn base_small_n_has_m_zero() {
        let b = base_vector(3, 2).unwrap();
        assert_eq!((b.m, b.t, b.lambda, b.delta0), (0, 3, 0, 0));
        assert_eq!(b.vector.entries(), &[3, 0, 0]);
    }

    #[test]
    fn increment_examples() {
        let next = increment_delta(&v(&padded(&[4, 3], 10)), 4).unwrap();
        assert_eq!(next.entries(), padded(&[3, 2, 1], 10));
        assert_eq!(next.delta(), 4);

        let next = increment_delta(&v(&[0, 2, 0, 0]), 100).unwrap();
        assert_eq!(next.entries(), &[0, 0, 0, 1]);

        for n in 3..12 {
            let next = increment_delta(&severi_vector(n, 0).unwrap(), 2).unwrap();
            assert_eq!(next.entries(), padded(&[n as u64 - 2, 1], n));
        }
    }

    #[test]
    fn increment_at_top_fails() {
        assert!(matches!(
            increment_delta(&v(&[0, 0, 0, 1]), 4),
            Err(AlphaError::DeltaOutOfRange { .. })
        ));
    }

    #[test]
    fn reachable_examples() {
        assert_eq!(reachable_deltas(10, 2).unwrap(), (3..=9).collect::<Vec<_>>());
        assert_eq!(reachable_deltas(4, 2).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(reachable_deltas(5, 2).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(base_vector(5, 2).unwrap().delta0, 1);
    }

    #[test]
    fn walk_reaches_top() {
        let steps = walk(10, 2).unwrap();
        let deltas: Vec<_> = steps.iter().map(|s| s.delta()).collect();
        assert_eq!(deltas, (3..=9).collect::<Vec<_>>());
        assert!(steps.iter().all(|s| s.respects_cap(4)));
    }

    #[test]
    fn display() {
        assert_eq!(v(&[2, 1, 0, 0]).to_string(), "[2,1,0,0]");
    }
}
