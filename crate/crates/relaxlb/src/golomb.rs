//! Golomb rulers (Sidon sets) and the potentials they induce.
//!
//! A ruler is a set of non-negative integers whose pairwise differences are
//! all distinct. Used as a potential, a ruler induces an assignment
//! `dphi(u,v) = phi[v] - phi[u]` in which all `n(n-1)` edge weights are
//! distinct — the key ingredient for masking away D- and weight-queries.
//!
//! Construction: the quadratic-residue set `{2p*i + (i^2 mod p) : 0 <= i < n}`
//! for the least prime `p >= n`. Since `p < 2n`, the largest mark is below
//! `2pn < 8n^2`, and the first mark is 0.

use crate::weights::Potential;

/// Strictly increasing non-negative integers with distinct pairwise
/// differences; the first mark is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ruler {
    marks: Vec<i64>,
}

impl Ruler {
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn max_mark(&self) -> i64 {
        *self.marks.last().unwrap()
    }
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn least_prime_at_least(n: u64) -> u64 {
    let mut p = n.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// An `n`-mark Golomb ruler with all marks below `8n^2`.
pub fn erdos_turan_ruler(n: usize) -> Ruler {
    assert!(n >= 1);
    let p = least_prime_at_least(n as u64) as i64;
    let marks = (0..n as i64).map(|i| 2 * p * i + (i * i) % p).collect();
    Ruler { marks }
}

/// True iff all ordered differences `m_i - m_j` (`i != j`) are pairwise
/// distinct. Duplicated marks fail (their difference 0 repeats).
///
/// Ordered differences come in sign-symmetric pairs, so it suffices that the
/// absolute differences over unordered pairs are nonzero and distinct.
pub fn is_golomb(marks: &[i64]) -> bool {
    let k = marks.len();
    if k < 2 {
        return true;
    }
    let min = *marks.iter().min().unwrap();
    let max = *marks.iter().max().unwrap();
    let span = max.abs_diff(min);
    if span <= 1 << 26 {
        // Bitset over the difference range.
        let mut bits = vec![0u64; (span as usize >> 6) + 1];
        for i in 0..k {
            for j in i + 1..k {
                let d = marks[i].abs_diff(marks[j]);
                if d == 0 {
                    return false;
                }
                let (word, bit) = ((d >> 6) as usize, d & 63);
                if bits[word] & (1 << bit) != 0 {
                    return false;
                }
                bits[word] |= 1 << bit;
            }
        }
        true
    } else {
        let mut seen = std::collections::HashSet::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                let d = marks[i].abs_diff(marks[j]);
                if d == 0 || !seen.insert(d) {
                    return false;
                }
            }
        }
        true
    }
}

/// The potential whose labels are the marks of [`erdos_turan_ruler`]. Induces
/// `n(n-1)` pairwise distinct edge weights, and vanishes at the start vertex.
pub fn golomb_potential(n: usize) -> Potential {
    Potential::new(erdos_turan_ruler(n).marks)
}
