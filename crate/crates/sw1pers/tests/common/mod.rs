//! Shared test helpers: a deliberately naive persistence implementation used
//! as the oracle against the optimized reduction, plus small utilities.
//!
//! The oracle reduces the full boundary matrix over all simplices with the
//! textbook left-to-right column algorithm: no clearing, no union-find, no
//! transposition, every column stored. It shares no code with the library's
//! reduction beyond the `FilteredComplex` input type.

use std::collections::HashMap;

use sw1pers::rips::FilteredComplex;

/// Diagrams as plain sorted data for exact comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveDiagrams {
    /// Finite H0 pairs, sorted by (birth, death).
    pub h0: Vec<(f64, f64)>,
    /// Number of essential H0 classes (one per component).
    pub h0_essential: usize,
    pub h0_zero: usize,
    /// Finite H1 pairs with birth < death, sorted.
    pub h1: Vec<(f64, f64)>,
    pub h1_zero: usize,
    /// Birth times of H1 classes alive at the threshold, sorted.
    pub h1_censored: Vec<f64>,
}

fn modpow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn naive_persistence(complex: &FilteredComplex, p: u32) -> NaiveDiagrams {
    let p = p as u64;
    let inv = |a: u64| modpow(a, p - 2, p);
    let simplices = complex.simplices();
    let n = simplices.len();
    let position: HashMap<[u32; 3], usize> = simplices
        .iter()
        .enumerate()
        .map(|(idx, s)| (s.verts, idx))
        .collect();

    // columns of the full boundary matrix, entries (row, coeff) ascending
    let mut columns: Vec<Vec<(usize, u64)>> = Vec::with_capacity(n);
    for s in simplices {
        let mut col: Vec<(usize, u64)> = match s.dim {
            0 => Vec::new(),
            1 => {
                let vi = position[&[s.verts[0], u32::MAX, u32::MAX]];
                let vj = position[&[s.verts[1], u32::MAX, u32::MAX]];
                vec![(vi, p - 1), (vj, 1)]
            }
            _ => {
                let eij = position[&[s.verts[0], s.verts[1], u32::MAX]];
                let eik = position[&[s.verts[0], s.verts[2], u32::MAX]];
                let ejk = position[&[s.verts[1], s.verts[2], u32::MAX]];
                vec![(eij, 1), (eik, p - 1), (ejk, 1)]
            }
        };
        col.sort_unstable_by_key(|e| e.0);
        columns.push(col);
    }

    // textbook reduction: low(R_j) unique across columns
    let mut low_owner: Vec<Option<usize>> = vec![None; n];
    for j in 0..n {
        while let Some(&(low, coeff)) = columns[j].last() {
            match low_owner[low] {
                None => {
                    low_owner[low] = Some(j);
                    break;
                }
                Some(owner) => {
                    let pivot = columns[owner].last().unwrap().1;
                    let factor = coeff * inv(pivot) % p;
                    // columns[j] -= factor * columns[owner]
                    let other = columns[owner].clone();
                    let mut merged = Vec::with_capacity(columns[j].len() + other.len());
                    let (mut a, mut b) = (0usize, 0usize);
                    let cur = &columns[j];
                    while a < cur.len() && b < other.len() {
                        match cur[a].0.cmp(&other[b].0) {
                            std::cmp::Ordering::Less => {
                                merged.push(cur[a]);
                                a += 1;
                            }
                            std::cmp::Ordering::Greater => {
                                let v = (p - factor * other[b].1 % p) % p;
                                if v != 0 {
                                    merged.push((other[b].0, v));
                                }
                                b += 1;
                            }
                            std::cmp::Ordering::Equal => {
                                let v = (cur[a].1 + p - factor * other[b].1 % p) % p;
                                if v != 0 {
                                    merged.push((cur[a].0, v));
                                }
                                a += 1;
                                b += 1;
                            }
                        }
                    }
                    merged.extend_from_slice(&cur[a..]);
                    for &(row, c) in &other[b..] {
                        let v = (p - factor * c % p) % p;
                        if v != 0 {
                            merged.push((row, v));
                        }
                    }
                    columns[j] = merged;
                }
            }
        }
    }

    let mut out = NaiveDiagrams {
        h0: Vec::new(),
        h0_essential: 0,
        h0_zero: 0,
        h1: Vec::new(),
        h1_zero: 0,
        h1_censored: Vec::new(),
    };
    let mut paired = vec![false; n];
    for (j, col) in columns.iter().enumerate() {
        if let Some(&(low, _)) = col.last() {
            paired[low] = true;
            paired[j] = true;
            let (birth, death) = (simplices[low].time, simplices[j].time);
            match simplices[low].dim {
                0 => {
                    if birth == death {
                        out.h0_zero += 1;
                    } else {
                        out.h0.push((birth, death));
                    }
                }
                1 => {
                    if birth == death {
                        out.h1_zero += 1;
                    } else {
                        out.h1.push((birth, death));
                    }
                }
                _ => unreachable!("no 3-simplices in the filtration"),
            }
        }
    }
    for (j, s) in simplices.iter().enumerate() {
        if !paired[j] && columns[j].is_empty() {
            match s.dim {
                0 => out.h0_essential += 1,
                1 => out.h1_censored.push(s.time),
                _ => {}
            }
        }
    }
    out.h0
        .sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    out.h1
        .sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    out.h1_censored.sort_by(f64::total_cmp);
    out
}
