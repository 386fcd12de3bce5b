//! Slow, dense reference computations shared by the integration tests. Nothing here
//! calls into the library's linear algebra or Hom solver.

#![allow(dead_code)]

use agt_core::{IrreducibleComponent, Monomial, MonomialIdeal};
use proptest::prelude::*;

pub const P: u64 = 101;

fn inv(a: u64) -> u64 {
    let (mut r, mut e, mut b) = (1, P - 2, a % P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] % P != 0) else { continue };
        rows.swap(r, sel);
        let s = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = *x * s % P;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let m = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + P * P - m * rows[r][j]) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(mut rows: Vec<Vec<u64>>, ncols: usize) -> usize {
    rref(&mut rows, ncols).len()
}

pub fn nullspace(mut rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (P - row[fc]) % P;
            }
            v
        })
        .collect()
}

/// Multiplication by each variable on a monomial-labelled module: `x_k m` if that is a
/// label, else zero. `mats[k][target][source]`.
pub fn label_actions(nvars: usize, labels: &[Monomial]) -> Vec<Vec<Vec<u64>>> {
    let d = labels.len();
    (0..nvars)
        .map(|k| {
            let mut m = vec![vec![0; d]; d];
            for (s, lab) in labels.iter().enumerate() {
                let image = lab.mul(&Monomial::var(nvars, k));
                if let Some(t) = labels.iter().position(|l| *l == image) {
                    m[t][s] = 1;
                }
            }
            m
        })
        .collect()
}

/// Every `φ` (row-major `dt x ds`) with `φ X_k = Y_k φ` for all `k`.
pub fn hom_basis(src: &[Vec<Vec<u64>>], tgt: &[Vec<Vec<u64>>], ds: usize, dt: usize) -> Vec<Vec<u64>> {
    let nunk = dt * ds;
    let mut eqs = Vec::new();
    for (x, y) in src.iter().zip(tgt) {
        for i in 0..dt {
            for j in 0..ds {
                // (φ X)_{ij} - (Y φ)_{ij}
                let mut row = vec![0u64; nunk];
                for l in 0..ds {
                    row[i * ds + l] = (row[i * ds + l] + x[l][j]) % P;
                }
                for l in 0..dt {
                    row[l * ds + j] = (row[l * ds + j] + P - y[i][l]) % P;
                }
                if row.iter().any(|&v| v != 0) {
                    eqs.push(row);
                }
            }
        }
    }
    nullspace(eqs, nunk)
}

/// Dimension of the span of all columns of all maps.
pub fn image_span_dim(maps: &[Vec<u64>], ds: usize, dt: usize) -> usize {
    let cols: Vec<Vec<u64>> = maps
        .iter()
        .flat_map(|m| (0..ds).map(move |j| (0..dt).map(|i| m[i * ds + j]).collect::<Vec<u64>>()))
        .collect();
    rank(cols, dt)
}

/// Monomials of `S` outside `ideal`, below the pure powers, by brute force.
pub fn standard_monomials(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let n = ideal.nvars();
    let bound: Vec<u32> = (0..n)
        .map(|k| {
            ideal.gens().iter().filter_map(|g| g.as_pure_power().filter(|(v, _)| *v == k).map(|(_, e)| e)).min().unwrap()
        })
        .collect();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial::new(e.clone());
        if !ideal.gens().iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            e[k] += 1;
            if e[k] < bound[k] {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Labels of the canonical module: monomials outside `(x^t)` divisible by some `x^{t - a_i}`.
pub fn omega_labels(comps: &[IrreducibleComponent]) -> Vec<Monomial> {
    let n = comps[0].nvars();
    let t: Vec<u32> = (0..n).map(|k| comps.iter().map(|c| c.exponents()[k]).max().unwrap()).collect();
    let f: Vec<Monomial> = comps
        .iter()
        .map(|c| Monomial::new(t.iter().zip(c.exponents()).map(|(a, b)| a - b).collect()))
        .collect();
    let j = IrreducibleComponent::new(t).unwrap().to_ideal();
    standard_monomials(&j).into_iter().filter(|m| f.iter().any(|fi| fi.divides(m))).collect()
}

/// Component exponent vectors with `1 <= a <= max`.
pub fn components(nvars: usize, max: u32, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<IrreducibleComponent>> {
    prop::collection::vec(prop::collection::vec(1..=max, nvars), count)
        .prop_map(|rows| rows.into_iter().map(|r| IrreducibleComponent::new(r).unwrap()).collect())
}

/// An `m`-primary ideal in `1..=max_vars` variables given as an intersection.
pub fn primary_ideal(max_vars: usize, max_exp: u32, max_comps: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars)
        .prop_flat_map(move |n| components(n, max_exp, 1..=max_comps))
        .prop_map(|c| MonomialIdeal::from_components(&c).unwrap())
}

/// A monomial ideal (possibly zero) in `n` variables.
pub fn monomial_ideal(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 0..=max_gens)
        .prop_map(move |g| MonomialIdeal::new(n, g.into_iter().map(Monomial::new).collect()).unwrap())
}
