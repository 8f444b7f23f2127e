//! Oracles shared by the integration tests.
#![allow(dead_code)]

use chebcurves::chebyshev::chebyshev_u_upto;
use chebcurves::poly::{HomoPoly3, Monomial3, Scalar};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Mersenne prime 2^61 − 1.
pub const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = BigInt::from(P);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().unwrap()
}

pub fn reduce(x: &Scalar) -> u64 {
    mul(reduce_int(x.numer()), inv(reduce_int(x.denom())))
}

/// Monomials of total degree `d`, descending grlex.
pub fn monomials(d: u32) -> Vec<Monomial3> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push(Monomial3::new(i, j, d - i - j));
        }
    }
    out
}

fn eval_uni_mod(coeffs: &[Scalar], t: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, c| add(mul(acc, t), reduce(c)))
}

/// Kernel of the evaluation map `f ↦ (f∘Γ_{p,q})(t_k)` on degree-`d` forms,
/// modulo `P`, computed by Gaussian elimination on enough sample points to
/// pin down `f∘Γ` completely. Returns a basis, each vector scaled so that
/// its first non-zero entry (in descending grlex) is 1.
pub fn implicit_kernel_mod(p: u32, q: u32, d: u32) -> Vec<Vec<u64>> {
    let us = chebyshev_u_upto(p + q - 1);
    let comps = [&us[(p - 1) as usize], &us[(q - 1) as usize], &us[(p + q - 1) as usize]];
    let mons = monomials(d);
    let n = mons.len();
    let rows = (d * (p + q - 1) + 1) as usize + 8;
    let mut m: Vec<Vec<u64>> = (0..rows as u64)
        .map(|k| {
            let t = 1000 + 7 * k;
            let v = comps.map(|u| eval_uni_mod(u.coeffs(), t));
            mons.iter()
                .map(|mo| {
                    let [i, j, l] = mo.exps;
                    mul(mul(pow(v[0], i as u64), pow(v[1], j as u64)), pow(v[2], l as u64))
                })
                .collect()
        })
        .collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..rows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, pr);
        let iv = inv(m[r][col]);
        for x in m[r].iter_mut() {
            *x = mul(*x, iv);
        }
        for i in 0..rows {
            if i != r && m[i][col] != 0 {
                let f = m[i][col];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x = sub(*x, mul(f, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = sub(0, m[row][fc]);
            }
            normalize(v)
        })
        .collect()
}

fn normalize(mut v: Vec<u64>) -> Vec<u64> {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let iv = inv(lead);
        for x in v.iter_mut() {
            *x = mul(*x, iv);
        }
    }
    v
}

/// Coefficients of `f` modulo `P` in the order of [`monomials`], scaled like
/// the kernel vectors.
pub fn coeffs_mod(f: &HomoPoly3) -> Vec<u64> {
    let v = monomials(f.degree())
        .iter()
        .map(|m| {
            let c = f.coeff(m);
            if c.is_zero() { 0 } else { reduce(&c) }
        })
        .collect();
    normalize(v)
}
