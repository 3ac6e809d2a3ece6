//! Test-side reference computations. Nothing here touches the library's
//! enumerator, cumulants, or recurrence code; only the exact ring is shared.
#![allow(dead_code)]

use linco::algebra::{ExactPoly, Rational, XPoly};
use linco::family::Family;
use linco::partition::SetPartition;
use num_bigint::BigInt;

pub fn int(n: i64) -> ExactPoly {
    ExactPoly::from_int(n)
}

pub fn t() -> ExactPoly {
    ExactPoly::t()
}

pub fn q() -> ExactPoly {
    ExactPoly::q()
}

pub fn alpha() -> ExactPoly {
    ExactPoly::alpha()
}

/// `1 + q + ... + q^(n-1)`.
pub fn qint(n: usize) -> ExactPoly {
    let mut acc = ExactPoly::zero();
    let mut power = ExactPoly::one();
    for _ in 0..n {
        acc = &acc + &power;
        power = &power * &q();
    }
    acc
}

pub fn qfact(n: usize) -> ExactPoly {
    (1..=n).fold(ExactPoly::one(), |acc, j| &acc * &qint(j))
}

pub fn fact(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Recurrence coefficients `x P_m = P_{m+1} + b(m) P_m + c(m) P_{m-1}`,
/// typed in from the family definitions.
pub fn b(f: Family, m: usize) -> ExactPoly {
    match f {
        Family::Hermite | Family::Chebyshev2 | Family::QHermite => ExactPoly::zero(),
        Family::Charlier => int(m as i64),
        Family::FreeCharlier => int(if m == 0 { 0 } else { 1 }),
        Family::BigQHermite => qint(m),
        Family::Interp => &alpha() * &qint(m),
    }
}

pub fn c(f: Family, m: usize) -> ExactPoly {
    match f {
        Family::Hermite | Family::Charlier => &int(m as i64) * &t(),
        Family::Chebyshev2 | Family::FreeCharlier => t(),
        Family::QHermite | Family::BigQHermite | Family::Interp => &t() * &qint(m),
    }
}

pub fn polys(f: Family, upto: usize) -> Vec<XPoly> {
    let mut out = vec![XPoly::one()];
    if upto == 0 {
        return out;
    }
    out.push(XPoly::x() - XPoly::constant(b(f, 0)));
    for m in 1..upto {
        let next = out[m].mul_x() - out[m].scale(&b(f, m)) - out[m - 1].scale(&c(f, m));
        out.push(next);
    }
    out
}

pub fn product(f: Family, parts: &[usize]) -> XPoly {
    let top = parts.iter().copied().max().unwrap_or(0);
    let basis = polys(f, top);
    parts.iter().fold(XPoly::one(), |acc, &d| &acc * &basis[d])
}

/// Moments from the Jacobi matrix: the constant coefficient of `x^n`
/// expanded in the basis.
pub fn moments(f: Family, upto: usize) -> Vec<ExactPoly> {
    let mut row = vec![ExactPoly::one()];
    let mut out = vec![ExactPoly::one()];
    for _ in 0..upto {
        let mut next = vec![ExactPoly::zero(); row.len() + 1];
        for k in 0..row.len() {
            next[k + 1] = &next[k + 1] + &row[k];
            next[k] = &next[k] + &(&b(f, k) * &row[k]);
            if k > 0 {
                next[k - 1] = &next[k - 1] + &(&c(f, k) * &row[k]);
            }
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

pub fn integrate(f: Family, p: &XPoly) -> ExactPoly {
    let d = p.degree().unwrap_or(0);
    let m = moments(f, d);
    p.coeffs().iter().zip(&m).map(|(a, mu)| a * mu).sum()
}

/// `⟨∏ P_{n_j}⟩` through the Jacobi oracle.
pub fn expectation(f: Family, parts: &[usize]) -> ExactPoly {
    integrate(f, &product(f, parts))
}

fn block_of(p: &SetPartition) -> Vec<usize> {
    let mut owner = vec![0; p.n() + 1];
    for (i, block) in p.blocks().iter().enumerate() {
        for &e in block {
            owner[e] = i;
        }
    }
    owner
}

fn successor(p: &SetPartition, e: usize) -> Option<usize> {
    p.blocks()
        .iter()
        .find(|b| b.contains(&e))
        .and_then(|b| b.iter().copied().filter(|&x| x > e).min())
}

/// Quadruple scan for `i < j < k < l` with `k`, `l` the block successors of `i`, `j`.
pub fn brute_rc(p: &SetPartition) -> usize {
    let n = p.n();
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    if successor(p, i) == Some(k) && successor(p, j) == Some(l) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

pub fn brute_noncrossing(p: &SetPartition) -> bool {
    let n = p.n();
    let owner = block_of(p);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    if owner[i] == owner[k] && owner[j] == owner[l] && owner[i] != owner[j] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every set partition of `1..=n`, by inserting `n` into partitions of `n - 1`.
pub fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for e in 1..=n {
        let mut next = Vec::new();
        for p in &acc {
            for i in 0..p.len() {
                let mut grown = p.clone();
                grown[i].push(e);
                next.push(grown);
            }
            let mut fresh = p.clone();
            fresh.push(vec![e]);
            next.push(fresh);
        }
        acc = next;
    }
    acc
}

pub fn to_set_partition(blocks: Vec<Vec<usize>>, n: usize) -> SetPartition {
    SetPartition::canonicalize(blocks, n).expect("valid partition")
}

/// Bell numbers from the Bell triangle.
pub fn bell(upto: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..upto {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        out.push(row[row.len() - 1]);
        row = next;
    }
    out
}

pub fn catalan(k: usize) -> i64 {
    let mut c = vec![1i64];
    for n in 1..=k {
        c.push((0..n).map(|i| c[i] * c[n - 1 - i]).sum());
    }
    c[k]
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
