//! Restricted enveloping algebras `u(𝔤)` in the PBW basis.

use std::collections::HashMap;

use super::{EtaleConnected, Family, GroupScheme};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

struct Straightener<'a> {
    f: &'a Field,
    n: usize,
    p: usize,
    bracket: &'a [Vec<Vec<Scalar>>],
    pmap: &'a [Vec<Scalar>],
    memo: HashMap<Vec<u8>, Vec<(usize, Scalar)>>,
}

impl Straightener<'_> {
    fn index(&self, word: &[u8]) -> usize {
        let mut exps = vec![0usize; self.n];
        for w in word {
            exps[*w as usize] += 1;
        }
        exps.iter().fold(0, |acc, e| acc * self.p + e)
    }

    fn combo(&mut self, out: &mut Vec<(usize, Scalar)>, coeffs: &[Scalar], prefix: &[u8], suffix: &[u8]) {
        for (l, c) in coeffs.iter().enumerate() {
            if self.f.is_zero(c) {
                continue;
            }
            let mut w = prefix.to_vec();
            w.push(l as u8);
            w.extend_from_slice(suffix);
            for (i, x) in self.normal_form(&w) {
                out.push((i, self.f.mul(c, &x)));
            }
        }
    }

    /// PBW coordinates of a word in the generators.
    fn normal_form(&mut self, word: &[u8]) -> Vec<(usize, Scalar)> {
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let mut out = Vec::new();
        if let Some(s) = (0..word.len().saturating_sub(1)).find(|&s| word[s] > word[s + 1]) {
            let mut swapped = word.to_vec();
            swapped.swap(s, s + 1);
            out.extend(self.normal_form(&swapped));
            let coeffs = self.bracket[word[s] as usize][word[s + 1] as usize].clone();
            self.combo(&mut out, &coeffs, &word[..s], &word[s + 2..]);
        } else if let Some(s) = (0..word.len()).find(|&s| s + self.p <= word.len() && word[s..s + self.p].iter().all(|w| *w == word[s])) {
            let coeffs = self.pmap[word[s] as usize].clone();
            self.combo(&mut out, &coeffs, &word[..s], &word[s + self.p..]);
        } else {
            out.push((self.index(word), self.f.one()));
        }
        let v = SparseVec::from_pairs(self.f, self.p.pow(self.n as u32), out).entries().to_vec();
        self.memo.insert(word.to_vec(), v.clone());
        v
    }
}

fn word_of(idx: usize, n: usize, p: usize) -> Vec<u8> {
    let mut exps = vec![0usize; n];
    let mut k = idx;
    for i in (0..n).rev() {
        exps[i] = k % p;
        k /= p;
    }
    exps.iter().enumerate().flat_map(|(i, e)| std::iter::repeat(i as u8).take(*e)).collect()
}

fn exps_of(idx: usize, n: usize, p: usize) -> Vec<usize> {
    let mut exps = vec![0usize; n];
    let mut k = idx;
    for i in (0..n).rev() {
        exps[i] = k % p;
        k /= p;
    }
    exps
}

fn bracket_vec(f: &Field, bracket: &[Vec<Vec<Scalar>>], a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len();
    let mut out = vec![f.zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = f.mul(&a[i], &b[j]);
            if f.is_zero(&c) {
                continue;
            }
            for l in 0..n {
                out[l] = f.add(&out[l], &f.mul(&c, &bracket[i][j][l]));
            }
        }
    }
    out
}

/// `u(𝔤)` for the restricted Lie algebra with basis `names`, structure
/// constants `bracket[i][j] = [xᵢ, xⱼ]` and `pmap[i] = xᵢ^{[p]}`.  Basis
/// monomials `x₀^{a₀}⋯x_{n−1}^{a_{n−1}}` are ordered with `a₀` most
/// significant.
pub fn restricted_enveloping(
    field: &Field,
    names: &[String],
    bracket: &[Vec<Vec<Scalar>>],
    pmap: &[Vec<Scalar>],
) -> Result<GroupScheme> {
    let f = field;
    let p = f.characteristic() as usize;
    if p == 0 {
        return Err(Error::CharZero);
    }
    let n = names.len();
    let shape_ok = bracket.len() == n
        && bracket.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n))
        && pmap.len() == n
        && pmap.iter().all(|v| v.len() == n);
    if !shape_ok {
        return Err(Error::Schema("bracket or p-map has the wrong shape".into()));
    }
    let unit = |i: usize| -> Vec<Scalar> { (0..n).map(|l| if l == i { f.one() } else { f.zero() }).collect() };
    for i in 0..n {
        for j in 0..n {
            let sum: Vec<Scalar> = bracket[i][j].iter().zip(&bracket[j][i]).map(|(a, b)| f.add(a, b)).collect();
            if sum.iter().any(|c| !f.is_zero(c)) || bracket[i][i].iter().any(|c| !f.is_zero(c)) {
                return Err(Error::NotRestrictedLie(format!("[{0},{1}] + [{1},{0}] ≠ 0", names[i], names[j])));
            }
            for k in 0..n {
                let a = bracket_vec(f, bracket, &unit(i), &bracket[j][k]);
                let b = bracket_vec(f, bracket, &unit(j), &bracket[k][i]);
                let c = bracket_vec(f, bracket, &unit(k), &bracket[i][j]);
                if (0..n).any(|l| !f.is_zero(&f.add(&f.add(&a[l], &b[l]), &c[l]))) {
                    return Err(Error::NotRestrictedLie(format!("Jacobi fails at ({}, {}, {})", names[i], names[j], names[k])));
                }
            }
            let mut ad = unit(j);
            for _ in 0..p {
                ad = bracket_vec(f, bracket, &unit(i), &ad);
            }
            if ad != bracket_vec(f, bracket, &pmap[i], &unit(j)) {
                return Err(Error::NotRestrictedLie(format!("ad({0})^p ≠ ad({0}^[p]) on {1}", names[i], names[j])));
            }
        }
    }

    let dim = p.pow(n as u32);
    let mut st = Straightener { f, n, p, bracket, pmap, memo: HashMap::new() };
    let words: Vec<Vec<u8>> = (0..dim).map(|i| word_of(i, n, p)).collect();
    let mut products = vec![SparseVec::zero(dim); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let mut w = words[i].clone();
            w.extend(&words[j]);
            products[i * dim + j] = SparseVec::from_pairs(f, dim, st.normal_form(&w));
        }
    }
    let antipodes: Vec<SparseVec> = (0..dim)
        .map(|i| {
            let mut w = words[i].clone();
            w.reverse();
            let sign = f.from_i64(if w.len() % 2 == 0 { 1 } else { -1 });
            SparseVec::from_pairs(f, dim, st.normal_form(&w)).scale(f, &sign)
        })
        .collect();
    let labels: Vec<String> = (0..dim)
        .map(|i| {
            let e = exps_of(i, n, p);
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, a)| **a > 0)
                .map(|(l, a)| if *a == 1 { names[l].clone() } else { format!("{}^{a}", names[l]) })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("")
            }
        })
        .collect();
    let coproduct = |i: usize| {
        let a = exps_of(i, n, p);
        let mut pairs = Vec::new();
        let count: usize = a.iter().map(|x| x + 1).product();
        for code in 0..count {
            let mut c = code;
            let mut b = vec![0usize; n];
            for l in 0..n {
                b[l] = c % (a[l] + 1);
                c /= a[l] + 1;
            }
            let coef = (0..n).fold(f.one(), |acc, l| f.mul(&acc, &f.binomial(a[l] as u64, b[l] as u64)));
            let left = b.iter().fold(0, |acc, e| acc * p + e);
            let right = a.iter().zip(&b).fold(0, |acc, (x, y)| acc * p + x - y);
            pairs.push((left * dim + right, coef));
        }
        SparseVec::from_pairs(f, dim * dim, pairs)
    };
    let kg = HopfAlgebra::from_fns(
        f,
        labels,
        |i, j| products[i * dim + j].clone(),
        SparseVec::unit(f, dim, 0),
        coproduct,
        SparseVec::unit(f, dim, 0),
        |i| antipodes[i].clone(),
    )?;
    GroupScheme::assemble(kg, None, Family::RestrictedLie, Some(EtaleConnected { connected_order: dim, points: 1 }))
}

/// The two-dimensional restricted Lie algebra `[x, y] = y`, `x^{[p]} = x`,
/// `y^{[p]} = 0`.
pub fn two_dim_solvable(field: &Field) -> Result<GroupScheme> {
    let (z, o) = (field.zero(), field.one());
    let bracket = vec![
        vec![vec![z.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), field.neg(&o)], vec![z.clone(), z.clone()]],
    ];
    let pmap = vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]];
    restricted_enveloping(field, &["x".to_string(), "y".to_string()], &bracket, &pmap)
}
