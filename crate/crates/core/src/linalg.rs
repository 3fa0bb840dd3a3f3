//! Sparse exact linear algebra over a [`Field`].
//!
//! Subspaces are always kept in reduced row echelon form with the leftmost
//! nonzero entry of each row as its (unit) pivot, so two subspaces are equal
//! exactly when their stored rows are.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> SparseVec {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn unit(f: &Field, dim: usize, i: usize) -> SparseVec {
        assert!(i < dim, "unit index {i} out of range {dim}");
        SparseVec { dim, entries: vec![(i, f.one())] }
    }

    pub fn scaled_unit(f: &Field, dim: usize, i: usize, c: Scalar) -> SparseVec {
        SparseVec::from_pairs(f, dim, vec![(i, c)])
    }

    /// Sums repeated indices and drops zeros.
    pub fn from_pairs(f: &Field, dim: usize, mut pairs: Vec<(usize, Scalar)>) -> SparseVec {
        pairs.sort_unstable_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            debug_assert!(i < dim);
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = f.add(acc, &c),
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !f.is_zero(c));
        SparseVec { dim, entries }
    }

    pub fn from_dense(f: &Field, values: &[Scalar]) -> SparseVec {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect();
        SparseVec { dim: values.len(), entries }
    }

    pub fn dense(&self, f: &Field) -> Vec<Scalar> {
        let mut out = vec![f.zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.entries[k].1)
    }

    pub fn coeff(&self, f: &Field, i: usize) -> Scalar {
        self.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    /// `self + c·other`.
    pub fn axpy(&self, f: &Field, c: &Scalar, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim, "dimension mismatch in axpy");
        if f.is_zero(c) {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, f.mul(c, &b[j].1)));
                j += 1;
            } else {
                let s = f.add(&a[i].1, &f.mul(c, &b[j].1));
                if !f.is_zero(&s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn add(&self, f: &Field, other: &SparseVec) -> SparseVec {
        self.axpy(f, &f.one(), other)
    }

    pub fn sub(&self, f: &Field, other: &SparseVec) -> SparseVec {
        self.axpy(f, &f.from_i64(-1), other)
    }

    pub fn scale(&self, f: &Field, c: &Scalar) -> SparseVec {
        if f.is_zero(c) {
            return SparseVec::zero(self.dim);
        }
        SparseVec { dim: self.dim, entries: self.entries.iter().map(|(i, x)| (*i, f.mul(c, x))).collect() }
    }

    pub fn neg(&self, f: &Field) -> SparseVec {
        SparseVec { dim: self.dim, entries: self.entries.iter().map(|(i, x)| (*i, f.neg(x))).collect() }
    }

    /// Standard pairing `Σ aᵢ bᵢ`.
    pub fn dot(&self, f: &Field, other: &SparseVec) -> Scalar {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = f.zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = f.add(&acc, &f.mul(&a[i].1, &b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// `a ⊗ b` with index `i·dim(b) + j`.
    pub fn tensor(f: &Field, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
        for (i, x) in &a.entries {
            for (j, y) in &b.entries {
                entries.push((i * b.dim + j, f.mul(x, y)));
            }
        }
        SparseVec { dim: a.dim * b.dim, entries }
    }

    /// Keeps only entries whose index passes `keep`, reindexed by `map`.
    pub fn remap(&self, f: &Field, dim: usize, map: impl Fn(usize) -> Option<usize>) -> SparseVec {
        let pairs = self.entries.iter().filter_map(|(i, c)| map(*i).map(|j| (j, c.clone()))).collect();
        SparseVec::from_pairs(f, dim, pairs)
    }
}

/// Linear combination `Σ cᵢ vᵢ` of vectors of dimension `dim`.
pub fn combine<'a>(f: &Field, dim: usize, terms: impl IntoIterator<Item = (Scalar, &'a SparseVec)>) -> SparseVec {
    let mut pairs = Vec::new();
    for (c, v) in terms {
        if f.is_zero(&c) {
            continue;
        }
        for (i, x) in v.entries() {
            pairs.push((*i, f.mul(&c, x)));
        }
    }
    SparseVec::from_pairs(f, dim, pairs)
}

/// Column-stored matrix: column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> SparseMat {
        assert!(cols.iter().all(|c| c.dim() == rows), "column dimension mismatch");
        SparseMat { rows, cols }
    }

    pub fn zero(rows: usize, ncols: usize) -> SparseMat {
        SparseMat { rows, cols: vec![SparseVec::zero(rows); ncols] }
    }

    pub fn identity(f: &Field, n: usize) -> SparseMat {
        SparseMat { rows: n, cols: (0..n).map(|i| SparseVec::unit(f, n, i)).collect() }
    }

    pub fn from_dense_rows(f: &Field, rows: &[Vec<Scalar>]) -> SparseMat {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| SparseVec::from_dense(f, &rows.iter().map(|r| r[j].clone()).collect::<Vec<_>>()))
            .collect();
        SparseMat { rows: nrows, cols }
    }

    pub fn to_dense_rows(&self, f: &Field) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![f.zero(); self.cols.len()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.entries() {
                out[*i][j] = x.clone();
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn entry(&self, f: &Field, i: usize, j: usize) -> Scalar {
        self.cols[j].coeff(f, i)
    }

    pub fn apply(&self, f: &Field, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.cols.len(), "apply: dimension mismatch");
        combine(f, self.rows, v.entries().iter().map(|(j, c)| (c.clone(), &self.cols[*j])))
    }

    /// `self ∘ other`.
    pub fn compose(&self, f: &Field, other: &SparseMat) -> SparseMat {
        assert_eq!(other.rows, self.cols.len(), "compose: dimension mismatch");
        SparseMat { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(f, c)).collect() }
    }

    pub fn transpose(&self, f: &Field) -> SparseMat {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.entries() {
                rows[*i].push((j, x.clone()));
            }
        }
        let n = self.cols.len();
        SparseMat { rows: n, cols: rows.into_iter().map(|r| SparseVec::from_pairs(f, n, r)).collect() }
    }

    pub fn add(&self, f: &Field, other: &SparseMat) -> SparseMat {
        SparseMat { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(f, b)).collect() }
    }

    pub fn sub(&self, f: &Field, other: &SparseMat) -> SparseMat {
        SparseMat { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(f, b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn image(&self, f: &Field) -> Subspace {
        Subspace::spanned(f, self.rows, self.cols.iter().cloned())
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.image(f).dim()
    }

    pub fn kernel(&self, f: &Field) -> Subspace {
        let mut sys = LinearSystem::new(self.cols.len());
        for row in self.transpose(f).cols {
            sys.push(row, f.zero());
        }
        sys.solve(f).expect("homogeneous systems are consistent").kernel
    }

    pub fn inverse(&self, f: &Field) -> Result<SparseMat> {
        let n = self.rows;
        if n != self.cols.len() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let rows = self.transpose(f);
        let mut cols = Vec::with_capacity(n);
        let mut ech = Subspace::zero(2 * n);
        for (i, r) in rows.cols.iter().enumerate() {
            let mut pairs: Vec<(usize, Scalar)> = r.entries().to_vec();
            pairs.push((n + i, f.one()));
            ech.insert(f, SparseVec::from_pairs(f, 2 * n, pairs));
        }
        if ech.pivots().iter().take(n).enumerate().any(|(i, p)| *p != i) || ech.dim() < n {
            return Err(Error::NotInvertible("matrix".into()));
        }
        // rows of the echelon form are [I | A⁻¹]
        let inv_rows: Vec<SparseVec> =
            ech.basis().iter().map(|r| r.remap(f, n, |k| if k >= n { Some(k - n) } else { None })).collect();
        for j in 0..n {
            let col = SparseVec::from_pairs(f, n, inv_rows.iter().enumerate().filter_map(|(i, r)| r.get(j).map(|c| (i, c.clone()))).collect());
            cols.push(col);
        }
        Ok(SparseMat { rows: n, cols })
    }
}

/// Dense reference product, used to cross-check sparse contractions.
pub fn dense_matvec(f: &Field, rows: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    rows.iter()
        .map(|r| r.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
        .collect()
}

/// Bilinear map `V × W → U` stored as one vector per basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTensor3 {
    dims: (usize, usize, usize),
    slices: Vec<SparseVec>,
}

impl SparseTensor3 {
    pub fn from_fn(dims: (usize, usize, usize), mut g: impl FnMut(usize, usize) -> SparseVec) -> SparseTensor3 {
        let mut slices = Vec::with_capacity(dims.0 * dims.1);
        for i in 0..dims.0 {
            for j in 0..dims.1 {
                let s = g(i, j);
                assert_eq!(s.dim(), dims.2);
                slices.push(s);
            }
        }
        SparseTensor3 { dims, slices }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn slice(&self, i: usize, j: usize) -> &SparseVec {
        &self.slices[i * self.dims.1 + j]
    }

    /// `Σ aᵢ bⱼ T(i, j)`.
    pub fn contract(&self, f: &Field, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                let c = f.mul(x, y);
                for (k, z) in self.slice(*i, *j).entries() {
                    pairs.push((*k, f.mul(&c, z)));
                }
            }
        }
        SparseVec::from_pairs(f, self.dims.2, pairs)
    }

    /// Every stored nonzero as `(i, j, k, value)`.
    pub fn nonzeros(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dims.0 {
            for j in 0..self.dims.1 {
                for (k, c) in self.slice(i, j).entries() {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }
}

/// Subspace of `k^n` in canonical reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| SparseVec::unit(f, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn spanned(f: &Field, ambient: usize, gens: impl IntoIterator<Item = SparseVec>) -> Subspace {
        let mut s = Subspace::zero(ambient);
        for g in gens {
            s.insert(f, g);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Indices that are not pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.rows.len());
        let mut k = 0;
        for i in 0..self.ambient {
            if k < self.pivots.len() && self.pivots[k] == i {
                k += 1;
            } else {
                out.push(i);
            }
        }
        out
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, f: &Field, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ambient, "reduce: dimension mismatch");
        let mut terms: Vec<(Scalar, &SparseVec)> = Vec::new();
        let (mut a, mut b) = (0, 0);
        let es = v.entries();
        while a < es.len() && b < self.pivots.len() {
            match es[a].0.cmp(&self.pivots[b]) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    terms.push((f.neg(&es[a].1), &self.rows[b]));
                    a += 1;
                    b += 1;
                }
            }
        }
        if terms.is_empty() {
            return v.clone();
        }
        let mut pairs: Vec<(usize, Scalar)> = es.to_vec();
        for (c, r) in terms {
            for (i, x) in r.entries() {
                pairs.push((*i, f.mul(&c, x)));
            }
        }
        SparseVec::from_pairs(f, self.ambient, pairs)
    }

    pub fn contains(&self, f: &Field, v: &SparseVec) -> bool {
        self.reduce(f, v).is_zero()
    }

    /// Coordinates in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, f: &Field, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(f, v) {
            return None;
        }
        Some(SparseVec::from_pairs(
            f,
            self.rows.len(),
            self.pivots.iter().enumerate().filter_map(|(k, p)| v.get(*p).map(|c| (k, c.clone()))).collect(),
        ))
    }

    /// Inserts `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Field, v: SparseVec) -> bool {
        let r = self.reduce(f, &v);
        let Some((p, lead)) = r.leading() else { return false };
        let r = r.scale(f, &f.inv(lead).expect("nonzero leading entry"));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(p).cloned() {
                *row = row.axpy(f, &f.neg(&c), &r);
            }
        }
        let pos = self.pivots.partition_point(|q| *q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(f, r.clone());
        }
        s
    }

    /// `U ∩ V` from the kernel of `[U | −V]`.
    pub fn intersection(&self, f: &Field, other: &Subspace) -> Subspace {
        let (m, n) = (self.dim(), other.dim());
        let mut cols: Vec<SparseVec> = self.rows.clone();
        cols.extend(other.rows.iter().map(|r| r.neg(f)));
        let ker = SparseMat::from_columns(self.ambient, cols).kernel(f);
        let mut out = Subspace::zero(self.ambient);
        for k in ker.basis() {
            let a = k.remap(f, m, |i| if i < m { Some(i) } else { None });
            let _ = n;
            out.insert(f, combine(f, self.ambient, a.entries().iter().map(|(i, c)| (c.clone(), &self.rows[*i]))));
        }
        out
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }

    /// `{u : ⟨r, u⟩ = 0 for every row r}` under the standard pairing.
    pub fn annihilator(&self, f: &Field) -> Subspace {
        let mut sys = LinearSystem::new(self.ambient);
        for r in &self.rows {
            sys.push(r.clone(), f.zero());
        }
        sys.solve(f).expect("homogeneous").kernel
    }

    /// Matrix whose columns are the basis rows.
    pub fn inclusion(&self) -> SparseMat {
        SparseMat::from_columns(self.ambient, self.rows.clone())
    }
}

/// Equations `⟨aᵢ, x⟩ = bᵢ` in `n` unknowns.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    eqs: Vec<(SparseVec, Scalar)>,
}

#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: SparseVec,
    pub kernel: Subspace,
}

impl AffineSolution {
    /// Every solution over a finite field, in deterministic order.
    pub fn enumerate(&self, f: &Field, budget: u128) -> Result<Vec<SparseVec>> {
        let els = f.elements().ok_or(Error::FieldTooLargeForEnumeration { needed: u128::MAX, budget })?;
        let q = els.len() as u128;
        let d = self.kernel.dim() as u32;
        let needed = q.checked_pow(d).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::FieldTooLargeForEnumeration { needed, budget });
        }
        let mut out = Vec::with_capacity(needed as usize);
        for code in 0..needed {
            let mut c = code;
            let mut v = self.particular.clone();
            for b in self.kernel.basis() {
                let k = (c % q) as usize;
                c /= q;
                v = v.axpy(f, &els[k], b);
            }
            out.push(v);
        }
        Ok(out)
    }
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> LinearSystem {
        LinearSystem { unknowns, eqs: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn push(&mut self, coeffs: SparseVec, rhs: Scalar) {
        assert_eq!(coeffs.dim(), self.unknowns, "equation has wrong arity");
        self.eqs.push((coeffs, rhs));
    }

    pub fn solve(&self, f: &Field) -> Result<AffineSolution> {
        let n = self.unknowns;
        let mut ech = Subspace::zero(n + 1);
        for (a, b) in &self.eqs {
            let mut pairs = a.entries().to_vec();
            if !f.is_zero(b) {
                pairs.push((n, b.clone()));
            }
            ech.insert(f, SparseVec { dim: n + 1, entries: pairs });
        }
        if ech.pivots.last() == Some(&n) {
            return Err(Error::NoSolution);
        }
        let mut particular = Vec::new();
        let mut free_terms: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        let mut is_pivot = vec![false; n];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            is_pivot[p] = true;
            for (c, x) in row.entries() {
                if *c == n {
                    particular.push((p, x.clone()));
                } else if *c != p {
                    free_terms[*c].push((p, f.neg(x)));
                }
            }
        }
        let mut kernel = Subspace::zero(n);
        for j in 0..n {
            if !is_pivot[j] {
                let mut pairs = std::mem::take(&mut free_terms[j]);
                pairs.push((j, f.one()));
                kernel.insert(f, SparseVec::from_pairs(f, n, pairs));
            }
        }
        Ok(AffineSolution { particular: SparseVec::from_pairs(f, n, particular), kernel })
    }
}

/// Solves `A x = b`: a particular solution plus the kernel of `A`.
pub fn solve_affine(f: &Field, a: &SparseMat, b: &SparseVec) -> Result<AffineSolution> {
    let mut sys = LinearSystem::new(a.ncols());
    for (i, row) in a.transpose(f).columns().iter().enumerate() {
        sys.push(row.clone(), b.coeff(f, i));
    }
    sys.solve(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &Field, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(f, &xs.iter().map(|x| f.from_i64(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn echelon_is_canonical() {
        let f = Field::prime(5).unwrap();
        let a = Subspace::spanned(&f, 3, [v(&f, &[1, 2, 0]), v(&f, &[0, 1, 1])]);
        let b = Subspace::spanned(&f, 3, [v(&f, &[1, 3, 1]), v(&f, &[2, 4, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn affine_solve_and_no_solution() {
        let f = Field::rationals();
        let a = SparseMat::from_dense_rows(&f, &[vec![f.from_i64(1), f.from_i64(1)], vec![f.from_i64(2), f.from_i64(2)]]);
        let sol = solve_affine(&f, &a, &v(&f, &[3, 6])).unwrap();
        assert_eq!(sol.kernel.dim(), 1);
        assert_eq!(a.apply(&f, &sol.particular), v(&f, &[3, 6]));
        assert_eq!(solve_affine(&f, &a, &v(&f, &[3, 5])).unwrap_err(), Error::NoSolution);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::prime(7).unwrap();
        let a = SparseMat::from_dense_rows(&f, &[vec![f.from_i64(2), f.from_i64(1)], vec![f.from_i64(1), f.from_i64(1)]]);
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.compose(&f, &inv), SparseMat::identity(&f, 2));
    }

    #[test]
    fn intersection_of_planes() {
        let f = Field::rationals();
        let a = Subspace::spanned(&f, 3, [v(&f, &[1, 0, 0]), v(&f, &[0, 1, 0])]);
        let b = Subspace::spanned(&f, 3, [v(&f, &[0, 1, 0]), v(&f, &[0, 0, 1])]);
        let c = a.intersection(&f, &b);
        assert_eq!(c, Subspace::spanned(&f, 3, [v(&f, &[0, 1, 0])]));
    }
}
