//! Finite-dimensional Hopf algebras given by structure constants.

mod maps;
mod search;
mod verify;

pub use maps::{
    convolution, convolution_inverse, hopf_generators, is_hopf_morphism, GeneratorKind, HopfGenerator,
    MorphismCheck,
};
pub use search::{algebra_maps, generated_ideal, generated_subalgebra, grouplikes, minimal_polynomial, AlgebraMapSearch, PartialMap, DEFAULT_ENUM_BUDGET};
pub use verify::{check, CheckList, verify_hopf, verify_hopf_sampled, AxiomCheck, VerificationReport};

use crate::error::{Error, Result};
use crate::linalg::{combine, SparseMat, SparseTensor3, SparseVec};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: Field,
    labels: Vec<String>,
    mult: SparseTensor3,
    unit: SparseVec,
    comult: Vec<SparseVec>,
    counit: SparseVec,
    antipode: SparseMat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Opposite multiplication.
    Op,
    /// Opposite comultiplication.
    Cop,
}

impl HopfAlgebra {
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mult: SparseTensor3,
        unit: SparseVec,
        comult: Vec<SparseVec>,
        counit: SparseVec,
        antipode: SparseMat,
    ) -> Result<HopfAlgebra> {
        let n = labels.len();
        let bad = |what: &str| Err(Error::DimensionMismatch(format!("{what} does not fit dimension {n}")));
        if mult.dims() != (n, n, n) {
            return bad("multiplication");
        }
        if unit.dim() != n || counit.dim() != n {
            return bad("unit or counit");
        }
        if comult.len() != n || comult.iter().any(|c| c.dim() != n * n) {
            return bad("comultiplication");
        }
        if antipode.nrows() != n || antipode.ncols() != n {
            return bad("antipode");
        }
        Ok(HopfAlgebra { field, labels, mult, unit, comult, counit, antipode })
    }

    /// Builds from basis-level closures.
    pub fn from_fns(
        field: &Field,
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> SparseVec,
        unit: SparseVec,
        coproduct: impl FnMut(usize) -> SparseVec,
        counit: SparseVec,
        antipode: impl FnMut(usize) -> SparseVec,
    ) -> Result<HopfAlgebra> {
        let n = labels.len();
        let mult = SparseTensor3::from_fn((n, n, n), &mut product);
        let comult = (0..n).map(coproduct).collect();
        let s = SparseMat::from_columns(n, (0..n).map(antipode).collect());
        HopfAlgebra::new(field.clone(), labels, mult, unit, comult, counit, s)
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn trivial(field: &Field) -> HopfAlgebra {
        let one = SparseVec::unit(field, 1, 0);
        HopfAlgebra::from_fns(
            field,
            vec!["1".into()],
            |_, _| one.clone(),
            one.clone(),
            |_| SparseVec::unit(field, 1, 0),
            one.clone(),
            |_| one.clone(),
        )
        .expect("trivial Hopf algebra")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> HopfAlgebra {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn mult_tensor(&self) -> &SparseTensor3 {
        &self.mult
    }

    pub fn comult_table(&self) -> &[SparseVec] {
        &self.comult
    }

    pub fn antipode(&self) -> &SparseMat {
        &self.antipode
    }

    pub fn one(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit(&self) -> &SparseVec {
        &self.counit
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(&self.field, self.dim(), i)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.mult.slice(i, j)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.mult.contract(&self.field, x, y)
    }

    pub fn comul_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn comul(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        combine(&self.field, n * n, x.entries().iter().map(|(i, c)| (c.clone(), &self.comult[*i])))
    }

    pub fn eps(&self, x: &SparseVec) -> Scalar {
        self.counit.dot(&self.field, x)
    }

    pub fn s(&self, x: &SparseVec) -> SparseVec {
        self.antipode.apply(&self.field, x)
    }

    /// `x ↦ ε(x)·1`.
    pub fn unit_counit(&self, x: &SparseVec) -> SparseVec {
        self.unit.scale(&self.field, &self.eps(x))
    }

    pub fn label_of(&self, x: &SparseVec) -> String {
        format_vec(&self.field, &self.labels, x)
    }

    /// Δ²(x) = (Δ⊗id)Δ(x) in `H^{⊗3}`.
    pub fn comul2(&self, x: &SparseVec) -> SparseVec {
        self.comul_left(&self.comul(x))
    }

    /// `(Δ⊗id)` on `H⊗H`.
    pub fn comul_left(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let f = &self.field;
        let mut pairs = Vec::new();
        for (idx, c) in x.entries() {
            let (i, j) = (idx / n, idx % n);
            for (ab, d) in self.comult[i].entries() {
                pairs.push((ab * n + j, f.mul(c, d)));
            }
        }
        SparseVec::from_pairs(f, n * n * n, pairs)
    }

    /// `(id⊗Δ)` on `H⊗H`.
    pub fn comul_right(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let f = &self.field;
        let mut pairs = Vec::new();
        for (idx, c) in x.entries() {
            let (i, j) = (idx / n, idx % n);
            for (cd, d) in self.comult[j].entries() {
                pairs.push((i * n * n + cd, f.mul(c, d)));
            }
        }
        SparseVec::from_pairs(f, n * n * n, pairs)
    }

    /// Swap of tensor factors on `H⊗H`.
    pub fn flip(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        x.remap(&self.field, n * n, |idx| Some((idx % n) * n + idx / n))
    }

    pub fn tensor(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        SparseVec::tensor(&self.field, a, b)
    }

    pub fn one_tensor(&self, k: usize) -> SparseVec {
        let mut v = self.unit.clone();
        for _ in 1..k {
            v = SparseVec::tensor(&self.field, &v, &self.unit);
        }
        v
    }

    /// Product in `H^{⊗k}`.
    pub fn mul_tensor(&self, k: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim();
        let f = &self.field;
        let dim = n.pow(k as u32);
        let mut pairs = Vec::new();
        for (ix, cx) in x.entries() {
            let dx = split_index(*ix, n, k);
            for (iy, cy) in y.entries() {
                let dy = split_index(*iy, n, k);
                let c = f.mul(cx, cy);
                let mut acc: Vec<(usize, Scalar)> = vec![(0, c)];
                for t in 0..k {
                    let prod = self.mul_basis(dx[t], dy[t]);
                    let mut next = Vec::with_capacity(acc.len() * prod.nnz());
                    for (a, ca) in &acc {
                        for (b, cb) in prod.entries() {
                            next.push((a * n + b, f.mul(ca, cb)));
                        }
                    }
                    acc = next;
                    if acc.is_empty() {
                        break;
                    }
                }
                pairs.extend(acc);
            }
        }
        SparseVec::from_pairs(f, dim, pairs)
    }

    /// Places `x ∈ H⊗H` into `H^{⊗3}` at positions `(a, b)`, with `1` in the
    /// remaining slot.
    pub fn embed_pair(&self, x: &SparseVec, a: usize, b: usize) -> SparseVec {
        let n = self.dim();
        let f = &self.field;
        let mut pairs = Vec::new();
        for (idx, c) in x.entries() {
            let (i, j) = (idx / n, idx % n);
            for (u, cu) in self.unit.entries() {
                let mut d = [0usize; 3];
                d[a] = i;
                d[b] = j;
                d[3 - a - b] = *u;
                pairs.push(((d[0] * n + d[1]) * n + d[2], f.mul(c, cu)));
            }
        }
        SparseVec::from_pairs(f, n * n * n, pairs)
    }

    /// Applies `(a ⊗ b)` to an element of `H⊗H`, giving an element of
    /// `A⊗B` with index `i·dim(B) + j`.
    pub fn map_pair(f: &Field, x: &SparseVec, n: usize, a: &SparseMat, b: &SparseMat) -> SparseVec {
        let mut pairs = Vec::new();
        let nb = b.nrows();
        for (idx, c) in x.entries() {
            let (i, j) = (idx / n, idx % n);
            for (r, cr) in a.col(i).entries() {
                let crc = f.mul(c, cr);
                for (s, cs) in b.col(j).entries() {
                    pairs.push((r * nb + s, f.mul(&crc, cs)));
                }
            }
        }
        SparseVec::from_pairs(f, a.nrows() * nb, pairs)
    }

    /// Left multiplication matrix `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &SparseVec) -> SparseMat {
        SparseMat::from_columns(self.dim(), (0..self.dim()).map(|j| self.mul(x, &self.basis(j))).collect())
    }

    /// The linear dual with dual basis: product from Δ, coproduct from the
    /// product, antipode transposed.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let f = &self.field;
        let mut prod: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
        for k in 0..n {
            for (ij, c) in self.comult[k].entries() {
                prod[*ij].push((k, c.clone()));
            }
        }
        let mut cop: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j).entries() {
                    cop[*k].push((i * n + j, c.clone()));
                }
            }
        }
        let mult = SparseTensor3::from_fn((n, n, n), |i, j| SparseVec::from_pairs(f, n, prod[i * n + j].clone()));
        HopfAlgebra {
            field: f.clone(),
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            mult,
            unit: self.counit.clone(),
            comult: cop.into_iter().map(|c| SparseVec::from_pairs(f, n * n, c)).collect(),
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(f),
        }
    }

    /// `H^op` or `H^cop`; both carry the inverse antipode.
    pub fn variant(&self, which: Variant) -> Result<HopfAlgebra> {
        let f = &self.field;
        let n = self.dim();
        let s_inv = self.antipode.inverse(f).map_err(|_| Error::AntipodeNotInvertible)?;
        let mut out = self.clone();
        out.antipode = s_inv;
        match which {
            Variant::Op => out.mult = SparseTensor3::from_fn((n, n, n), |i, j| self.mul_basis(j, i).clone()),
            Variant::Cop => out.comult = self.comult.iter().map(|c| self.flip(c)).collect(),
        }
        Ok(out)
    }

    /// `A ⊗ B` with basis index `i·dim(B) + j`.
    pub fn tensor_hopf(a: &HopfAlgebra, b: &HopfAlgebra) -> Result<HopfAlgebra> {
        if a.field != b.field {
            return Err(Error::FieldMismatch);
        }
        let f = &a.field;
        let (na, nb) = (a.dim(), b.dim());
        let n = na * nb;
        let labels = a
            .labels
            .iter()
            .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        let mult = SparseTensor3::from_fn((n, n, n), |i, j| {
            SparseVec::tensor(f, a.mul_basis(i / nb, j / nb), b.mul_basis(i % nb, j % nb))
        });
        let comult = (0..n)
            .map(|i| {
                let (x, y) = (i / nb, i % nb);
                let mut pairs = Vec::new();
                for (ab, c) in a.comult[x].entries() {
                    let (a1, a2) = (ab / na, ab % na);
                    for (cd, d) in b.comult[y].entries() {
                        let (b1, b2) = (cd / nb, cd % nb);
                        pairs.push(((a1 * nb + b1) * n + a2 * nb + b2, f.mul(c, d)));
                    }
                }
                SparseVec::from_pairs(f, n * n, pairs)
            })
            .collect();
        let antipode = SparseMat::from_columns(
            n,
            (0..n).map(|i| SparseVec::tensor(f, a.antipode.col(i / nb), b.antipode.col(i % nb))).collect(),
        );
        Ok(HopfAlgebra {
            field: f.clone(),
            labels,
            mult,
            unit: SparseVec::tensor(f, &a.unit, &b.unit),
            comult,
            counit: SparseVec::tensor(f, &a.counit, &b.counit),
            antipode,
        })
    }
}

pub fn split_index(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for t in (0..k).rev() {
        d[t] = idx % n;
        idx /= n;
    }
    d
}

/// Human-readable linear combination of labelled basis vectors.
pub fn format_vec(f: &Field, labels: &[String], x: &SparseVec) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.entries()
        .iter()
        .map(|(i, c)| if f.is_one(c) { labels[*i].clone() } else { format!("{}·{}", f.pretty(c), labels[*i]) })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Same for tensor-power elements, labels joined by `⊗`.
pub fn format_tensor(f: &Field, labels: &[String], k: usize, x: &SparseVec) -> String {
    let n = labels.len();
    if x.is_zero() {
        return "0".into();
    }
    x.entries()
        .iter()
        .map(|(i, c)| {
            let l = split_index(*i, n, k).iter().map(|d| labels[*d].clone()).collect::<Vec<_>>().join("⊗");
            if f.is_one(c) {
                l
            } else {
                format!("{}·{}", f.pretty(c), l)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
