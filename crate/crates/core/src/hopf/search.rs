//! Enumeration of algebra maps out of a finite-dimensional algebra, driven
//! by images of generators and checked on every relation as the generated
//! subalgebra is closed up.

use super::HopfAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, SparseMat, SparseVec, Subspace};
use crate::scalar::Scalar;

pub const DEFAULT_ENUM_BUDGET: u128 = 10_000_000;

/// Subalgebra generated by `1` and `gens`.
pub fn generated_subalgebra(h: &HopfAlgebra, gens: &[SparseVec]) -> Subspace {
    let f = h.field();
    let mut span = Subspace::spanned(f, h.dim(), std::iter::once(h.one().clone()).chain(gens.iter().cloned()));
    let mut words: Vec<SparseVec> = span.basis().to_vec();
    let mut queue = words.clone();
    while let Some(u) = queue.pop() {
        for g in gens {
            let w = h.mul(&u, g);
            if span.insert(f, w.clone()) {
                words.push(w.clone());
                queue.push(w);
            }
        }
    }
    span
}

/// Two-sided ideal generated by `gens`.
pub fn generated_ideal(h: &HopfAlgebra, gens: &[SparseVec]) -> Subspace {
    let f = h.field();
    let mut span = Subspace::zero(h.dim());
    let mut queue: Vec<SparseVec> = gens.iter().filter(|g| span.insert(f, (*g).clone())).cloned().collect();
    while let Some(v) = queue.pop() {
        for i in 0..h.dim() {
            let b = h.basis(i);
            for w in [h.mul(&b, &v), h.mul(&v, &b)] {
                if span.insert(f, w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    span
}

/// Monic minimal polynomial of `x`, coefficients from the constant term.
pub fn minimal_polynomial(h: &HopfAlgebra, x: &SparseVec) -> Vec<Scalar> {
    let f = h.field();
    let mut powers = vec![h.one().clone()];
    let mut span = Subspace::spanned(f, h.dim(), powers.clone());
    loop {
        let next = h.mul(powers.last().unwrap(), x);
        if !span.insert(f, next.clone()) {
            let m = SparseMat::from_columns(h.dim(), powers.clone());
            let sol = solve_affine(f, &m, &next).expect("dependent power lies in the span");
            let mut coeffs: Vec<Scalar> = sol.particular.dense(f).iter().map(|c| f.neg(c)).collect();
            coeffs.push(f.one());
            return coeffs;
        }
        powers.push(next);
    }
}

/// Echelon form of source vectors carrying their images.
#[derive(Clone, Debug)]
struct TrackedEchelon {
    rows: Vec<(SparseVec, SparseVec)>,
    pivots: Vec<usize>,
}

impl TrackedEchelon {
    fn reduce(&self, h: &HopfAlgebra, v: &SparseVec, img: &SparseVec) -> (SparseVec, SparseVec) {
        let f = h.field();
        let mut v = v.clone();
        let mut img = img.clone();
        for ((row, rimg), p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = v.get(*p).cloned() {
                let c = f.neg(&c);
                v = v.axpy(f, &c, row);
                img = img.axpy(f, &c, rimg);
            }
        }
        (v, img)
    }

    /// `Ok(true)` if new, `Ok(false)` if consistent with the existing span,
    /// `Err` if the image contradicts it.
    fn insert(&mut self, h: &HopfAlgebra, v: &SparseVec, img: &SparseVec) -> std::result::Result<bool, ()> {
        let f = h.field();
        let (v, img) = self.reduce(h, v, img);
        let Some((p, lead)) = v.leading() else {
            return if img.is_zero() { Ok(false) } else { Err(()) };
        };
        let inv = f.inv(lead).unwrap();
        let (v, img) = (v.scale(f, &inv), img.scale(f, &inv));
        for (row, rimg) in self.rows.iter_mut() {
            if let Some(c) = row.get(p).cloned() {
                let c = f.neg(&c);
                *row = row.axpy(f, &c, &v);
                *rimg = rimg.axpy(f, &c, &img);
            }
        }
        let pos = self.pivots.partition_point(|q| *q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, (v, img));
        Ok(true)
    }
}

/// A multiplicative map defined on the subalgebra generated so far.
#[derive(Clone, Debug)]
pub struct PartialMap {
    ech: TrackedEchelon,
    words: Vec<(SparseVec, SparseVec)>,
    gens: Vec<(SparseVec, SparseVec)>,
}

impl PartialMap {
    /// Image of `v`, if `v` lies in the current domain.
    pub fn image(&self, h: &HopfAlgebra, tgt_dim: usize, v: &SparseVec) -> Option<SparseVec> {
        let f = h.field();
        let mut rest = v.clone();
        let mut img = SparseVec::zero(tgt_dim);
        for ((row, rimg), p) in self.ech.rows.iter().zip(&self.ech.pivots) {
            if let Some(c) = rest.get(*p).cloned() {
                img = img.axpy(f, &c, rimg);
                rest = rest.axpy(f, &f.neg(&c), row);
            }
        }
        rest.is_zero().then_some(img)
    }

    pub fn domain_dim(&self) -> usize {
        self.ech.rows.len()
    }

    /// Current domain as a subspace of the source.
    pub fn domain(&self, h: &HopfAlgebra) -> Subspace {
        Subspace::spanned(h.field(), h.dim(), self.ech.rows.iter().map(|(r, _)| r.clone()))
    }
}

pub struct AlgebraMapSearch<'a> {
    pub source: &'a HopfAlgebra,
    pub target: &'a HopfAlgebra,
    pub generators: Vec<SparseVec>,
    pub budget: u128,
}

impl<'a> AlgebraMapSearch<'a> {
    fn start(&self) -> PartialMap {
        let mut ech = TrackedEchelon { rows: vec![], pivots: vec![] };
        ech.insert(self.source, self.source.one(), self.target.one()).expect("fresh echelon");
        PartialMap {
            ech,
            words: vec![(self.source.one().clone(), self.target.one().clone())],
            gens: vec![],
        }
    }

    fn extend(&self, state: &PartialMap, g: &SparseVec, y: &SparseVec) -> Option<PartialMap> {
        let (h, t) = (self.source, self.target);
        let mut st = state.clone();
        st.gens.push((g.clone(), y.clone()));
        let mut queue: Vec<(SparseVec, SparseVec)> =
            st.words.iter().map(|(w, iw)| (h.mul(w, g), t.mul(iw, y))).collect();
        while let Some((u, iu)) = queue.pop() {
            match st.ech.insert(h, &u, &iu) {
                Err(()) => return None,
                Ok(false) => {}
                Ok(true) => {
                    for (gg, yy) in &st.gens {
                        queue.push((h.mul(&u, gg), t.mul(&iu, yy)));
                    }
                    st.words.push((u, iu));
                }
            }
        }
        Some(st)
    }

    /// Depth-first search; `candidates(i, state)` lists admissible images of
    /// generator `i` given the map built from generators `0..i`.
    pub fn run(
        &self,
        mut candidates: impl FnMut(usize, &PartialMap) -> Result<Vec<SparseVec>>,
    ) -> Result<Vec<SparseMat>> {
        let mut out = Vec::new();
        let mut visited: u128 = 0;
        let start = self.start();
        self.dfs(0, &start, &mut candidates, &mut visited, &mut out)?;
        Ok(out)
    }

    fn dfs(
        &self,
        i: usize,
        state: &PartialMap,
        candidates: &mut impl FnMut(usize, &PartialMap) -> Result<Vec<SparseVec>>,
        visited: &mut u128,
        out: &mut Vec<SparseMat>,
    ) -> Result<()> {
        if i == self.generators.len() {
            let n = self.source.dim();
            if state.domain_dim() != n {
                return Err(Error::Inconsistent("generators do not generate the algebra".into()));
            }
            let cols = (0..n)
                .map(|j| state.image(self.source, self.target.dim(), &self.source.basis(j)).unwrap())
                .collect();
            out.push(SparseMat::from_columns(self.target.dim(), cols));
            return Ok(());
        }
        for y in candidates(i, state)? {
            *visited += 1;
            if *visited > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            if let Some(next) = self.extend(state, &self.generators[i], &y) {
                self.dfs(i + 1, &next, candidates, visited, out)?;
            }
        }
        Ok(())
    }
}

/// All algebra maps `A → k`, returned as functionals `(χ(b₀), …)`.
pub fn algebra_maps(a: &HopfAlgebra, budget: u128) -> Result<Vec<SparseVec>> {
    let f = a.field();
    let mut gens = Vec::new();
    let mut span = generated_subalgebra(a, &[]);
    while span.dim() < a.dim() {
        gens.push(a.basis(span.non_pivots()[0]));
        span = generated_subalgebra(a, &gens);
    }
    let roots: Vec<Vec<Scalar>> = gens.iter().map(|g| f.roots(&minimal_polynomial(a, g))).collect();
    let needed = roots.iter().fold(1u128, |acc, r| acc.saturating_mul(r.len().max(1) as u128));
    if needed > budget {
        return Err(Error::FieldTooLargeForEnumeration { needed, budget });
    }
    let k = HopfAlgebra::trivial(f);
    let search = AlgebraMapSearch { source: a, target: &k, generators: gens, budget };
    let maps = search.run(|i, _| Ok(roots[i].iter().map(|r| SparseVec::scaled_unit(f, 1, 0, r.clone())).collect()))?;
    let mut out: Vec<SparseVec> = maps
        .into_iter()
        .map(|m| SparseVec::from_pairs(f, a.dim(), (0..a.dim()).map(|j| (j, m.col(j).coeff(f, 0))).collect()))
        .collect();
    out.sort_by(|x, y| x.entries().cmp(y.entries()));
    Ok(out)
}

/// Grouplike elements of `h`, found as characters of its dual algebra.
pub fn grouplikes(h: &HopfAlgebra, budget: u128) -> Result<Vec<SparseVec>> {
    algebra_maps(&h.dual(), budget)
}
