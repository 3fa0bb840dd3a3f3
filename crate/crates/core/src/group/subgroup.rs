//! Subgroup schemes `L ⊆ G`, stored as Hopf subalgebras `k[L] ⊆ k[G]`.

use super::quotient::coinvariant_ideal;
use super::{EtaleConnected, Family, FiniteGroup, GroupScheme};
use crate::error::{Error, Result};
use crate::hopf::{verify_hopf, HopfAlgebra};
use crate::linalg::{SparseMat, SparseVec, Subspace};

/// `k[L] ⊆ k[G]` with its own group scheme in the echelon basis of the span,
/// the inclusion `ι` and its transpose `q = ι^♯ : 𝒪(G) → 𝒪(L)`.
#[derive(Clone, Debug)]
pub struct SubgroupScheme {
    pub span: Subspace,
    pub own: GroupScheme,
    pub inclusion: SparseMat,
    pub restriction: SparseMat,
}

impl PartialEq for SubgroupScheme {
    fn eq(&self, other: &Self) -> bool {
        self.span == other.span
    }
}

impl SubgroupScheme {
    pub fn order(&self) -> usize {
        self.span.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.span.dim() == 1
    }

    /// Coordinates of `v ∈ k[L]` in the basis of `k[L]`.
    pub fn coords(&self, g: &GroupScheme, v: &SparseVec) -> Option<SparseVec> {
        self.span.coords(g.field(), v)
    }

    pub fn contains_sub(&self, g: &GroupScheme, other: &SubgroupScheme) -> bool {
        other.span.is_subspace_of(g.field(), &self.span)
    }

    /// Builds the subgroup on a subspace already closed under the Hopf
    /// operations.
    pub fn from_span(g: &GroupScheme, span: Subspace) -> Result<SubgroupScheme> {
        let f = g.field();
        let h = &g.kg;
        let (n, m) = (g.order(), span.dim());
        let rows = span.basis().to_vec();
        let coords = |v: &SparseVec, what: &str| -> Result<SparseVec> {
            span.coords(f, v).ok_or_else(|| Error::ClosureNotHopf(format!("{what} leaves the span")))
        };
        let mut products = Vec::with_capacity(m * m);
        for a in &rows {
            for b in &rows {
                products.push(coords(&h.mul(a, b), "product")?);
            }
        }
        let mut coproducts = Vec::with_capacity(m);
        for r in &rows {
            let d = h.comul(r);
            let mut pairs = Vec::new();
            for (s, ps) in span.pivots().iter().enumerate() {
                for (t, pt) in span.pivots().iter().enumerate() {
                    if let Some(c) = d.get(ps * n + pt) {
                        pairs.push((s * m + t, c.clone()));
                    }
                }
            }
            let c = SparseVec::from_pairs(f, m * m, pairs);
            let back = HopfAlgebra::map_pair(f, &c, m, &span.inclusion(), &span.inclusion());
            if back != d {
                return Err(Error::ClosureNotHopf("coproduct leaves the span".into()));
            }
            coproducts.push(c);
        }
        let mut antipodes = Vec::with_capacity(m);
        for r in &rows {
            antipodes.push(coords(&h.s(r), "antipode")?);
        }
        let unit = coords(h.one(), "unit")?;
        let counit = SparseVec::from_pairs(f, m, rows.iter().enumerate().map(|(i, r)| (i, h.eps(r))).collect());
        let labels: Vec<String> = rows.iter().map(|r| h.label_of(r)).collect();
        let kl = HopfAlgebra::from_fns(f, labels, |a, b| products[a * m + b].clone(), unit, |a| coproducts[a].clone(), counit, |a| antipodes[a].clone())?;

        let units: Option<Vec<usize>> = rows
            .iter()
            .map(|r| (r.nnz() == 1 && f.is_one(&r.entries()[0].1)).then(|| r.entries()[0].0))
            .collect();
        let og_of_unit_rows = |idx: &[usize]| idx.iter().map(|i| g.og.labels()[*i].clone()).collect::<Vec<_>>();
        let own = match (&g.family, &units) {
            (Family::Constant(grp), Some(idx)) => {
                let sub = grp.restrict(idx)?;
                let tag = EtaleConnected { connected_order: 1, points: m };
                GroupScheme::assemble(kl, Some(og_of_unit_rows(idx)), Family::Constant(sub), Some(tag))?
            }
            (Family::GaKernel { .. }, Some(idx)) if idx.iter().enumerate().all(|(i, j)| i == *j) => {
                let p = f.characteristic() as usize;
                let r = (0..).find(|r| p.pow(*r) >= m).unwrap();
                let family = if p.pow(r) == m { Family::GaKernel { r } } else { Family::Generic };
                let tag = EtaleConnected { connected_order: m, points: 1 };
                GroupScheme::assemble(kl, Some(og_of_unit_rows(idx)), family, Some(tag))?
            }
            (_, Some(idx)) => GroupScheme::assemble(kl, Some(og_of_unit_rows(idx)), Family::Generic, None)?,
            _ => GroupScheme::assemble(kl, None, Family::Generic, None)?,
        };
        let inclusion = span.inclusion();
        let restriction = inclusion.transpose(f);
        Ok(SubgroupScheme { span, own, inclusion, restriction })
    }

    pub fn trivial(g: &GroupScheme) -> SubgroupScheme {
        let span = Subspace::spanned(g.field(), g.order(), [g.kg.one().clone()]);
        SubgroupScheme::from_span(g, span).expect("trivial subgroup")
    }

    pub fn full(g: &GroupScheme) -> SubgroupScheme {
        SubgroupScheme::from_span(g, Subspace::full(g.field(), g.order())).expect("full subgroup")
    }

    /// Subgroup of a constant group on a list of elements.
    pub fn from_elements(g: &GroupScheme, elems: &[usize]) -> Result<SubgroupScheme> {
        let f = g.field();
        let span = Subspace::spanned(f, g.order(), elems.iter().map(|e| SparseVec::unit(f, g.order(), *e)));
        SubgroupScheme::from_span(g, span)
    }

    /// `𝔾_{a,s} ⊆ 𝔾_{a,r}` on `δ_0, …, δ_{p^s − 1}`.
    pub fn frobenius_sub(g: &GroupScheme, s: u32) -> Result<SubgroupScheme> {
        let f = g.field();
        let p = f.characteristic() as usize;
        let m = p.pow(s);
        if m > g.order() {
            return Err(Error::DimensionMismatch(format!("𝔾_a,{s} does not fit")));
        }
        let span = Subspace::spanned(f, g.order(), (0..m).map(|i| SparseVec::unit(f, g.order(), i)));
        subgroup_from_generators(g, span.basis())
    }

    /// `ι_{self, big}` in the bases of both subgroups.
    pub fn inclusion_into(&self, g: &GroupScheme, big: &SubgroupScheme) -> Result<SparseMat> {
        let cols = self
            .span
            .basis()
            .iter()
            .map(|r| big.coords(g, r).ok_or_else(|| Error::Inconsistent("not a subgroup".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMat::from_columns(big.order(), cols))
    }

    /// View of `self` as a subgroup of `big.own`.
    pub fn relative_to(&self, g: &GroupScheme, big: &SubgroupScheme) -> Result<SubgroupScheme> {
        let inc = self.inclusion_into(g, big)?;
        SubgroupScheme::from_span(&big.own, Subspace::spanned(g.field(), big.order(), inc.columns().iter().cloned()))
    }

    /// `ad_r(u)(v) ∈ k[L]` for all basis `u ∈ k[G]`, `v ∈ k[L]`.
    pub fn normality_witness(&self, g: &GroupScheme) -> Option<String> {
        let f = g.field();
        for u in 0..g.order() {
            for v in self.span.basis() {
                let w = g.ad_r(&g.kg.basis(u), v);
                if !self.span.contains(f, &w) {
                    return Some(format!("ad_r({})({}) ∉ k[L]", g.kg.labels()[u], g.kg.label_of(v)));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, g: &GroupScheme) -> bool {
        self.normality_witness(g).is_none()
    }
}

/// `vw = wv` for all `v ∈ k[A]`, `w ∈ k[B]`.
pub fn centralize(g: &GroupScheme, a: &SubgroupScheme, b: &SubgroupScheme) -> bool {
    a.span.basis().iter().all(|v| b.span.basis().iter().all(|w| g.kg.mul(v, w) == g.kg.mul(w, v)))
}

/// Smallest Hopf subalgebra containing `gens`: closed under products, the
/// antipode and coefficient spaces of `Δ²`.
pub fn subgroup_from_generators(g: &GroupScheme, gens: &[SparseVec]) -> Result<SubgroupScheme> {
    let f = g.field();
    let h = &g.kg;
    let n = g.order();
    let mut span = Subspace::spanned(f, n, std::iter::once(h.one().clone()).chain(gens.iter().cloned()));
    loop {
        let before = span.dim();
        let rows = span.basis().to_vec();
        for r in &rows {
            span.insert(f, h.s(r));
            let mut slices: std::collections::BTreeMap<(usize, usize), Vec<(usize, crate::scalar::Scalar)>> = Default::default();
            for (idx, c) in h.comul2(r).entries() {
                let (i, j, k) = (idx / (n * n), (idx / n) % n, idx % n);
                slices.entry((i, k)).or_default().push((j, c.clone()));
            }
            for (_, s) in slices {
                span.insert(f, SparseVec::from_pairs(f, n, s));
            }
        }
        let rows = span.basis().to_vec();
        for a in &rows {
            for b in &rows {
                span.insert(f, h.mul(a, b));
            }
        }
        if span.dim() == before {
            break;
        }
    }
    let sub = SubgroupScheme::from_span(g, span)?;
    let report = verify_hopf(&sub.own.kg);
    if !report.all_passed() {
        return Err(Error::ClosureNotHopf(format!("{:?}", report.failures())));
    }
    Ok(sub)
}

/// `k[A]k[B]`, the product of normal subgroups.
pub fn product_subgroup(g: &GroupScheme, a: &SubgroupScheme, b: &SubgroupScheme) -> Result<SubgroupScheme> {
    let mut gens = a.span.basis().to_vec();
    gens.extend(b.span.basis().iter().cloned());
    subgroup_from_generators(g, &gens)
}

/// `A ∩ B` for normal `A`, `B`, computed as the annihilator of
/// `I_A + I_B` with `I_L = 𝒪(G/L)⁺𝒪(G)`, and checked against the plain
/// subspace intersection.
pub fn intersect_subgroup(g: &GroupScheme, a: &SubgroupScheme, b: &SubgroupScheme) -> Result<SubgroupScheme> {
    let f = g.field();
    let ia = coinvariant_ideal(g, a);
    let ib = coinvariant_ideal(g, b);
    if ia != a.restriction.kernel(f) || ib != b.restriction.kernel(f) {
        return Err(Error::Inconsistent("𝒪(G/L)⁺𝒪(G) differs from ker q_L".into()));
    }
    let dual = ia.sum(f, &ib).annihilator(f);
    let direct = a.span.intersection(f, &b.span);
    if dual != direct {
        return Err(Error::Inconsistent("dual and direct intersections differ".into()));
    }
    SubgroupScheme::from_span(g, direct)
}

/// Normal subgroups of a constant group as subgroup schemes.
pub fn constant_normal_subgroups(g: &GroupScheme, grp: &FiniteGroup) -> Result<Vec<SubgroupScheme>> {
    grp.normal_subgroups().iter().map(|s| SubgroupScheme::from_elements(g, s)).collect()
}
