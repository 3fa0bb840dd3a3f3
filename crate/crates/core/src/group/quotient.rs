//! Quotients `G/H` by normal subgroups.

use super::subgroup::SubgroupScheme;
use super::{EtaleConnected, Family, GroupScheme};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{SparseMat, SparseVec, Subspace};

/// `k[G/H] = k[G]/(k[G]k[H]⁺)` with basis the classes of the non-pivot
/// basis vectors of `k[G]k[H]⁺`, and `𝒪(G/H)` realised inside `𝒪(G)`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub own: GroupScheme,
    /// `π : k[G] → k[G/H]`.
    pub projection: SparseMat,
    /// `k[G]k[H]⁺`.
    pub kernel: Subspace,
    /// `𝒪(G/H) ⊆ 𝒪(G)`.
    pub coinvariants: Subspace,
    /// Basis vectors of `k[G]` whose classes form the quotient basis.
    pub reps: Vec<usize>,
}

/// `{b ∈ 𝒪(G) : b₁ ⊗ q(b₂) = b ⊗ 1}`.
pub fn coinvariants(g: &GroupScheme, l: &SubgroupScheme) -> Subspace {
    let f = g.field();
    let (n, m) = (g.order(), l.order());
    let o = &g.og;
    let one_l = l.own.og.one();
    let mut cols = Vec::with_capacity(n);
    for b in 0..n {
        let lhs = HopfAlgebra::map_pair(f, o.comul_basis(b), n, &SparseMat::identity(f, n), &l.restriction);
        let rhs = SparseVec::tensor(f, &o.basis(b), one_l);
        cols.push(lhs.sub(f, &rhs));
    }
    SparseMat::from_columns(n * m, cols).kernel(f)
}

/// `𝒪(G/L)⁺ 𝒪(G)`.
pub fn coinvariant_ideal(g: &GroupScheme, l: &SubgroupScheme) -> Subspace {
    let f = g.field();
    let o = &g.og;
    let co = coinvariants(g, l);
    let plus: Vec<SparseVec> = co.basis().iter().map(|b| b.sub(f, &o.one().scale(f, &o.eps(b)))).collect();
    let mut out = Subspace::zero(g.order());
    for c in &plus {
        for i in 0..g.order() {
            out.insert(f, o.mul(c, &o.basis(i)));
        }
    }
    out
}

impl QuotientGroup {
    pub fn new(g: &GroupScheme, h: &SubgroupScheme) -> Result<QuotientGroup> {
        if let Some(w) = h.normality_witness(g) {
            return Err(Error::NotNormal(w));
        }
        let f = g.field();
        let kg = &g.kg;
        let n = g.order();
        let plus: Vec<SparseVec> =
            h.span.basis().iter().map(|r| r.sub(f, &kg.one().scale(f, &kg.eps(r)))).filter(|v| !v.is_zero()).collect();
        let mut kernel = Subspace::zero(n);
        for i in 0..n {
            for w in &plus {
                kernel.insert(f, kg.mul(&kg.basis(i), w));
            }
        }
        let reps = kernel.non_pivots();
        let m = reps.len();
        let pos: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            for (k, r) in reps.iter().enumerate() {
                v[*r] = Some(k);
            }
            v
        };
        let project = |v: &SparseVec| kernel.reduce(f, v).remap(f, m, |i| pos[i]);
        let projection = SparseMat::from_columns(m, (0..n).map(|i| project(&kg.basis(i))).collect());

        for w in kernel.basis() {
            for i in 0..n {
                let b = kg.basis(i);
                if !project(&kg.mul(w, &b)).is_zero() || !project(&kg.mul(&b, w)).is_zero() {
                    return Err(Error::NotNormal("k[G]k[H]⁺ is not a two-sided ideal".into()));
                }
            }
            if !HopfAlgebra::map_pair(f, &kg.comul(w), n, &projection, &projection).is_zero()
                || !project(&kg.s(w)).is_zero()
                || !f.is_zero(&kg.eps(w))
            {
                return Err(Error::NotNormal("k[G]k[H]⁺ is not a Hopf ideal".into()));
            }
        }

        let prods: Vec<SparseVec> =
            reps.iter().flat_map(|a| reps.iter().map(move |b| (*a, *b))).map(|(a, b)| project(kg.mul_basis(a, b))).collect();
        let qalg = HopfAlgebra::from_fns(
            f,
            reps.iter().map(|r| format!("[{}]", kg.labels()[*r])).collect(),
            |a, b| prods[a * m + b].clone(),
            project(kg.one()),
            |a| HopfAlgebra::map_pair(f, kg.comul_basis(reps[a]), n, &projection, &projection),
            SparseVec::from_pairs(f, m, reps.iter().enumerate().map(|(k, r)| (k, kg.counit().coeff(f, *r))).collect()),
            |a| project(kg.antipode().col(reps[a])),
        )?;

        let (family, labels, og_labels, tag) = match (&g.family, &h.own.family) {
            (Family::Constant(grp), _) => {
                let labels: Vec<String> = reps.iter().map(|r| format!("[{}]", grp.labels()[*r])).collect();
                let table = (0..m)
                    .map(|a| (0..m).map(|b| prods[a * m + b].entries()[0].0).collect())
                    .collect();
                let qg = super::FiniteGroup::new(labels.clone(), table)?;
                let og: Vec<String> = labels.iter().map(|l| format!("δ_{l}")).collect();
                let tag = EtaleConnected { connected_order: 1, points: m };
                (Family::Constant(qg), labels, Some(og), Some(tag))
            }
            (Family::GaKernel { r }, Family::GaKernel { r: s }) => {
                let labels: Vec<String> = (0..m).map(|i| format!("δ{i}")).collect();
                let og: Vec<String> = (0..m).map(|i| match i { 0 => "1".into(), 1 => "t".into(), _ => format!("t^{i}") }).collect();
                let tag = EtaleConnected { connected_order: m, points: 1 };
                (Family::GaKernel { r: r - s }, labels, Some(og), Some(tag))
            }
            _ => (Family::Generic, qalg.labels().to_vec(), None, None),
        };
        let own = GroupScheme::assemble(qalg.with_labels(labels), og_labels, family, tag)?;

        let co = coinvariants(g, h);
        if co.dim() != m {
            return Err(Error::Inconsistent(format!("dim 𝒪(G/H) = {} but [G:H] = {m}", co.dim())));
        }
        // 𝒪(G/H) pairs perfectly with k[G/H] through the representatives.
        let pairing = SparseMat::from_columns(
            m,
            co.basis().iter().map(|b| SparseVec::from_pairs(f, m, reps.iter().enumerate().filter_map(|(k, r)| b.get(*r).map(|c| (k, c.clone()))).collect())).collect(),
        );
        if pairing.rank(f) != m {
            return Err(Error::Inconsistent("coinvariants do not pair perfectly with k[G/H]".into()));
        }
        Ok(QuotientGroup { own, projection, kernel, coinvariants: co, reps })
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn project(&self, g: &GroupScheme, v: &SparseVec) -> SparseVec {
        self.projection.apply(g.field(), v)
    }
}
