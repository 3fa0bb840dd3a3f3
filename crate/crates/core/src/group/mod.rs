//! Finite group schemes as pairs `(k[G], 𝒪(G))` of mutually dual Hopf
//! algebras, with subgroups, quotients and the adjoint actions.

mod finite;
mod lie;
mod quotient;
mod section;
mod subgroup;

pub use finite::FiniteGroup;
pub use lie::{restricted_enveloping, two_dim_solvable};
pub use quotient::{coinvariant_ideal, coinvariants, QuotientGroup};
pub use section::{cleaving, section_mu, Cleaving, Section, SECTION_SEARCH_BUDGET};
pub use subgroup::{centralize, constant_normal_subgroups, intersect_subgroup, product_subgroup, subgroup_from_generators, SubgroupScheme};

use crate::error::{Error, Result};
use crate::hopf::{grouplikes, HopfAlgebra, DEFAULT_ENUM_BUDGET};
use crate::linalg::{SparseMat, SparseVec};
use crate::scalar::Field;

/// Orders of the connected component and of the group of points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EtaleConnected {
    pub connected_order: usize,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Constant(FiniteGroup),
    /// Frobenius kernel `𝔾_{a,r}`, basis `δ_n` of divided powers.
    GaKernel { r: u32 },
    MuP,
    RestrictedLie,
    Product(Box<Family>, Box<Family>),
    Generic,
}

#[derive(Clone, Debug)]
pub struct GroupScheme {
    pub kg: HopfAlgebra,
    pub og: HopfAlgebra,
    /// `⟨f_i, e_j⟩`; the identity for every scheme built here.
    pub pairing: SparseMat,
    pub tag: EtaleConnected,
    pub family: Family,
    coadjoint: Vec<SparseVec>,
}

impl GroupScheme {
    /// Completes `k[G]` with its dual; `og_labels` names the dual basis.
    pub fn assemble(kg: HopfAlgebra, og_labels: Option<Vec<String>>, family: Family, tag: Option<EtaleConnected>) -> Result<GroupScheme> {
        let og = match og_labels {
            Some(l) => kg.dual().with_labels(l),
            None => {
                let l = kg.labels().iter().map(|x| format!("δ[{x}]")).collect();
                kg.dual().with_labels(l)
            }
        };
        let tag = match tag {
            Some(t) => t,
            None => {
                let points = grouplikes(&kg, DEFAULT_ENUM_BUDGET)?.len();
                EtaleConnected { connected_order: kg.dim() / points.max(1), points }
            }
        };
        let pairing = SparseMat::identity(kg.field(), kg.dim());
        let mut g = GroupScheme { kg, og, pairing, tag, family, coadjoint: vec![] };
        g.coadjoint = g.compute_coadjoint();
        Ok(g)
    }

    pub fn field(&self) -> &Field {
        self.kg.field()
    }

    pub fn order(&self) -> usize {
        self.kg.dim()
    }

    pub fn constant_group(&self) -> Option<&FiniteGroup> {
        match &self.family {
            Family::Constant(g) => Some(g),
            _ => None,
        }
    }

    /// `⟨b, u⟩` for `b ∈ 𝒪(G)`, `u ∈ k[G]`.
    pub fn pair(&self, b: &SparseVec, u: &SparseVec) -> crate::scalar::Scalar {
        self.pairing.apply(self.field(), u).dot(self.field(), b)
    }

    /// `ad_l(u)(v) = u₁ v S(u₂)`.
    pub fn ad_l(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let (f, h, n) = (self.field(), &self.kg, self.order());
        let mut acc = SparseVec::zero(n);
        for (ab, c) in h.comul(u).entries() {
            let t = h.mul(&h.mul(&h.basis(ab / n), v), h.antipode().col(ab % n));
            acc = acc.axpy(f, c, &t);
        }
        acc
    }

    /// `ad_r(u)(v) = S(u₁) v u₂`.
    pub fn ad_r(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let (f, h, n) = (self.field(), &self.kg, self.order());
        let mut acc = SparseVec::zero(n);
        for (ab, c) in h.comul(u).entries() {
            let t = h.mul(&h.mul(h.antipode().col(ab / n), v), &h.basis(ab % n));
            acc = acc.axpy(f, c, &t);
        }
        acc
    }

    /// `e_u ⇀⇀ f_b = ⟨S(b₁)b₃, e_u⟩ b₂`, stored at `u·n + b`.
    fn compute_coadjoint(&self) -> Vec<SparseVec> {
        let (f, o, n) = (self.field(), &self.og, self.order());
        let mut pairs: Vec<Vec<(usize, crate::scalar::Scalar)>> = vec![Vec::new(); n * n];
        for b in 0..n {
            for (idx, c) in o.comul2(&o.basis(b)).entries() {
                let (a, m, z) = (idx / (n * n), (idx / n) % n, idx % n);
                let w = o.mul(o.antipode().col(a), &o.basis(z));
                for (u, wu) in self.pairing.transpose(f).apply(f, &w).entries() {
                    pairs[u * n + b].push((m, f.mul(c, wu)));
                }
            }
        }
        pairs.into_iter().map(|p| SparseVec::from_pairs(f, n, p)).collect()
    }

    /// Coadjoint action `u ⇀⇀ b` of `k[G]` on `𝒪(G)`.
    pub fn coadjoint(&self, u: &SparseVec, b: &SparseVec) -> SparseVec {
        let (f, n) = (self.field(), self.order());
        let mut pairs = Vec::new();
        for (i, cu) in u.entries() {
            for (j, cb) in b.entries() {
                let c = f.mul(cu, cb);
                for (m, x) in self.coadjoint[i * n + j].entries() {
                    pairs.push((*m, f.mul(&c, x)));
                }
            }
        }
        SparseVec::from_pairs(f, n, pairs)
    }

    pub fn coadjoint_basis(&self, u: usize, b: usize) -> &SparseVec {
        &self.coadjoint[u * self.order() + b]
    }
}

/// Constant group scheme: `k[G]` the group algebra, `𝒪(G)` functions.
pub fn constant_group(field: &Field, g: &FiniteGroup) -> Result<GroupScheme> {
    let n = g.order();
    let kg = HopfAlgebra::from_fns(
        field,
        g.labels().to_vec(),
        |a, b| SparseVec::unit(field, n, g.mul(a, b)),
        SparseVec::unit(field, n, g.identity()),
        |a| SparseVec::unit(field, n * n, a * n + a),
        SparseVec::from_pairs(field, n, (0..n).map(|i| (i, field.one())).collect()),
        |a| SparseVec::unit(field, n, g.inv(a)),
    )?;
    let og_labels = g.labels().iter().map(|l| format!("δ_{l}")).collect();
    GroupScheme::assemble(kg, Some(og_labels), Family::Constant(g.clone()), Some(EtaleConnected { connected_order: 1, points: n }))
}

fn power_label(var: &str, i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => var.into(),
        _ => format!("{var}^{i}"),
    }
}

/// `𝔾_{a,r}`: `δ_m δ_n = binom(m+n, m) δ_{m+n}`, `Δ(δ_n) = Σ δ_a ⊗ δ_{n−a}`,
/// `S(δ_n) = (−1)ⁿ δ_n`; the dual is `k[t]/(t^{p^r})` with `t` primitive.
pub fn ga_kernel(field: &Field, r: u32) -> Result<GroupScheme> {
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::CharZero);
    }
    let n = (p as usize).pow(r);
    let kg = HopfAlgebra::from_fns(
        field,
        (0..n).map(|i| format!("δ{i}")).collect(),
        |a, b| {
            if a + b < n {
                SparseVec::scaled_unit(field, n, a + b, field.binomial((a + b) as u64, a as u64))
            } else {
                SparseVec::zero(n)
            }
        },
        SparseVec::unit(field, n, 0),
        |m| SparseVec::from_pairs(field, n * n, (0..=m).map(|a| (a * n + m - a, field.one())).collect()),
        SparseVec::unit(field, n, 0),
        |m| SparseVec::scaled_unit(field, n, m, field.from_i64(if m % 2 == 0 { 1 } else { -1 })),
    )?;
    let og_labels = (0..n).map(|i| power_label("t", i)).collect();
    GroupScheme::assemble(kg, Some(og_labels), Family::GaKernel { r }, Some(EtaleConnected { connected_order: n, points: 1 }))
}

/// `𝔾_{m,1} = μ_p`: `𝒪 = k[t]/(t^p − 1)` with `t` grouplike; `k[μ_p]` has
/// the dual basis of orthogonal idempotents `e_i`.
pub fn mu_p_kernel(field: &Field) -> Result<GroupScheme> {
    let p = field.characteristic() as usize;
    if p == 0 {
        return Err(Error::CharZero);
    }
    let og = HopfAlgebra::from_fns(
        field,
        (0..p).map(|i| power_label("t", i)).collect(),
        |a, b| SparseVec::unit(field, p, (a + b) % p),
        SparseVec::unit(field, p, 0),
        |a| SparseVec::unit(field, p * p, a * p + a),
        SparseVec::from_pairs(field, p, (0..p).map(|i| (i, field.one())).collect()),
        |a| SparseVec::unit(field, p, (p - a) % p),
    )?;
    let kg = og.dual().with_labels((0..p).map(|i| format!("e{i}")).collect());
    GroupScheme::assemble(kg, Some(og.labels().to_vec()), Family::MuP, Some(EtaleConnected { connected_order: p, points: 1 }))
}

/// `G₁ × G₂` with basis index `i·|G₂| + j`.
pub fn direct_product(a: &GroupScheme, b: &GroupScheme) -> Result<GroupScheme> {
    let kg = HopfAlgebra::tensor_hopf(&a.kg, &b.kg)?;
    let og = HopfAlgebra::tensor_hopf(&a.og, &b.og)?;
    let family = match (&a.family, &b.family) {
        (Family::Constant(x), Family::Constant(y)) => Family::Constant(FiniteGroup::product(x, y)),
        (x, y) => Family::Product(Box::new(x.clone()), Box::new(y.clone())),
    };
    let kg = match &family {
        Family::Constant(g) => kg.with_labels(g.labels().to_vec()),
        _ => kg,
    };
    let tag = EtaleConnected {
        connected_order: a.tag.connected_order * b.tag.connected_order,
        points: a.tag.points * b.tag.points,
    };
    GroupScheme::assemble(kg, Some(og.labels().to_vec()), family, Some(tag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    #[test]
    fn ga1_is_hopf_with_primitive_t() {
        let f = Field::prime(3).unwrap();
        let g = ga_kernel(&f, 1).unwrap();
        assert!(verify_hopf(&g.kg).all_passed());
        assert!(verify_hopf(&g.og).all_passed());
        let t = g.og.basis(1);
        assert_eq!(g.og.comul(&t), g.og.tensor(&t, g.og.one()).add(&f, &g.og.tensor(g.og.one(), &t)));
    }

    #[test]
    fn ga_kernel_needs_positive_characteristic() {
        assert_eq!(ga_kernel(&Field::rationals(), 1).unwrap_err(), Error::CharZero);
    }

    #[test]
    fn coadjoint_dual_to_right_adjoint() {
        let f = Field::prime(7).unwrap();
        let g = constant_group(&f, &FiniteGroup::symmetric3()).unwrap();
        for u in 0..6 {
            for b in 0..6 {
                for w in 0..6 {
                    let lhs = g.pair(g.coadjoint_basis(u, b), &g.kg.basis(w));
                    let rhs = g.pair(&g.og.basis(b), &g.ad_r(&g.kg.basis(u), &g.kg.basis(w)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
