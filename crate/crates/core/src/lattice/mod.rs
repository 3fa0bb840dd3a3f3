//! Braided subcategories of `Rep D(G)` through their triples: centralizers,
//! containment, intersections, the symmetric / non-degenerate / Lagrangian
//! predicates, enumeration with a Hasse diagram, and block data over
//! constant groups.

mod blocks;
mod enumerate;

pub use blocks::{block_data, BlockData};
pub use enumerate::{enumerate_triples, hopf_maps, normal_subgroups, Lattice, DEFAULT_LATTICE_BUDGET};

use crate::double::{is_factorizable, is_triangular, r21r, Double};
use crate::error::{Error, Result};
use crate::group::{intersect_subgroup, product_subgroup, GroupScheme, SubgroupScheme};
use crate::hopf::{convolution, HopfAlgebra};
use crate::linalg::{LinearSystem, SparseMat, SparseVec, Subspace};
use crate::quotient::{QuotientPair, Triple};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Flags {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub lagrangian: bool,
    /// `R₂₁R = 1⊗1` for the R-matrix of the quotient.
    pub triangular: bool,
    /// Full-rank Drinfeld map.
    pub factorizable: bool,
}

impl Flags {
    /// Subgroup-level predicates match the R-matrix tests.
    pub fn agree(&self) -> bool {
        self.symmetric == self.triangular && self.nondegenerate == self.factorizable && (!self.lagrangian || self.symmetric)
    }
}

#[derive(Clone, Debug)]
pub struct LatticeNode {
    pub triple: Triple,
    pub fp_dimension: usize,
    pub flags: Flags,
    /// Position of the centralizer in the node list.
    pub centralizer: usize,
}

/// `B̄ = B^*∘S : k[K] → 𝒪(H)`.
pub fn b_bar(g: &GroupScheme, t: &Triple) -> SparseMat {
    let f = g.field();
    t.b.transpose(f).compose(f, t.k.own.kg.antipode())
}

/// `(H, K, B̄)`.
pub fn centralizer_triple(g: &GroupScheme, t: &Triple) -> Result<Triple> {
    Triple::new(g, t.h.clone(), t.k.clone(), b_bar(g, t))
}

/// `(θ_t ⊗ θ_t')(R₂₁R) = 1⊗1`; returns a witness on failure.
pub fn centralizing_witness(dbl: &Double, r21r_dg: &SparseVec, qp: &QuotientPair, other: &QuotientPair) -> Option<String> {
    let f = dbl.d.field();
    let img = HopfAlgebra::map_pair(f, r21r_dg, dbl.d.dim(), &qp.theta, &other.theta);
    let one = SparseVec::tensor(f, qp.d.one(), other.d.one());
    (img != one).then(|| format!("(θ⊗θ')(R₂₁R) has {} nonzero terms, not 1⊗1", img.nnz()))
}

/// `R₂₁R` of `D(G)` with its canonical R-matrix.
pub fn double_r21r(g: &GroupScheme, dbl: &Double) -> SparseVec {
    r21r(&crate::double::canonical_r_and_v(g, dbl))
}

/// `𝒵(t') ⊆ 𝒵(t)`: `K' ⊆ K`, `H ⊆ H'` and `ι^♯_{K',K}∘B = B'∘ι_{H,H'}`.
pub fn contains(g: &GroupScheme, t: &Triple, tp: &Triple) -> bool {
    let f = g.field();
    if !t.k.contains_sub(g, &tp.k) || !tp.h.contains_sub(g, &t.h) {
        return false;
    }
    let (Ok(ik), Ok(ih)) = (tp.k.inclusion_into(g, &t.k), t.h.inclusion_into(g, &tp.h)) else {
        return false;
    };
    ik.transpose(f).compose(f, &t.b) == tp.b.compose(f, &ih)
}

/// `β_{B,B'} : k[K∩K'] → 𝒪(H∩H')` with the two intersections.
pub fn beta(g: &GroupScheme, t: &Triple, tp: &Triple) -> Result<(SubgroupScheme, SubgroupScheme, SparseMat)> {
    let f = g.field();
    let kk = intersect_subgroup(g, &t.k, &tp.k)?;
    let hh = intersect_subgroup(g, &t.h, &tp.h)?;
    let left = hh
        .inclusion_into(g, &t.h)?
        .transpose(f)
        .compose(f, &t.b.transpose(f))
        .compose(f, &kk.inclusion_into(g, &t.k)?);
    let right = hh
        .inclusion_into(g, &tp.h)?
        .transpose(f)
        .compose(f, &b_bar(g, tp))
        .compose(f, &kk.inclusion_into(g, &tp.k)?);
    let b = convolution(&kk.own.kg, &hh.own.og, &left, &right);
    Ok((kk, hh, b))
}

/// `{w : w₁ ⊗ β(w₂) = w ⊗ 1}` inside `k[K∩K']`, as a subgroup of `G`.
fn beta_coinvariants(g: &GroupScheme, kk: &SubgroupScheme, hh: &SubgroupScheme, b: &SparseMat) -> Result<SubgroupScheme> {
    let f = g.field();
    let (m, r) = (kk.order(), hh.order());
    let id = SparseMat::identity(f, m);
    let one = hh.own.og.one();
    let cols = (0..m)
        .map(|j| HopfAlgebra::map_pair(f, kk.own.kg.comul_basis(j), m, &id, b).sub(f, &SparseVec::tensor(f, &kk.own.kg.basis(j), one)))
        .collect();
    let coinv = SparseMat::from_columns(m * r, cols).kernel(f);
    let span = Subspace::spanned(f, g.order(), coinv.basis().iter().map(|c| kk.inclusion.apply(f, c)));
    SubgroupScheme::from_span(g, span)
}

/// The meet of `𝒵(t)` and `𝒵(t')`: `(L, HH', 𝐁)` with `L` cut out by
/// `β_{B,B'}` and `𝐁` the map restricting to `B` on `H` and to `B'` on `H'`.
pub fn intersect(g: &GroupScheme, t: &Triple, tp: &Triple) -> Result<Triple> {
    let f = g.field();
    let (kk, hh, b) = beta(g, t, tp)?;
    let l = beta_coinvariants(g, &kk, &hh, &b)?;
    let hhp = product_subgroup(g, &t.h, &tp.h)?;
    let on_h = l.inclusion_into(g, &t.k)?.transpose(f).compose(f, &t.b);
    let on_hp = l.inclusion_into(g, &tp.k)?.transpose(f).compose(f, &tp.b);
    let ol = &l.own.og;
    let mut systems: Vec<LinearSystem> = (0..l.order()).map(|_| LinearSystem::new(hhp.order())).collect();
    for (i, v) in t.h.span.basis().iter().enumerate() {
        for (j, vp) in tp.h.span.basis().iter().enumerate() {
            let c = hhp
                .coords(g, &g.kg.mul(v, vp))
                .ok_or_else(|| Error::Inconsistent("k[H]k[H'] ⊄ k[HH']".into()))?;
            let val = ol.mul(on_h.col(i), on_hp.col(j));
            for (r, sys) in systems.iter_mut().enumerate() {
                sys.push(c.clone(), val.coeff(f, r));
            }
        }
    }
    let mut rows = Vec::with_capacity(l.order());
    for sys in &systems {
        let sol = sys
            .solve(f)
            .map_err(|_| Error::Inconsistent("B and B' disagree on H∩H' over L".into()))?;
        if sol.kernel.dim() != 0 {
            return Err(Error::Inconsistent("k[H]k[H'] does not span k[HH']".into()));
        }
        rows.push(sol.particular);
    }
    let big_b = SparseMat::from_columns(hhp.order(), rows).transpose(f);
    Triple::new(g, l, hhp, big_b)
}

/// Subgroup-level predicates plus the R-matrix tests on the quotient.
pub fn classify(g: &GroupScheme, qp: &QuotientPair) -> Result<Flags> {
    let f = g.field();
    let t = &qp.triple;
    let bb = b_bar(g, t);
    let symmetric = t.h.contains_sub(g, &t.k) && {
        let i = t.k.inclusion_into(g, &t.h)?;
        t.b.compose(f, &i) == i.transpose(f).compose(f, &bb)
    };
    let centralizer = Triple { k: t.h.clone(), h: t.k.clone(), b: bb.clone() };
    let nondegenerate = product_subgroup(g, &t.h, &t.k)?.order() == g.order() && {
        let (kk, _, b) = beta(g, t, &centralizer)?;
        b.nrows() == kk.order() && b.rank(f) == kk.order()
    };
    let lagrangian = t.k == t.h && t.b == bb;
    Ok(Flags { symmetric, nondegenerate, lagrangian, triangular: is_triangular(&qp.qt), factorizable: is_factorizable(&qp.qt) })
}
