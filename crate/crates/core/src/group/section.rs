//! Convolution-invertible colinear sections: `μ : 𝒪(L) → 𝒪(G)` splitting
//! restriction, and the cleaving `γ : k[G/H] → k[G]` splitting `π`.

use std::collections::BTreeMap;

use super::quotient::QuotientGroup;
use super::subgroup::SubgroupScheme;
use super::{Family, GroupScheme};
use crate::error::{Error, Result};
use crate::hopf::{convolution, convolution_inverse, HopfAlgebra};
use crate::linalg::{AffineSolution, LinearSystem, SparseMat, SparseVec};
use crate::scalar::{Field, Scalar};

/// Number of candidates tried when the canonical solution is not
/// convolution invertible.
pub const SECTION_SEARCH_BUDGET: u128 = 100_000;

#[derive(Clone, Debug)]
pub struct Section {
    pub mu: SparseMat,
    pub mu_inv: SparseMat,
    pub closed_form: bool,
}

#[derive(Clone, Debug)]
pub struct Cleaving {
    pub gamma: SparseMat,
    pub gamma_inv: SparseMat,
    /// `η = id ⋆ (γ⁻¹π) : k[G] → k[H] ⊆ k[G]`.
    pub eta: SparseMat,
    pub eta_inv: SparseMat,
    pub closed_form: bool,
}

/// Does `x : C → A` satisfy `p∘x = id`, `x(c₁)⊗c₂ = x(c)₁⊗p(x(c)₂)`,
/// `ε∘x = ε` and `x(1) = 1`?
fn is_colinear_section(src: &HopfAlgebra, tgt: &HopfAlgebra, proj: &SparseMat, x: &SparseMat) -> bool {
    let f = src.field();
    let (na, nc) = (tgt.dim(), src.dim());
    if proj.compose(f, x) != SparseMat::identity(f, nc) || x.apply(f, src.one()) != *tgt.one() {
        return false;
    }
    let id_c = SparseMat::identity(f, nc);
    let id_a = SparseMat::identity(f, na);
    (0..nc).all(|j| {
        let img = x.col(j);
        let lhs = HopfAlgebra::map_pair(f, src.comul_basis(j), nc, x, &id_c);
        let rhs = HopfAlgebra::map_pair(f, &tgt.comul(img), na, &id_a, proj);
        lhs == rhs && tgt.eps(img) == src.counit().coeff(f, j)
    })
}

/// All `x : C → A` with the section conditions, unknown `x(c_j)_i` at
/// `i·|C| + j`.
fn solve_colinear(src: &HopfAlgebra, tgt: &HopfAlgebra, proj: &SparseMat) -> Result<AffineSolution> {
    let f = src.field();
    let (na, nc) = (tgt.dim(), src.dim());
    let nvars = na * nc;
    let var = |i: usize, j: usize| i * nc + j;
    let mut sys = LinearSystem::new(nvars);
    let id_a = SparseMat::identity(f, na);
    let projected: Vec<SparseVec> = (0..na).map(|i| HopfAlgebra::map_pair(f, tgt.comul_basis(i), na, &id_a, proj)).collect();
    for j in 0..nc {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nc];
        for i in 0..na {
            for (l, c) in proj.col(i).entries() {
                rows[*l].push((var(i, j), c.clone()));
            }
        }
        for (l, row) in rows.into_iter().enumerate() {
            let rhs = if l == j { f.one() } else { f.zero() };
            sys.push(SparseVec::from_pairs(f, nvars, row), rhs);
        }

        let mut coloc: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (ab, c) in src.comul_basis(j).entries() {
            let (a, b) = (ab / nc, ab % nc);
            for i in 0..na {
                coloc.entry(i * nc + b).or_default().push((var(i, a), c.clone()));
            }
        }
        for (i, d) in projected.iter().enumerate() {
            for (coord, c) in d.entries() {
                coloc.entry(*coord).or_default().push((var(i, j), f.neg(c)));
            }
        }
        for (_, row) in coloc {
            sys.push(SparseVec::from_pairs(f, nvars, row), f.zero());
        }

        let row = (0..na).map(|i| (var(i, j), tgt.counit().coeff(f, i))).collect();
        sys.push(SparseVec::from_pairs(f, nvars, row), src.counit().coeff(f, j));
    }
    for i in 0..na {
        let row = src.one().entries().iter().map(|(j, c)| (var(i, *j), c.clone())).collect();
        sys.push(SparseVec::from_pairs(f, nvars, row), tgt.one().coeff(f, i));
    }
    sys.solve(f).map_err(|_| Error::NoSection)
}

fn to_map(f: &Field, x: &SparseVec, na: usize, nc: usize) -> SparseMat {
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nc];
    for (idx, c) in x.entries() {
        cols[idx % nc].push((idx / nc, c.clone()));
    }
    SparseMat::from_columns(na, cols.into_iter().map(|c| SparseVec::from_pairs(f, na, c)).collect())
}

/// Tries the canonical solution, then further points of the solution space
/// in a fixed order, until one is convolution invertible.
fn invertible_point(src: &HopfAlgebra, tgt: &HopfAlgebra, sol: &AffineSolution, budget: u128) -> Result<(SparseMat, SparseMat)> {
    let f = src.field();
    let (na, nc) = (tgt.dim(), src.dim());
    let coeffs: Vec<Scalar> = match f.elements() {
        Some(e) => e,
        None => [0, 1, -1, 2, -2].iter().map(|c| f.from_i64(*c)).collect(),
    };
    let q = coeffs.len() as u128;
    let d = sol.kernel.dim() as u32;
    let total = q.checked_pow(d).unwrap_or(u128::MAX).min(budget);
    for code in 0..total {
        let mut c = code;
        let mut v = sol.particular.clone();
        for b in sol.kernel.basis() {
            v = v.axpy(f, &coeffs[(c % q) as usize], b);
            c /= q;
        }
        let m = to_map(f, &v, na, nc);
        if let Ok(inv) = convolution_inverse(src, tgt, &m) {
            return Ok((m, inv));
        }
    }
    Err(Error::NoInvertibleSectionFound)
}

/// `t^i ↦ t^i` for Frobenius kernels; for constant groups
/// `δ_l ↦ Σ_t δ_{tl}` over the smallest element `t` of each left coset of `L`.
fn closed_form_mu(g: &GroupScheme, l: &SubgroupScheme) -> Option<SparseMat> {
    let f = g.field();
    let n = g.order();
    let idx: Vec<usize> = l.span.basis().iter().map(|r| (r.nnz() == 1).then(|| r.entries()[0].0)).collect::<Option<_>>()?;
    let cols = match &g.family {
        Family::GaKernel { .. } => idx.iter().map(|i| SparseVec::unit(f, n, *i)).collect(),
        Family::Constant(grp) => {
            let mut reps: Vec<usize> = (0..n).map(|x| idx.iter().map(|h| grp.mul(x, *h)).min().unwrap()).collect();
            reps.sort();
            reps.dedup();
            idx.iter()
                .map(|h| SparseVec::from_pairs(f, n, reps.iter().map(|t| (grp.mul(*t, *h), f.one())).collect()))
                .collect()
        }
        _ => return None,
    };
    Some(SparseMat::from_columns(n, cols))
}

/// A convolution-invertible map `μ : 𝒪(L) → 𝒪(G)` of right `𝒪(L)`-comodules
/// with `q∘μ = id`, `εμ = ε` and `μ(1) = 1`.
pub fn section_mu(g: &GroupScheme, l: &SubgroupScheme) -> Result<Section> {
    let (src, tgt, proj) = (&l.own.og, &g.og, &l.restriction);
    if let Some(mu) = closed_form_mu(g, l) {
        if is_colinear_section(src, tgt, proj, &mu) {
            if let Ok(mu_inv) = convolution_inverse(src, tgt, &mu) {
                return Ok(Section { mu, mu_inv, closed_form: true });
            }
        }
    }
    let sol = solve_colinear(src, tgt, proj)?;
    let (mu, mu_inv) = invertible_point(src, tgt, &sol, SECTION_SEARCH_BUDGET)?;
    Ok(Section { mu, mu_inv, closed_form: false })
}

fn closed_form_gamma(g: &GroupScheme, q: &QuotientGroup) -> Option<SparseMat> {
    let f = g.field();
    let n = g.order();
    let reps: Vec<usize> = match &g.family {
        Family::Constant(grp) => (0..q.index())
            .map(|c| {
                let coset: Vec<usize> = (0..n).filter(|x| q.projection.col(*x).get(c).is_some()).collect();
                if coset.contains(&grp.identity()) {
                    grp.identity()
                } else {
                    coset[0]
                }
            })
            .collect(),
        Family::GaKernel { .. } => q.reps.clone(),
        _ => return None,
    };
    Some(SparseMat::from_columns(n, reps.iter().map(|r| SparseVec::unit(f, n, *r)).collect()))
}

/// A cleaving `γ : k[G/H] → k[G]` with `πγ = id`, colinear for the right
/// `k[G/H]`-coaction, `εγ = ε`, `γ(1) = 1`, together with `η` and `η⁻¹`.
pub fn cleaving(g: &GroupScheme, h: &SubgroupScheme, q: &QuotientGroup) -> Result<Cleaving> {
    let f = g.field();
    let (src, tgt, proj) = (&q.own.kg, &g.kg, &q.projection);
    let closed = closed_form_gamma(g, q)
        .filter(|gm| is_colinear_section(src, tgt, proj, gm))
        .and_then(|gm| convolution_inverse(src, tgt, &gm).ok().map(|inv| (gm, inv)));
    let (gamma, gamma_inv, closed_form) = match closed {
        Some((gm, inv)) => (gm, inv, true),
        None => {
            let sol = solve_colinear(src, tgt, proj)?;
            let (gm, inv) = invertible_point(src, tgt, &sol, SECTION_SEARCH_BUDGET)?;
            (gm, inv, false)
        }
    };
    let n = g.order();
    let id = SparseMat::identity(f, n);
    let eta = convolution(tgt, tgt, &id, &gamma_inv.compose(f, proj));
    if eta.columns().iter().any(|c| !h.span.contains(f, c)) {
        return Err(Error::Inconsistent("η leaves k[H]".into()));
    }
    let eta_inv = convolution_inverse(tgt, tgt, &eta)?;
    let expected = convolution(tgt, tgt, &gamma.compose(f, proj), tgt.antipode());
    if eta_inv != expected {
        return Err(Error::Inconsistent("η⁻¹ ≠ (γπ) ⋆ S".into()));
    }
    Ok(Cleaving { gamma, gamma_inv, eta, eta_inv, closed_form })
}
