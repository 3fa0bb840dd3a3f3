//! Recovering `(K, H, B)` from a surjection out of `D(G)`, and the maps
//! between quotients induced by containment of triples.

use super::{build_quotient, QuotientPair, Triple};
use crate::double::Double;
use crate::error::{Error, Result};
use crate::group::{GroupScheme, SubgroupScheme};
use crate::hopf::{generated_ideal, is_hopf_morphism, HopfAlgebra};
use crate::linalg::{solve_affine, SparseMat, SparseVec, Subspace};

#[derive(Clone, Debug)]
pub struct Recognition {
    pub pair: QuotientPair,
    /// `φ̄ : D(K,H,B) → T` with `φ̄∘θ = φ`.
    pub iso: SparseMat,
}

/// The unique `ψ` with `ψ∘θ = φ`, for surjective `θ`.
pub fn factor_through(f: &crate::scalar::Field, phi: &SparseMat, theta: &SparseMat) -> Result<SparseMat> {
    let (dt, ds) = (theta.nrows(), theta.ncols());
    let aug = (0..ds).map(|j| {
        let mut pairs = theta.col(j).entries().to_vec();
        pairs.push((dt + j, f.one()));
        SparseVec::from_pairs(f, dt + ds, pairs)
    });
    let ech = Subspace::spanned(f, dt + ds, aug);
    let mut pre: Vec<Option<SparseVec>> = vec![None; dt];
    for (row, p) in ech.basis().iter().zip(ech.pivots()) {
        if *p < dt {
            let z = row.remap(f, ds, |i| i.checked_sub(dt));
            pre[*p] = Some(z);
        }
    }
    let cols = pre
        .into_iter()
        .map(|z| z.map(|z| phi.apply(f, &z)).ok_or(Error::NotSurjective))
        .collect::<Result<Vec<_>>>()?;
    let psi = SparseMat::from_columns(phi.nrows(), cols);
    if psi.compose(f, theta) != *phi {
        let j = (0..ds).find(|j| psi.apply(f, theta.col(*j)) != *phi.col(*j)).unwrap();
        return Err(Error::NoFactorization(format!("ker θ ⊄ ker φ at basis vector {j}")));
    }
    Ok(psi)
}

/// Recovers the triple of a surjective Hopf map `φ : D(G) → T` and the
/// isomorphism `D(K,H,B) ≅ T` through which it factors.
pub fn recognize_triple(g: &GroupScheme, dbl: &Double, target: &HopfAlgebra, phi: &SparseMat) -> Result<Recognition> {
    let f = g.field();
    let n = g.order();
    let check = is_hopf_morphism(&dbl.d, target, phi);
    if !check.ok {
        return Err(Error::NotHopfMorphism(check.witness.unwrap_or_default()));
    }
    if phi.rank(f) != target.dim() {
        return Err(Error::NotSurjective);
    }
    let phi_o = phi.compose(f, &dbl.embed_o);
    let phi_k = phi.compose(f, &dbl.embed_kg);
    let k = SubgroupScheme::from_span(g, phi_o.kernel(f).annihilator(f))?;

    let plus: Vec<SparseVec> = phi_o
        .image(f)
        .basis()
        .iter()
        .map(|a| a.sub(f, &target.unit_counit(a)))
        .filter(|v| !v.is_zero())
        .collect();
    let j = generated_ideal(target, &plus);
    let q_phi_k = SparseMat::from_columns(target.dim(), (0..n).map(|u| j.reduce(f, phi_k.col(u))).collect());
    let q_one = j.reduce(f, target.one());
    let id = SparseMat::identity(f, n);
    let cols = (0..n)
        .map(|u| HopfAlgebra::map_pair(f, g.kg.comul_basis(u), n, &id, &q_phi_k).sub(f, &SparseVec::tensor(f, &g.kg.basis(u), &q_one)))
        .collect();
    let h = SubgroupScheme::from_span(g, SparseMat::from_columns(n * target.dim(), cols).kernel(f))?;

    let mu = crate::group::section_mu(g, &k)?;
    let psi = phi_o.compose(f, &mu.mu);
    let b_cols = h
        .span
        .basis()
        .iter()
        .map(|v| {
            let sol = solve_affine(f, &psi, &phi_k.apply(f, v)).map_err(|_| Error::NoFactorization("φ(1⋈v) ∉ φ(𝒪(G)⋈1)".into()))?;
            Ok(sol.particular)
        })
        .collect::<Result<Vec<_>>>()?;
    let b = SparseMat::from_columns(k.order(), b_cols);
    let triple = Triple::new(g, k, h, b)?;
    let pair = build_quotient(g, &triple)?;
    let iso = factor_through(f, phi, &pair.theta)?;
    if iso.nrows() != iso.ncols() || iso.rank(f) != iso.ncols() {
        return Err(Error::Inconsistent("induced map D(K,H,B) → T is not bijective".into()));
    }
    let check = is_hopf_morphism(&pair.d, target, &iso);
    if !check.ok {
        return Err(Error::NotHopfMorphism(check.witness.unwrap_or_default()));
    }
    Ok(Recognition { pair, iso })
}

/// The surjection `D(K',H',B') → D(K,H,B)` with `θ = φ∘θ'`, when
/// `K ⊆ K'`, `H' ⊆ H` and `ι^♯ B' = B ι`.
pub fn induced_surjection(g: &GroupScheme, big: &QuotientPair, small: &QuotientPair) -> Result<SparseMat> {
    let f = g.field();
    let (t, tp) = (&small.triple, &big.triple);
    if !tp.k.contains_sub(g, &t.k) {
        return Err(Error::NoFactorization("K ⊄ K'".into()));
    }
    if !t.h.contains_sub(g, &tp.h) {
        return Err(Error::NoFactorization("H' ⊄ H".into()));
    }
    let restrict = t.k.inclusion_into(g, &tp.k)?.transpose(f);
    let inc = tp.h.inclusion_into(g, &t.h)?;
    if restrict.compose(f, &tp.b) != t.b.compose(f, &inc) {
        return Err(Error::NoFactorization("ι^♯∘B' ≠ B∘ι".into()));
    }
    factor_through(f, &small.theta, &big.theta)
}
