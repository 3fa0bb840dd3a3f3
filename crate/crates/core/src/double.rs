//! The Drinfeld double `D(G) = 𝒪(G)^{cop} ⋈ k[G]`, its canonical R-matrix
//! and ribbon element, and checks for quasitriangular structures.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupScheme;
use crate::hopf::{generated_ideal, CheckList, HopfAlgebra};
use crate::linalg::{SparseMat, SparseVec, Subspace};

/// A Hopf algebra with an R-matrix and, optionally, a ribbon element.
#[derive(Clone, Debug)]
pub struct QuasiHopf {
    pub algebra: HopfAlgebra,
    pub r: SparseVec,
    pub v: Option<SparseVec>,
}

#[derive(Clone, Debug)]
pub struct Double {
    pub d: HopfAlgebra,
    /// `b ↦ b ⋈ 1`.
    pub embed_o: SparseMat,
    /// `u ↦ 1 ⋈ u`.
    pub embed_kg: SparseMat,
    /// `b ⋈ u ↦ ε(b)u`.
    pub proj_kg: SparseMat,
}

/// `D(G)` on the basis `f_b ⋈ e_u` at index `b·|G| + u`, with
/// `(b⋈u)(b'⋈u') = b(u₁⇀⇀b') ⋈ u₂u'` and `Δ(b⋈u) = (b₂⋈u₁) ⊗ (b₁⋈u₂)`.
pub fn drinfeld_double(g: &GroupScheme) -> Result<Double> {
    let f = g.field();
    let (o, kg) = (&g.og, &g.kg);
    let n = g.order();
    let nn = n * n;
    let products: Vec<SparseVec> = (0..nn * nn)
        .into_par_iter()
        .map(|t| {
            let (x, y) = (t / nn, t % nn);
            let (b, u) = (x / n, x % n);
            let (b2, u2) = (y / n, y % n);
            let mut pairs = Vec::new();
            for (ab, c) in kg.comul_basis(u).entries() {
                let left = o.mul(&o.basis(b), g.coadjoint_basis(ab / n, b2));
                if left.is_zero() {
                    continue;
                }
                let right = kg.mul_basis(ab % n, u2);
                for (i, ci) in left.entries() {
                    let cc = f.mul(c, ci);
                    for (j, cj) in right.entries() {
                        pairs.push((i * n + j, f.mul(&cc, cj)));
                    }
                }
            }
            SparseVec::from_pairs(f, nn, pairs)
        })
        .collect();
    let mul = |x: &SparseVec, y: &SparseVec| {
        let mut pairs = Vec::new();
        for (i, ci) in x.entries() {
            for (j, cj) in y.entries() {
                let c = f.mul(ci, cj);
                pairs.extend(products[i * nn + j].entries().iter().map(|(k, v)| (*k, f.mul(&c, v))));
            }
        }
        SparseVec::from_pairs(f, nn, pairs)
    };
    let s_o = o.antipode().inverse(f)?;
    let antipodes: Vec<SparseVec> = (0..nn)
        .map(|x| {
            let (b, u) = (x / n, x % n);
            let left = SparseVec::tensor(f, o.one(), kg.antipode().col(u));
            let right = SparseVec::tensor(f, s_o.col(b), kg.one());
            mul(&left, &right)
        })
        .collect();
    let coproduct = |x: usize| {
        let (b, u) = (x / n, x % n);
        let mut pairs = Vec::new();
        for (b12, c) in o.comul_basis(b).entries() {
            let (b1, b2) = (b12 / n, b12 % n);
            for (u12, d) in kg.comul_basis(u).entries() {
                let (u1, u2) = (u12 / n, u12 % n);
                pairs.push(((b2 * n + u1) * nn + b1 * n + u2, f.mul(c, d)));
            }
        }
        SparseVec::from_pairs(f, nn * nn, pairs)
    };
    let labels = (0..nn).map(|x| format!("{}⋈{}", o.labels()[x / n], kg.labels()[x % n])).collect();
    let d = HopfAlgebra::from_fns(
        f,
        labels,
        |a, b| products[a * nn + b].clone(),
        SparseVec::tensor(f, o.one(), kg.one()),
        coproduct,
        SparseVec::tensor(f, o.counit(), kg.counit()),
        |a| antipodes[a].clone(),
    )?;
    let embed_o = SparseMat::from_columns(nn, (0..n).map(|b| SparseVec::tensor(f, &o.basis(b), kg.one())).collect());
    let embed_kg = SparseMat::from_columns(nn, (0..n).map(|u| SparseVec::tensor(f, o.one(), &kg.basis(u))).collect());
    let proj_kg = SparseMat::from_columns(n, (0..nn).map(|x| SparseVec::scaled_unit(f, n, x % n, o.counit().coeff(f, x / n))).collect());
    Ok(Double { d, embed_o, embed_kg, proj_kg })
}

/// `R = Σ_u (1⋈e_u) ⊗ (f_u⋈1)` and `V = Σ_u S(f_u) ⋈ e_u`.
pub fn canonical_r_and_v(g: &GroupScheme, dbl: &Double) -> QuasiHopf {
    let f = g.field();
    let n = g.order();
    let mut r = SparseVec::zero(n.pow(4));
    let mut v = SparseVec::zero(n * n);
    for u in 0..n {
        r = r.add(f, &SparseVec::tensor(f, dbl.embed_kg.col(u), dbl.embed_o.col(u)));
        v = v.add(f, &SparseVec::tensor(f, g.og.antipode().col(u), &g.kg.basis(u)));
    }
    QuasiHopf { algebra: dbl.d.clone(), r, v: Some(v) }
}

/// The canonical R-matrix written with the basis `w_i = P e_i` of `k[G]`
/// and its dual basis; equals the canonical one for every invertible `P`.
pub fn canonical_r_in_basis(g: &GroupScheme, dbl: &Double, p: &SparseMat) -> Result<SparseVec> {
    let f = g.field();
    let n = g.order();
    let dual = p.inverse(f)?.transpose(f);
    let mut r = SparseVec::zero(n.pow(4));
    for i in 0..n {
        let left = dbl.embed_kg.apply(f, p.col(i));
        let right = dbl.embed_o.apply(f, dual.col(i));
        r = r.add(f, &SparseVec::tensor(f, &left, &right));
    }
    Ok(r)
}

/// `𝒪(G)` is normal in `D(G)`: `(1⋈u₁)(b⋈1)(1⋈S(u₂)) ∈ 𝒪(G)⋈1`.
pub fn o_is_normal(g: &GroupScheme, dbl: &Double) -> bool {
    let f = g.field();
    let n = g.order();
    let d = &dbl.d;
    let o_span = dbl.embed_o.image(f);
    (0..n).all(|u| {
        (0..n).all(|b| {
            let mut acc = SparseVec::zero(n * n);
            for (ab, c) in g.kg.comul_basis(u).entries() {
                let x = d.mul(&d.mul(dbl.embed_kg.col(ab / n), dbl.embed_o.col(b)), &dbl.embed_kg.apply(f, g.kg.antipode().col(ab % n)));
                acc = acc.axpy(f, c, &x);
            }
            o_span.contains(f, &acc)
        })
    })
}

/// `ker(D(G) → k[G])` as a subspace, and the ideal generated by `𝒪(G)⁺⋈1`.
pub fn double_exactness(g: &GroupScheme, dbl: &Double) -> (Subspace, Subspace) {
    let f = g.field();
    let o = &g.og;
    let gens: Vec<SparseVec> = (0..g.order())
        .map(|b| dbl.embed_o.apply(f, &o.basis(b).sub(f, &o.unit_counit(&o.basis(b)))))
        .filter(|v| !v.is_zero())
        .collect();
    (dbl.proj_kg.kernel(f), generated_ideal(&dbl.d, &gens))
}

/// `R₂₁R`.
pub fn r21r(q: &QuasiHopf) -> SparseVec {
    q.algebra.mul_tensor(2, &q.algebra.flip(&q.r), &q.r)
}

/// `(S⊗id)R`, the inverse of any R-matrix.
pub fn r_inverse(q: &QuasiHopf) -> SparseVec {
    let h = &q.algebra;
    let f = h.field();
    HopfAlgebra::map_pair(f, &q.r, h.dim(), h.antipode(), &SparseMat::identity(f, h.dim()))
}

pub fn verify_quasitriangular(q: &QuasiHopf) -> CheckList {
    let h = &q.algebra;
    let f = h.field();
    let n = h.dim();
    let l = h.labels();
    let mut out = CheckList::default();
    let one2 = h.one_tensor(2);
    let rinv = r_inverse(q);
    let inv_ok = h.mul_tensor(2, &q.r, &rinv) == one2 && h.mul_tensor(2, &rinv, &q.r) == one2;
    out.push("R invertible with inverse (S⊗id)R", (!inv_ok).then(|| "R(S⊗id)R ≠ 1⊗1".into()));

    let conj = (0..n).into_par_iter().find_map_first(|i| {
        let d = h.comul_basis(i);
        (h.mul_tensor(2, &q.r, d) != h.mul_tensor(2, &h.flip(d), &q.r)).then(|| format!("at {}", l[i]))
    });
    out.push("RΔ(h)R⁻¹ = Δ^cop(h)", conj);

    let r13 = h.embed_pair(&q.r, 0, 2);
    let r23 = h.embed_pair(&q.r, 1, 2);
    let r12 = h.embed_pair(&q.r, 0, 1);
    let left = h.comul_left(&q.r) != h.mul_tensor(3, &r13, &r23);
    out.push("(Δ⊗id)R = R₁₃R₂₃", left.then(|| "tensors differ".into()));
    let right = h.comul_right(&q.r) != h.mul_tensor(3, &r13, &r12);
    out.push("(id⊗Δ)R = R₁₃R₁₂", right.then(|| "tensors differ".into()));

    let counit = HopfAlgebra::map_pair(f, &q.r, n, &SparseMat::from_columns(1, (0..n).map(|i| SparseVec::scaled_unit(f, 1, 0, h.counit().coeff(f, i))).collect()), &SparseMat::identity(f, n));
    out.push("(ε⊗id)R = 1", (counit != *h.one()).then(|| "(ε⊗id)R ≠ 1".into()));
    out
}

/// `V` central, invertible, `S(V) = V`, `ε(V) = 1` and
/// `R₂₁R·Δ(V) = V⊗V`.
pub fn verify_ribbon(q: &QuasiHopf) -> Result<CheckList> {
    let v = q.v.as_ref().ok_or(Error::MissingRibbonElement)?;
    let h = &q.algebra;
    let f = h.field();
    let n = h.dim();
    let mut out = CheckList::default();
    let central = (0..n).into_par_iter().find_map_first(|i| {
        let b = h.basis(i);
        (h.mul(v, &b) != h.mul(&b, v)).then(|| format!("does not commute with {}", h.labels()[i]))
    });
    out.push("V central", central);
    let rank = h.left_mult_matrix(v).rank(f);
    out.push("V invertible", (rank != n).then(|| format!("rank {rank} < {n}")));
    out.push("S(V) = V", (h.s(v) != *v).then(|| "S(V) ≠ V".into()));
    out.push("ε(V) = 1", (!f.is_one(&h.eps(v))).then(|| format!("ε(V) = {}", f.format(&h.eps(v)))));
    let lhs = h.mul_tensor(2, &r21r(q), &h.comul(v));
    out.push("Δ(V) = (R₂₁R)⁻¹(V⊗V)", (lhs != h.tensor(v, v)).then(|| "R₂₁RΔ(V) ≠ V⊗V".into()));
    Ok(out)
}

pub fn is_triangular(q: &QuasiHopf) -> bool {
    r21r(q) == q.algebra.one_tensor(2)
}

/// Rank of the Drinfeld map `φ ↦ (φ⊗id)(R₂₁R)` from the dual.
pub fn drinfeld_map_rank(q: &QuasiHopf) -> usize {
    let h = &q.algebra;
    let f = h.field();
    let n = h.dim();
    let mut cols: Vec<Vec<(usize, crate::scalar::Scalar)>> = vec![Vec::new(); n];
    for (idx, c) in r21r(q).entries() {
        cols[idx / n].push((idx % n, c.clone()));
    }
    SparseMat::from_columns(n, cols.into_iter().map(|c| SparseVec::from_pairs(f, n, c)).collect()).rank(f)
}

pub fn is_factorizable(q: &QuasiHopf) -> bool {
    drinfeld_map_rank(q) == q.algebra.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{constant_group, ga_kernel, FiniteGroup};
    use crate::hopf::verify_hopf;
    use crate::scalar::Field;

    #[test]
    fn double_of_z2_over_rationals() {
        let f = Field::rationals();
        let g = constant_group(&f, &FiniteGroup::cyclic(2)).unwrap();
        let dbl = drinfeld_double(&g).unwrap();
        let rep = verify_hopf(&dbl.d);
        assert!(rep.all_passed() && rep.commutative && rep.cocommutative);
        let q = canonical_r_and_v(&g, &dbl);
        assert!(verify_quasitriangular(&q).all_passed());
        assert!(verify_ribbon(&q).unwrap().all_passed());
        assert!(is_factorizable(&q));
    }

    #[test]
    fn double_of_s3_is_factorizable_ribbon() {
        let f = Field::prime(7).unwrap();
        let g = constant_group(&f, &FiniteGroup::symmetric3()).unwrap();
        let dbl = drinfeld_double(&g).unwrap();
        assert!(verify_hopf(&dbl.d).all_passed());
        let q = canonical_r_and_v(&g, &dbl);
        assert!(verify_quasitriangular(&q).all_passed());
        assert!(verify_ribbon(&q).unwrap().all_passed());
        assert!(is_factorizable(&q) && !is_triangular(&q));
        assert!(o_is_normal(&g, &dbl));
        let (k, i) = double_exactness(&g, &dbl);
        assert_eq!(k, i);
    }

    #[test]
    fn ga1_double_is_tensor_product() {
        let f = Field::prime(2).unwrap();
        let g = ga_kernel(&f, 1).unwrap();
        let dbl = drinfeld_double(&g).unwrap();
        let rep = verify_hopf(&dbl.d);
        assert!(rep.all_passed() && rep.commutative);
        let q = canonical_r_and_v(&g, &dbl);
        assert!(verify_quasitriangular(&q).all_passed());
        let s = q.algebra.s(q.v.as_ref().unwrap());
        assert_eq!(&s, q.v.as_ref().unwrap());
    }
}
