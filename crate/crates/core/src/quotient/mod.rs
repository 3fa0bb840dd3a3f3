//! Hopf quotients `D(K, H, B)` of `D(G)`: the actions `*` and `·`, the
//! cocycle `σ`, the co-cocycle `τ`, the surjection `θ`, and the induced
//! R-matrix and ribbon element.

mod recognize;

pub use recognize::{factor_through, induced_surjection, recognize_triple, Recognition};

use rayon::prelude::*;

use crate::double::{canonical_r_and_v, Double, QuasiHopf};
use crate::error::{Error, Result};
use crate::group::{cleaving, section_mu, Cleaving, GroupScheme, QuotientGroup, Section, SubgroupScheme};
use crate::hopf::{generated_ideal, is_hopf_morphism, CheckList, HopfAlgebra};
use crate::linalg::{SparseMat, SparseVec, Subspace};
use crate::scalar::Field;

/// Commuting normal subgroups `K`, `H` of `G` and a `G`-equivariant Hopf map
/// `B : k[H] → 𝒪(K)`, written in the echelon bases of both subgroups.
#[derive(Clone, Debug)]
pub struct Triple {
    pub k: SubgroupScheme,
    pub h: SubgroupScheme,
    pub b: SparseMat,
}

impl PartialEq for Triple {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.h == other.h && self.b == other.b
    }
}

/// Reads the coordinates of `v ∈ k[L]` off the pivots of `k[L]`, as a matrix
/// `k[G] → k[L]`.  Only meaningful on `k[L]`.
pub fn pivot_coords(f: &Field, l: &SubgroupScheme, n: usize) -> SparseMat {
    let mut cols = vec![SparseVec::zero(l.order()); n];
    for (s, p) in l.span.pivots().iter().enumerate() {
        cols[*p] = SparseVec::unit(f, l.order(), s);
    }
    SparseMat::from_columns(l.order(), cols)
}

/// `u * a = q_K(u ⇀⇀ μ_K(a))`.
pub fn star_action(g: &GroupScheme, k: &SubgroupScheme, mu: &Section, u: &SparseVec, a: &SparseVec) -> SparseVec {
    let f = g.field();
    k.restriction.apply(f, &g.coadjoint(u, &mu.mu.apply(f, a)))
}

impl Triple {
    /// `(K, H, B)` after checking normality, centralizing, the Hopf property
    /// and `u * B(v) = B(ad_l(u)(v))`.
    pub fn new(g: &GroupScheme, k: SubgroupScheme, h: SubgroupScheme, b: SparseMat) -> Result<Triple> {
        let t = Triple { k, h, b };
        t.validate(g)?;
        Ok(t)
    }

    /// `(K, H, 1)`.
    pub fn trivial_b(g: &GroupScheme, k: SubgroupScheme, h: SubgroupScheme) -> Result<Triple> {
        let f = g.field();
        let one = k.own.og.one().clone();
        let b = SparseMat::from_columns(k.order(), (0..h.order()).map(|i| one.scale(f, &h.own.kg.counit().coeff(f, i))).collect());
        Triple::new(g, k, h, b)
    }

    pub fn validate(&self, g: &GroupScheme) -> Result<()> {
        let f = g.field();
        let bad = |s: String| Err(Error::InvalidTriple(s));
        if self.b.nrows() != self.k.order() || self.b.ncols() != self.h.order() {
            return bad("B has the wrong shape".into());
        }
        if let Some(w) = self.k.normality_witness(g) {
            return bad(format!("K not normal: {w}"));
        }
        if let Some(w) = self.h.normality_witness(g) {
            return bad(format!("H not normal: {w}"));
        }
        if !crate::group::centralize(g, &self.k, &self.h) {
            return bad("K and H do not centralize each other".into());
        }
        let m = is_hopf_morphism(&self.h.own.kg, &self.k.own.og, &self.b);
        if !m.ok {
            return bad(format!("B is not a Hopf map: {}", m.witness.unwrap_or_default()));
        }
        let mu = section_mu(g, &self.k)?;
        let coords = pivot_coords(f, &self.h, g.order());
        for u in 0..g.order() {
            let ub = g.kg.basis(u);
            for (s, v) in self.h.span.basis().iter().enumerate() {
                let lhs = star_action(g, &self.k, &mu, &ub, self.b.col(s));
                let ad = g.ad_l(&ub, v);
                let rhs = self.b.apply(f, &coords.apply(f, &ad));
                if lhs != rhs {
                    return bad(format!("B not equivariant at u = {}, v = {}", g.kg.labels()[u], g.kg.label_of(v)));
                }
            }
        }
        Ok(())
    }

    /// `|K|·[G:H]`.
    pub fn fp_dim(&self, g: &GroupScheme) -> usize {
        self.k.order() * g.order() / self.h.order()
    }

    pub fn b_is_trivial(&self, g: &GroupScheme) -> bool {
        let f = g.field();
        (0..self.h.order()).all(|i| self.b.col(i) == &self.k.own.og.one().scale(f, &self.h.own.kg.counit().coeff(f, i)))
    }
}

/// `(D(K,H,B), θ)` with everything used to build it.
#[derive(Clone, Debug)]
pub struct QuotientPair {
    pub triple: Triple,
    pub quotient: QuotientGroup,
    pub cleaving: Cleaving,
    pub section: Section,
    /// `D(K,H,B)` on the basis `a # x` at index `a·[G:H] + x`.
    pub d: HopfAlgebra,
    /// `θ : D(G) → D(K,H,B)`.
    pub theta: SparseMat,
    /// `x · a` at `x·|K| + a`.
    pub dot: Vec<SparseVec>,
    /// `σ(x, y)` at `x·[G:H] + y`.
    pub sigma: Vec<SparseVec>,
    /// `τ(x) ∈ 𝒪(K)⊗𝒪(K)`.
    pub tau: Vec<SparseVec>,
    pub qt: QuasiHopf,
}

impl QuotientPair {
    pub fn index(&self) -> usize {
        self.quotient.index()
    }

    /// `a ↦ a # 1`.
    pub fn embed_o(&self) -> SparseMat {
        let f = self.d.field();
        let one = self.quotient.own.kg.one();
        let cols = (0..self.triple.k.order()).map(|a| SparseVec::tensor(f, &SparseVec::unit(f, self.triple.k.order(), a), one)).collect();
        SparseMat::from_columns(self.d.dim(), cols)
    }

    /// `a # x ↦ ε(a)x`.
    pub fn proj_quotient(&self) -> SparseMat {
        let f = self.d.field();
        let m = self.index();
        let ok = &self.triple.k.own.og;
        SparseMat::from_columns(m, (0..self.d.dim()).map(|i| SparseVec::scaled_unit(f, m, i % m, ok.counit().coeff(f, i / m))).collect())
    }
}

fn in_subgroup(f: &Field, l: &SubgroupScheme, v: &SparseVec, what: &str) -> Result<()> {
    if l.span.contains(f, v) {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!("{what} leaves the subgroup")))
    }
}

/// Builds `D(K,H,B)`, `θ`, `σ`, `τ` and the closed-form `R(K,H,B)`,
/// `V(K,H,B)`.
pub fn build_quotient(g: &GroupScheme, triple: &Triple) -> Result<QuotientPair> {
    triple.validate(g)?;
    let quotient = QuotientGroup::new(g, &triple.h)?;
    let cl = cleaving(g, &triple.h, &quotient)?;
    let section = section_mu(g, &triple.k)?;
    build_with(g, triple, quotient, cl, section)
}

/// As [`build_quotient`] with a given cleaving and section.
pub fn build_with(g: &GroupScheme, triple: &Triple, quotient: QuotientGroup, cl: Cleaving, section: Section) -> Result<QuotientPair> {
    let f = g.field();
    let n = g.order();
    let (k, h) = (&triple.k, &triple.h);
    let nk = k.order();
    let m = quotient.index();
    let ok = &k.own.og;
    let kq = &quotient.own.kg;
    let kg = &g.kg;
    let bh = triple.b.compose(f, &pivot_coords(f, h, n));

    let dot: Vec<SparseVec> = (0..m * nk)
        .map(|t| star_action(g, k, &section, cl.gamma.col(t / nk), &ok.basis(t % nk)))
        .collect();

    let mut sigma = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let mut acc = SparseVec::zero(n);
            for (x12, c) in kq.comul_basis(x).entries() {
                for (y12, d) in kq.comul_basis(y).entries() {
                    let (x1, x2, y1, y2) = (x12 / m, x12 % m, y12 / m, y12 % m);
                    let w = kg.mul(&kg.mul(cl.gamma.col(x1), cl.gamma.col(y1)), &cl.gamma_inv.apply(f, kq.mul_basis(x2, y2)));
                    acc = acc.axpy(f, &f.mul(c, d), &w);
                }
            }
            in_subgroup(f, h, &acc, "σ̄")?;
            sigma.push(bh.apply(f, &acc));
        }
    }

    let in_h = h.inclusion.compose(f, &pivot_coords(f, h, n));
    let mut tau = Vec::with_capacity(m);
    for x in 0..m {
        let mut acc = SparseVec::zero(n * n);
        for (idx, c) in kg.comul2(cl.gamma.col(x)).entries() {
            let (w1, w2, w3) = (idx / (n * n), (idx / n) % n, idx % n);
            let e = cl.eta_inv.col(w1);
            for (e12, d) in kg.comul(e).entries() {
                let left = kg.mul(&kg.basis(e12 / n), cl.eta.col(w2));
                let right = kg.mul(&kg.basis(e12 % n), cl.eta.col(w3));
                acc = acc.axpy(f, &f.mul(c, d), &SparseVec::tensor(f, &left, &right));
            }
        }
        if HopfAlgebra::map_pair(f, &acc, n, &in_h, &in_h) != acc {
            return Err(Error::Inconsistent("τ̄ leaves k[H]⊗k[H]".into()));
        }
        tau.push(HopfAlgebra::map_pair(f, &acc, n, &bh, &bh));
    }

    let dim = nk * m;
    let kq2: Vec<SparseVec> = (0..m).map(|x| kq.comul2(&kq.basis(x))).collect();
    // T(x, ã, x̃) = Σ (x₁·ã) σ(x₂, x̃₁) ⊗ x₃x̃₂, so that (a#x)(ã#x̃) = (a⊗1)T.
    let tables: Vec<SparseVec> = (0..m * nk * m)
        .into_par_iter()
        .map(|t| {
            let (x, at, xt) = (t / (nk * m), (t / m) % nk, t % m);
            let mut pairs = Vec::new();
            for (idx, c) in kq2[x].entries() {
                let (x1, x2, x3) = (idx / (m * m), (idx / m) % m, idx % m);
                let left0 = &dot[x1 * nk + at];
                if left0.is_zero() {
                    continue;
                }
                for (xx, d) in kq.comul_basis(xt).entries() {
                    let (xt1, xt2) = (xx / m, xx % m);
                    let left = ok.mul(left0, &sigma[x2 * m + xt1]);
                    let right = kq.mul_basis(x3, xt2);
                    let cd = f.mul(c, d);
                    for (i, ci) in left.entries() {
                        for (j, cj) in right.entries() {
                            pairs.push((i * m + j, f.mul(&cd, &f.mul(ci, cj))));
                        }
                    }
                }
            }
            SparseVec::from_pairs(f, dim, pairs)
        })
        .collect();
    let products: Vec<SparseVec> = (0..dim * dim)
        .into_par_iter()
        .map(|t| {
            let (l, r) = (t / dim, t % dim);
            let (a, x, at, xt) = (l / m, l % m, r / m, r % m);
            let mut pairs = Vec::new();
            for (ij, c) in tables[(x * nk + at) * m + xt].entries() {
                let (i, j) = (ij / m, ij % m);
                for (s, cs) in ok.mul_basis(a, i).entries() {
                    pairs.push((s * m + j, f.mul(c, cs)));
                }
            }
            SparseVec::from_pairs(f, dim, pairs)
        })
        .collect();
    let mul = |x: &SparseVec, y: &SparseVec| {
        let mut pairs = Vec::new();
        for (i, ci) in x.entries() {
            for (j, cj) in y.entries() {
                let c = f.mul(ci, cj);
                pairs.extend(products[i * dim + j].entries().iter().map(|(k, v)| (*k, f.mul(&c, v))));
            }
        }
        SparseVec::from_pairs(f, dim, pairs)
    };
    let coproduct = |t: usize| {
        let (a, x) = (t / m, t % m);
        let mut acc = SparseVec::zero(dim * dim);
        for (a12, c) in ok.comul_basis(a).entries() {
            let (a1, a2) = (a12 / nk, a12 % nk);
            for (idx, d) in kq2[x].entries() {
                let (x1, x2, x3) = (idx / (m * m), (idx / m) % m, idx % m);
                for (tt, e) in tau[x1].entries() {
                    let (t1, t2) = (tt / nk, tt % nk);
                    let left = SparseVec::tensor(f, ok.mul_basis(a2, t1), &SparseVec::unit(f, m, x2));
                    let right = SparseVec::tensor(f, ok.mul_basis(a1, t2), &SparseVec::unit(f, m, x3));
                    acc = acc.axpy(f, &f.mul(c, &f.mul(d, e)), &SparseVec::tensor(f, &left, &right));
                }
            }
        }
        acc
    };
    let antipodes: Vec<SparseVec> = (0..dim)
        .map(|t| {
            let (a, x) = (t / m, t % m);
            let left = SparseVec::tensor(f, ok.one(), kq.antipode().col(x));
            let right = SparseVec::tensor(f, ok.antipode().col(a), kq.one());
            mul(&left, &right)
        })
        .collect();
    let labels = (0..dim).map(|t| format!("{}#{}", ok.labels()[t / m], kq.labels()[t % m])).collect();
    let d = HopfAlgebra::from_fns(
        f,
        labels,
        |a, b| products[a * dim + b].clone(),
        SparseVec::tensor(f, ok.one(), kq.one()),
        coproduct,
        SparseVec::tensor(f, ok.counit(), kq.counit()),
        |a| antipodes[a].clone(),
    )?;

    // B(η(u)) for every basis u of k[G].
    let b_eta: Vec<SparseVec> = (0..n)
        .map(|u| {
            let e = cl.eta.col(u);
            in_subgroup(f, h, e, "η")?;
            Ok(bh.apply(f, e))
        })
        .collect::<Result<_>>()?;
    let theta_cols: Vec<SparseVec> = (0..n * n)
        .into_par_iter()
        .map(|t| {
            let (b, u) = (t / n, t % n);
            let qb = k.restriction.col(b);
            let mut acc = SparseVec::zero(dim);
            for (u12, c) in kg.comul_basis(u).entries() {
                let left = ok.mul(qb, &b_eta[u12 / n]);
                acc = acc.axpy(f, c, &SparseVec::tensor(f, &left, quotient.projection.col(u12 % n)));
            }
            acc
        })
        .collect();
    let theta = SparseMat::from_columns(dim, theta_cols);

    let mut r = SparseVec::zero(dim * dim);
    let mut v = SparseVec::zero(dim);
    for (s, row) in k.span.basis().iter().enumerate() {
        let mut first = SparseVec::zero(dim);
        for (u12, c) in kg.comul(row).entries() {
            first = first.axpy(f, c, &SparseVec::tensor(f, &b_eta[u12 / n], quotient.projection.col(u12 % n)));
        }
        let second = SparseVec::tensor(f, &ok.basis(s), kq.one());
        r = r.add(f, &SparseVec::tensor(f, &first, &second));
        let sf = SparseVec::tensor(f, ok.antipode().col(s), kq.one());
        v = v.add(f, &mul(&sf, &first));
    }
    let qt = QuasiHopf { algebra: d.clone(), r, v: Some(v) };
    Ok(QuotientPair { triple: triple.clone(), quotient, cleaving: cl, section, d, theta, dot, sigma, tau, qt })
}

/// `(θ⊗θ)(R)` and `θ(V)` for the canonical `R`, `V` of `D(G)`.
pub fn pushed_r_and_v(g: &GroupScheme, dbl: &Double, qp: &QuotientPair) -> (SparseVec, SparseVec) {
    let f = g.field();
    let q = canonical_r_and_v(g, dbl);
    let r = HopfAlgebra::map_pair(f, &q.r, dbl.d.dim(), &qp.theta, &qp.theta);
    let v = qp.theta.apply(f, q.v.as_ref().expect("canonical V"));
    (r, v)
}

/// The ideal of `D(G)` generated by `𝒪(G/K)⁺` and `μ_K(B(v))⋈1 − 1⋈v`.
pub fn stated_kernel(g: &GroupScheme, dbl: &Double, qp: &QuotientPair) -> Subspace {
    let f = g.field();
    let o = &g.og;
    let t = &qp.triple;
    let mut gens: Vec<SparseVec> = crate::group::coinvariants(g, &t.k)
        .basis()
        .iter()
        .map(|c| dbl.embed_o.apply(f, &c.sub(f, &o.unit_counit(c))))
        .collect();
    for (s, v) in t.h.span.basis().iter().enumerate() {
        let lhs = dbl.embed_o.apply(f, &qp.section.mu.apply(f, t.b.col(s)));
        gens.push(lhs.sub(f, &dbl.embed_kg.apply(f, v)));
    }
    gens.retain(|v| !v.is_zero());
    generated_ideal(&dbl.d, &gens)
}

/// Every check on a quotient pair: the Hopf axioms of `D(K,H,B)`, `θ` a
/// surjective Hopf map with the stated kernel, the closed-form `R` and `V`
/// against the pushed-forward ones, and the braiding axioms.
pub fn quotient_checks(g: &GroupScheme, dbl: &Double, qp: &QuotientPair) -> Result<CheckList> {
    let f = g.field();
    let mut c = CheckList::default();
    let hopf = crate::hopf::verify_hopf(&qp.d);
    c.push("D(K,H,B) satisfies the Hopf axioms", hopf.failures().first().map(|a| format!("{}: {}", a.axiom, a.witness.clone().unwrap_or_default())));
    c.push("dim D(K,H,B) = |K|[G:H]", (qp.d.dim() != qp.triple.fp_dim(g)).then(|| format!("dim {} vs {}", qp.d.dim(), qp.triple.fp_dim(g))));
    c.push("θ is a Hopf map", is_hopf_morphism(&dbl.d, &qp.d, &qp.theta).witness);
    c.push("θ is surjective", (qp.theta.rank(f) != qp.d.dim()).then(|| format!("rank {}", qp.theta.rank(f))));
    let ker = qp.theta.kernel(f);
    let stated = stated_kernel(g, dbl, qp);
    c.push("ker θ is the stated ideal", (ker != stated).then(|| format!("dim ker θ = {}, dim ideal = {}", ker.dim(), stated.dim())));
    let (r, v) = pushed_r_and_v(g, dbl, qp);
    c.push("closed-form R equals (θ⊗θ)(R)", (r != qp.qt.r).then(|| "R differs".to_string()));
    c.push("closed-form V equals θ(V)", (Some(&v) != qp.qt.v.as_ref()).then(|| "V differs".to_string()));
    c.checks.extend(crate::double::verify_quasitriangular(&qp.qt).checks);
    c.checks.extend(crate::double::verify_ribbon(&qp.qt)?.checks);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::{drinfeld_double, verify_quasitriangular, verify_ribbon};
    use crate::group::{constant_group, ga_kernel, FiniteGroup};
    use crate::hopf::verify_hopf;

    #[test]
    fn full_triple_recovers_double() {
        let f = Field::prime(7).unwrap();
        let g = constant_group(&f, &FiniteGroup::symmetric3()).unwrap();
        let dbl = drinfeld_double(&g).unwrap();
        let t = Triple::trivial_b(&g, SubgroupScheme::full(&g), SubgroupScheme::trivial(&g)).unwrap();
        let qp = build_quotient(&g, &t).unwrap();
        assert_eq!(qp.d.mult_tensor(), dbl.d.mult_tensor());
        assert_eq!(qp.d.comult_table(), dbl.d.comult_table());
        assert_eq!(qp.d.antipode(), dbl.d.antipode());
    }

    #[test]
    fn ga2_quotient_has_nontrivial_tau() {
        let f = Field::prime(3).unwrap();
        let g = ga_kernel(&f, 2).unwrap();
        let dbl = drinfeld_double(&g).unwrap();
        let k = SubgroupScheme::frobenius_sub(&g, 1).unwrap();
        let lambda = f.from_i64(2);
        let b = SparseMat::from_columns(3, (0..3).map(|n| SparseVec::scaled_unit(&f, 3, n, f.div(&f.pow(&lambda, n as u64), &f.factorial(n as u64)).unwrap())).collect());
        let t = Triple::new(&g, k.clone(), k, b).unwrap();
        let qp = build_quotient(&g, &t).unwrap();
        assert_eq!(qp.d.dim(), 9);
        assert!(verify_hopf(&qp.d).all_passed());
        assert!(is_hopf_morphism(&dbl.d, &qp.d, &qp.theta).ok);
        assert!(!qp.tau[1].is_zero() && qp.tau[1] != SparseVec::zero(9));
        let (r, v) = pushed_r_and_v(&g, &dbl, &qp);
        assert_eq!(r, qp.qt.r);
        assert_eq!(Some(v), qp.qt.v.clone());
        assert!(verify_quasitriangular(&qp.qt).all_passed());
        assert!(verify_ribbon(&qp.qt).unwrap().all_passed());
        assert_eq!(qp.theta.kernel(&f), stated_kernel(&g, &dbl, &qp));
    }
}
