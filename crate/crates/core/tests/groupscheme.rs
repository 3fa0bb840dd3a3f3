use drinfeld::group::{
    cleaving, constant_group, direct_product, ga_kernel, intersect_subgroup, mu_p_kernel, product_subgroup, restricted_enveloping, section_mu,
    subgroup_from_generators, two_dim_solvable, FiniteGroup, GroupScheme, QuotientGroup, SubgroupScheme,
};
use drinfeld::hopf::verify_hopf;
use drinfeld::lattice::{normal_subgroups, DEFAULT_LATTICE_BUDGET};
use drinfeld::linalg::{SparseMat, SparseVec};
use drinfeld::Field;

fn idx(g: &GroupScheme, label: &str) -> usize {
    g.kg.labels().iter().position(|l| l == label).unwrap()
}

fn s3() -> GroupScheme {
    constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap()
}

#[test]
fn constant_groups() {
    let q = Field::rationals();
    let z2 = constant_group(&q, &FiniteGroup::cyclic(2)).unwrap();
    assert_eq!(z2.order(), 2);
    assert_eq!(z2.og.basis(0).add(&q, &z2.og.basis(1)), *z2.og.one());
    let g = s3();
    let o = &g.og;
    let f = g.field();
    for i in 0..6 {
        for j in 0..6 {
            let want = if i == j { o.basis(i) } else { SparseVec::zero(6) };
            assert_eq!(*o.mul_basis(i, j), want);
        }
    }
    let k = constant_group(f, &FiniteGroup::klein()).unwrap();
    let r = verify_hopf(&k.kg);
    assert!(r.commutative && r.cocommutative);
}

#[test]
fn frobenius_kernels() {
    let f = Field::prime(2).unwrap();
    let g = ga_kernel(&f, 1).unwrap();
    assert!(g.kg.mul_basis(1, 1).is_zero());
    assert!(g.og.mul_basis(1, 1).is_zero());
    let f3 = Field::prime(3).unwrap();
    let g2 = ga_kernel(&f3, 2).unwrap();
    for n in 0..9 {
        let mut want = SparseVec::zero(81);
        for a in 0..=n {
            want = want.add(&f3, &SparseVec::unit(&f3, 81, a * 9 + (n - a)));
        }
        assert_eq!(*g2.kg.comul_basis(n), want);
    }
    // δ₁ and δ₃ generate freely as a truncated polynomial algebra
    let x0 = g2.kg.basis(1);
    let x1 = g2.kg.basis(3);
    let mut seen = Vec::new();
    for a in 0..3u32 {
        for b in 0..3u32 {
            let mut m = g2.kg.one().clone();
            for _ in 0..a {
                m = g2.kg.mul(&m, &x0);
            }
            for _ in 0..b {
                m = g2.kg.mul(&m, &x1);
            }
            assert!(!m.is_zero());
            seen.push(m);
        }
    }
    assert_eq!(drinfeld::linalg::Subspace::spanned(&f3, 9, seen).dim(), 9);
    assert!(g2.kg.mul(&g2.kg.mul(&x0, &x0), &x0).is_zero());
}

#[test]
fn multiplicative_kernel() {
    let f = Field::prime(3).unwrap();
    let g = mu_p_kernel(&f).unwrap();
    assert_eq!(g.order(), 3);
    assert!(verify_hopf(&g.og).all_passed());
    let d = &g.kg;
    let mut total = SparseVec::zero(3);
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { d.basis(i) } else { SparseVec::zero(3) };
            assert_eq!(*d.mul_basis(i, j), want);
        }
        total = total.add(&f, &d.basis(i));
    }
    assert_eq!(total, *d.one());
}

#[test]
fn products_and_tags() {
    let f = Field::prime(2).unwrap();
    let ga = ga_kernel(&f, 1).unwrap();
    let sq = direct_product(&ga, &ga).unwrap();
    assert_eq!(sq.order(), 4);
    assert_eq!((sq.tag.connected_order, sq.tag.points), (4, 1));
    let z2 = constant_group(&f, &FiniteGroup::cyclic(2)).unwrap();
    let m = direct_product(&z2, &ga).unwrap();
    assert_eq!((m.tag.connected_order, m.tag.points), (2, 2));
    let gl = drinfeld::hopf::grouplikes(&m.kg, 1_000_000).unwrap();
    assert_eq!(gl.len(), m.tag.points);
}

#[test]
fn restricted_lie_algebras() {
    let f = Field::prime(2).unwrap();
    let g = two_dim_solvable(&f).unwrap();
    assert_eq!(g.order(), 4);
    assert!(verify_hopf(&g.kg).all_passed());
    let (x, y) = (g.kg.basis(idx(&g, "x")), g.kg.basis(idx(&g, "y")));
    assert_eq!(g.kg.mul(&y, &x), g.kg.mul(&x, &y).sub(&f, &y));

    let f3 = Field::prime(3).unwrap();
    let z = f3.zero();
    let ab = restricted_enveloping(&f3, &["x".to_string()], &[vec![vec![z.clone()]]], &[vec![z.clone()]]).unwrap();
    let ga = ga_kernel(&f3, 1).unwrap();
    // monomial basis xⁿ against divided powers: xⁿ = n!·δₙ
    let to_divided = SparseMat::from_columns(3, (0..3).map(|n| SparseVec::scaled_unit(&f3, 3, n, f3.factorial(n as u64))).collect());
    assert!(drinfeld::hopf::is_hopf_morphism(&ab.kg, &ga.kg, &to_divided).ok);
    assert!(to_divided.inverse(&f3).is_ok());
    assert_eq!(ab.kg.comult_table().len(), 3);

    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let zero = vec![z.clone(); 3];
    let zv = SparseVec::unit(&f3, 3, 2).dense(&f3);
    let mut bracket = vec![vec![zero.clone(); 3]; 3];
    bracket[0][1] = zv.clone();
    bracket[1][0] = zv.iter().map(|c| f3.neg(c)).collect();
    let h = restricted_enveloping(&f3, &names, &bracket, &vec![zero; 3]).unwrap();
    assert_eq!(h.order(), 27);
    assert_eq!(h.tag.points, 1);
    assert!(verify_hopf(&h.kg).all_passed());
}

#[test]
fn subgroups_from_generators() {
    for p in [2u32, 3] {
        let f = Field::prime(p).unwrap();
        let g = ga_kernel(&f, 2).unwrap();
        let s = subgroup_from_generators(&g, &[g.kg.basis(0), g.kg.basis(1)]).unwrap();
        assert_eq!(s, SubgroupScheme::frobenius_sub(&g, 1).unwrap());
        assert_eq!(s.order(), p as usize);
        let t = subgroup_from_generators(&g, &[]).unwrap();
        assert!(t.is_trivial());
        assert_eq!(t.own.og.dim(), 1);
        let all: Vec<SparseVec> = (0..g.order()).map(|i| g.kg.basis(i)).collect();
        let full = subgroup_from_generators(&g, &all).unwrap();
        assert_eq!(full, SubgroupScheme::full(&g));
        assert_eq!(full.restriction, SparseMat::identity(&f, g.order()));
    }
}

#[test]
fn actions_and_normality() {
    let g = s3();
    let t = g.kg.basis(idx(&g, "(12)"));
    let c = g.kg.basis(idx(&g, "(123)"));
    assert_eq!(g.ad_l(&t, &c), g.kg.basis(idx(&g, "(132)")));
    assert_eq!(g.ad_l(g.kg.one(), &c), c);
    let a3 = SubgroupScheme::from_elements(&g, &[0, idx(&g, "(123)"), idx(&g, "(132)")]).unwrap();
    let tr = SubgroupScheme::from_elements(&g, &[0, idx(&g, "(12)")]).unwrap();
    assert!(a3.is_normal(&g));
    assert!(!tr.is_normal(&g));
    assert!(intersect_subgroup(&g, &a3, &tr).unwrap().is_trivial());
    let one = SubgroupScheme::trivial(&g);
    let all = SubgroupScheme::full(&g);
    assert_eq!(product_subgroup(&g, &a3, &one).unwrap(), a3);
    assert_eq!(intersect_subgroup(&g, &a3, &all).unwrap(), a3);
    assert_eq!(product_subgroup(&g, &a3, &tr).unwrap(), all);

    let f2 = Field::prime(2).unwrap();
    let ga = ga_kernel(&f2, 2).unwrap();
    let h = SubgroupScheme::frobenius_sub(&ga, 1).unwrap();
    assert!(h.is_normal(&ga));
    assert_eq!(product_subgroup(&ga, &h, &h).unwrap(), h);
    for u in 0..4 {
        for b in 0..4 {
            let want = ga.og.basis(b).scale(&f2, &ga.kg.counit().coeff(&f2, u));
            assert_eq!(ga.coadjoint(&ga.kg.basis(u), &ga.og.basis(b)), want);
        }
    }
    assert_eq!(normal_subgroups(&g, DEFAULT_LATTICE_BUDGET).unwrap().len(), 3);
}

#[test]
fn quotient_projections() {
    let f = Field::prime(3).unwrap();
    let g = ga_kernel(&f, 2).unwrap();
    let h = SubgroupScheme::frobenius_sub(&g, 1).unwrap();
    let q = QuotientGroup::new(&g, &h).unwrap();
    for n in 0..9 {
        let want = if n % 3 == 0 { SparseVec::unit(&f, 3, n / 3) } else { SparseVec::zero(3) };
        assert_eq!(*q.projection.col(n), want);
    }
    let q1 = QuotientGroup::new(&g, &SubgroupScheme::trivial(&g)).unwrap();
    assert_eq!(q1.projection, SparseMat::identity(&f, 9));
    let qg = QuotientGroup::new(&g, &SubgroupScheme::full(&g)).unwrap();
    assert_eq!(qg.index(), 1);
    assert_eq!(qg.projection.transpose(&f).col(0).clone(), g.kg.counit().clone());
}

#[test]
fn sections() {
    let f = Field::prime(3).unwrap();
    let g = ga_kernel(&f, 2).unwrap();
    let h = SubgroupScheme::frobenius_sub(&g, 1).unwrap();
    let mu = section_mu(&g, &h).unwrap();
    for i in 0..3 {
        assert_eq!(*mu.mu.col(i), SparseVec::unit(&f, 9, i));
    }
    let full = SubgroupScheme::full(&g);
    assert_eq!(section_mu(&g, &full).unwrap().mu, SparseMat::identity(&f, 9));

    let s = s3();
    let a3 = SubgroupScheme::from_elements(&s, &[0, idx(&s, "(123)"), idx(&s, "(132)")]).unwrap();
    let m = section_mu(&s, &a3).unwrap();
    let id = SparseMat::identity(s.field(), 3);
    assert_eq!(a3.restriction.compose(s.field(), &m.mu), id);
    // one δ per coset, so that μ(1) = 1
    for j in 0..3 {
        assert_eq!(m.mu.col(j).nnz(), 2);
    }
    assert_eq!(m.mu.apply(s.field(), a3.own.og.one()), *s.og.one());
}

/// Cleaving identities on every basis element, and `u ↦ η(u₁)⊗π(u₂)` inverse
/// to `v⊗x ↦ vγ(x)`.
fn cleaving_laws(g: &GroupScheme, h: &SubgroupScheme) {
    let f = g.field();
    let kg = &g.kg;
    let n = g.order();
    let q = QuotientGroup::new(g, h).unwrap();
    let m = q.index();
    let cl = cleaving(g, h, &q).unwrap();
    let pi = &q.projection;
    let gp = cl.gamma.compose(f, pi);
    for x in 0..m {
        let e = q.own.kg.counit().coeff(f, x);
        assert_eq!(cl.eta.apply(f, cl.gamma.col(x)), kg.one().scale(f, &e), "η(γ(x)) = ε(x)1");
    }
    for u in 0..n {
        let d = kg.comul_basis(u);
        let mut two = SparseVec::zero(n);
        let mut four = SparseVec::zero(n);
        let mut five = SparseVec::zero(n);
        let mut fu = SparseVec::zero(n * m);
        for (i, c) in d.entries() {
            let (a, b) = (i / n, i % n);
            two = two.axpy(f, c, &kg.mul(cl.eta.col(a), gp.col(b)));
            four = four.axpy(f, c, &kg.mul(cl.eta_inv.col(a), &kg.basis(b)));
            five = five.axpy(f, c, &kg.mul(gp.col(a), kg.antipode().col(b)));
            fu = fu.axpy(f, c, &SparseVec::tensor(f, cl.eta.col(a), pi.col(b)));
        }
        assert_eq!(two, kg.basis(u), "u = η(u₁)γ(π(u₂))");
        assert_eq!(four, *gp.col(u), "γ(π(u)) = η⁻¹(u₁)u₂");
        assert_eq!(five, *cl.eta_inv.col(u), "η⁻¹(u) = γ(π(u₁))S(u₂)");
        let mut back = SparseVec::zero(n);
        for (i, c) in fu.entries() {
            back = back.axpy(f, c, &kg.mul(&kg.basis(i / m), cl.gamma.col(i % m)));
        }
        assert_eq!(back, kg.basis(u));
        assert!(h.span.contains(f, cl.eta.col(u)));
    }
    for v in h.span.basis() {
        for x in 0..m {
            let w = kg.mul(v, cl.gamma.col(x));
            let mut fw = SparseVec::zero(n * m);
            for (i, c) in kg.comul(&w).entries() {
                fw = fw.axpy(f, c, &SparseVec::tensor(f, cl.eta.col(i / n), pi.col(i % n)));
            }
            assert_eq!(fw, SparseVec::tensor(f, v, &SparseVec::unit(f, m, x)));
        }
    }
    if g.constant_group().is_some() {
        assert!(drinfeld::hopf::is_hopf_morphism(kg, kg, &cl.eta).ok || h.is_trivial() || h.order() == n || coalgebra_map(g, &cl.eta));
    }
}

fn coalgebra_map(g: &GroupScheme, m: &SparseMat) -> bool {
    let f = g.field();
    let n = g.order();
    (0..n).all(|u| {
        let lhs = g.kg.comul(m.col(u));
        let rhs = drinfeld::hopf::HopfAlgebra::map_pair(f, g.kg.comul_basis(u), n, m, m);
        lhs == rhs
    })
}

#[test]
fn cleaving_identities() {
    let mut cases: Vec<GroupScheme> = vec![s3(), constant_group(&Field::rationals(), &FiniteGroup::klein()).unwrap()];
    for p in [2, 3] {
        let f = Field::prime(p).unwrap();
        cases.push(ga_kernel(&f, 2).unwrap());
        cases.push(two_dim_solvable(&f).unwrap());
        cases.push(mu_p_kernel(&f).unwrap());
    }
    for g in &cases {
        for h in normal_subgroups(g, DEFAULT_LATTICE_BUDGET).unwrap() {
            cleaving_laws(g, &h);
        }
    }
}

#[test]
fn constant_cleavings_are_coalgebra_maps() {
    let g = s3();
    for h in normal_subgroups(&g, DEFAULT_LATTICE_BUDGET).unwrap() {
        let q = QuotientGroup::new(&g, &h).unwrap();
        let cl = cleaving(&g, &h, &q).unwrap();
        assert!(coalgebra_map(&g, &cl.eta));
    }
}
