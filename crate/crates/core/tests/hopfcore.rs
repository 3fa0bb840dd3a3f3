use drinfeld::group::{constant_group, ga_kernel, mu_p_kernel, FiniteGroup};
use drinfeld::hopf::{convolution, convolution_inverse, grouplikes, is_hopf_morphism, verify_hopf, HopfAlgebra, Variant};
use drinfeld::linalg::{SparseMat, SparseTensor3, SparseVec};
use drinfeld::Field;

const BUDGET: u128 = 10_000_000;

#[test]
fn ga2_at_p3_passes_all_axioms() {
    let f = Field::prime(3).unwrap();
    let g = ga_kernel(&f, 2).unwrap();
    let r = verify_hopf(&g.kg);
    assert!(r.all_passed());
    assert!(r.cocommutative && r.involutive);
}

#[test]
fn corrupted_multiplication_is_caught() {
    let f = Field::prime(3).unwrap();
    let g = ga_kernel(&f, 1).unwrap();
    let h = &g.kg;
    let n = h.dim();
    let mult = SparseTensor3::from_fn((n, n, n), |i, j| {
        if (i, j) == (1, 1) {
            SparseVec::unit(&f, n, 0)
        } else {
            h.mul_basis(i, j).clone()
        }
    });
    let bad = HopfAlgebra::new(f.clone(), h.labels().to_vec(), mult, h.one().clone(), h.comult_table().to_vec(), h.counit().clone(), h.antipode().clone()).unwrap();
    let r = verify_hopf(&bad);
    let fail = r.failures();
    assert!(fail.iter().any(|c| c.axiom == "associativity" && c.witness.is_some()));
}

#[test]
fn duals_and_variants() {
    let f = Field::prime(3).unwrap();
    let g = ga_kernel(&f, 1).unwrap();
    let d = g.og.dual();
    for m in 0..3 {
        for n in 0..3 {
            let want = if m + n < 3 { SparseVec::scaled_unit(&f, 3, m + n, f.binomial((m + n) as u64, m as u64)) } else { SparseVec::zero(3) };
            assert_eq!(*d.mul_basis(m, n), want);
        }
    }
    let dd = g.kg.dual().dual();
    assert_eq!(dd.mult_tensor(), g.kg.mult_tensor());
    assert_eq!(dd.comult_table(), g.kg.comult_table());
    assert_eq!(g.og.variant(Variant::Cop).unwrap().comult_table(), g.og.comult_table());
    let s3 = constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap();
    let cc = s3.og.variant(Variant::Cop).unwrap().variant(Variant::Cop).unwrap();
    assert_eq!(cc, s3.og);
}

#[test]
fn dual_of_z2_is_functions() {
    let f = Field::rationals();
    let g = constant_group(&f, &FiniteGroup::cyclic(2)).unwrap();
    let d = g.kg.dual();
    for i in 0..2 {
        for j in 0..2 {
            let want = if i == j { SparseVec::unit(&f, 2, i) } else { SparseVec::zero(2) };
            assert_eq!(*d.mul_basis(i, j), want);
        }
    }
    assert_eq!(*d.one(), SparseVec::from_dense(&f, &[f.one(), f.one()]));
}

#[test]
fn tensor_products() {
    let f = Field::prime(7).unwrap();
    let a = constant_group(&f, &FiniteGroup::cyclic(2)).unwrap();
    let b = constant_group(&f, &FiniteGroup::cyclic(3)).unwrap();
    let t = HopfAlgebra::tensor_hopf(&a.kg, &b.kg).unwrap();
    assert_eq!(t.dim(), 6);
    assert_eq!(*t.one(), SparseVec::unit(&f, 6, 0));
    let prod = constant_group(&f, &FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3))).unwrap();
    assert_eq!(t.mult_tensor(), prod.kg.mult_tensor());
    assert!(verify_hopf(&t).all_passed());
}

#[test]
fn morphisms() {
    let f = Field::prime(3).unwrap();
    let g2 = ga_kernel(&f, 2).unwrap();
    let g1 = ga_kernel(&f, 1).unwrap();
    // t ↦ t, t^i ↦ t^i, t^i ↦ 0 for i ≥ 3
    let q = SparseMat::from_columns(3, (0..9).map(|i| if i < 3 { SparseVec::unit(&f, 3, i) } else { SparseVec::zero(3) }).collect());
    assert!(is_hopf_morphism(&g2.og, &g1.og, &q).ok);
    let gamma = SparseMat::from_columns(9, (0..3).map(|n| SparseVec::unit(&f, 9, 3 * n)).collect());
    let chk = is_hopf_morphism(&g1.kg, &g2.kg, &gamma);
    assert!(!chk.ok && chk.witness.is_some());
    assert!(is_hopf_morphism(&g2.kg, &g2.kg, &SparseMat::identity(&f, 9)).ok);
}

#[test]
fn convolution_inverses() {
    let f = Field::prime(3).unwrap();
    let g = ga_kernel(&f, 2).unwrap();
    let h = &g.kg;
    let gamma = SparseMat::from_columns(9, (0..3).map(|n| SparseVec::unit(&f, 9, 3 * n)).collect());
    // k[𝔾_{a,2}/𝔾_{a,1}] ≅ k[𝔾_{a,1}] as coalgebras
    let c = ga_kernel(&f, 1).unwrap().kg;
    let inv = convolution_inverse(&c, h, &gamma).unwrap();
    for n in 0..3 {
        let s = if n % 2 == 0 { f.one() } else { f.from_i64(-1) };
        assert_eq!(*inv.col(n), SparseVec::scaled_unit(&f, 9, 3 * n, s));
    }
    let ue = SparseMat::from_columns(9, (0..3).map(|n| h.one().scale(&f, &c.counit().coeff(&f, n))).collect());
    assert_eq!(convolution(&c, h, &gamma, &inv), ue);
    let eta: SparseMat = SparseMat::from_columns(9, (0..9).map(|n| if n < 3 { SparseVec::unit(&f, 9, n) } else { SparseVec::zero(9) }).collect());
    let eta_inv = convolution_inverse(h, h, &eta).unwrap();
    for n in 0..9 {
        let want = if n < 3 { SparseVec::scaled_unit(&f, 9, n, if n % 2 == 0 { f.one() } else { f.from_i64(-1) }) } else { SparseVec::zero(9) };
        assert_eq!(*eta_inv.col(n), want);
    }
    let ue9 = SparseMat::from_columns(9, (0..9).map(|n| h.one().scale(&f, &h.counit().coeff(&f, n))).collect());
    assert_eq!(convolution_inverse(h, h, &ue9).unwrap(), ue9);
}

#[test]
fn grouplike_elements() {
    let f = Field::prime(7).unwrap();
    let z3 = constant_group(&f, &FiniteGroup::cyclic(3)).unwrap();
    let gl = grouplikes(&z3.kg, BUDGET).unwrap();
    assert_eq!(gl, (0..3).map(|i| z3.kg.basis(i)).collect::<Vec<_>>());
    let chars = grouplikes(&z3.og, BUDGET).unwrap();
    assert_eq!(chars.len(), 3);
    let roots = [f.one(), f.from_i64(2), f.from_i64(4)];
    for c in &chars {
        assert!(c.dense(&f).iter().all(|x| roots.contains(x)));
    }
    for p in [2, 3] {
        let fp = Field::prime(p).unwrap();
        let g = ga_kernel(&fp, 1).unwrap();
        assert_eq!(grouplikes(&g.kg, BUDGET).unwrap(), vec![g.kg.basis(0)]);
        let mu = mu_p_kernel(&fp).unwrap();
        let gl = grouplikes(&mu.og, BUDGET).unwrap();
        assert_eq!(gl.len(), p as usize);
        assert!(gl.iter().all(|x| x.nnz() == 1));
    }
}
