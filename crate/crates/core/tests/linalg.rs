use drinfeld::group::{cleaving, ga_kernel, QuotientGroup, SubgroupScheme};
use drinfeld::linalg::{solve_affine, SparseMat, SparseTensor3, SparseVec, Subspace};
use drinfeld::{Error, Field};

#[test]
fn identity_and_zero_systems() {
    let f = Field::prime(7).unwrap();
    let b = SparseVec::from_dense(&f, &[f.from_i64(3), f.zero(), f.from_i64(5)]);
    let sol = solve_affine(&f, &SparseMat::identity(&f, 3), &b).unwrap();
    assert_eq!(sol.particular, b);
    assert_eq!(sol.kernel.dim(), 0);
    let z = solve_affine(&f, &SparseMat::zero(3, 3), &SparseVec::zero(3)).unwrap();
    assert_eq!(z.kernel.dim(), 3);
    let inconsistent = solve_affine(&f, &SparseMat::zero(3, 3), &b);
    assert!(matches!(inconsistent, Err(Error::NoSolution)));
}

#[test]
fn ga4_cleaving_at_p2_is_frobenius() {
    let f = Field::prime(2).unwrap();
    let g = ga_kernel(&f, 4).unwrap();
    let h = SubgroupScheme::frobenius_sub(&g, 1).unwrap();
    let q = QuotientGroup::new(&g, &h).unwrap();
    let cl = cleaving(&g, &h, &q).unwrap();
    for n in 0..q.index() {
        assert_eq!(*cl.gamma.col(n), SparseVec::unit(&f, g.order(), 2 * n));
    }
}

#[test]
fn subspace_lattice() {
    let f = Field::prime(2).unwrap();
    let e = |i| SparseVec::unit(&f, 4, i);
    let u = Subspace::spanned(&f, 4, [e(0), e(2)]);
    let v = Subspace::spanned(&f, 4, [e(0), e(1)]);
    assert_eq!(u.intersection(&f, &u), u);
    assert!(u.is_subspace_of(&f, &u.sum(&f, &v)));
    assert_eq!(u.intersection(&f, &v), Subspace::spanned(&f, 4, [e(0)]));
    assert_eq!(u.sum(&f, &v).dim() + u.intersection(&f, &v).dim(), u.dim() + v.dim());
}

#[test]
fn ga1_contraction_is_binomial() {
    let f = Field::prime(5).unwrap();
    let g = ga_kernel(&f, 1).unwrap();
    let t: &SparseTensor3 = g.kg.mult_tensor();
    for m in 0..5 {
        for n in 0..5 {
            let got = t.contract(&f, &g.kg.basis(m), &g.kg.basis(n));
            let want = if m + n < 5 { SparseVec::scaled_unit(&f, 5, m + n, f.binomial((m + n) as u64, m as u64)) } else { SparseVec::zero(5) };
            assert_eq!(got, want);
        }
        assert_eq!(t.contract(&f, g.kg.one(), &g.kg.basis(m)), g.kg.basis(m));
    }
}

#[test]
fn solve_is_deterministic() {
    let f = Field::prime(3).unwrap();
    let rows: Vec<Vec<_>> = [[1, 2, 0, 1], [2, 1, 0, 2]].iter().map(|r| r.iter().map(|x| f.from_i64(*x)).collect()).collect();
    let m = SparseMat::from_dense_rows(&f, &rows);
    let b = m.col(1).clone();
    let a = solve_affine(&f, &m, &b).unwrap();
    let c = solve_affine(&f, &m, &b).unwrap();
    assert_eq!(a.particular, c.particular);
    assert_eq!(a.kernel, c.kernel);
    assert_eq!(m.apply(&f, &a.particular), b);
}
