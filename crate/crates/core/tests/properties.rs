use drinfeld::double::drinfeld_double;
use drinfeld::group::{constant_group, ga_kernel, two_dim_solvable, FiniteGroup};
use drinfeld::hopf::{convolution, HopfAlgebra};
use drinfeld::io::{hopf_from_json, hopf_to_json, triple_from_json, triple_to_json};
use drinfeld::lattice::{enumerate_triples, DEFAULT_LATTICE_BUDGET};
use drinfeld::linalg::{SparseMat, SparseTensor3, SparseVec, Subspace};
use drinfeld::{Field, Scalar};
use proptest::prelude::*;
use serde_json::Value;

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(7).unwrap(),
        Field::galois(2, 2).unwrap(),
        Field::galois(3, 2).unwrap(),
        Field::galois(5, 3).unwrap(),
        Field::rationals(),
    ]
}

fn pick(f: &Field, n: i64) -> Scalar {
    match f.elements() {
        Some(es) => es[n.unsigned_abs() as usize % es.len()].clone(),
        None => f.div(&f.from_i64(n), &f.from_i64(n % 7 + 8)).unwrap(),
    }
}

fn random_vec(f: &Field, dim: usize, coeffs: &[i64]) -> SparseVec {
    SparseVec::from_dense(f, &(0..dim).map(|i| pick(f, coeffs[i % coeffs.len()] * (i as i64 + 1))).collect::<Vec<_>>())
}

/// Re-emits JSON with every object's keys in a seed dependent order.
fn shuffled(v: &Value, seed: u64) -> String {
    match v {
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            let mut s = seed;
            for i in (1..keys.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                keys.swap(i, (s >> 33) as usize % (i + 1));
            }
            let parts: Vec<String> = keys.iter().map(|k| format!("{}:{}", Value::String((*k).clone()), shuffled(&m[*k], seed ^ 0x9e37))).collect();
            format!("{{{}}}", parts.join(","))
        }
        Value::Array(a) => format!("[{}]", a.iter().map(|x| shuffled(x, seed.rotate_left(7))).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

fn algebras() -> Vec<HopfAlgebra> {
    let f3 = Field::prime(3).unwrap();
    let z2 = constant_group(&Field::rationals(), &FiniteGroup::cyclic(2)).unwrap();
    vec![
        z2.kg.clone(),
        constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap().og,
        ga_kernel(&f3, 2).unwrap().kg,
        two_dim_solvable(&f3).unwrap().kg,
        drinfeld_double(&z2).unwrap().d,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(fi in 0usize..6, a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let f = &fields()[fi];
        let (a, b, c) = (pick(f, a), pick(f, b), pick(f, c));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        prop_assert_eq!(f.parse_scalar(&f.format(&a)).unwrap(), a.clone());
        prop_assert_eq!(f.from_json(&f.to_json(&a)).unwrap(), a);
    }

    #[test]
    fn frobenius_is_additive(fi in 0usize..5, a in 0i64..200, b in 0i64..200) {
        let f = &fields()[fi];
        let (a, b) = (pick(f, a), pick(f, b));
        prop_assert_eq!(f.frobenius(&f.add(&a, &b)), f.add(&f.frobenius(&a), &f.frobenius(&b)));
    }

    #[test]
    fn lucas(pi in 0usize..4, m in 0u64..400, n in 0u64..400) {
        let p = [2u64, 3, 5, 7][pi];
        let f = Field::prime(p as u32).unwrap();
        let small = |a: u64, b: u64| -> u64 {
            if b > a { return 0; }
            let mut c = 1u64;
            for i in 0..b { c = c * (a - i) / (i + 1); }
            c % p
        };
        let (mut x, mut y, mut want) = (m, n, 1u64);
        while x > 0 || y > 0 {
            want = want * small(x % p, y % p) % p;
            x /= p;
            y /= p;
        }
        prop_assert_eq!(f.binomial(m, n), f.from_i64(want as i64));
    }

    #[test]
    fn subspace_dimension_formula(fi in 0usize..6, u in prop::collection::vec(-9i64..9, 1..24), v in prop::collection::vec(-9i64..9, 1..24), nu in 0usize..4, nv in 0usize..4) {
        let f = &fields()[fi];
        let dim = 5;
        let gens = |c: &[i64], k: usize, salt: i64| (0..k).map(|j| random_vec(f, dim, &c.iter().map(|x| x * (j as i64 + salt)).collect::<Vec<_>>())).collect::<Vec<_>>();
        let su = Subspace::spanned(f, dim, gens(&u, nu, 1));
        let sv = Subspace::spanned(f, dim, gens(&v, nv, 3));
        let sum = su.sum(f, &sv);
        let cap = su.intersection(f, &sv);
        prop_assert_eq!(sum.dim() + cap.dim(), su.dim() + sv.dim());
        prop_assert!(cap.is_subspace_of(f, &su) && cap.is_subspace_of(f, &sv));
        prop_assert!(su.is_subspace_of(f, &sum) && sv.is_subspace_of(f, &sum));
    }

    #[test]
    fn sparse_contraction_matches_dense(fi in 0usize..6, cs in prop::collection::vec(-9i64..9, 8..40), a in prop::collection::vec(-9i64..9, 3), b in prop::collection::vec(-9i64..9, 4)) {
        let f = &fields()[fi];
        let (n1, n2, n3) = (3, 4, 5);
        let entry = |i: usize, j: usize, k: usize| pick(f, cs[(i * 31 + j * 7 + k) % cs.len()] * ((i + j + k) as i64 % 3));
        let t = SparseTensor3::from_fn((n1, n2, n3), |i, j| SparseVec::from_dense(f, &(0..n3).map(|k| entry(i, j, k)).collect::<Vec<_>>()));
        let av: Vec<Scalar> = a.iter().map(|x| pick(f, *x)).collect();
        let bv: Vec<Scalar> = b.iter().map(|x| pick(f, *x)).collect();
        let mut dense = vec![f.zero(); n3];
        for i in 0..n1 {
            for j in 0..n2 {
                for (k, d) in dense.iter_mut().enumerate() {
                    *d = f.add(d, &f.mul(&f.mul(&av[i], &bv[j]), &entry(i, j, k)));
                }
            }
        }
        let got = t.contract(f, &SparseVec::from_dense(f, &av), &SparseVec::from_dense(f, &bv));
        prop_assert_eq!(got.dense(f), dense);
    }

    #[test]
    fn convolution_monoid(cs in prop::collection::vec(0i64..7, 36), ds in prop::collection::vec(0i64..7, 36), es in prop::collection::vec(0i64..7, 36)) {
        let f = Field::prime(7).unwrap();
        let h = constant_group(&f, &FiniteGroup::symmetric3()).unwrap().kg;
        let n = h.dim();
        let mat = |c: &[i64]| SparseMat::from_dense_rows(&f, &(0..n).map(|i| (0..n).map(|j| f.from_i64(c[i * n + j])).collect()).collect::<Vec<_>>());
        let (a, b, c) = (mat(&cs), mat(&ds), mat(&es));
        let unit = SparseMat::from_columns(n, (0..n).map(|j| h.one().scale(&f, &h.counit().coeff(&f, j))).collect());
        prop_assert_eq!(convolution(&h, &h, &convolution(&h, &h, &a, &b), &c), convolution(&h, &h, &a, &convolution(&h, &h, &b, &c)));
        prop_assert_eq!(convolution(&h, &h, &unit, &a), a.clone());
        prop_assert_eq!(convolution(&h, &h, &a, &unit), a);
    }

    #[test]
    fn hopf_json_round_trip(which in 0usize..5, seed in any::<u64>()) {
        let h = &algebras()[which];
        let v = hopf_to_json(h);
        let back = hopf_from_json(h.field(), &v).unwrap();
        prop_assert_eq!(&back, h);
        prop_assert_eq!(hopf_to_json(&back).to_string(), v.to_string());
        let reordered: Value = serde_json::from_str(&shuffled(&v, seed)).unwrap();
        prop_assert_eq!(&hopf_from_json(h.field(), &reordered).unwrap(), h);
    }

    #[test]
    fn triple_json_round_trip(seed in any::<u64>()) {
        let g = constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap();
        let lat = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET).unwrap();
        let t = &lat.nodes[seed as usize % lat.nodes.len()].triple;
        let v = triple_to_json(&g, t);
        prop_assert_eq!(&triple_from_json(&g, &v).unwrap(), t);
        let reordered: Value = serde_json::from_str(&shuffled(&v, seed)).unwrap();
        prop_assert_eq!(&triple_from_json(&g, &reordered).unwrap(), t);
    }
}
