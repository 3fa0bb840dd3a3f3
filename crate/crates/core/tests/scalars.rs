use drinfeld::scalar::default_modulus;
use drinfeld::{Field, Scalar};

fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    for m in 0..=n {
        t[m][0] = 1;
        for k in 1..=m {
            t[m][k] = t[m - 1][k - 1] + if k <= m - 1 { t[m - 1][k] } else { 0 };
        }
    }
    t
}

#[test]
fn constructors() {
    assert_eq!(Field::prime(2).unwrap().characteristic(), 2);
    assert_eq!(Field::rationals().characteristic(), 0);
    assert!(Field::prime(9).is_err());
    for s in ["p7", "F7", "7"] {
        assert_eq!(Field::parse(s).unwrap(), Field::prime(7).unwrap());
    }
    assert_eq!(Field::parse("q").unwrap(), Field::rationals());
    assert_eq!(Field::parse("p2^2").unwrap().order(), Some(4));
}

#[test]
fn f7_units_are_cyclic_of_order_six() {
    let f = Field::prime(7).unwrap();
    let orders: Vec<u64> = (1..7)
        .map(|a| {
            let x = f.from_i64(a);
            (1..=6).find(|e| f.is_one(&f.pow(&x, *e))).unwrap()
        })
        .collect();
    assert!(orders.contains(&6));
    assert_eq!(orders.iter().filter(|o| **o == 6).count(), 2);
}

#[test]
fn binomials_and_factorials() {
    let f2 = Field::prime(2).unwrap();
    assert!(f2.is_zero(&f2.binomial(2, 1)));
    let q = Field::rationals();
    assert_eq!(q.binomial(4, 2), q.from_i64(6));
    let f5 = Field::prime(5).unwrap();
    assert!(f5.is_one(&f5.factorial(0)));
    assert!(f5.is_one(&f5.factorial(3)));
    for p in [3u32, 5] {
        let f = Field::prime(p).unwrap();
        assert_eq!(f.factorial(p as u64 - 1), f.from_i64(p as i64 - 1));
    }
}

#[test]
fn lucas_agrees_with_pascal() {
    for p in [2u32, 3, 5, 7] {
        let f = Field::prime(p).unwrap();
        let n = (p * p) as usize;
        let t = pascal(n);
        for m in 0..n {
            for k in 0..=m {
                assert_eq!(f.binomial(m as u64, k as u64), f.from_i64((t[m][k] % p as u64) as i64), "p={p} C({m},{k})");
            }
        }
    }
}

#[test]
fn lucas_digit_shift() {
    for p in [2u64, 3, 5] {
        let f = Field::prime(p as u32).unwrap();
        for r in 0..p {
            for s in 0..p {
                for i in 0..=s {
                    assert_eq!(f.binomial(r + p * s, r + p * i), f.binomial(s, i));
                }
            }
        }
    }
}

fn check_axioms(f: &Field, elems: &[Scalar]) {
    let (z, o) = (f.zero(), f.one());
    for a in elems {
        assert_eq!(f.add(a, &z), *a);
        assert_eq!(f.mul(a, &o), *a);
        assert!(f.is_zero(&f.add(a, &f.neg(a))));
        if !f.is_zero(a) {
            assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
        }
        for b in elems {
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            for c in elems.iter().step_by(3) {
                assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
            }
        }
    }
}

#[test]
fn field_axioms_on_small_fields() {
    for (p, k) in [(2, 1), (7, 1), (2, 2), (3, 2), (7, 2), (2, 3), (5, 2)] {
        let f = Field::galois(p, k).unwrap();
        assert_eq!(f.order(), Some((p as u64).pow(k)));
        check_axioms(&f, &f.elements().unwrap());
    }
}

#[test]
fn builtin_moduli_exist() {
    for p in [2u32, 3, 5, 7] {
        for k in 1..=3 {
            let m = default_modulus(p, k);
            assert!(Field::extension(p, m).is_ok(), "p={p} k={k}");
        }
    }
}

#[test]
fn canonical_representatives() {
    let q = Field::rationals();
    let x = q.div(&q.from_i64(4), &q.from_i64(-6)).unwrap();
    assert_eq!(q.format(&x), "-2/3");
    let f = Field::prime(5).unwrap();
    assert_eq!(f.format(&f.from_i64(-1)), "4");
    assert_eq!(f.parse_scalar("-1").unwrap(), f.from_i64(4));
}
