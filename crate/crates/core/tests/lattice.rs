use std::collections::BTreeMap;

use drinfeld::group::{constant_group, ga_kernel, FiniteGroup, GroupScheme};
use drinfeld::lattice::{block_data, centralizer_triple, contains, enumerate_triples, hopf_maps, intersect, Lattice, DEFAULT_LATTICE_BUDGET};
use drinfeld::quotient::{build_quotient, Triple};
use drinfeld::Field;

mod common;
use common::*;

fn library_count(g: &GroupScheme) -> (usize, usize) {
    let lat = enumerate_triples(g, DEFAULT_LATTICE_BUDGET).unwrap();
    let nt = lat.nodes.iter().filter(|n| !n.triple.b_is_trivial(g)).count();
    (lat.nodes.len(), nt)
}

#[test]
fn constant_group_counts() {
    let q = Field::rationals();
    let f7 = Field::prime(7).unwrap();
    let f2 = Field::prime(2).unwrap();
    let sign = fp_units(3);
    let cases: Vec<(GroupScheme, Vec<Vec<usize>>, Vec<Vec<usize>>, usize)> = vec![
        (constant_group(&q, &FiniteGroup::cyclic(2)).unwrap(), cyclic_table(2), sign.clone(), 5),
        (constant_group(&f7, &FiniteGroup::cyclic(3)).unwrap(), cyclic_table(3), fp_units(7), 6),
        (constant_group(&f7, &FiniteGroup::symmetric3()).unwrap(), s3_table(), fp_units(7), 8),
        (constant_group(&q, &FiniteGroup::klein()).unwrap(), klein_table(), sign, 67),
        (constant_group(&f2, &FiniteGroup::klein()).unwrap(), klein_table(), fp_units(2), 25),
    ];
    for (g, table, units, want) in cases {
        let oracle = brute_force_count(&table, &units);
        assert_eq!(oracle.0, want);
        assert_eq!(library_count(&g), oracle);
    }
}

#[test]
fn ga1_hopf_maps() {
    for p in [2u32, 3] {
        let f = Field::prime(p).unwrap();
        let g = ga_kernel(&f, 1).unwrap();
        let oracle = ga1_maps_brute_force(p as u64);
        assert_eq!(oracle.len(), p as usize);
        let lib = hopf_maps(&g.kg, &g.og, DEFAULT_LATTICE_BUDGET).unwrap();
        let mut got: Vec<Vec<Vec<u64>>> = lib
            .iter()
            .map(|m| (0..p as usize).map(|c| (0..p as usize).map(|r| f.format(&m.entry(&f, r, c)).parse().unwrap()).collect()).collect())
            .collect();
        got.sort();
        assert_eq!(got, oracle);
        assert_eq!(library_count(&g).0, p as usize + 3);
    }
}

fn lattices() -> Vec<(GroupScheme, Lattice)> {
    let f3 = Field::prime(3).unwrap();
    let gs = vec![
        constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap(),
        constant_group(&Field::prime(7).unwrap(), &FiniteGroup::cyclic(3)).unwrap(),
        ga_kernel(&f3, 1).unwrap(),
        ga_kernel(&Field::prime(2).unwrap(), 2).unwrap(),
    ];
    gs.into_iter().map(|g| {
        let l = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET).unwrap();
        (g, l)
    })
    .collect()
}

#[test]
fn centralizers_and_order() {
    for (g, lat) in lattices() {
        let ts: Vec<&Triple> = lat.nodes.iter().map(|n| &n.triple).collect();
        let n2 = g.order() * g.order();
        for (i, node) in lat.nodes.iter().enumerate() {
            let c = centralizer_triple(&g, &node.triple).unwrap();
            assert_eq!(*ts[node.centralizer], c);
            assert_eq!(centralizer_triple(&g, &c).unwrap(), node.triple);
            assert_eq!(lat.nodes[node.centralizer].centralizer, i);
            assert_eq!(node.fp_dimension * lat.nodes[node.centralizer].fp_dimension, n2);
            assert!(node.flags.agree());
            if node.flags.lagrangian {
                assert_eq!(node.triple.k, node.triple.h);
                assert!(drinfeld::hopf::verify_hopf(&node.triple.k.own.kg).commutative);
            }
        }
        for a in &ts {
            assert!(contains(&g, a, a));
            for b in &ts {
                if a != b && contains(&g, a, b) {
                    assert!(!contains(&g, b, a));
                }
                for c in &ts {
                    if contains(&g, a, b) && contains(&g, b, c) {
                        assert!(contains(&g, a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn intersections() {
    for (g, lat) in lattices() {
        let ts: Vec<&Triple> = lat.nodes.iter().map(|n| &n.triple).collect();
        for a in &ts {
            assert_eq!(intersect(&g, a, a).unwrap(), **a);
            for b in &ts {
                let m = intersect(&g, a, b).unwrap();
                assert_eq!(m, intersect(&g, b, a).unwrap());
                assert!(contains(&g, a, &m) && contains(&g, b, &m));
                for c in &ts {
                    if contains(&g, a, c) && contains(&g, b, c) {
                        assert!(contains(&g, &m, c));
                    }
                }
                if contains(&g, a, b) {
                    assert_eq!(m, **b);
                }
            }
        }
    }
}

#[test]
fn enumeration_is_stable() {
    let g = constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap();
    let a = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET).unwrap();
    let b = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET).unwrap();
    assert_eq!(a.to_dot(&g), b.to_dot(&g));
    assert_eq!(a.to_dot(&g).matches("fp_dimension=").count(), 8);
    let klein = constant_group(&Field::rationals(), &FiniteGroup::klein()).unwrap();
    assert!(matches!(enumerate_triples(&klein, 10), Err(drinfeld::Error::BudgetExceeded { .. })));
}

#[test]
fn s3_blocks() {
    let g = constant_group(&Field::prime(7).unwrap(), &FiniteGroup::symmetric3()).unwrap();
    let lat = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET).unwrap();
    let mut seen = BTreeMap::new();
    for node in &lat.nodes {
        let t = &node.triple;
        let qp = build_quotient(&g, t).unwrap();
        let blocks = block_data(&g, &qp).unwrap();
        assert!(blocks.iter().all(|b| b.checks.all_passed()));
        let mut dims: Vec<usize> = blocks.iter().map(|b| b.block_fp_dimension).collect();
        dims.sort();
        assert_eq!(dims.iter().sum::<usize>(), node.fp_dimension);
        seen.insert((t.k.order(), t.h.order(), t.b_is_trivial(&g)), dims);
    }
    assert_eq!(seen[&(6, 1, true)], vec![6, 12, 18]);
    assert_eq!(seen[&(1, 1, true)], vec![6]);
    assert_eq!(seen[&(3, 3, false)], vec![2, 4]);
    assert_eq!(seen[&(3, 3, true)], vec![2, 4]);
}

#[test]
fn generator_oracle_agrees() {
    for p in [2u64, 3] {
        assert_eq!(ga1_maps_from_generator(p), ga1_maps_brute_force(p));
    }
    assert_eq!(ga1_maps_from_generator(5).len(), 5);
}
