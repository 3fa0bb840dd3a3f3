//! Axiom checks on structure constants, reporting the first violating basis
//! tuple for each failed axiom.

use rayon::prelude::*;
use serde::Serialize;

use super::HopfAlgebra;
use crate::linalg::SparseVec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
    pub commutative: bool,
    pub cocommutative: bool,
    pub involutive: bool,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            s.push_str(&format!("{mark} {}", c.axiom));
            if let Some(w) = &c.witness {
                s.push_str(&format!("  [{w}]"));
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "commutative={} cocommutative={} involutive={}\n",
            self.commutative, self.cocommutative, self.involutive
        ));
        s
    }
}

/// A named list of checks, used for structures beyond the Hopf axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckList {
    pub checks: Vec<AxiomCheck>,
}

impl CheckList {
    pub fn push(&mut self, axiom: &'static str, witness: Option<String>) {
        self.checks.push(check(axiom, witness));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                match &c.witness {
                    Some(w) => format!("{mark} {}  [{w}]\n", c.axiom),
                    None => format!("{mark} {}\n", c.axiom),
                }
            })
            .collect()
    }
}

pub fn check(axiom: &'static str, witness: Option<String>) -> AxiomCheck {
    AxiomCheck { axiom, passed: witness.is_none(), witness }
}

pub fn verify_hopf(h: &HopfAlgebra) -> VerificationReport {
    verify_hopf_sampled(h, usize::MAX)
}

/// Like [`verify_hopf`], but associativity looks at no more than
/// `max_triples` basis triples, taken with a fixed stride.
pub fn verify_hopf_sampled(h: &HopfAlgebra, max_triples: usize) -> VerificationReport {
    let n = h.dim();
    let f = h.field();
    let l = h.labels();
    let total = n * n * n;
    let stride = if total <= max_triples { 1 } else { total.div_ceil(max_triples) };

    let assoc = (0..total).into_par_iter().step_by(stride).find_map_first(|t| {
        let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
        let left = h.mul(h.mul_basis(i, j), &h.basis(k));
        let right = h.mul(&h.basis(i), h.mul_basis(j, k));
        (left != right).then(|| format!("({}·{})·{} ≠ {}·({}·{})", l[i], l[j], l[k], l[i], l[j], l[k]))
    });

    let unit = (0..n).find_map(|i| {
        let b = h.basis(i);
        (h.mul(h.one(), &b) != b || h.mul(&b, h.one()) != b).then(|| format!("1·{0} or {0}·1", l[i]))
    });

    let coassoc = (0..n).into_par_iter().find_map_first(|i| {
        let d = h.comul_basis(i);
        (h.comul_left(d) != h.comul_right(d)).then(|| format!("Δ at {}", l[i]))
    });

    let counit = (0..n).find_map(|i| {
        let d = h.comul_basis(i);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (ab, c) in d.entries() {
            let (a, b) = (ab / n, ab % n);
            left.push((b, f.mul(c, &h.counit().coeff(f, a))));
            right.push((a, f.mul(c, &h.counit().coeff(f, b))));
        }
        let b = h.basis(i);
        (SparseVec::from_pairs(f, n, left) != b || SparseVec::from_pairs(f, n, right) != b)
            .then(|| format!("(ε⊗id)Δ or (id⊗ε)Δ at {}", l[i]))
    });

    let bialg = (0..n * n).into_par_iter().find_map_first(|t| {
        let (i, j) = (t / n, t % n);
        let lhs = h.comul(h.mul_basis(i, j));
        let rhs = h.mul_tensor(2, h.comul_basis(i), h.comul_basis(j));
        if lhs != rhs {
            return Some(format!("Δ({}·{}) ≠ Δ({})Δ({})", l[i], l[j], l[i], l[j]));
        }
        let e = h.eps(h.mul_basis(i, j));
        let e2 = f.mul(&h.counit().coeff(f, i), &h.counit().coeff(f, j));
        (e != e2).then(|| format!("ε({}·{})", l[i], l[j]))
    });
    let bialg = bialg.or_else(|| {
        (h.comul(h.one()) != h.one_tensor(2) || !f.is_one(&h.eps(h.one()))).then(|| "Δ(1) or ε(1)".to_string())
    });

    let antipode = (0..n).into_par_iter().find_map_first(|i| {
        let d = h.comul_basis(i);
        let mut left = SparseVec::zero(n);
        let mut right = SparseVec::zero(n);
        for (ab, c) in d.entries() {
            let (a, b) = (ab / n, ab % n);
            left = left.axpy(f, c, &h.mul(h.antipode().col(a), &h.basis(b)));
            right = right.axpy(f, c, &h.mul(&h.basis(a), h.antipode().col(b)));
        }
        let target = h.unit_counit(&h.basis(i));
        (left != target || right != target).then(|| format!("S(x₁)x₂ or x₁S(x₂) at {}", l[i]))
    });

    let commutative = (0..n * n).into_par_iter().all(|t| h.mul_basis(t / n, t % n) == h.mul_basis(t % n, t / n));
    let cocommutative = (0..n).all(|i| h.flip(h.comul_basis(i)) == *h.comul_basis(i));
    let involutive = (0..n).all(|i| h.s(h.antipode().col(i)) == h.basis(i));

    VerificationReport {
        checks: vec![
            check("associativity", assoc),
            check("unit", unit),
            check("coassociativity", coassoc),
            check("counit", counit),
            check("bialgebra", bialg),
            check("antipode", antipode),
        ],
        commutative,
        cocommutative,
        involutive,
    }
}
