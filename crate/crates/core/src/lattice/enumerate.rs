//! Exhaustive enumeration of triples for small `G` and the Hasse diagram of
//! containment.

use rayon::prelude::*;

use super::{centralizer_triple, centralizing_witness, classify, contains, double_r21r, Flags, LatticeNode};
use crate::double::drinfeld_double;
use crate::error::{Error, Result};
use crate::group::{centralize, constant_normal_subgroups, product_subgroup, subgroup_from_generators, GroupScheme, SubgroupScheme};
use crate::hopf::{grouplikes, hopf_generators, is_hopf_morphism, AlgebraMapSearch, GeneratorKind, HopfAlgebra, PartialMap};
use crate::linalg::{solve_affine, AffineSolution, SparseMat, SparseVec, Subspace};
use crate::quotient::{build_quotient, Triple};

pub const DEFAULT_LATTICE_BUDGET: u128 = 1_000_000;

/// Nodes in a stable order with covering edges `(larger, smaller)`.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<(usize, usize)>,
}

fn span_key(s: &SubgroupScheme) -> (usize, Vec<Vec<(usize, crate::scalar::Scalar)>>) {
    (s.order(), s.span.basis().iter().map(|r| r.entries().to_vec()).collect())
}

/// Normal subgroup schemes, smallest first.  Constant groups use the Cayley
/// table; otherwise closures of single basis vectors and of sums of two are
/// joined until stable.
pub fn normal_subgroups(g: &GroupScheme, budget: u128) -> Result<Vec<SubgroupScheme>> {
    let f = g.field();
    let n = g.order();
    let mut out: Vec<SubgroupScheme> = match g.constant_group() {
        Some(grp) => constant_normal_subgroups(g, grp)?,
        None => {
            let mut seeds: Vec<SparseVec> = (0..n).map(|i| g.kg.basis(i)).collect();
            for i in 0..n {
                for j in i + 1..n {
                    seeds.push(g.kg.basis(i).add(f, &g.kg.basis(j)));
                }
            }
            if seeds.len() as u128 > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let mut found: Vec<SubgroupScheme> = vec![SubgroupScheme::trivial(g), SubgroupScheme::full(g)];
            for s in &seeds {
                let Ok(h) = subgroup_from_generators(g, std::slice::from_ref(s)) else { continue };
                if h.is_normal(g) && !found.contains(&h) {
                    found.push(h);
                }
            }
            let mut changed = true;
            while changed {
                changed = false;
                let snapshot = found.clone();
                for a in &snapshot {
                    for b in &snapshot {
                        let j = product_subgroup(g, a, b)?;
                        if !found.contains(&j) {
                            found.push(j);
                            changed = true;
                        }
                    }
                }
            }
            found
        }
    };
    out.sort_by_key(span_key);
    Ok(out)
}

fn candidates_primitive(src: &HopfAlgebra, tgt: &HopfAlgebra, state: &PartialMap, x: &SparseVec, budget: u128) -> Result<Vec<SparseVec>> {
    let f = src.field();
    let (n, m) = (src.dim(), tgt.dim());
    let d = src.comul(x).sub(f, &src.tensor(x, src.one())).sub(f, &src.tensor(src.one(), x));
    let dom = state.domain(src);
    let imgs: Vec<SparseVec> = dom.basis().iter().map(|r| state.image(src, m, r).expect("row in domain")).collect();
    let piv = dom.pivots();
    let mut rhs = SparseVec::zero(m * m);
    for (s, ps) in piv.iter().enumerate() {
        for (t, pt) in piv.iter().enumerate() {
            if let Some(c) = d.get(ps * n + pt) {
                rhs = rhs.axpy(f, c, &SparseVec::tensor(f, &imgs[s], &imgs[t]));
            }
        }
    }
    let cols = (0..m)
        .map(|j| {
            let b = tgt.basis(j);
            tgt.comul_basis(j).sub(f, &tgt.tensor(&b, tgt.one())).sub(f, &tgt.tensor(tgt.one(), &b))
        })
        .collect();
    match solve_affine(f, &SparseMat::from_columns(m * m, cols), &rhs) {
        Ok(sol) => sol.enumerate(f, budget),
        Err(Error::NoSolution) => Ok(vec![]),
        Err(e) => Err(e),
    }
}

/// All Hopf algebra maps `src → tgt`, sorted.  Generators are sent to
/// grouplikes, to solutions of the primitivity equation, or to arbitrary
/// vectors, and the resulting algebra maps are filtered for the coalgebra
/// axioms.
pub fn hopf_maps(src: &HopfAlgebra, tgt: &HopfAlgebra, budget: u128) -> Result<Vec<SparseMat>> {
    let f = src.field();
    let gens = hopf_generators(src)?;
    let needs_grouplikes = gens.iter().any(|g| g.kind == GeneratorKind::Grouplike);
    let gl = if needs_grouplikes { grouplikes(tgt, budget)? } else { vec![] };
    let search = AlgebraMapSearch {
        source: src,
        target: tgt,
        generators: gens.iter().map(|g| g.vector.clone()).collect(),
        budget,
    };
    let all = || {
        let sol = AffineSolution { particular: SparseVec::zero(tgt.dim()), kernel: Subspace::full(f, tgt.dim()) };
        sol.enumerate(f, budget)
    };
    let maps = search.run(|i, state| match gens[i].kind {
        GeneratorKind::Grouplike => Ok(gl.clone()),
        GeneratorKind::PrimitiveModLower => candidates_primitive(src, tgt, state, &gens[i].vector, budget),
        GeneratorKind::Other => all(),
    })?;
    let mut out: Vec<SparseMat> = maps.into_iter().filter(|m| is_hopf_morphism(src, tgt, m).ok).collect();
    out.sort_by(|a, b| {
        let ka: Vec<_> = a.columns().iter().map(|c| c.entries().to_vec()).collect();
        let kb: Vec<_> = b.columns().iter().map(|c| c.entries().to_vec()).collect();
        ka.cmp(&kb)
    });
    out.dedup();
    Ok(out)
}

/// Every triple `(K, H, B)` with its flags and centralizer, and the Hasse
/// diagram of containment.
pub fn enumerate_triples(g: &GroupScheme, budget: u128) -> Result<Lattice> {
    let subs = normal_subgroups(g, budget)?;
    let mut triples = Vec::new();
    for k in &subs {
        for h in &subs {
            if !centralize(g, k, h) {
                continue;
            }
            for b in hopf_maps(&h.own.kg, &k.own.og, budget)? {
                match Triple::new(g, k.clone(), h.clone(), b) {
                    Ok(t) => triples.push(t),
                    Err(Error::InvalidTriple(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let dbl = drinfeld_double(g)?;
    let rr = double_r21r(g, &dbl);
    let pairs = triples.par_iter().map(|t| build_quotient(g, t)).collect::<Result<Vec<_>>>()?;
    let flags = pairs.par_iter().map(|qp| classify(g, qp)).collect::<Result<Vec<Flags>>>()?;
    let mut nodes = Vec::with_capacity(triples.len());
    for (i, t) in triples.iter().enumerate() {
        let c = centralizer_triple(g, t)?;
        let j = triples
            .iter()
            .position(|s| *s == c)
            .ok_or_else(|| Error::Inconsistent("centralizer missing from the enumeration".into()))?;
        if let Some(w) = centralizing_witness(&dbl, &rr, &pairs[i], &pairs[j]) {
            return Err(Error::Inconsistent(w));
        }
        nodes.push(LatticeNode { triple: t.clone(), fp_dimension: t.fp_dim(g), flags: flags[i], centralizer: j });
    }
    let edges = hasse_edges(g, &triples);
    Ok(Lattice { nodes, edges })
}

/// Transitive reduction of `contains`.
pub fn hasse_edges(g: &GroupScheme, triples: &[Triple]) -> Vec<(usize, usize)> {
    let n = triples.len();
    let c: Vec<Vec<bool>> = (0..n).into_par_iter().map(|i| (0..n).map(|j| i != j && contains(g, &triples[i], &triples[j])).collect()).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if c[i][j] && !(0..n).any(|k| c[i][k] && c[k][j]) {
                out.push((i, j));
            }
        }
    }
    out
}

fn subgroup_label(g: &GroupScheme, s: &SubgroupScheme) -> String {
    if s.order() == 1 {
        return "1".into();
    }
    if s.order() == g.order() {
        return "G".into();
    }
    if s.order() <= 6 {
        let names: Vec<String> = s.span.basis().iter().map(|r| g.kg.label_of(r)).collect();
        return format!("{{{}}}", names.join(","));
    }
    format!("<{}>", s.order())
}

impl Lattice {
    pub fn node_label(&self, g: &GroupScheme, i: usize) -> String {
        let t = &self.nodes[i].triple;
        let b = if t.b_is_trivial(g) { "1".to_string() } else { format!("B{i}") };
        format!("({}, {}, {})", subgroup_label(g, &t.k), subgroup_label(g, &t.h), b)
    }

    /// Hasse diagram, larger subcategories on top.
    pub fn to_dot(&self, g: &GroupScheme) -> String {
        let mut s = String::from("digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let fl = n.flags;
            s.push_str(&format!(
                "  n{i} [label=\"{}\\nFPdim {}\", fp_dimension={}, symmetric={}, nondegenerate={}, lagrangian={}, triangular={}, factorizable={}, centralizer=n{}];\n",
                self.node_label(g, i).replace('"', "\\\""),
                n.fp_dimension,
                n.fp_dimension,
                fl.symmetric,
                fl.nondegenerate,
                fl.lagrangian,
                fl.triangular,
                fl.factorizable,
                n.centralizer
            ));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}
