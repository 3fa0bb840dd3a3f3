//! Morphism checks, convolution and Hopf generating sets.

use rayon::prelude::*;

use super::search::{generated_subalgebra, grouplikes, DEFAULT_ENUM_BUDGET};
use super::HopfAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, SparseMat, SparseVec, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCheck {
    pub ok: bool,
    pub witness: Option<String>,
}

/// Checks that `map: src → tgt` preserves product, unit, coproduct, counit
/// and antipode on every basis element.
pub fn is_hopf_morphism(src: &HopfAlgebra, tgt: &HopfAlgebra, map: &SparseMat) -> MorphismCheck {
    let fail = |w: String| MorphismCheck { ok: false, witness: Some(w) };
    if src.field() != tgt.field() {
        return fail("field mismatch".into());
    }
    if map.ncols() != src.dim() || map.nrows() != tgt.dim() {
        return fail(format!("shape {}x{} for {} -> {}", map.nrows(), map.ncols(), src.dim(), tgt.dim()));
    }
    let f = src.field();
    let n = src.dim();
    let l = src.labels();
    if map.apply(f, src.one()) != *tgt.one() {
        return fail("unit".into());
    }
    let mult = (0..n * n).into_par_iter().find_map_first(|t| {
        let (i, j) = (t / n, t % n);
        let lhs = map.apply(f, src.mul_basis(i, j));
        let rhs = tgt.mul(map.col(i), map.col(j));
        (lhs != rhs).then(|| format!("product at ({}, {})", l[i], l[j]))
    });
    if let Some(w) = mult {
        return fail(w);
    }
    for i in 0..n {
        let img = map.col(i);
        if tgt.comul(img) != HopfAlgebra::map_pair(f, src.comul_basis(i), n, map, map) {
            return fail(format!("coproduct at {}", l[i]));
        }
        if tgt.eps(img) != src.counit().coeff(f, i) {
            return fail(format!("counit at {}", l[i]));
        }
        if map.apply(f, src.antipode().col(i)) != tgt.s(img) {
            return fail(format!("antipode at {}", l[i]));
        }
    }
    MorphismCheck { ok: true, witness: None }
}

/// `(f⋆g)(c) = f(c₁)g(c₂)` for linear maps from the coalgebra `c` into the
/// algebra `a`.
pub fn convolution(c: &HopfAlgebra, a: &HopfAlgebra, fm: &SparseMat, gm: &SparseMat) -> SparseMat {
    let k = c.field();
    let n = c.dim();
    let cols = (0..n)
        .map(|i| {
            let mut acc = SparseVec::zero(a.dim());
            for (ij, coef) in c.comul_basis(i).entries() {
                acc = acc.axpy(k, coef, &a.mul(fm.col(ij / n), gm.col(ij % n)));
            }
            acc
        })
        .collect();
    SparseMat::from_columns(a.dim(), cols)
}

/// Two-sided convolution inverse, found by solving the linear system
/// `f⋆x = x⋆f = u∘ε`.
pub fn convolution_inverse(c: &HopfAlgebra, a: &HopfAlgebra, fm: &SparseMat) -> Result<SparseMat> {
    let k = c.field();
    let (dc, da) = (c.dim(), a.dim());
    let nvars = da * dc;
    let mut sys = LinearSystem::new(nvars);
    let left: Vec<Vec<SparseVec>> =
        (0..dc).map(|i| (0..da).map(|r| a.mul(fm.col(i), &a.basis(r))).collect()).collect();
    let right: Vec<Vec<SparseVec>> =
        (0..dc).map(|i| (0..da).map(|r| a.mul(&a.basis(r), fm.col(i))).collect()).collect();
    for kk in 0..dc {
        let target = a.unit_counit(&c.basis(kk));
        for side in 0..2 {
            let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); da];
            for (ij, coef) in c.comul_basis(kk).entries() {
                let (i, j) = (ij / dc, ij % dc);
                // left: f(c_i)·x(c_j); right: x(c_i)·f(c_j)
                let (fixed, var_col, table) = if side == 0 { (i, j, &left) } else { (j, i, &right) };
                for r in 0..da {
                    for (s, v) in table[fixed][r].entries() {
                        rows[*s].push((r * dc + var_col, k.mul(coef, v)));
                    }
                }
            }
            for (s, row) in rows.into_iter().enumerate() {
                sys.push(SparseVec::from_pairs(k, nvars, row), target.coeff(k, s));
            }
        }
    }
    let sol = sys.solve(k).map_err(|_| Error::NotConvolutionInvertible)?;
    let x = &sol.particular;
    let cols = (0..dc)
        .map(|j| SparseVec::from_pairs(k, da, (0..da).filter_map(|r| x.get(r * dc + j).map(|v| (r, v.clone()))).collect()))
        .collect();
    Ok(SparseMat::from_columns(da, cols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Grouplike,
    /// `Δ(g) − g⊗1 − 1⊗g` lies in `A⊗A` for the subalgebra `A` generated by
    /// the earlier generators.
    PrimitiveModLower,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfGenerator {
    pub vector: SparseVec,
    pub kind: GeneratorKind,
}

/// An algebra generating set built from grouplikes first, then elements that
/// are primitive modulo the subalgebra generated so far.
pub fn hopf_generators(h: &HopfAlgebra) -> Result<Vec<HopfGenerator>> {
    let f = h.field();
    let n = h.dim();
    let gl = grouplikes(h, DEFAULT_ENUM_BUDGET)?;
    let mut gens: Vec<HopfGenerator> = Vec::new();
    let mut span = generated_subalgebra(h, &[]);
    while span.dim() < n {
        if let Some(g) = gl.iter().find(|g| !span.contains(f, g)) {
            gens.push(HopfGenerator { vector: g.clone(), kind: GeneratorKind::Grouplike });
        } else {
            let p = primitive_mod(h, &span);
            let pick = p.basis().iter().map(|v| span.reduce(f, v)).find(|r| !r.is_zero());
            match pick {
                Some(r) => {
                    let lead = r.leading().unwrap().1.clone();
                    let g = r.scale(f, &f.inv(&lead)?);
                    gens.push(HopfGenerator { vector: g, kind: GeneratorKind::PrimitiveModLower });
                }
                None => {
                    let i = span.non_pivots()[0];
                    gens.push(HopfGenerator { vector: h.basis(i), kind: GeneratorKind::Other });
                }
            }
        }
        let vs: Vec<SparseVec> = gens.iter().map(|g| g.vector.clone()).collect();
        span = generated_subalgebra(h, &vs);
    }
    Ok(gens)
}

/// `{x : Δ(x) − x⊗1 − 1⊗x ∈ A⊗A}`.
fn primitive_mod(h: &HopfAlgebra, a: &Subspace) -> Subspace {
    let f = h.field();
    let n = h.dim();
    let ann = a.annihilator(f);
    let d: Vec<SparseVec> = (0..n)
        .map(|i| {
            let b = h.basis(i);
            h.comul_basis(i).sub(f, &h.tensor(&b, h.one())).sub(f, &h.tensor(h.one(), &b))
        })
        .collect();
    let mut sys = LinearSystem::new(n);
    for alpha in ann.basis() {
        for j in 0..n {
            let left = (0..n)
                .filter_map(|i| {
                    let s = alpha.entries().iter().fold(f.zero(), |acc, (a_idx, c)| {
                        f.add(&acc, &f.mul(c, &d[i].coeff(f, a_idx * n + j)))
                    });
                    (!f.is_zero(&s)).then_some((i, s))
                })
                .collect();
            sys.push(SparseVec::from_pairs(f, n, left), f.zero());
            let right = (0..n)
                .filter_map(|i| {
                    let s = alpha.entries().iter().fold(f.zero(), |acc, (a_idx, c)| {
                        f.add(&acc, &f.mul(c, &d[i].coeff(f, j * n + a_idx)))
                    });
                    (!f.is_zero(&s)).then_some((i, s))
                })
                .collect();
            sys.push(SparseVec::from_pairs(f, n, right), f.zero());
        }
    }
    sys.solve(f).expect("homogeneous").kernel
}
