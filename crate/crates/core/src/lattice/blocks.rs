//! Block decomposition data of `𝒵(K,H,B)` over a constant group.

use crate::error::{Error, Result};
use crate::group::GroupScheme;
use crate::hopf::CheckList;
use crate::linalg::SparseVec;
use crate::quotient::{pivot_coords, QuotientPair};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct BlockData {
    pub representative: usize,
    pub conjugacy_class: Vec<usize>,
    /// `G_g`, the centralizer of the representative.
    pub centralizer_group: Vec<usize>,
    /// `B_g(v) = ⟨B(v), g⟩` on the basis of `k[H]`.
    pub character: Vec<Scalar>,
    /// Basis indices of `k[G/H]` lying in `k[G_g/H]`.
    pub cosets: Vec<usize>,
    /// `ψ_g(x, y) = ⟨σ(x, y), g⟩` at `i·|cosets| + j`.
    pub twist: Vec<Scalar>,
    pub block_fp_dimension: usize,
    pub checks: CheckList,
}

/// One block per conjugacy class of `G` inside `K`.
pub fn block_data(g: &GroupScheme, qp: &QuotientPair) -> Result<Vec<BlockData>> {
    let grp = g.constant_group().ok_or(Error::NotConstant)?;
    let f = g.field();
    let n = g.order();
    let t = &qp.triple;
    let q = &qp.quotient;
    let m = q.index();
    let k_elems: Vec<usize> = t.k.span.pivots().to_vec();
    let coords_h = pivot_coords(f, &t.h, n);
    let kq = &q.own.kg;
    let mut out = Vec::new();
    for class in grp.conjugacy_classes() {
        if !class.iter().all(|x| k_elems.contains(x)) {
            continue;
        }
        let rep = class[0];
        let pos = k_elems.iter().position(|x| *x == rep).unwrap();
        let cent = grp.centralizer(rep);
        let character: Vec<Scalar> = (0..t.h.order()).map(|i| t.b.entry(f, pos, i)).collect();
        let bg = |v: &SparseVec| -> Scalar {
            coords_h.apply(f, v).entries().iter().fold(f.zero(), |acc, (i, c)| f.add(&acc, &f.mul(c, &character[*i])))
        };
        let cosets: Vec<usize> = (0..m).filter(|c| cent.contains(&q.reps[*c])).collect();
        let psi = |x: usize, y: usize| qp.sigma[x * m + y].coeff(f, pos);
        let twist = cosets.iter().flat_map(|x| cosets.iter().map(move |y| (*x, *y))).map(|(x, y)| psi(x, y)).collect();

        let mut checks = CheckList::default();
        let mut inv = None;
        'outer: for u in &cent {
            let su = g.kg.s(&g.kg.basis(*u));
            for v in t.h.span.basis() {
                if bg(&g.ad_l(&su, v)) != bg(v) {
                    inv = Some(format!("u = {}, v = {}", g.kg.labels()[*u], g.kg.label_of(v)));
                    break 'outer;
                }
            }
        }
        checks.push("B_g is G_g-invariant", inv);

        let p_g = |u: usize| -> SparseVec {
            let w = g.kg.basis(u);
            q.projection.apply(f, &w).scale(f, &bg(&qp.cleaving.eta.apply(f, &w)))
        };
        let twisted = |a: &SparseVec, b: &SparseVec| -> SparseVec {
            let mut acc = SparseVec::zero(m);
            for (x, ca) in a.entries() {
                for (y, cb) in b.entries() {
                    let c = f.mul(&f.mul(ca, cb), &psi(*x, *y));
                    acc = acc.axpy(f, &c, kq.mul_basis(*x, *y));
                }
            }
            acc
        };
        let mut hom = None;
        'outer2: for u in &cent {
            for w in &cent {
                if p_g(grp.mul(*u, *w)) != twisted(&p_g(*u), &p_g(*w)) {
                    hom = Some(format!("u = {}, w = {}", grp.labels()[*u], grp.labels()[*w]));
                    break 'outer2;
                }
            }
        }
        checks.push("p_g is an algebra map into the ψ_g-twisted group algebra", hom);

        out.push(BlockData {
            representative: rep,
            conjugacy_class: class.clone(),
            centralizer_group: cent,
            character,
            cosets,
            twist,
            block_fp_dimension: class.len() * m,
            checks,
        });
    }
    Ok(out)
}
