//! JSON interchange: group descriptions, group schemes, Hopf algebras,
//! triples, and the reports written by the command-line tool.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::double::{is_factorizable, is_triangular, verify_quasitriangular, verify_ribbon, Double, QuasiHopf};
use crate::error::{Error, Result};
use crate::group::{
    constant_group, direct_product, ga_kernel, mu_p_kernel, restricted_enveloping, subgroup_from_generators, two_dim_solvable,
    EtaleConnected, Family, FiniteGroup, GroupScheme, SubgroupScheme,
};
use crate::hopf::{CheckList, HopfAlgebra, VerificationReport};
use crate::lattice::{intersect, BlockData, Flags, Lattice};
use crate::linalg::{SparseMat, SparseTensor3, SparseVec};
use crate::quotient::{QuotientPair, Triple};
use crate::scalar::Field;
use crate::SCHEMA_VERSION;

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn check_version(v: &Value) -> Result<()> {
    match v.get("schema_version").and_then(Value::as_u64) {
        Some(n) if n == SCHEMA_VERSION as u64 => Ok(()),
        Some(n) => Err(schema(format!("unsupported schema_version {n}"))),
        None => Err(schema("missing schema_version")),
    }
}

fn field_of<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| schema(format!("missing `{key}`")))
}

/// A group as written by hand.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Symmetric3,
    Klein,
    Table { labels: Vec<String>, table: Vec<Vec<usize>> },
    /// Frobenius kernel `𝔾_{a,r}`.
    Ga { r: u32 },
    MuP,
    TwoDimSolvable,
    /// `bracket[i][j]` and `pmap[i]` are coordinate vectors of scalars.
    RestrictedLie { names: Vec<String>, bracket: Vec<Vec<Vec<Value>>>, pmap: Vec<Vec<Value>> },
    Product { factors: Vec<GroupSpec> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupFile {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(flatten)]
    pub group: GroupSpec,
}

impl GroupSpec {
    pub fn build(&self, f: &Field) -> Result<GroupScheme> {
        match self {
            GroupSpec::Cyclic { n } => constant_group(f, &FiniteGroup::cyclic(*n)),
            GroupSpec::Symmetric3 => constant_group(f, &FiniteGroup::symmetric3()),
            GroupSpec::Klein => constant_group(f, &FiniteGroup::klein()),
            GroupSpec::Table { labels, table } => constant_group(f, &FiniteGroup::new(labels.clone(), table.clone())?),
            GroupSpec::Ga { r } => ga_kernel(f, *r),
            GroupSpec::MuP => mu_p_kernel(f),
            GroupSpec::TwoDimSolvable => two_dim_solvable(f),
            GroupSpec::RestrictedLie { names, bracket, pmap } => {
                let read = |v: &Vec<Value>| v.iter().map(|x| f.from_json(x)).collect::<Result<Vec<_>>>();
                let br = bracket.iter().map(|row| row.iter().map(read).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
                let pm = pmap.iter().map(read).collect::<Result<Vec<_>>>()?;
                restricted_enveloping(f, names, &br, &pm)
            }
            GroupSpec::Product { factors } => {
                let mut it = factors.iter();
                let first = it.next().ok_or_else(|| schema("empty product"))?.build(f)?;
                it.try_fold(first, |acc, s| direct_product(&acc, &s.build(f)?))
            }
        }
    }
}

/// Reads either a hand-written group file or an emitted group scheme.
pub fn read_group(v: &Value, field: Option<&Field>) -> Result<GroupScheme> {
    check_version(v)?;
    if v.get("kind").and_then(Value::as_str) == Some("group_scheme") {
        let g = group_from_json(v)?;
        if let Some(f) = field {
            if f != g.field() {
                return Err(schema("field flag disagrees with the group scheme file"));
            }
        }
        return Ok(g);
    }
    let file: GroupFile = serde_json::from_value(v.clone()).map_err(|e| schema(e.to_string()))?;
    let f = match (field, &file.field) {
        (Some(f), _) => f.clone(),
        (None, Some(s)) => Field::parse(s)?,
        (None, None) => return Err(schema("no field given")),
    };
    file.group.build(&f)
}

pub fn vec_to_json(f: &Field, x: &SparseVec) -> Value {
    Value::Array(x.entries().iter().map(|(i, c)| json!([i, f.to_json(c)])).collect())
}

pub fn vec_from_json(f: &Field, dim: usize, v: &Value) -> Result<SparseVec> {
    let arr = v.as_array().ok_or_else(|| schema("vector must be a list of [index, scalar]"))?;
    let mut pairs = Vec::with_capacity(arr.len());
    for e in arr {
        let i = e.get(0).and_then(Value::as_u64).ok_or_else(|| schema("bad vector index"))? as usize;
        if i >= dim {
            return Err(schema(format!("index {i} out of range {dim}")));
        }
        pairs.push((i, f.from_json(e.get(1).ok_or_else(|| schema("missing coefficient"))?)?));
    }
    Ok(SparseVec::from_pairs(f, dim, pairs))
}

pub fn mat_to_json(f: &Field, m: &SparseMat) -> Value {
    json!({ "rows": m.nrows(), "columns": m.columns().iter().map(|c| vec_to_json(f, c)).collect::<Vec<_>>() })
}

pub fn mat_from_json(f: &Field, v: &Value) -> Result<SparseMat> {
    let rows = field_of(v, "rows")?.as_u64().ok_or_else(|| schema("rows"))? as usize;
    let cols = field_of(v, "columns")?.as_array().ok_or_else(|| schema("columns"))?;
    Ok(SparseMat::from_columns(rows, cols.iter().map(|c| vec_from_json(f, rows, c)).collect::<Result<Vec<_>>>()?))
}

pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    let f = h.field();
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = h.mul_basis(i, j);
            if !p.is_zero() {
                mult.push(json!([i, j, vec_to_json(f, p)]));
            }
        }
    }
    json!({
        "field": f.field_json(),
        "dim": n,
        "labels": h.labels(),
        "mult": mult,
        "unit": vec_to_json(f, h.one()),
        "comult": (0..n).map(|i| vec_to_json(f, h.comul_basis(i))).collect::<Vec<_>>(),
        "counit": vec_to_json(f, h.counit()),
        "antipode": mat_to_json(f, h.antipode()),
    })
}

pub fn hopf_from_json(f: &Field, v: &Value) -> Result<HopfAlgebra> {
    if let Some(fv) = v.get("field") {
        if &Field::from_field_json(fv)? != f {
            return Err(schema("Hopf algebra field disagrees with its container"));
        }
    }
    let labels: Vec<String> = serde_json::from_value(field_of(v, "labels")?.clone()).map_err(|e| schema(e.to_string()))?;
    let n = labels.len();
    if v.get("dim").and_then(Value::as_u64).is_some_and(|d| d as usize != n) {
        return Err(schema("dim disagrees with the label count"));
    }
    let mut table = vec![SparseVec::zero(n); n * n];
    for e in field_of(v, "mult")?.as_array().ok_or_else(|| schema("mult"))? {
        let i = e.get(0).and_then(Value::as_u64).ok_or_else(|| schema("mult index"))? as usize;
        let j = e.get(1).and_then(Value::as_u64).ok_or_else(|| schema("mult index"))? as usize;
        if i >= n || j >= n {
            return Err(schema("mult index out of range"));
        }
        table[i * n + j] = vec_from_json(f, n, e.get(2).ok_or_else(|| schema("mult value"))?)?;
    }
    let comult = field_of(v, "comult")?
        .as_array()
        .ok_or_else(|| schema("comult"))?
        .iter()
        .map(|c| vec_from_json(f, n * n, c))
        .collect::<Result<Vec<_>>>()?;
    let antipode = mat_from_json(f, field_of(v, "antipode")?)?;
    let mult = SparseTensor3::from_fn((n, n, n), |i, j| table[i * n + j].clone());
    HopfAlgebra::new(
        f.clone(),
        labels,
        mult,
        vec_from_json(f, n, field_of(v, "unit")?)?,
        comult,
        vec_from_json(f, n, field_of(v, "counit")?)?,
        antipode,
    )
}

fn family_to_json(fam: &Family) -> Value {
    match fam {
        Family::Constant(g) => json!({ "constant": { "labels": g.labels(), "table": g.table() } }),
        Family::GaKernel { r } => json!({ "ga_kernel": { "r": r } }),
        Family::MuP => json!("mu_p"),
        Family::RestrictedLie => json!("restricted_lie"),
        Family::Product(a, b) => json!({ "product": [family_to_json(a), family_to_json(b)] }),
        Family::Generic => json!("generic"),
    }
}

fn family_from_json(v: &Value) -> Result<Family> {
    match v {
        Value::String(s) => match s.as_str() {
            "mu_p" => Ok(Family::MuP),
            "restricted_lie" => Ok(Family::RestrictedLie),
            "generic" => Ok(Family::Generic),
            _ => Err(schema(format!("unknown family `{s}`"))),
        },
        Value::Object(m) => {
            if let Some(c) = m.get("constant") {
                let labels = serde_json::from_value(field_of(c, "labels")?.clone()).map_err(|e| schema(e.to_string()))?;
                let table = serde_json::from_value(field_of(c, "table")?.clone()).map_err(|e| schema(e.to_string()))?;
                return Ok(Family::Constant(FiniteGroup::new(labels, table)?));
            }
            if let Some(g) = m.get("ga_kernel") {
                let r = field_of(g, "r")?.as_u64().ok_or_else(|| schema("ga_kernel.r"))? as u32;
                return Ok(Family::GaKernel { r });
            }
            if let Some(Value::Array(ab)) = m.get("product") {
                if ab.len() == 2 {
                    return Ok(Family::Product(Box::new(family_from_json(&ab[0])?), Box::new(family_from_json(&ab[1])?)));
                }
            }
            Err(schema("unknown family object"))
        }
        _ => Err(schema("family")),
    }
}

pub fn group_to_json(g: &GroupScheme) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "group_scheme",
        "field": g.field().field_json(),
        "family": family_to_json(&g.family),
        "tag": { "connected_order": g.tag.connected_order, "points": g.tag.points },
        "kg": hopf_to_json(&g.kg),
        "og_labels": g.og.labels(),
    })
}

/// A bare Hopf algebra document; its field comes from the `field` key.
pub fn read_hopf(v: &Value) -> Result<HopfAlgebra> {
    let f = Field::from_field_json(field_of(v, "field")?)?;
    hopf_from_json(&f, v)
}

pub fn group_from_json(v: &Value) -> Result<GroupScheme> {
    check_version(v)?;
    let f = Field::from_field_json(field_of(v, "field")?)?;
    let kg = hopf_from_json(&f, field_of(v, "kg")?)?;
    let og_labels: Vec<String> = serde_json::from_value(field_of(v, "og_labels")?.clone()).map_err(|e| schema(e.to_string()))?;
    let tag = field_of(v, "tag")?;
    let tag = EtaleConnected {
        connected_order: tag.get("connected_order").and_then(Value::as_u64).ok_or_else(|| schema("tag"))? as usize,
        points: tag.get("points").and_then(Value::as_u64).ok_or_else(|| schema("tag"))? as usize,
    };
    GroupScheme::assemble(kg, Some(og_labels), family_from_json(field_of(v, "family")?)?, Some(tag))
}

fn labelled_vec(f: &Field, labels: &[String], x: &SparseVec) -> Value {
    Value::Array(x.entries().iter().map(|(i, c)| json!([labels[*i], f.to_json(c)])).collect())
}

/// A vector given as a basis label or a list of `[label, scalar]`.
fn read_labelled_vec(f: &Field, labels: &[String], v: &Value) -> Result<SparseVec> {
    let pos = |l: &str| labels.iter().position(|x| x == l).ok_or_else(|| schema(format!("unknown basis label `{l}`")));
    match v {
        Value::String(l) => Ok(SparseVec::unit(f, labels.len(), pos(l)?)),
        Value::Array(items) => {
            let mut pairs = Vec::new();
            for e in items {
                let l = e.get(0).and_then(Value::as_str).ok_or_else(|| schema("expected [label, scalar]"))?;
                pairs.push((pos(l)?, f.from_json(e.get(1).ok_or_else(|| schema("missing coefficient"))?)?));
            }
            Ok(SparseVec::from_pairs(f, labels.len(), pairs))
        }
        _ => Err(schema("vector must be a label or a list of [label, scalar]")),
    }
}

pub fn subgroup_to_json(g: &GroupScheme, s: &SubgroupScheme) -> Value {
    let f = g.field();
    json!({ "basis": s.span.basis().iter().map(|r| labelled_vec(f, g.kg.labels(), r)).collect::<Vec<_>>() })
}

/// `"trivial"`, `"full"`, or `{"generators": [...]}` / `{"basis": [...]}`.
pub fn subgroup_from_json(g: &GroupScheme, v: &Value) -> Result<SubgroupScheme> {
    match v {
        Value::String(s) if s == "trivial" => Ok(SubgroupScheme::trivial(g)),
        Value::String(s) if s == "full" => Ok(SubgroupScheme::full(g)),
        Value::Object(m) => {
            let list = m
                .get("generators")
                .or_else(|| m.get("basis"))
                .and_then(Value::as_array)
                .ok_or_else(|| schema("subgroup needs `generators` or `basis`"))?;
            let gens = list.iter().map(|x| read_labelled_vec(g.field(), g.kg.labels(), x)).collect::<Result<Vec<_>>>()?;
            subgroup_from_generators(g, &gens)
        }
        _ => Err(schema("subgroup")),
    }
}

pub fn triple_to_json(g: &GroupScheme, t: &Triple) -> Value {
    let f = g.field();
    let mut b = Map::new();
    for (i, l) in t.h.own.kg.labels().iter().enumerate() {
        b.insert(l.clone(), labelled_vec(f, t.k.own.og.labels(), t.b.col(i)));
    }
    json!({ "k": subgroup_to_json(g, &t.k), "h": subgroup_to_json(g, &t.h), "b": Value::Object(b) })
}

/// `b` maps basis labels of `k[H]` to vectors of `𝒪(K)`; absent or `"trivial"`
/// means `B = 1`.
pub fn triple_from_json(g: &GroupScheme, v: &Value) -> Result<Triple> {
    let k = subgroup_from_json(g, field_of(v, "k")?)?;
    let h = subgroup_from_json(g, field_of(v, "h")?)?;
    match v.get("b") {
        None | Some(Value::Null) => Triple::trivial_b(g, k, h),
        Some(Value::String(s)) if s == "trivial" => Triple::trivial_b(g, k, h),
        Some(Value::Object(m)) => {
            let f = g.field();
            let cols = h
                .own
                .kg
                .labels()
                .iter()
                .map(|l| {
                    let x = m.get(l).ok_or_else(|| schema(format!("b has no image for `{l}`")))?;
                    read_labelled_vec(f, k.own.og.labels(), x)
                })
                .collect::<Result<Vec<_>>>()?;
            if m.len() != cols.len() {
                return Err(schema("b has images for labels outside k[H]"));
            }
            Triple::new(g, k.clone(), h, SparseMat::from_columns(k.order(), cols))
        }
        _ => Err(schema("b")),
    }
}

/// A triple file: the group inline (or a path to it) next to the triple.
pub fn read_triple_file(v: &Value, field: Option<&Field>, base: &std::path::Path) -> Result<(GroupScheme, Triple)> {
    check_version(v)?;
    let gv = field_of(v, "group")?;
    let g = match gv {
        Value::String(path) => {
            let p = base.join(path);
            let text = std::fs::read_to_string(&p).map_err(|e| schema(format!("{}: {e}", p.display())))?;
            let inner: Value = serde_json::from_str(&text).map_err(|e| schema(e.to_string()))?;
            read_group(&inner, field.or(None)).or_else(|e| match (e, v.get("field").and_then(Value::as_str)) {
                (Error::Schema(_), Some(s)) => read_group(&inner, Some(&Field::parse(s)?)),
                (e, _) => Err(e),
            })?
        }
        other => {
            let mut inner = other.clone();
            if let (Value::Object(m), Some(fs)) = (&mut inner, v.get("field")) {
                m.entry("field").or_insert(fs.clone());
                m.entry("schema_version").or_insert(json!(SCHEMA_VERSION));
            }
            read_group(&inner, field)?
        }
    };
    let t = triple_from_json(&g, field_of(v, "triple")?)?;
    Ok((g, t))
}

pub fn checks_to_json(c: &CheckList) -> Value {
    serde_json::to_value(&c.checks).expect("serializable")
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

pub fn double_to_json(g: &GroupScheme, dbl: &Double, q: &QuasiHopf, hopf: &VerificationReport) -> Result<Value> {
    let f = g.field();
    let mut rib = verify_quasitriangular(q);
    rib.checks.extend(verify_ribbon(q)?.checks);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "double",
        "group": group_to_json(g),
        "dimension": dbl.d.dim(),
        "double": hopf_to_json(&dbl.d),
        "r": vec_to_json(f, &q.r),
        "v": q.v.as_ref().map(|v| vec_to_json(f, v)),
        "hopf_axioms": report_to_json(hopf),
        "braiding_checks": checks_to_json(&rib),
        "triangular": is_triangular(q),
        "factorizable": is_factorizable(q),
    }))
}

pub fn quotient_to_json(g: &GroupScheme, qp: &QuotientPair, checks: &CheckList) -> Value {
    let f = g.field();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "quotient",
        "triple": triple_to_json(g, &qp.triple),
        "dimension": qp.d.dim(),
        "fp_dimension": qp.triple.fp_dim(g),
        "quotient": hopf_to_json(&qp.d),
        "theta": mat_to_json(f, &qp.theta),
        "sigma": qp.sigma.iter().map(|s| vec_to_json(f, s)).collect::<Vec<_>>(),
        "tau": qp.tau.iter().map(|s| vec_to_json(f, s)).collect::<Vec<_>>(),
        "r": vec_to_json(f, &qp.qt.r),
        "v": qp.qt.v.as_ref().map(|v| vec_to_json(f, v)),
        "checks": checks_to_json(checks),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub index: usize,
    pub label: String,
    pub fp_dimension: usize,
    pub flags: Flags,
    pub centralizer: usize,
    pub triple: Value,
}

pub fn lattice_to_json(g: &GroupScheme, lat: &Lattice, with_meets: bool) -> Result<Value> {
    let nodes: Vec<NodeRecord> = lat
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| NodeRecord {
            index: i,
            label: lat.node_label(g, i),
            fp_dimension: n.fp_dimension,
            flags: n.flags,
            centralizer: n.centralizer,
            triple: triple_to_json(g, &n.triple),
        })
        .collect();
    let mut out = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "lattice",
        "field": g.field().field_json(),
        "order": g.order(),
        "nodes": nodes,
        "edges": lat.edges,
        "dot": lat.to_dot(g),
    });
    if with_meets {
        let n = lat.nodes.len();
        let mut meets = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let m = intersect(g, &lat.nodes[i].triple, &lat.nodes[j].triple)?;
                meets[i][j] = lat
                    .nodes
                    .iter()
                    .position(|x| x.triple == m)
                    .ok_or_else(|| Error::Inconsistent("intersection missing from the enumeration".into()))?;
            }
        }
        out["meets"] = json!(meets);
    }
    Ok(out)
}

/// Parses the node list back into triples over `g`.
pub fn nodes_from_json(g: &GroupScheme, v: &Value) -> Result<Vec<(NodeRecord, Triple)>> {
    check_version(v)?;
    let nodes: Vec<NodeRecord> = serde_json::from_value(field_of(v, "nodes")?.clone()).map_err(|e| schema(e.to_string()))?;
    nodes
        .into_iter()
        .map(|n| {
            let t = triple_from_json(g, &n.triple)?;
            Ok((n, t))
        })
        .collect()
}

pub fn blocks_to_json(g: &GroupScheme, t: &Triple, blocks: &[BlockData]) -> Value {
    let f = g.field();
    let grp = g.constant_group();
    let name = |x: usize| grp.map(|c| c.labels()[x].clone()).unwrap_or_else(|| x.to_string());
    let bl: Vec<Value> = blocks
        .iter()
        .map(|b| {
            json!({
                "representative": name(b.representative),
                "conjugacy_class": b.conjugacy_class.iter().map(|x| name(*x)).collect::<Vec<_>>(),
                "centralizer_group": b.centralizer_group.iter().map(|x| name(*x)).collect::<Vec<_>>(),
                "character": b.character.iter().map(|c| f.to_json(c)).collect::<Vec<_>>(),
                "cosets": b.cosets,
                "twist": b.twist.iter().map(|c| f.to_json(c)).collect::<Vec<_>>(),
                "block_fp_dimension": b.block_fp_dimension,
                "checks": checks_to_json(&b.checks),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "blocks",
        "triple": triple_to_json(g, t),
        "fp_dimension": t.fp_dim(g),
        "blocks": bl,
    })
}
