//! Abstract finite groups given by Cayley tables.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// `table[a][b]` is the index of `a·b`.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|x| *x >= n)) {
            return Err(Error::NotAGroup("table shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "({}{}){} ≠ {}({}{})",
                            labels[a], labels[b], labels[c], labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(labels, table).expect("cyclic group")
    }

    /// Permutations of `{1,2,3}`, composed right to left.
    pub fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        FiniteGroup::new(labels, table).expect("S3")
    }

    pub fn klein() -> FiniteGroup {
        FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))
    }

    /// Direct product with index `i·|H| + j`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order(), b.order());
        let labels = a.labels.iter().flat_map(|x| b.labels.iter().map(move |y| format!("({x},{y})"))).collect();
        let table = (0..na * nb)
            .map(|i| (0..na * nb).map(|j| a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb)).collect())
            .collect();
        FiniteGroup::new(labels, table).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest subgroup containing `gens`, as a sorted index list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![false; self.order()];
        set[self.identity] = true;
        let mut stack: Vec<usize> = gens.to_vec();
        let mut elems = vec![self.identity];
        while let Some(x) = stack.pop() {
            if set[x] {
                continue;
            }
            set[x] = true;
            elems.push(x);
            for &y in elems.clone().iter() {
                stack.push(self.mul(x, y));
                stack.push(self.mul(y, x));
            }
        }
        (0..self.order()).filter(|i| set[*i]).collect()
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        (0..self.order()).all(|g| sub.iter().all(|x| sub.contains(&self.conj(g, *x))))
    }

    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let conj: Vec<usize> = gens.iter().flat_map(|x| (0..self.order()).map(move |g| (g, *x))).map(|(g, x)| self.conj(g, x)).collect();
        self.closure(&conj)
    }

    /// Every normal subgroup, sorted by order then lexicographically.
    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = vec![vec![self.identity]];
        for x in 0..self.order() {
            let n = self.normal_closure(&[x]);
            if !found.contains(&n) {
                found.push(n);
            }
        }
        loop {
            let mut grew = false;
            for i in 0..found.len() {
                for j in 0..found.len() {
                    let mut gens = found[i].clone();
                    gens.extend(&found[j]);
                    let n = self.closure(&gens);
                    if !found.contains(&n) {
                        found.push(n);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        found
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.order()).map(|g| self.conj(g, x)).collect();
            cls.sort();
            cls.dedup();
            for c in &cls {
                seen[*c] = true;
            }
            out.push(cls);
        }
        out
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|g| self.mul(*g, x) == self.mul(x, *g)).collect()
    }

    /// Subgroup on the listed elements, reindexed in list order.
    pub fn restrict(&self, elems: &[usize]) -> Result<FiniteGroup> {
        let pos = |x: usize| elems.iter().position(|e| *e == x);
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| pos(self.mul(*a, *b)).ok_or_else(|| Error::NotAGroup("not closed".into()))).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        FiniteGroup::new(elems.iter().map(|e| self.labels[*e].clone()).collect(), table)
    }

    /// Quotient by a normal subgroup; cosets are listed by their smallest
    /// element, with labels `[g]`.
    pub fn quotient(&self, normal: &[usize]) -> (FiniteGroup, Vec<usize>) {
        let coset_of = |g: usize| -> usize { normal.iter().map(|h| self.mul(g, *h)).min().unwrap() };
        let mut reps: Vec<usize> = (0..self.order()).map(coset_of).collect();
        let class_of: Vec<usize> = reps.clone();
        reps.sort();
        reps.dedup();
        let idx = |g: usize| reps.iter().position(|r| *r == class_of[g]).unwrap();
        let table = reps.iter().map(|a| reps.iter().map(|b| idx(self.mul(*a, *b))).collect()).collect();
        let labels = reps.iter().map(|r| format!("[{}]", self.labels[*r])).collect();
        let assignment = (0..self.order()).map(idx).collect();
        (FiniteGroup::new(labels, table).expect("quotient group"), assignment)
    }
}
