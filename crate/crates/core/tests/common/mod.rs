//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

/// Cayley table of a permutation group given by its elements.
pub fn perm_table(perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { (0..a.len()).map(|i| a[b[i]]).collect() };
    perms.iter().map(|a| perms.iter().map(|b| perms.iter().position(|c| *c == compose(a, b)).unwrap()).collect()).collect()
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

pub fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

pub fn s3_table() -> Vec<Vec<usize>> {
    perm_table(&[vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1], vec![1, 2, 0], vec![2, 0, 1]])
}

/// Counts triples of a finite group by brute force: pairs of commuting
/// normal subgroups and conjugation invariant bicharacters `H × K → U`,
/// with `U` the roots of unity of the field given as a multiplication table.
pub fn brute_force_count(t: &[Vec<usize>], units: &[Vec<usize>]) -> (usize, usize) {
    let n = t.len();
    let inv = |a: usize| (0..n).find(|b| t[a][*b] == 0).unwrap();
    let subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m & 1 == 1)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.iter().all(|a| s.iter().all(|b| s.contains(&t[*a][*b]))))
        .filter(|s| s.iter().all(|a| (0..n).all(|g| s.contains(&t[t[g][*a]][inv(g)]))))
        .collect();
    let u = units.len();
    let (mut total, mut nontrivial) = (0, 0);
    for k in &subsets {
        for h in &subsets {
            if !k.iter().all(|a| h.iter().all(|b| t[*a][*b] == t[*b][*a])) {
                continue;
            }
            let cells = k.len() * h.len();
            let mut assign = vec![0usize; cells];
            loop {
                let beta = |x: usize, y: usize| assign[h.iter().position(|a| *a == x).unwrap() * k.len() + k.iter().position(|a| *a == y).unwrap()];
                let bichar = h.iter().all(|a| {
                    h.iter().all(|b| k.iter().all(|c| beta(t[*a][*b], *c) == units[beta(*a, *c)][beta(*b, *c)]))
                        && k.iter().all(|b| k.iter().all(|c| beta(*a, t[*b][*c]) == units[beta(*a, *b)][beta(*a, *c)]))
                });
                let invariant = (0..n).all(|g| h.iter().all(|a| k.iter().all(|b| beta(t[t[g][*a]][inv(g)], t[t[g][*b]][inv(g)]) == beta(*a, *b))));
                if bichar && invariant {
                    total += 1;
                    if assign.iter().any(|x| *x != 0) {
                        nontrivial += 1;
                    }
                }
                let mut i = 0;
                while i < cells {
                    assign[i] += 1;
                    if assign[i] < u {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
                if i == cells {
                    break;
                }
            }
        }
    }
    (total, nontrivial)
}

/// `𝔽_p^×` as a multiplication table in discrete-log coordinates.
pub fn fp_units(p: usize) -> Vec<Vec<usize>> {
    let u = p - 1;
    (0..u).map(|a| (0..u).map(|b| (a + b) % u).collect()).collect()
}

fn binom_mod(n: usize, k: usize, p: u64) -> u64 {
    let mut c = vec![vec![0u64; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = (c[i - 1][j - 1] + c[i - 1][j]) % p;
        }
    }
    c[n][k]
}

fn polymul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    out
}

/// Whether `δₙ ↦ img[n]` (coefficients of `tⁱ`) is a Hopf map
/// `k[𝔾_{a,1}] → 𝒪(𝔾_{a,1})`, with the algebra and coalgebra laws written
/// out with divided powers.
pub fn is_ga1_hopf_map(p: u64, img: &[Vec<u64>]) -> bool {
    let pu = p as usize;
    // Δ(tⁱ) = Σ C(i,j) t^j ⊗ t^{i-j}
    let comul = |a: &[u64]| -> Vec<u64> {
        let mut out = vec![0; pu * pu];
        for i in 0..pu {
            for j in 0..=i {
                out[j * pu + i - j] = (out[j * pu + i - j] + a[i] * binom_mod(i, j, p)) % p;
            }
        }
        out
    };
    let unit = img[0][0] == 1 && img[0][1..].iter().all(|x| *x == 0);
    let alg = (0..pu).all(|i| {
        (0..pu).all(|j| {
            let lhs = if i + j < pu { img[i + j].iter().map(|x| x * binom_mod(i + j, i, p) % p).collect() } else { vec![0; pu] };
            lhs == polymul(&img[i], &img[j], p)
        })
    });
    let coalg = (0..pu).all(|n| {
        let mut rhs = vec![0u64; pu * pu];
        for i in 0..=n {
            for a in 0..pu {
                for b in 0..pu {
                    rhs[a * pu + b] = (rhs[a * pu + b] + img[i][a] * img[n - i][b]) % p;
                }
            }
        }
        comul(&img[n]) == rhs
    });
    let counit = (1..pu).all(|n| img[n][0] == 0);
    unit && alg && coalg && counit
}

/// Hopf maps `k[𝔾_{a,1}] → 𝒪(𝔾_{a,1})` by brute force over every linear
/// map with `δ₀ ↦ 1`.
pub fn ga1_maps_brute_force(p: u64) -> Vec<Vec<Vec<u64>>> {
    let pu = p as usize;
    let total = p.pow(((pu - 1) * pu) as u32);
    let mut found = Vec::new();
    for code in 0..total {
        let mut img = vec![vec![0u64; pu]; pu];
        img[0][0] = 1;
        let mut c = code;
        for col in img.iter_mut().skip(1) {
            for x in col.iter_mut() {
                *x = c % p;
                c /= p;
            }
        }
        if is_ga1_hopf_map(p, &img) {
            found.push(img);
        }
    }
    found.sort();
    found
}

/// Same, searching only over the image of `δ₁` and extending by
/// `δₙ = δ₁ⁿ/n!`; feasible for larger `p`.
pub fn ga1_maps_from_generator(p: u64) -> Vec<Vec<Vec<u64>>> {
    let pu = p as usize;
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut found = Vec::new();
    for code in 0..p.pow(p as u32) {
        let mut x = vec![0u64; pu];
        let mut c = code;
        for v in x.iter_mut() {
            *v = c % p;
            c /= p;
        }
        let mut img = vec![vec![0u64; pu]; pu];
        img[0][0] = 1;
        let mut fact = 1u64;
        let mut pw = img[0].clone();
        for n in 1..pu {
            fact = fact * n as u64 % p;
            pw = polymul(&pw, &x, p);
            img[n] = pw.iter().map(|v| v * inv(fact) % p).collect();
        }
        if is_ga1_hopf_map(p, &img) {
            found.push(img);
        }
    }
    found.sort();
    found
}
