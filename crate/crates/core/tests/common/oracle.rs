//! Independent reference implementations used as test oracles.

use std::collections::BTreeSet;

use rand::Rng;
use uniserial::{Field, FieldElement, Mast, Path, Polynomial, Presentation, Quiver};

/// Detours as `(arrow, prefix, targets)` in variable order: prefix length
/// first, then arrow name.
pub fn detours(quiver: &Quiver, mast: &Mast) -> Vec<(usize, usize, Vec<usize>)> {
    let verts = mast.vertices();
    let arrows = mast.path().arrows();
    let l = arrows.len();
    let mut out = Vec::new();
    for j in 0..=l {
        let mut here: Vec<(String, usize)> = (0..quiver.arrows().len())
            .filter(|&a| quiver.arrow(a).source == verts[j] && (j == l || arrows[j] != a))
            .map(|a| (quiver.arrow(a).name.clone(), a))
            .collect();
        here.sort();
        for (_, a) in here {
            let targets: Vec<usize> = (j + 1..=l)
                .filter(|&t| verts[t] == quiver.arrow(a).target)
                .collect();
            if !targets.is_empty() {
                out.push((a, j, targets));
            }
        }
    }
    out
}

/// Sum of the target counts over all detours.
pub fn variable_count(quiver: &Quiver, mast: &Mast) -> usize {
    detours(quiver, mast).iter().map(|d| d.2.len()).sum()
}

/// All routes on `mast`, built by following segments of the mast and
/// jumping along detours of the remaining segments.
pub fn routes(quiver: &Quiver, mast: &Mast) -> BTreeSet<Vec<usize>> {
    let p = mast.path().arrows().to_vec();
    let verts = mast.vertices().to_vec();
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack = vec![(0usize, Vec::<usize>::new())];
    while let Some((pos, built)) = stack.pop() {
        if !seen.insert((pos, built.clone())) {
            continue;
        }
        for end in pos..=p.len() {
            let mut r = built.clone();
            r.extend_from_slice(&p[pos..end]);
            out.insert(r.clone());
            for a in 0..quiver.arrows().len() {
                let arrow = quiver.arrow(a);
                if arrow.source != verts[end] || (end < p.len() && p[end] == a) {
                    continue;
                }
                for next in end + 1..=p.len() {
                    if verts[next] == arrow.target {
                        let mut r2 = r.clone();
                        r2.push(a);
                        stack.push((next, r2));
                    }
                }
            }
        }
    }
    out
}

/// Normal form by rewriting terms in random order, deleting a term only
/// once it admits no detour decomposition.
pub fn random_strategy_normal_form<R: Rng>(
    quiver: &Quiver,
    mast: &Mast,
    terms: &[(Path, FieldElement)],
    rng: &mut R,
) -> Vec<Polynomial> {
    let table = detours(quiver, mast);
    let nvars: usize = table.iter().map(|d| d.2.len()).sum();
    let mut first = Vec::new();
    let mut acc = 0;
    for d in &table {
        first.push(acc);
        acc += d.2.len();
    }
    let field = terms.first().map_or(Field::Rational, |t| t.1.field());
    let p = mast.path().arrows().to_vec();
    let mut result = vec![Polynomial::zero(field, nvars); p.len() + 1];
    let mut work: Vec<(Vec<usize>, Polynomial)> = terms
        .iter()
        .filter(|(path, _)| path.source() == mast.vertex(0))
        .map(|(path, c)| {
            (
                path.arrows().to_vec(),
                Polynomial::constant(c.clone(), nvars),
            )
        })
        .collect();
    while !work.is_empty() {
        let idx = rng.gen_range(0..work.len());
        let (q, c) = work.swap_remove(idx);
        let j = q.iter().zip(&p).take_while(|(a, b)| a == b).count();
        if j == q.len() {
            result[j] = &result[j] + &c;
            continue;
        }
        let Some(k) = table.iter().position(|d| d.0 == q[j] && d.1 == j) else {
            continue;
        };
        for (i, &t) in table[k].2.iter().enumerate() {
            let mut r = p[..t].to_vec();
            r.extend_from_slice(&q[j + 1..]);
            let x = Polynomial::var(field, nvars, first[k] + i);
            work.push((r, &c * &x));
        }
    }
    result
}

/// Arithmetic modulo a small prime on plain integers.
#[derive(Clone, Copy)]
pub struct Zp(pub u32);

impl Zp {
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.0
    }

    pub fn matmul(self, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let n = a.len();
        let mut c = vec![vec![0; n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    c[i][j] = self.add(c[i][j], self.mul(a[i][k], b[k][j]));
                }
            }
        }
        c
    }

    pub fn matvec(self, a: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
        a.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |s, (&x, &y)| self.add(s, self.mul(x, y)))
            })
            .collect()
    }
}

pub fn residue(c: &FieldElement) -> u32 {
    match c {
        FieldElement::Prime { value, .. } => *value,
        FieldElement::Rational(_) => panic!("residue of a rational"),
    }
}

/// Matrices of the representation in which the mast arrows move `b_j` to
/// `b_{j+1}`, detour arrows move `b_j` to the combination of targets given
/// by `point`, and every other arrow acts as zero.
pub fn direct_matrices(quiver: &Quiver, mast: &Mast, point: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let n = mast.len() + 1;
    let mut mats = vec![vec![vec![0u32; n]; n]; quiver.arrows().len()];
    for j in 0..mast.len() {
        mats[mast.arrow(j)][j + 1][j] = 1;
    }
    let mut var = 0;
    for (a, j, targets) in detours(quiver, mast) {
        for t in targets {
            mats[a][t][j] = point[var];
            var += 1;
        }
    }
    mats
}

pub fn path_matrix(zp: Zp, mats: &[Vec<Vec<u32>>], mast: &Mast, path: &Path) -> Vec<Vec<u32>> {
    let n = mast.len() + 1;
    let mut m: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| u32::from(i == j && mast.vertex(j) == path.source()))
                .collect()
        })
        .collect();
    for &a in path.arrows() {
        m = zp.matmul(&mats[a], &m);
    }
    m
}

/// True if every relation acts as zero on the direct representation.
pub fn satisfies_relations(
    zp: Zp,
    pres: &Presentation,
    mast: &Mast,
    mats: &[Vec<Vec<u32>>],
) -> bool {
    let n = mast.len() + 1;
    pres.relations.iter().all(|r| {
        let mut acc = vec![vec![0u32; n]; n];
        for (path, c) in r.terms() {
            let m = path_matrix(zp, mats, mast, path);
            let c = residue(c);
            for i in 0..n {
                for j in 0..n {
                    acc[i][j] = zp.add(acc[i][j], zp.mul(c, m[i][j]));
                }
            }
        }
        acc.iter().all(|row| row.iter().all(|&x| x == 0))
    })
}

/// Searches for a module isomorphism by trying every image `y` of the top
/// element with `e(1) y = y` and leading coefficient one.
pub fn brute_force_isomorphic(
    zp: Zp,
    mast: &Mast,
    a: &[Vec<Vec<u32>>],
    b: &[Vec<Vec<u32>>],
) -> bool {
    let n = mast.len() + 1;
    let free: Vec<usize> = (1..n)
        .filter(|&j| mast.vertex(j) == mast.vertex(0))
        .collect();
    let total = (zp.0 as usize).pow(free.len() as u32);
    for code in 0..total {
        let mut y = vec![0u32; n];
        y[0] = 1;
        let mut c = code;
        for &j in &free {
            y[j] = (c % zp.0 as usize) as u32;
            c /= zp.0 as usize;
        }
        let columns: Vec<Vec<u32>> = (0..n)
            .map(|j| zp.matvec(&path_matrix(zp, b, mast, &mast.prefix(j)), &y))
            .collect();
        let f: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| columns[j][i]).collect())
            .collect();
        if a.iter()
            .zip(b)
            .all(|(ma, mb)| zp.matmul(mb, &f) == zp.matmul(&f, ma))
        {
            return true;
        }
    }
    false
}

/// Every point of `GF(q)^n` in lexicographic order of residues.
pub fn all_points(q: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..q).map(move |x| {
                    let mut p2 = p.clone();
                    p2.push(x);
                    p2
                })
            })
            .collect();
    }
    out
}

pub fn to_field(field: Field, point: &[u32]) -> Vec<FieldElement> {
    point
        .iter()
        .map(|&x| field.from_i64(i64::from(x)))
        .collect()
}
