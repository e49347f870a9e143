//! Masts, detours and routes.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};

/// A path together with its vertex sequence `e(1), ..., e(l+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mast {
    path: Path,
    vertices: Vec<usize>,
}

impl Mast {
    pub fn new(quiver: &Quiver, path: Path) -> Self {
        let vertices = path.vertex_sequence(quiver);
        Mast { path, vertices }
    }

    pub fn parse(quiver: &Quiver, text: &str) -> Result<Self> {
        Ok(Mast::new(quiver, quiver.parse_path(text)?))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Length `l`.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// Vertex `e(j+1)` reached by the prefix of length `j`.
    pub fn vertex(&self, j: usize) -> usize {
        self.vertices[j]
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The arrow leaving position `j`.
    pub fn arrow(&self, j: usize) -> usize {
        self.path.arrows()[j]
    }

    pub fn prefix(&self, j: usize) -> Path {
        Path::from_parts(self.path.source(), self.path.arrows()[..j].to_vec())
    }

    /// Length of the prefix equal to `q`, if `q` is a prefix.
    pub fn prefix_length(&self, q: &Path) -> Option<usize> {
        (q.source() == self.path.source()
            && q.len() <= self.len()
            && self.path.arrows()[..q.len()] == *q.arrows())
        .then_some(q.len())
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        self.path.display(quiver)
    }
}

/// A detour `(arrow, prefix)` with its target prefix lengths and the
/// 0-based indices of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detour {
    pub arrow: usize,
    pub prefix: usize,
    pub targets: Vec<usize>,
    pub first_var: usize,
}

impl Detour {
    pub fn variables(&self) -> std::ops::Range<usize> {
        self.first_var..self.first_var + self.targets.len()
    }
}

/// All detours on a mast in canonical order with contiguous variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetourTable {
    mast: Mast,
    detours: Vec<Detour>,
    nvars: usize,
    lookup: HashMap<(usize, usize), usize>,
}

impl DetourTable {
    pub fn mast(&self) -> &Mast {
        &self.mast
    }

    pub fn detours(&self) -> &[Detour] {
        &self.detours
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The detour leaving prefix `prefix` along `arrow`.
    pub fn find(&self, arrow: usize, prefix: usize) -> Option<&Detour> {
        self.lookup.get(&(arrow, prefix)).map(|&i| &self.detours[i])
    }

    pub fn find_index(&self, arrow: usize, prefix: usize) -> Option<usize> {
        self.lookup.get(&(arrow, prefix)).copied()
    }

    /// The detour owning variable `var` and the variable's target prefix.
    pub fn variable(&self, var: usize) -> Option<(&Detour, usize)> {
        self.detours
            .iter()
            .find(|d| d.variables().contains(&var))
            .map(|d| (d, d.targets[var - d.first_var]))
    }

    /// Human-readable table, one variable per line.
    pub fn render(&self, quiver: &Quiver) -> String {
        let mut out = format!(
            "mast {} (length {})\n",
            self.mast.display(quiver),
            self.mast.len()
        );
        out.push_str(&format!(
            "{} detours, {} variables\n",
            self.detours.len(),
            self.nvars
        ));
        for d in &self.detours {
            let a = &quiver.arrow(d.arrow).name;
            let u = self.mast.prefix(d.prefix).display(quiver);
            for (i, &t) in d.targets.iter().enumerate() {
                out.push_str(&format!(
                    "X[{}]  ({a}, {u})  ->  {}\n",
                    d.first_var + i + 1,
                    self.mast.prefix(t).display(quiver)
                ));
            }
        }
        out
    }

    pub fn to_json(&self, quiver: &Quiver) -> Value {
        let detours: Vec<Value> = self
            .detours
            .iter()
            .enumerate()
            .map(|(k, d)| {
                json!({
                    "index": k + 1,
                    "arrow": quiver.arrow(d.arrow).name,
                    "u": self.mast.prefix(d.prefix).display(quiver),
                    "targets": d.targets.iter().map(|&t| self.mast.prefix(t).display(quiver)).collect::<Vec<_>>(),
                    "variables": d.variables().map(|v| v + 1).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "version": 1,
            "mast": self.mast.display(quiver),
            "variables": self.nvars,
            "detours": detours,
        })
    }
}

/// Detours on `mast`, ordered by prefix length and then arrow name.
pub fn enumerate_detours(quiver: &Quiver, mast: &Mast) -> DetourTable {
    let l = mast.len();
    let mut detours = Vec::new();
    let mut nvars = 0;
    for j in 0..=l {
        let mut arrows: Vec<usize> = quiver
            .arrows_from(mast.vertex(j))
            .filter(|&a| j == l || a != mast.arrow(j))
            .collect();
        arrows.sort_by(|&a, &b| quiver.arrow(a).name.cmp(&quiver.arrow(b).name));
        for a in arrows {
            let target = quiver.arrow(a).target;
            let targets: Vec<usize> = (j + 1..=l).filter(|&t| mast.vertex(t) == target).collect();
            if targets.is_empty() {
                continue;
            }
            let n = targets.len();
            detours.push(Detour {
                arrow: a,
                prefix: j,
                targets,
                first_var: nvars,
            });
            nvars += n;
        }
    }
    let lookup = detours
        .iter()
        .enumerate()
        .map(|(k, d)| ((d.arrow, d.prefix), k))
        .collect();
    DetourTable {
        mast: mast.clone(),
        detours,
        nvars,
        lookup,
    }
}

/// Route test by reachable-position dynamic programming along `q`.
pub fn is_route(quiver: &Quiver, q: &Path, mast: &Mast) -> bool {
    if q.source() != mast.vertex(0) || q.len() > mast.len() {
        return false;
    }
    let l = mast.len();
    let mut reach = vec![false; l + 1];
    reach[0] = true;
    for &g in q.arrows() {
        let arrow = quiver.arrow(g);
        let mut next = vec![false; l + 1];
        for j in (0..=l).filter(|&j| reach[j] && mast.vertex(j) == arrow.source) {
            if j < l && mast.arrow(j) == g {
                next[j + 1] = true;
            }
            for t in j + 1..=l {
                if mast.vertex(t) == arrow.target {
                    next[t] = true;
                }
            }
        }
        if !next.iter().any(|&b| b) {
            return false;
        }
        reach = next;
    }
    true
}

/// All paths through the given vertex sequence, in lexicographic order of
/// arrow indices.
pub fn enumerate_masts(quiver: &Quiver, vertices: &[usize]) -> Vec<Mast> {
    if vertices.is_empty() {
        return Vec::new();
    }
    let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
    for w in vertices.windows(2) {
        let choices: Vec<usize> = quiver
            .arrows_from(w[0])
            .filter(|&a| quiver.arrow(a).target == w[1])
            .collect();
        partial = partial
            .into_iter()
            .flat_map(|p| {
                choices.iter().map(move |&a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    partial
        .into_iter()
        .map(|arrows| Mast::new(quiver, Path::from_parts(vertices[0], arrows)))
        .collect()
}

/// Parses a whitespace- or comma-separated vertex sequence.
pub fn parse_vertex_sequence(quiver: &Quiver, text: &str) -> Result<Vec<usize>> {
    let v: Vec<usize> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| quiver.vertex(s))
        .collect::<Result<_>>()?;
    if v.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty vertex sequence".into(),
        });
    }
    Ok(v)
}
