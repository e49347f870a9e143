//! Quivers, paths and elements of the path algebra.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver; vertices and arrows are addressed by dense indices.
#[derive(Debug, Clone, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.vertex_index.contains_key(name) {
            return Err(Error::InvalidQuiver(format!("duplicate vertex `{name}`")));
        }
        let id = self.vertices.len();
        self.vertices.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index.contains_key(name) {
            return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
        }
        let source = self.vertex(source)?;
        let target = self.vertex(target)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrow_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<usize> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn vertex_name(&self, id: usize) -> &str {
        &self.vertices[id]
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows_from(v) {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }

    pub fn has_double_arrows(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.arrows
            .iter()
            .any(|a| !seen.insert((a.source, a.target)))
    }

    /// Number of paths (including vertex paths); `None` if the quiver has an
    /// oriented cycle.
    pub fn path_algebra_dimension(&self) -> Option<u128> {
        if !self.is_acyclic() {
            return None;
        }
        let n = self.vertices.len();
        let mut memo: Vec<Option<u128>> = vec![None; n];
        fn from(q: &Quiver, v: usize, memo: &mut Vec<Option<u128>>) -> u128 {
            if let Some(x) = memo[v] {
                return x;
            }
            let mut total = 1;
            for a in q.arrows_from(v) {
                total += from(q, q.arrows[a].target, memo);
            }
            memo[v] = Some(total);
            total
        }
        Some((0..n).map(|v| from(self, v, &mut memo)).sum())
    }

    /// All paths starting at `source` with length at most `max_len`, in
    /// depth-first order by arrow index.
    pub fn paths_from(&self, source: usize, max_len: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path::vertex(source)];
        while let Some(p) = stack.pop() {
            if p.len() < max_len {
                let t = p.target(self);
                let mut next: Vec<Path> = self
                    .arrows_from(t)
                    .map(|a| {
                        let mut q = p.clone();
                        q.arrows.push(a);
                        q
                    })
                    .collect();
                next.reverse();
                stack.extend(next);
            }
            out.push(p);
        }
        out
    }

    /// Parses a path literal: `e[<vertex>]` or a product `a*b^2*c` where
    /// `a*b` means "a after b".
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix("e[").and_then(|s| s.strip_suffix(']')) {
            return Ok(Path::vertex(self.vertex(inner.trim())?));
        }
        let mut arrows = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: usize = e.trim().parse().map_err(|_| Error::Parse {
                        line: 1,
                        column: 1,
                        message: format!("invalid exponent in `{factor}`"),
                    })?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if name.is_empty() {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("empty factor in `{text}`"),
                });
            }
            let a = self.arrow_id(name)?;
            for _ in 0..power {
                arrows.push(a);
            }
        }
        arrows.reverse();
        if arrows.is_empty() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "empty path".into(),
            });
        }
        Path::from_arrows(self, arrows)
    }
}

/// A path: a start vertex and arrows in traversal order (earliest first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    /// Path from arrows in traversal order; checks composability.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::NotComposable("empty arrow list".into()))?;
        let source = quiver.arrow(first).source;
        for w in arrows.windows(2) {
            if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                return Err(Error::NotComposable(format!(
                    "`{}` cannot follow `{}`",
                    quiver.arrow(w[1]).name,
                    quiver.arrow(w[0]).name
                )));
            }
        }
        Ok(Path { source, arrows })
    }

    pub(crate) fn from_parts(source: usize, arrows: Vec<usize>) -> Self {
        Path { source, arrows }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.source, |&a| quiver.arrow(a).target)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `later` after `earlier`, or `None` on an endpoint mismatch.
    pub fn compose(quiver: &Quiver, later: &Path, earlier: &Path) -> Option<Path> {
        if later.source != earlier.target(quiver) {
            return None;
        }
        let mut arrows = earlier.arrows.clone();
        arrows.extend_from_slice(&later.arrows);
        Some(Path {
            source: earlier.source,
            arrows,
        })
    }

    /// The initial segment of length `n` (a right subpath).
    pub fn prefix(&self, quiver: &Quiver, n: usize) -> Result<Path> {
        if n > self.len() {
            return Err(Error::OutOfRange {
                index: n,
                max: self.len(),
            });
        }
        let _ = quiver;
        Ok(Path {
            source: self.source,
            arrows: self.arrows[..n].to_vec(),
        })
    }

    /// Vertex sequence visited, of length `len() + 1`.
    pub fn vertex_sequence(&self, quiver: &Quiver) -> Vec<usize> {
        let mut v = vec![self.source];
        v.extend(self.arrows.iter().map(|&a| quiver.arrow(a).target));
        v
    }

    /// Renders as `a*b^2*c` (latest arrow first) or `e[v]`.
    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e[{}]", quiver.vertex_name(self.source));
        }
        let mut parts: Vec<String> = Vec::new();
        let mut iter = self.arrows.iter().rev().peekable();
        while let Some(&a) = iter.next() {
            let mut count = 1;
            while iter.peek() == Some(&&a) {
                iter.next();
                count += 1;
            }
            let name = &quiver.arrow(a).name;
            parts.push(if count == 1 {
                name.clone()
            } else {
                format!("{name}^{count}")
            });
        }
        parts.join("*")
    }
}

/// A K-linear combination of paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: Field,
    terms: BTreeMap<Path, FieldElement>,
}

impl AlgebraElement {
    pub fn zero(field: Field) -> Self {
        AlgebraElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(field: Field, path: Path) -> Self {
        let mut e = AlgebraElement::zero(field);
        e.add_term(path, field.one());
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &FieldElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> FieldElement {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, path: Path, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(path.clone())
            .or_insert_with(|| self.field.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&path);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    /// `self * w`: every path composed after `w`; non-composable terms vanish.
    pub fn mul_right(&self, quiver: &Quiver, w: &Path) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (p, c) in &self.terms {
            if let Some(q) = Path::compose(quiver, p, w) {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    /// `w * self`.
    pub fn mul_left(&self, quiver: &Quiver, w: &Path) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (p, c) in &self.terms {
            if let Some(q) = Path::compose(quiver, w, p) {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    /// Common (source, target) of all terms, if uniform.
    pub fn endpoints(&self, quiver: &Quiver) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|p| (p.source(), p.target(quiver)));
        let first = it.next()?;
        it.all(|e| e == first).then_some(first)
    }

    /// Splits into uniform components keyed by (source, target).
    pub fn split_uniform(&self, quiver: &Quiver) -> Vec<AlgebraElement> {
        let mut parts: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
        for (p, c) in &self.terms {
            parts
                .entry((p.source(), p.target(quiver)))
                .or_insert_with(|| AlgebraElement::zero(self.field))
                .add_term(p.clone(), c.clone());
        }
        parts.into_values().collect()
    }

    /// Renders as a signed sum, longest paths first.
    pub fn display(&self, quiver: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<(&Path, &FieldElement)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.len()
                .cmp(&a.0.len())
                .then_with(|| a.0.display(quiver).cmp(&b.0.display(quiver)))
        });
        let mut out = String::new();
        for (k, (p, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&p.display(quiver));
        }
        out
    }
}

/// A quiver with relations over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<AlgebraElement>,
}

impl Presentation {
    /// Validates and normalizes relations: non-uniform sums are split by
    /// endpoints, zero relations dropped. Returns notes describing changes.
    pub fn new(
        field: Field,
        quiver: Quiver,
        relations: Vec<AlgebraElement>,
    ) -> Result<(Self, Vec<String>)> {
        let mut out = Vec::new();
        let mut notes = Vec::new();
        for (idx, r) in relations.into_iter().enumerate() {
            if r.field() != field {
                return Err(Error::InvalidField(format!(
                    "relation {} over {}",
                    idx + 1,
                    r.field()
                )));
            }
            if r.is_zero() {
                notes.push(format!("relation {} is zero and was dropped", idx + 1));
                continue;
            }
            let parts = r.split_uniform(&quiver);
            if parts.len() > 1 {
                notes.push(format!(
                    "relation {} is not uniform; split into {} relations by endpoints",
                    idx + 1,
                    parts.len()
                ));
            }
            for part in parts {
                if let Some((p, _)) = part.terms().find(|(p, _)| p.len() < 2) {
                    return Err(Error::Inadmissible(format!(
                        "relation {} contains the path `{}` of length {}",
                        idx + 1,
                        p.display(&quiver),
                        p.len()
                    )));
                }
                out.push(part);
            }
        }
        Ok((
            Presentation {
                field,
                quiver,
                relations: out,
            },
            notes,
        ))
    }
}
