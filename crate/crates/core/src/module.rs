//! Explicit uniserial modules and their layered graphs.

use std::fmt::Write as _;

use crate::detour::Mast;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::quiver::{AlgebraElement, Path, Presentation, Quiver};
use crate::rewrite::specialized_normal_form;
use crate::variety::UniserialVariety;

/// The module attached to a point of the variety: basis `b_0, ..., b_l`
/// with `b_j` the image of the prefix of length `j` applied to the top
/// element `b_0`, and one matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniserialModule {
    field: Field,
    mast: Mast,
    point: Vec<FieldElement>,
    matrices: Vec<Matrix>,
}

impl UniserialModule {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mast(&self) -> &Mast {
        &self.mast
    }

    pub fn point(&self) -> &[FieldElement] {
        &self.point
    }

    pub fn dim(&self) -> usize {
        self.mast.len() + 1
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix {
        &self.matrices[arrow]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Action of a path: the product of its arrow matrices, latest arrow leftmost.
    pub fn path_matrix(&self, path: &Path) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::identity(self.field, n);
        if path.is_empty() {
            for j in 0..n {
                if self.mast.vertex(j) != path.source() {
                    m.set(j, j, self.field.zero());
                }
            }
            return m;
        }
        for &a in path.arrows() {
            m = self.matrices[a].mul(&m);
        }
        m
    }

    pub fn element_matrix(&self, z: &AlgebraElement) -> Matrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(self.field, n, n);
        for (p, c) in z.terms() {
            acc = acc.add(&self.path_matrix(p).scale(c));
        }
        acc
    }

    /// Checks grading, strict lower triangularity, the mast chain and that
    /// every relation acts as zero.
    pub fn verify(&self, pres: &Presentation) -> Result<()> {
        let quiver = &pres.quiver;
        let n = self.dim();
        for (a, m) in self.matrices.iter().enumerate() {
            let arrow = quiver.arrow(a);
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j).is_zero() {
                        continue;
                    }
                    if i <= j {
                        return Err(Error::Invariant(format!(
                            "arrow `{}` does not lower the radical layer ({i},{j})",
                            arrow.name
                        )));
                    }
                    if self.mast.vertex(j) != arrow.source || self.mast.vertex(i) != arrow.target {
                        return Err(Error::Invariant(format!(
                            "arrow `{}` breaks the vertex grading",
                            arrow.name
                        )));
                    }
                }
            }
        }
        for j in 0..self.mast.len() {
            if self.matrices[self.mast.arrow(j)].get(j + 1, j).is_zero() {
                return Err(Error::Invariant(format!(
                    "mast arrow {} acts as zero on its layer",
                    j + 1
                )));
            }
        }
        for (idx, r) in pres.relations.iter().enumerate() {
            if !self.element_matrix(r).is_zero() {
                return Err(Error::Invariant(format!(
                    "relation {} does not annihilate the module",
                    idx + 1
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self, quiver: &Quiver) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "module of dimension {} on mast {}",
            self.dim(),
            self.mast.display(quiver)
        );
        let layers: Vec<&str> = self
            .mast
            .vertices()
            .iter()
            .map(|&v| quiver.vertex_name(v))
            .collect();
        let _ = writeln!(out, "layers: {}", layers.join(" "));
        for (a, m) in self.matrices.iter().enumerate() {
            let _ = writeln!(out, "{}:", quiver.arrow(a).name);
            out.push_str(&m.to_string());
        }
        out
    }
}

/// Builds the module of a point on the variety.
pub fn build_module(
    pres: &Presentation,
    variety: &UniserialVariety,
    point: &[FieldElement],
) -> Result<UniserialModule> {
    if !variety.contains(point)? {
        return Err(Error::PointNotOnVariety);
    }
    let quiver = &pres.quiver;
    let mast = variety.mast();
    let n = mast.len() + 1;
    let mut matrices = Vec::with_capacity(quiver.arrows().len());
    for (a, arrow) in quiver.arrows().iter().enumerate() {
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            if mast.vertex(j) != arrow.source {
                columns.push(vec![pres.field.zero(); n]);
                continue;
            }
            let path = Path::compose(
                quiver,
                &Path::from_arrows(quiver, vec![a])?,
                &mast.prefix(j),
            )
            .ok_or_else(|| Error::Invariant("arrow does not compose with prefix".into()))?;
            let z = AlgebraElement::from_path(pres.field, path);
            columns.push(specialized_normal_form(quiver, &variety.table, &z, point)?);
        }
        matrices.push(Matrix::from_columns(pres.field, n, &columns));
    }
    let module = UniserialModule {
        field: pres.field,
        mast: mast.clone(),
        point: point.to_vec(),
        matrices,
    };
    module.verify(pres)?;
    Ok(module)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub arrow: usize,
}

/// Layers `1..=l+1` labeled by the mast's vertices, mast edges, and the
/// extra edges relative to a chosen top element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    pub layers: Vec<usize>,
    pub mast_edges: Vec<GraphEdge>,
    pub extra_edges: Vec<GraphEdge>,
}

/// Graph relative to the canonical top element `b_0`.
pub fn layered_graph(quiver: &Quiver, module: &UniserialModule) -> LayeredGraph {
    let mut top = vec![module.field.zero(); module.dim()];
    top[0] = module.field.one();
    layered_graph_with_top(quiver, module, &top).expect("canonical top element is valid")
}

/// Graph relative to the top element `sum_j top[j] * b_j`, which must lie in
/// `e(1)` times the module with a nonzero coefficient at `b_0`.
pub fn layered_graph_with_top(
    quiver: &Quiver,
    module: &UniserialModule,
    top: &[FieldElement],
) -> Result<LayeredGraph> {
    let n = module.dim();
    let mast = &module.mast;
    if top.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: top.len(),
        });
    }
    if top[0].is_zero() {
        return Err(Error::InvalidTopElement(
            "coefficient of b_0 must be nonzero".into(),
        ));
    }
    if let Some(j) = (0..n).find(|&j| !top[j].is_zero() && mast.vertex(j) != mast.vertex(0)) {
        return Err(Error::InvalidTopElement(format!(
            "b_{j} does not lie at the start vertex"
        )));
    }
    let columns: Vec<Vec<FieldElement>> = (0..n)
        .map(|j| module.path_matrix(&mast.prefix(j)).mul_vec(top))
        .collect();
    let basis = Matrix::from_columns(module.field, n, &columns);
    let mut mast_edges = Vec::new();
    let mut extra_edges = Vec::new();
    for i in 0..n {
        let along = (i < mast.len()).then(|| mast.arrow(i));
        if let Some(a) = along {
            mast_edges.push(GraphEdge {
                from: i + 1,
                to: i + 2,
                arrow: a,
            });
        }
        let mut arrows: Vec<usize> = quiver
            .arrows_from(mast.vertex(i))
            .filter(|&a| Some(a) != along)
            .collect();
        arrows.sort_by(|&a, &b| quiver.arrow(a).name.cmp(&quiver.arrow(b).name));
        for a in arrows {
            let image = module.matrices[a].mul_vec(&columns[i]);
            let coords = basis.solve(&image)?;
            if let Some(low) = coords.iter().position(|c| !c.is_zero()) {
                extra_edges.push(GraphEdge {
                    from: i + 1,
                    to: low + 1,
                    arrow: a,
                });
            }
        }
    }
    Ok(LayeredGraph {
        layers: mast.vertices().to_vec(),
        mast_edges,
        extra_edges,
    })
}

impl LayeredGraph {
    pub fn to_dot(&self, quiver: &Quiver) -> String {
        let mut out =
            String::from("digraph uniserial {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        for (i, &v) in self.layers.iter().enumerate() {
            let _ = writeln!(out, "  L{} [label=\"{}\"];", i + 1, quiver.vertex_name(v));
        }
        for e in &self.mast_edges {
            let _ = writeln!(
                out,
                "  L{} -> L{} [label=\"{}\", style=solid];",
                e.from,
                e.to,
                quiver.arrow(e.arrow).name
            );
        }
        for e in &self.extra_edges {
            let _ = writeln!(
                out,
                "  L{} -> L{} [label=\"{}\", style=dashed, constraint=false];",
                e.from,
                e.to,
                quiver.arrow(e.arrow).name
            );
        }
        out.push_str("}\n");
        out
    }

    /// Indented text: one line per layer, mast arrows between layers, extra
    /// edges at the end of the layer line they leave.
    pub fn to_text(&self, quiver: &Quiver) -> String {
        let width = self.layers.len().to_string().len();
        let mut out = String::new();
        for (i, &v) in self.layers.iter().enumerate() {
            let mut line = format!("[{:>width$}] {}", i + 1, quiver.vertex_name(v));
            for e in self.extra_edges.iter().filter(|e| e.from == i + 1) {
                let _ = write!(line, "   {} -> [{}]", quiver.arrow(e.arrow).name, e.to);
            }
            out.push_str(&line);
            out.push('\n');
            if let Some(e) = self.mast_edges.iter().find(|e| e.from == i + 1) {
                let _ = writeln!(
                    out,
                    "{:>w$}|  {}",
                    "",
                    quiver.arrow(e.arrow).name,
                    w = width + 1
                );
            }
        }
        out
    }
}
