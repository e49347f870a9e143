//! Moving points between the varieties of masts with the same vertex sequence.

use crate::detour::{DetourTable, Mast};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::module::build_module;
use crate::quiver::Presentation;
use crate::variety::UniserialVariety;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transport {
    /// The point on the target variety, and the matrix whose columns are
    /// the target basis written in the source basis.
    Point {
        point: Vec<FieldElement>,
        basis_change: Matrix,
    },
    /// The target mast annihilates the top element of the source module.
    NotInOverlap,
}

impl Transport {
    pub fn point(&self) -> Option<&[FieldElement]> {
        match self {
            Transport::Point { point, .. } => Some(point),
            Transport::NotInOverlap => None,
        }
    }
}

/// Reads off the coordinates of the module of `point` (on `from`) relative
/// to the mast of `to`.
pub fn transport_mast(
    pres: &Presentation,
    from: &UniserialVariety,
    to: &UniserialVariety,
    point: &[FieldElement],
) -> Result<Transport> {
    if from.mast().vertices() != to.mast().vertices() {
        return Err(Error::VertexSequenceMismatch);
    }
    let module = build_module(pres, from, point)?;
    let target = to.mast();
    let n = module.dim();
    let field = pres.field;
    let mut top = vec![field.zero(); n];
    top[0] = field.one();
    let columns: Vec<Vec<FieldElement>> = (0..n)
        .map(|j| module.path_matrix(&target.prefix(j)).mul_vec(&top))
        .collect();
    if columns[n - 1].iter().all(FieldElement::is_zero) {
        return Ok(Transport::NotInOverlap);
    }
    let basis = Matrix::from_columns(field, n, &columns);
    let mut image = vec![field.zero(); to.nvars()];
    for d in to.table.detours() {
        let v = module.matrix(d.arrow).mul_vec(&columns[d.prefix]);
        let coords = basis.solve(&v)?;
        for (j, c) in coords.iter().enumerate() {
            match d.targets.iter().position(|&t| t == j) {
                Some(i) => image[d.first_var + i] = c.clone(),
                None if !c.is_zero() => {
                    return Err(Error::Invariant(format!(
                        "detour image has a coordinate off its targets at {j}"
                    )))
                }
                None => {}
            }
        }
    }
    if !to.contains(&image)? {
        return Err(Error::Invariant(
            "transported point is not on the target variety".into(),
        ));
    }
    Ok(Transport::Point {
        point: image,
        basis_change: basis,
    })
}

/// Matches the detours of two masts through the same vertices: a detour
/// `(gamma, u)` on the first mast keeps its prefix position and arrow,
/// except that the second mast's arrow at that position is replaced by the
/// first mast's. Entry `i` is the index in `to` of detour `i` of `from`.
pub fn detour_bijection(from: &DetourTable, to: &DetourTable) -> Result<Vec<usize>> {
    let (p, q) = (from.mast(), to.mast());
    if p.vertices() != q.vertices() {
        return Err(Error::VertexSequenceMismatch);
    }
    let mut map = Vec::with_capacity(from.detours().len());
    for d in from.detours() {
        let arrow = if d.prefix < q.len() && d.arrow == q.arrow(d.prefix) {
            p.arrow(d.prefix)
        } else {
            d.arrow
        };
        let image = to
            .find_index(arrow, d.prefix)
            .ok_or_else(|| Error::Invariant("detour has no partner on the other mast".into()))?;
        if to.detours()[image].targets.len() != d.targets.len() {
            return Err(Error::Invariant(
                "matched detours have different target counts".into(),
            ));
        }
        map.push(image);
    }
    let mut seen = map.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != to.detours().len() {
        return Err(Error::Invariant(
            "detour matching is not a bijection".into(),
        ));
    }
    Ok(map)
}

/// True if both masts pass through the same vertices.
pub fn same_vertex_sequence(p: &Mast, q: &Mast) -> bool {
    p.vertices() == q.vertices()
}
